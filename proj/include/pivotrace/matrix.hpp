#pragma once

#include "pivotrace/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pivotrace {

struct MatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense row-major matrix over a fixed Field. All entries share the field of
/// construction; operations on mismatched fields throw.
class Matrix {
  public:
    Matrix() : field_(Field::rationals()), rows_(0), cols_(0) {}
    Matrix(const Field* f, size_t rows, size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(f)) {}

    static Matrix identity(const Field* f, size_t n);
    static Matrix zero(const Field* f, size_t rows, size_t cols) { return Matrix(f, rows, cols); }
    static Matrix scalar(const FieldElement& v);  // 1x1
    static Matrix from_rows(const Field* f, const std::vector<std::vector<FieldElement>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Field* field() const { return field_; }

    FieldElement& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const FieldElement& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;  // parallel when large
    Matrix operator*(const FieldElement& s) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    /// Flattens row-major into a column vector (rows*cols x 1).
    Matrix vectorize() const;

    std::string str() const;

  private:
    const Field* field_;
    size_t rows_, cols_;
    std::vector<FieldElement> data_;
};

/// Serial reference product, kept alongside the parallel kernel for testing
/// and benchmarking.
Matrix multiply_serial(const Matrix& a, const Matrix& b);

/// Kronecker product with the lexicographic convention
/// kron(A,B)[(i*B.rows+k),(j*B.cols+l)] = A[i,j]*B[k,l].
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_serial(const Matrix& a, const Matrix& b);

size_t rank(const Matrix& a);

/// Solution of A*X = B over the field: a particular solution plus a basis of
/// the homogeneous kernel {X : A*X = 0} (each kernel element has B's shape).
struct LinearSolution {
    Matrix particular;
    std::vector<Matrix> kernel;  // basis, each of shape cols(A) x cols(B)
};

/// Returns nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b);

/// Kernel basis of A as column vectors (matrices of shape cols(A) x 1).
std::vector<Matrix> kernel_basis(const Matrix& a);

}  // namespace pivotrace
