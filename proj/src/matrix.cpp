#include "pivotrace/matrix.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pivotrace {

namespace {
void check_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw MatrixError("matrix field mismatch");
}
}  // namespace

Matrix Matrix::identity(const Field* f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(f);
    return m;
}

Matrix Matrix::scalar(const FieldElement& v) {
    Matrix m(v.field(), 1, 1);
    m.at(0, 0) = v;
    return m;
}

Matrix Matrix::from_rows(const Field* f, const std::vector<std::vector<FieldElement>>& rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(f, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw MatrixError("ragged rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MatrixError("shape mismatch in +");
    Matrix m(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MatrixError("shape mismatch in -");
    Matrix m(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
    return m;
}

Matrix Matrix::operator*(const FieldElement& s) const {
    Matrix m(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
    return m;
}

Matrix multiply_serial(const Matrix& a, const Matrix& b) {
    check_field(a, b);
    if (a.cols() != b.rows()) throw MatrixError("shape mismatch in *");
    Matrix m(a.field(), a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const FieldElement& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols(); ++j) {
                const FieldElement& bkj = b.at(k, j);
                if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
            }
        }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_field(*this, o);
    if (cols_ != o.rows_) throw MatrixError("shape mismatch in *");
    if (rows_ * o.cols_ < 1024) return multiply_serial(*this, o);
    Matrix m(field_, rows_, o.cols_);
#pragma omp parallel for schedule(dynamic)
    for (long long ii = 0; ii < (long long)rows_; ++ii) {
        size_t i = size_t(ii);
        for (size_t k = 0; k < cols_; ++k) {
            const FieldElement& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const FieldElement& bkj = o.at(k, j);
                if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
            }
        }
    }
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    return data_ == o.data_;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& e : data_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(field_, rows_);
}

Matrix Matrix::vectorize() const {
    Matrix m(field_, rows_ * cols_, 1);
    for (size_t i = 0; i < data_.size(); ++i) m.at(i, 0) = data_[i];
    return m;
}

std::string Matrix::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << at(i, j).str();
        }
        out << '\n';
    }
    return out.str();
}

Matrix kron_serial(const Matrix& a, const Matrix& b) {
    check_field(a, b);
    Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            const FieldElement& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l) {
                    const FieldElement& bkl = b.at(k, l);
                    if (!bkl.is_zero()) m.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
        }
    return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    check_field(a, b);
    if (a.rows() * a.cols() * b.rows() * b.cols() < 4096) return kron_serial(a, b);
    Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (long long ii = 0; ii < (long long)a.rows(); ++ii)
        for (long long kk = 0; kk < (long long)b.rows(); ++kk) {
            size_t i = size_t(ii), k = size_t(kk);
            for (size_t j = 0; j < a.cols(); ++j) {
                const FieldElement& aij = a.at(i, j);
                if (aij.is_zero()) continue;
                for (size_t l = 0; l < b.cols(); ++l) {
                    const FieldElement& bkl = b.at(k, l);
                    if (!bkl.is_zero()) m.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
            }
        }
    return m;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        FieldElement inv = m.at(row, col).inverse();
        for (size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            FieldElement factor = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

size_t rank(const Matrix& a) {
    Matrix m = a;
    return rref(m).size();
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw MatrixError("solve_linear: A.rows != B.rows");
    check_field(a, b);
    const Field* f = a.field();
    // augmented [A | B]
    Matrix aug(f, a.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    std::vector<size_t> pivots = rref(aug);
    // inconsistent when a pivot lands in the B block
    for (size_t p : pivots)
        if (p >= a.cols()) return std::nullopt;
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t p : pivots) is_pivot[p] = true;

    LinearSolution sol;
    sol.particular = Matrix(f, a.cols(), b.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (size_t j = 0; j < b.cols(); ++j) sol.particular.at(pivots[r], j) = aug.at(r, a.cols() + j);

    // one kernel matrix per (free column of A, column of B) pair
    for (size_t freecol = 0; freecol < a.cols(); ++freecol) {
        if (is_pivot[freecol]) continue;
        for (size_t j = 0; j < b.cols(); ++j) {
            Matrix kv(f, a.cols(), b.cols());
            kv.at(freecol, j) = FieldElement::one(f);
            for (size_t r = 0; r < pivots.size(); ++r) kv.at(pivots[r], j) = -aug.at(r, freecol);
            sol.kernel.push_back(kv);
        }
    }
    return sol;
}

std::vector<Matrix> kernel_basis(const Matrix& a) {
    auto sol = solve_linear(a, Matrix::zero(a.field(), a.rows(), 1));
    return sol->kernel;
}

}  // namespace pivotrace
