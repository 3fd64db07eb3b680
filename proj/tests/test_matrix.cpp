#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pivotrace/matrix.hpp"

#include <random>

using namespace pivotrace;

namespace {

Matrix rnd(const Field* f, size_t rows, size_t cols, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(-4, 4);
    Matrix m(f, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = FieldElement::from_long(f, dist(rng));
    return m;
}

}  // namespace

TEST_CASE("parallel multiply matches the serial reference") {
    std::mt19937 rng(1);
    for (const Field* f : {Field::rationals(), Field::prime(5), Field::cyclotomic(4)}) {
        Matrix a = rnd(f, 37, 23, rng), b = rnd(f, 23, 41, rng);
        CHECK(a * b == multiply_serial(a, b));
    }
    // a shape large enough to take the parallel path
    Matrix a = rnd(Field::prime(2), 40, 40, rng), b = rnd(Field::prime(2), 40, 40, rng);
    CHECK(a * b == multiply_serial(a, b));
}

TEST_CASE("parallel kron matches the serial reference") {
    std::mt19937 rng(2);
    for (const Field* f : {Field::rationals(), Field::prime(5)}) {
        Matrix a = rnd(f, 7, 5, rng), b = rnd(f, 6, 9, rng);
        CHECK(kron(a, b) == kron_serial(a, b));
    }
}

TEST_CASE("kron satisfies the mixed-product identity") {
    std::mt19937 rng(3);
    const Field* f = Field::prime(7);
    Matrix a = rnd(f, 4, 3, rng), b = rnd(f, 5, 2, rng);
    Matrix c = rnd(f, 3, 6, rng), d = rnd(f, 2, 4, rng);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
}

TEST_CASE("kron indexing convention") {
    const Field* f = Field::rationals();
    Matrix a = Matrix::identity(f, 2);
    a.at(0, 1) = FieldElement::from_long(f, 3);
    Matrix b(f, 2, 2);
    b.at(1, 0) = FieldElement::from_long(f, 5);
    Matrix k = kron(a, b);
    CHECK(k.rows() == 4);
    CHECK(k.at(1, 0) == FieldElement::from_long(f, 5));       // a00*b10
    CHECK(k.at(1, 2) == FieldElement::from_long(f, 15));      // a01*b10
    CHECK(k.at(3, 2) == FieldElement::from_long(f, 5));       // a11*b10
}

TEST_CASE("rank and kernel dimensions obey rank-nullity") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        const Field* f = trial % 2 ? Field::prime(5) : Field::rationals();
        Matrix a = rnd(f, 6, 9, rng);
        size_t r = rank(a);
        auto ker = kernel_basis(a);
        CHECK(r + ker.size() == 9);
        for (const Matrix& v : ker) CHECK((a * v).is_zero());
    }
}

TEST_CASE("solve_linear returns a particular solution and the full kernel") {
    std::mt19937 rng(5);
    const Field* f = Field::rationals();
    Matrix a = rnd(f, 5, 8, rng);
    Matrix x = rnd(f, 8, 2, rng);
    Matrix b = a * x;
    auto sol = solve_linear(a, b);
    REQUIRE(sol.has_value());
    CHECK(a * sol->particular == b);
    for (const Matrix& k : sol->kernel) {
        CHECK(k.rows() == 8);
        CHECK(k.cols() == 2);
        CHECK((a * k).is_zero());
    }
    CHECK(rank(a) + kernel_basis(a).size() == 8);
}

TEST_CASE("solve_linear detects inconsistency") {
    const Field* f = Field::prime(3);
    Matrix a(f, 2, 1);
    a.at(0, 0) = FieldElement::one(f);
    a.at(1, 0) = FieldElement::one(f);
    Matrix b(f, 2, 1);
    b.at(0, 0) = FieldElement::one(f);
    b.at(1, 0) = FieldElement::from_long(f, 2);
    CHECK_FALSE(solve_linear(a, b).has_value());
}

TEST_CASE("row-major vectorization identity vec(ASB) = kron(A, B^T) vec(S)") {
    std::mt19937 rng(6);
    const Field* f = Field::prime(11);
    Matrix a = rnd(f, 3, 4, rng), s = rnd(f, 4, 5, rng), b = rnd(f, 5, 2, rng);
    CHECK((a * s * b).vectorize() == kron(a, b.transpose()) * s.vectorize());
}

TEST_CASE("transpose, identity, scalar") {
    const Field* f = Field::rationals();
    std::mt19937 rng(7);
    Matrix a = rnd(f, 4, 6, rng);
    CHECK(a.transpose().transpose() == a);
    CHECK(Matrix::identity(f, 5).is_identity());
    CHECK(Matrix::scalar(FieldElement::from_long(f, 3)).at(0, 0) == FieldElement::from_long(f, 3));
    CHECK((a - a).is_zero());
}
