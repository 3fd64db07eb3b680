#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pivotrace {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FieldKind { Rationals, Prime, Cyclotomic };

/// Ground field descriptor. Instances are interned and live for the whole
/// process, so elements refer to their field by plain pointer.
class Field {
  public:
    FieldKind kind;
    long p = 0;                     // modulus for Prime
    long n = 0;                     // conductor for Cyclotomic
    std::vector<Rational> modulus;  // Phi_n, monic, size deg+1 (Cyclotomic only)

    static const Field* rationals();
    static const Field* prime(long p);
    static const Field* cyclotomic(long n);

    /// Parses "Q", "Fp 5", "Cyclotomic 8".
    static const Field* parse(const std::string& spec);

    long degree() const { return kind == FieldKind::Cyclotomic ? long(modulus.size()) - 1 : 1; }
    long characteristic() const { return kind == FieldKind::Prime ? p : 0; }
    std::string name() const;

  private:
    Field() = default;
};

/// Coefficients of the n-th cyclotomic polynomial, ascending degree.
std::vector<Integer> cyclotomic_polynomial(long n);

/// An element of a Field in canonical form: reduced fraction, residue in
/// [0,p), or a polynomial of degree < deg Phi_n. Equality is structural.
class FieldElement {
  public:
    FieldElement() : field_(Field::rationals()) {}
    static FieldElement zero(const Field* f);
    static FieldElement one(const Field* f);
    static FieldElement from_rational(const Field* f, const Rational& r);
    static FieldElement from_long(const Field* f, long v) { return from_rational(f, Rational(v)); }
    /// Cyclotomic element from polynomial coefficients in zeta_n (any length).
    static FieldElement from_coeffs(const Field* f, std::vector<Rational> coeffs);

    const Field* field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    std::string str() const;
    /// Parses a field literal: "3/4", "-2", or a cyclotomic polynomial in z
    /// such as "1/2+3z^2-z".
    static FieldElement parse(const Field* f, const std::string& text);

    const Rational& rational() const { return q_; }
    long residue() const { return r_; }
    const std::vector<Rational>& coeffs() const { return c_; }

  private:
    explicit FieldElement(const Field* f) : field_(f) {}
    void check_same(const FieldElement& o) const;

    const Field* field_;
    Rational q_;               // Rationals
    long r_ = 0;               // Prime
    std::vector<Rational> c_;  // Cyclotomic, fixed size deg(Phi_n)
};

}  // namespace pivotrace
