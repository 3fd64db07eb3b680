#include "pivotrace/field.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace pivotrace {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long mod_norm(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}

// Integer polynomial division, exact (remainder must vanish).
std::vector<Integer> exact_div(const std::vector<Integer>& num, const std::vector<Integer>& den) {
    std::vector<Integer> rem = num;
    std::vector<Integer> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Integer(0));
    while (rem.size() >= den.size()) {
        Integer lead = rem.back() / den.back();
        size_t shift = rem.size() - den.size();
        quot[shift] = lead;
        for (size_t i = 0; i < den.size(); ++i) rem[shift + i] -= lead * den[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.empty()) break;
    }
    if (!rem.empty()) throw FieldError("exact_div: nonzero remainder");
    return quot;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(long n) {
    if (n < 1) throw FieldError("cyclotomic order must be >= 1");
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    std::vector<Integer> num(size_t(n) + 1, Integer(0));
    num[0] = -1;
    num[size_t(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = exact_div(num, cyclotomic_polynomial(d));
    }
    return num;
}

static std::map<std::pair<int, long>, std::unique_ptr<Field>>& registry() {
    static std::map<std::pair<int, long>, std::unique_ptr<Field>> r;
    return r;
}
static std::mutex registry_mutex;

const Field* Field::rationals() {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto key = std::make_pair(int(FieldKind::Rationals), 0L);
    auto& slot = registry()[key];
    if (!slot) {
        slot.reset(new Field());
        slot->kind = FieldKind::Rationals;
    }
    return slot.get();
}

const Field* Field::prime(long p) {
    if (!is_prime(p)) throw FieldError("Fp modulus must be prime, got " + std::to_string(p));
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto key = std::make_pair(int(FieldKind::Prime), p);
    auto& slot = registry()[key];
    if (!slot) {
        slot.reset(new Field());
        slot->kind = FieldKind::Prime;
        slot->p = p;
    }
    return slot.get();
}

const Field* Field::cyclotomic(long n) {
    if (n < 1) throw FieldError("cyclotomic conductor must be >= 1");
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto key = std::make_pair(int(FieldKind::Cyclotomic), n);
    auto& slot = registry()[key];
    if (!slot) {
        slot.reset(new Field());
        slot->kind = FieldKind::Cyclotomic;
        slot->n = n;
        for (const Integer& c : cyclotomic_polynomial(n)) slot->modulus.emplace_back(c);
    }
    return slot.get();
}

const Field* Field::parse(const std::string& spec) {
    std::istringstream in(spec);
    std::string kind;
    in >> kind;
    if (kind == "Q") return rationals();
    long param = 0;
    if (!(in >> param)) throw FieldError("field spec '" + spec + "' is missing its parameter");
    if (kind == "Fp") return prime(param);
    if (kind == "Cyclotomic") return cyclotomic(param);
    throw FieldError("unknown field kind '" + kind + "'");
}

std::string Field::name() const {
    switch (kind) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::Prime: return "Fp " + std::to_string(p);
        case FieldKind::Cyclotomic: return "Cyclotomic " + std::to_string(n);
    }
    return "?";
}

FieldElement FieldElement::zero(const Field* f) {
    FieldElement e(f);
    if (f->kind == FieldKind::Cyclotomic) e.c_.assign(size_t(f->degree()), Rational(0));
    return e;
}

FieldElement FieldElement::one(const Field* f) { return from_rational(f, Rational(1)); }

FieldElement FieldElement::from_rational(const Field* f, const Rational& r) {
    FieldElement e(f);
    switch (f->kind) {
        case FieldKind::Rationals: e.q_ = r; break;
        case FieldKind::Prime: {
            Integer num = numerator(r), den = denominator(r);
            long ni = mod_norm((num % f->p).convert_to<long>(), f->p);
            long di = mod_norm((den % f->p).convert_to<long>(), f->p);
            if (di == 0) throw FieldError("denominator not invertible mod p");
            // di^(p-2) mod p
            long inv = 1, base = di, exp = f->p - 2;
            while (exp) {
                if (exp & 1) inv = (inv * base) % f->p;
                base = (base * base) % f->p;
                exp >>= 1;
            }
            e.r_ = (ni * inv) % f->p;
            break;
        }
        case FieldKind::Cyclotomic:
            e.c_.assign(size_t(f->degree()), Rational(0));
            e.c_[0] = r;
            break;
    }
    return e;
}

FieldElement FieldElement::from_coeffs(const Field* f, std::vector<Rational> coeffs) {
    if (f->kind != FieldKind::Cyclotomic) throw FieldError("from_coeffs requires a cyclotomic field");
    size_t deg = size_t(f->degree());
    // reduce modulo Phi_n
    while (coeffs.size() > deg) {
        Rational lead = coeffs.back();
        size_t shift = coeffs.size() - 1 - deg;
        for (size_t i = 0; i <= deg; ++i) coeffs[shift + i] -= lead * f->modulus[i];
        coeffs.pop_back();
    }
    coeffs.resize(deg, Rational(0));
    FieldElement e(f);
    e.c_ = std::move(coeffs);
    return e;
}

bool FieldElement::is_zero() const {
    switch (field_->kind) {
        case FieldKind::Rationals: return q_ == 0;
        case FieldKind::Prime: return r_ == 0;
        case FieldKind::Cyclotomic:
            for (const auto& c : c_)
                if (c != 0) return false;
            return true;
    }
    return false;
}

bool FieldElement::is_one() const { return *this == one(field_); }

void FieldElement::check_same(const FieldElement& o) const {
    if (field_ != o.field_) throw FieldError("field mismatch: " + field_->name() + " vs " + o.field_->name());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    FieldElement e(field_);
    switch (field_->kind) {
        case FieldKind::Rationals: e.q_ = q_ + o.q_; break;
        case FieldKind::Prime: e.r_ = (r_ + o.r_) % field_->p; break;
        case FieldKind::Cyclotomic:
            e.c_.resize(c_.size());
            for (size_t i = 0; i < c_.size(); ++i) e.c_[i] = c_[i] + o.c_[i];
            break;
    }
    return e;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const {
    FieldElement e(field_);
    switch (field_->kind) {
        case FieldKind::Rationals: e.q_ = -q_; break;
        case FieldKind::Prime: e.r_ = r_ == 0 ? 0 : field_->p - r_; break;
        case FieldKind::Cyclotomic:
            e.c_.resize(c_.size());
            for (size_t i = 0; i < c_.size(); ++i) e.c_[i] = -c_[i];
            break;
    }
    return e;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    switch (field_->kind) {
        case FieldKind::Rationals: {
            FieldElement e(field_);
            e.q_ = q_ * o.q_;
            return e;
        }
        case FieldKind::Prime: {
            FieldElement e(field_);
            e.r_ = (r_ * o.r_) % field_->p;
            return e;
        }
        case FieldKind::Cyclotomic: {
            std::vector<Rational> prod(2 * c_.size(), Rational(0));
            for (size_t i = 0; i < c_.size(); ++i) {
                if (c_[i] == 0) continue;
                for (size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
            }
            return from_coeffs(field_, std::move(prod));
        }
    }
    throw FieldError("unreachable");
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw FieldError("inverse of zero");
    switch (field_->kind) {
        case FieldKind::Rationals: {
            FieldElement e(field_);
            // the (num, den) constructor requires a positive denominator,
            // so invert via division, which renormalizes
            e.q_ = Rational(1) / q_;
            return e;
        }
        case FieldKind::Prime: {
            long inv = 1, base = r_, exp = field_->p - 2;
            while (exp) {
                if (exp & 1) inv = (inv * base) % field_->p;
                base = (base * base) % field_->p;
                exp >>= 1;
            }
            FieldElement e(field_);
            e.r_ = inv;
            return e;
        }
        case FieldKind::Cyclotomic: {
            // extended Euclid in Q[x] between this and Phi_n
            using Poly = std::vector<Rational>;
            auto trim = [](Poly& a) {
                while (!a.empty() && a.back() == 0) a.pop_back();
            };
            auto divmod = [&](Poly a, const Poly& b, Poly& q) {
                q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
                while (a.size() >= b.size() && !a.empty()) {
                    Rational lead = a.back() / b.back();
                    size_t shift = a.size() - b.size();
                    q[shift] = lead;
                    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
                    trim(a);
                }
                return a;
            };
            Poly r0 = field_->modulus, r1 = c_;
            trim(r1);
            Poly s0 = {}, s1 = {Rational(1)};  // coefficients of this in the combination
            while (!r1.empty()) {
                Poly q;
                Poly r2 = divmod(r0, r1, q);
                // s2 = s0 - q*s1
                Poly s2 = s0;
                s2.resize(std::max(s2.size(), q.size() + s1.size()), Rational(0));
                for (size_t i = 0; i < q.size(); ++i)
                    for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
                trim(s2);
                r0 = std::move(r1);
                r1 = std::move(r2);
                s0 = std::move(s1);
                s1 = std::move(s2);
            }
            if (r0.size() != 1) throw FieldError("element not invertible (gcd has positive degree)");
            for (auto& c : s0) c /= r0[0];
            return from_coeffs(field_, std::move(s0));
        }
    }
    throw FieldError("unreachable");
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

bool FieldElement::operator==(const FieldElement& o) const {
    check_same(o);
    switch (field_->kind) {
        case FieldKind::Rationals: return q_ == o.q_;
        case FieldKind::Prime: return r_ == o.r_;
        case FieldKind::Cyclotomic: return c_ == o.c_;
    }
    return false;
}

std::string FieldElement::str() const {
    switch (field_->kind) {
        case FieldKind::Rationals: return q_.str();
        case FieldKind::Prime: return std::to_string(r_);
        case FieldKind::Cyclotomic: {
            std::string out;
            for (size_t i = 0; i < c_.size(); ++i) {
                if (c_[i] == 0) continue;
                std::string term = c_[i].str();
                if (!out.empty() && term[0] != '-') out += "+";
                if (i == 0) {
                    out += term;
                } else {
                    if (term == "1")
                        term.clear();
                    else if (term == "-1")
                        term = "-";
                    out += term + "z";
                    if (i > 1) out += "^" + std::to_string(i);
                }
            }
            return out.empty() ? "0" : out;
        }
    }
    return "?";
}

FieldElement FieldElement::parse(const Field* f, const std::string& text) {
    if (text.empty()) throw FieldError("empty field literal");
    if (f->kind != FieldKind::Cyclotomic) {
        try {
            return from_rational(f, Rational(text));
        } catch (const std::exception&) {
            throw FieldError("bad field literal '" + text + "'");
        }
    }
    // split into signed terms: [coeff][z[^k]]
    std::vector<Rational> coeffs(size_t(f->degree()), Rational(0));
    size_t i = 0;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+') ++i;
        else if (text[i] == '-') { sign = -1; ++i; }
        size_t start = i;
        while (i < text.size() && text[i] != '+' && text[i] != '-') ++i;
        std::string term = text.substr(start, i - start);
        if (term.empty()) throw FieldError("bad field literal '" + text + "'");
        size_t zpos = term.find('z');
        std::string coeff_str = zpos == std::string::npos ? term : term.substr(0, zpos);
        long power = 0;
        if (zpos != std::string::npos) {
            power = 1;
            size_t caret = term.find('^', zpos);
            if (caret != std::string::npos) power = std::stol(term.substr(caret + 1));
        }
        if (!coeff_str.empty() && coeff_str.back() == '*') coeff_str.pop_back();
        Rational coeff = coeff_str.empty() ? Rational(1) : Rational(coeff_str);
        if (sign < 0) coeff = -coeff;
        if (power >= long(coeffs.size())) {
            std::vector<Rational> tmp(size_t(power) + 1, Rational(0));
            tmp[size_t(power)] = coeff;
            FieldElement reduced = from_coeffs(f, tmp);
            for (size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += reduced.c_[k];
        } else {
            coeffs[size_t(power)] += coeff;
        }
    }
    return from_coeffs(f, std::move(coeffs));
}

}  // namespace pivotrace
