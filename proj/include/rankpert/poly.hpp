#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rankpert/field.hpp"

/// Dense univariate polynomials over an exact field, stored as ascending
/// coefficient lists.  The zero polynomial has an empty list; otherwise the
/// leading coefficient is nonzero.

namespace rankpert {

class Poly {
  public:
    explicit Poly(FieldSpec f) : field_(std::move(f)) {}

    Poly(FieldSpec f, std::vector<Scalar> coeffs)
        : field_(std::move(f)), coeffs_(std::move(coeffs)) {
        for (const Scalar& c : coeffs_)
            if (c.field() != field_)
                throw std::invalid_argument("Poly: coefficient field mismatch");
        trim();
    }

    static Poly zero(const FieldSpec& f) { return Poly(f); }
    static Poly one(const FieldSpec& f) { return constant(Scalar::one(f)); }

    static Poly constant(const Scalar& c) {
        Poly p(c.field());
        if (!c.is_zero()) p.coeffs_.push_back(c);
        return p;
    }

    /// c * x^k
    static Poly monomial(const Scalar& c, std::size_t k) {
        Poly p(c.field());
        if (!c.is_zero()) {
            p.coeffs_.assign(k, Scalar::zero(c.field()));
            p.coeffs_.push_back(c);
        }
        return p;
    }

    static Poly x(const FieldSpec& f) { return monomial(Scalar::one(f), 1); }

    /// Test/fixture convenience: ascending integer coefficients.
    static Poly from_ints(const FieldSpec& f, std::initializer_list<long> cs) {
        std::vector<Scalar> v;
        v.reserve(cs.size());
        for (long c : cs) v.push_back(Scalar::of(f, c));
        return Poly(f, std::move(v));
    }

    const FieldSpec& field() const { return field_; }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    const Scalar& leading() const {
        if (is_zero()) throw std::domain_error("Poly: zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    /// Coefficient of x^i (zero beyond the degree).
    Scalar coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_);
    }

    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Poly operator-() const {
        Poly r(field_);
        r.coeffs_.reserve(coeffs_.size());
        for (const Scalar& c : coeffs_) r.coeffs_.push_back(-c);
        return r;
    }

    Poly operator+(const Poly& o) const {
        check_same(o);
        Poly r(field_);
        r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(field_));
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeff(i) + o.coeff(i);
        r.trim();
        return r;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        check_same(o);
        if (is_zero() || o.is_zero()) return Poly(field_);
        Poly r(field_);
        r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(field_));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
        r.trim();
        return r;
    }

    Poly operator*(const Scalar& c) const {
        if (c.field() != field_) throw std::invalid_argument("Poly: scalar field mismatch");
        if (c.is_zero()) return Poly(field_);
        Poly r(field_);
        r.coeffs_.reserve(coeffs_.size());
        for (const Scalar& a : coeffs_) r.coeffs_.push_back(a * c);
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(std::size_t e) const {
        Poly r = one(field_);
        Poly b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    Poly monic() const {
        if (is_zero()) throw std::domain_error("Poly: cannot normalize the zero polynomial");
        if (is_monic()) return *this;
        return *this * leading().inverse();
    }

    Scalar eval(const Scalar& at) const {
        Scalar v = Scalar::zero(field_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * at + *it;
        return v;
    }

    Poly derivative() const {
        Poly r(field_);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            r.coeffs_.push_back(coeffs_[i] * Scalar::of(field_, static_cast<long>(i)));
        r.trim();
        return r;
    }

    bool operator==(const Poly& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Structural order (degree first, then coefficients); container use only.
    bool operator<(const Poly& o) const {
        if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
        }
        return false;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            if (coeffs_[i].is_zero()) continue;
            std::string c = coeffs_[i].str();
            if (!out.empty()) {
                if (!c.empty() && c[0] == '-') {
                    out += " - ";
                    c.erase(0, 1);
                } else {
                    out += " + ";
                }
            }
            if (i == 0 || c != "1") out += c;
            if (i > 0) {
                if (c != "1") out += "*";
                out += "x";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

  private:
    void check_same(const Poly& o) const {
        if (field_ != o.field_) throw std::invalid_argument("Poly: field mismatch");
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    FieldSpec field_;
    std::vector<Scalar> coeffs_;
};

/// Exact division with remainder: a = b*q + r, deg r < deg b.
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (a.field() != b.field()) throw std::invalid_argument("poly_divmod: field mismatch");
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    const FieldSpec& f = a.field();
    if (a.degree() < b.degree()) return {Poly::zero(f), a};

    std::vector<Scalar> rem(a.coeffs());
    std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                             Scalar::zero(f));
    const Scalar lead_inv = b.leading().inverse();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero()) continue;
        Scalar c = rem[i] * lead_inv;
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeff(j);
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

inline Poly operator/(const Poly& a, const Poly& b) { return poly_divmod(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

inline bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

/// Monic greatest common divisor.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.field() != b.field()) throw std::invalid_argument("poly_gcd: field mismatch");
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: gcd(0, 0) is undefined");
    Poly g = a, h = b;
    while (!h.is_zero()) {
        Poly r = g % h;
        g = std::move(h);
        h = std::move(r);
    }
    return g.monic();
}

/// Largest k with (x - lam)^k dividing p; 0 when lam is not a root.
inline std::size_t root_multiplicity(const Poly& p, const Scalar& lam) {
    if (p.is_zero()) throw std::invalid_argument("root_multiplicity: zero polynomial");
    if (p.field() != lam.field())
        throw std::invalid_argument("root_multiplicity: field mismatch");
    std::size_t k = 0;
    std::vector<Scalar> cur(p.coeffs());
    while (cur.size() > 1) {
        // One synthetic division step; the running value ends as the remainder.
        Scalar v = Scalar::zero(p.field());
        std::vector<Scalar> quot(cur.size() - 1, Scalar::zero(p.field()));
        for (std::size_t i = cur.size(); i-- > 0;) {
            v = v * lam + cur[i];
            if (i > 0) quot[i - 1] = v;
        }
        if (!v.is_zero()) break;
        ++k;
        cur = std::move(quot);
    }
    return k;
}

/// Largest k with f^k dividing p (f nonconstant); 0 when f does not divide p.
inline std::size_t factor_multiplicity(const Poly& p, const Poly& f) {
    if (p.is_zero()) throw std::invalid_argument("factor_multiplicity: zero polynomial");
    if (f.is_constant()) throw std::invalid_argument("factor_multiplicity: constant factor");
    std::size_t k = 0;
    Poly cur = p;
    while (true) {
        auto [q, r] = poly_divmod(cur, f);
        if (!r.is_zero()) break;
        ++k;
        cur = std::move(q);
        if (cur.is_constant()) break;
    }
    return k;
}

/// base^e mod m in F[x]; e is an arbitrary-precision exponent.
inline Poly poly_powmod(const Poly& base, BigInt e, const Poly& m) {
    if (e < 0) throw std::invalid_argument("poly_powmod: negative exponent");
    Poly r = Poly::one(base.field());
    Poly b = base % m;
    while (e > 0) {
        if ((e & 1) != 0) r = (r * b) % m;
        e >>= 1;
        if (e > 0) b = (b * b) % m;
    }
    return r;
}

}  // namespace rankpert
