#pragma once

#include <boost/integer/mod_inverse.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

/// Exact field arithmetic: the rationals Q and prime fields GF(p).
///
/// Every value is kept in a unique canonical form so that equality is a
/// structural comparison: fractions are reduced with positive denominator,
/// residues live in [0, p).  All integer arithmetic is arbitrary precision.

namespace rankpert {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline BigInt abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Deterministic Miller-Rabin witness test.
inline bool mr_composite_witness(const BigInt& n, const BigInt& a) {
    BigInt d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    BigInt x = boost::multiprecision::powm(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 41 * 41) return true;
    if (n < 1000000) {
        for (BigInt d = 41; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }
    // Witness set is deterministic below 3.3e24, far beyond desk scale.
    for (long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (mr_composite_witness(n, a)) return false;
    return true;
}

}  // namespace detail

enum class FieldKind { rationals, prime_field };

/// Which field we compute in.  Either Q (no modulus) or GF(p) with p prime;
/// primality is verified at construction.
class FieldSpec {
  public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::rationals, 0); }

    static FieldSpec prime_field(BigInt p) {
        if (!detail::is_prime(p))
            throw std::invalid_argument("FieldSpec: modulus " + p.str() + " is not prime");
        return FieldSpec(FieldKind::prime_field, std::move(p));
    }

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::rationals; }
    bool is_prime_field() const { return kind_ == FieldKind::prime_field; }

    const BigInt& modulus() const {
        if (!is_prime_field())
            throw std::logic_error("FieldSpec: rationals carry no modulus");
        return modulus_;
    }

    bool operator==(const FieldSpec& o) const {
        return kind_ == o.kind_ && modulus_ == o.modulus_;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string str() const {
        return is_rationals() ? "Q" : "GF(" + modulus_.str() + ")";
    }

    /// Parses "Q" or "GF(p)".
    static FieldSpec parse(std::string_view s) {
        if (s == "Q") return rationals();
        if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') {
            BigInt p(std::string(s.substr(3, s.size() - 4)));
            return prime_field(p);
        }
        throw std::invalid_argument("FieldSpec: cannot parse \"" + std::string(s) + "\"");
    }

  private:
    FieldSpec(FieldKind k, BigInt m) : kind_(k), modulus_(std::move(m)) {}

    FieldKind kind_;
    BigInt modulus_;  // 0 when rationals
};

/// One exact field element.  Over Q: a reduced fraction num/den with den > 0.
/// Over GF(p): the residue num in [0, p) with den == 1.
class Scalar {
  public:
    Scalar() : field_(FieldSpec::rationals()), num_(0), den_(1) {}

    static Scalar zero(const FieldSpec& f) { return Scalar(f, 0, 1); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, 1, 1); }

    static Scalar of(const FieldSpec& f, BigInt v) {
        if (f.is_prime_field()) {
            v %= f.modulus();
            if (v < 0) v += f.modulus();
        }
        return Scalar(f, std::move(v), 1);
    }
    static Scalar of(const FieldSpec& f, long v) { return of(f, BigInt(v)); }

    /// num/den as a field element; over GF(p) this is num * den^{-1}.
    static Scalar fraction(const FieldSpec& f, BigInt num, BigInt den) {
        if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
        if (f.is_prime_field()) return of(f, std::move(num)) / of(f, std::move(den));
        Scalar s(f, std::move(num), std::move(den));
        s.normalize();
        return s;
    }

    const FieldSpec& field() const { return field_; }
    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Scalar operator-() const {
        if (field_.is_prime_field())
            return Scalar(field_, num_ == 0 ? BigInt(0) : BigInt(field_.modulus() - num_), 1);
        return Scalar(field_, -num_, den_);
    }

    Scalar operator+(const Scalar& o) const {
        check_same(o);
        if (field_.is_prime_field())
            return Scalar(field_, (num_ + o.num_) % field_.modulus(), 1);
        Scalar r(field_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
        r.normalize();
        return r;
    }

    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar operator*(const Scalar& o) const {
        check_same(o);
        if (field_.is_prime_field())
            return Scalar(field_, (num_ * o.num_) % field_.modulus(), 1);
        Scalar r(field_, num_ * o.num_, den_ * o.den_);
        r.normalize();
        return r;
    }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
        if (field_.is_prime_field()) {
            BigInt inv = boost::integer::mod_inverse(num_, field_.modulus());
            return Scalar(field_, std::move(inv), 1);
        }
        Scalar r(field_, den_, num_);
        r.normalize();
        return r;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const {
        return field_ == o.field_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Structural total order, used only to make containers deterministic.
    bool operator<(const Scalar& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    std::string str() const {
        return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
    }

    /// Parses a decimal integer or "a/b".
    static Scalar parse(const FieldSpec& f, std::string_view s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos)
                return of(f, BigInt(std::string(s)));
            BigInt a{std::string(s.substr(0, slash))};
            BigInt b{std::string(s.substr(slash + 1))};
            return fraction(f, std::move(a), std::move(b));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("Scalar: cannot parse \"" + std::string(s) + "\"");
        }
    }

  private:
    Scalar(FieldSpec f, BigInt num, BigInt den)
        : field_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        assert(field_.is_rationals());
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    void check_same(const Scalar& o) const {
        if (field_ != o.field_)
            throw std::invalid_argument("Scalar: field mismatch (" + field_.str() + " vs " +
                                        o.field_.str() + ")");
    }

    FieldSpec field_;
    BigInt num_;
    BigInt den_;
};

}  // namespace rankpert
