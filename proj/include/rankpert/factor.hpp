#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rankpert/poly.hpp"

/// Irreducible factorization of monic univariate polynomials.
///
/// Over GF(p) the factorization is complete (squarefree decomposition,
/// distinct-degree splitting, then equal-degree splitting with a fixed-seed
/// pseudorandom sequence, so results are reproducible).  Over Q only rational
/// roots are extracted; whatever nonlinear content remains is reported as an
/// unfactored residual.

namespace rankpert {

struct FactorPower {
    Poly factor;  // monic irreducible
    std::size_t multiplicity;
};

struct Factorization {
    std::vector<FactorPower> factors;
    Poly residual;  // monic; 1 when the factorization is complete

    bool complete() const { return residual.is_one(); }

    /// Re-multiplies factors and residual; used by callers to cross-check.
    Poly product() const {
        Poly p = residual;
        for (const auto& [f, e] : factors) p *= f.pow(e);
        return p;
    }
};

enum class Irreducibility { irreducible, reducible, unknown };

namespace detail {

// f(x) = g(x^p) over GF(p) has the p-th root g obtained by contracting
// exponents; coefficients are fixed by Frobenius on the prime field.
inline Poly pth_root(const Poly& f) {
    const BigInt& p = f.field().modulus();
    std::size_t step = static_cast<std::size_t>(p);
    std::vector<Scalar> out;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(f.degree()); i += step)
        out.push_back(f.coeff(i));
    return Poly(f.field(), std::move(out));
}

inline void sqfree_decompose_gfp(const Poly& f, std::size_t outer_mult,
                                 std::vector<std::pair<Poly, std::size_t>>& out) {
    if (f.is_constant()) return;
    Poly fp = f.derivative();
    if (fp.is_zero()) {
        sqfree_decompose_gfp(pth_root(f), outer_mult * static_cast<std::size_t>(f.field().modulus()), out);
        return;
    }
    Poly c = poly_gcd(f, fp);
    Poly w = f / c;
    std::size_t i = 1;
    while (!w.is_one()) {
        Poly y = poly_gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i * outer_mult);
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (!c.is_one())
        sqfree_decompose_gfp(pth_root(c), outer_mult * static_cast<std::size_t>(f.field().modulus()), out);
}

// Distinct-degree split of a monic squarefree g: list of (product, degree).
inline std::vector<std::pair<Poly, std::size_t>> ddf(const Poly& g_in) {
    const FieldSpec& F = g_in.field();
    const BigInt& p = F.modulus();
    std::vector<std::pair<Poly, std::size_t>> out;
    Poly g = g_in;
    Poly h = Poly::x(F) % g;
    std::size_t d = 0;
    while (g.degree() >= 1) {
        ++d;
        if (g.degree() < static_cast<int>(2 * d)) {
            out.emplace_back(g, static_cast<std::size_t>(g.degree()));
            break;
        }
        h = poly_powmod(h, p, g);  // h = x^(p^d) mod g
        Poly split = poly_gcd(h - Poly::x(F), g);
        if (split.degree() > 0) {
            out.emplace_back(split, d);
            g = g / split;
            h = h % g;
        }
    }
    return out;
}

// Equal-degree split (Cantor-Zassenhaus) of a product of irreducibles all of
// degree d.  The generator seed is fixed so runs are reproducible.
inline void edf(const Poly& g, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (static_cast<std::size_t>(g.degree()) == d) {
        out.push_back(g.monic());
        return;
    }
    const FieldSpec& F = g.field();
    const BigInt& p = F.modulus();
    std::uniform_int_distribution<std::uint64_t> pick(0, static_cast<std::uint64_t>(p) - 1);

    for (int attempt = 0; attempt < 4096; ++attempt) {
        std::vector<Scalar> rc;
        for (int i = 0; i < g.degree(); ++i)
            rc.push_back(Scalar::of(F, static_cast<long>(pick(rng))));
        Poly r(F, std::move(rc));
        if (r.is_constant()) continue;

        Poly t(F);
        if (p == 2) {
            // Trace map r + r^2 + ... + r^(2^(d-1)) mod g.
            t = r % g;
            Poly term = t;
            for (std::size_t i = 1; i < d; ++i) {
                term = (term * term) % g;
                t += term;
            }
            t = t % g;
        } else {
            BigInt e = (boost::multiprecision::pow(p, static_cast<unsigned>(d)) - 1) / 2;
            t = poly_powmod(r, e, g) - Poly::one(F);
        }
        if (t.is_zero()) continue;
        Poly c = poly_gcd(t, g);
        if (c.degree() > 0 && c.degree() < g.degree()) {
            edf(c, d, rng, out);
            edf(g / c, d, rng, out);
            return;
        }
    }
    throw std::runtime_error("edf: splitting did not converge");
}

inline Factorization factor_gfp(const Poly& p) {
    std::vector<std::pair<Poly, std::size_t>> sqf;
    sqfree_decompose_gfp(p, 1, sqf);

    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    Factorization out{{}, Poly::one(p.field())};
    for (const auto& [part, mult] : sqf) {
        for (const auto& [prod, d] : ddf(part)) {
            std::vector<Poly> irr;
            edf(prod, d, rng, irr);
            for (Poly& f : irr) out.factors.push_back({std::move(f), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FactorPower& a, const FactorPower& b) { return a.factor < b.factor; });
    return out;
}

// All divisors of |v|, by trial division.  Returns an empty list when v has a
// cofactor too large to factor at desk scale (the caller then reports an
// incomplete factorization rather than missing roots silently).
inline std::vector<BigInt> all_divisors(BigInt v) {
    if (v < 0) v = -v;
    std::vector<std::pair<BigInt, unsigned>> pf;
    for (BigInt d = 2; d * d <= v && d <= 1000000; d == 2 ? d = 3 : d += 2) {
        unsigned e = 0;
        while (v % d == 0) {
            v /= d;
            ++e;
        }
        if (e) pf.emplace_back(d, e);
    }
    if (v > 1) {
        if (v > BigInt(1000000) * BigInt(1000000)) return {};
        pf.emplace_back(v, 1);  // prime cofactor below the trial bound squared
    }
    std::vector<BigInt> divs{1};
    for (const auto& [q, e] : pf) {
        std::size_t base = divs.size();
        BigInt qe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            qe *= q;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * qe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

inline Factorization factor_rationals(const Poly& p) {
    const FieldSpec& F = p.field();
    Factorization out{{}, Poly::one(F)};
    Poly rest = p;

    // Strip the root at zero first.
    std::size_t k0 = root_multiplicity(rest, Scalar::zero(F));
    if (k0 > 0) {
        out.factors.push_back({Poly::x(F), k0});
        rest = rest / Poly::x(F).pow(k0);
    }

    if (rest.degree() >= 1) {
        // Clear denominators: candidate roots a/b need b | lead and a | const
        // of the integer model.
        BigInt den_lcm = 1;
        for (const Scalar& c : rest.coeffs())
            den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
        BigInt lead = rest.leading().num() * (den_lcm / rest.leading().den());
        BigInt cnst = rest.coeff(0).num() * (den_lcm / rest.coeff(0).den());

        std::vector<BigInt> num_divs = all_divisors(cnst);
        std::vector<BigInt> den_divs = all_divisors(lead);
        bool enumeration_ok = !num_divs.empty() && !den_divs.empty();
        if (enumeration_ok) {
            for (const BigInt& a : num_divs) {
                for (const BigInt& b : den_divs) {
                    for (int sign : {1, -1}) {
                        if (rest.degree() < 1) break;
                        Scalar r = Scalar::fraction(F, sign * a, b);
                        std::size_t k = root_multiplicity(rest, r);
                        if (k > 0) {
                            Poly lin = Poly::x(F) - Poly::constant(r);
                            out.factors.push_back({lin, k});
                            rest = rest / lin.pow(k);
                        }
                    }
                }
            }
        }
    }

    if (rest.degree() == 1) {
        out.factors.push_back({rest.monic(), 1});
        rest = Poly::one(F);
    }
    out.residual = rest.is_constant() ? Poly::one(F) : rest.monic();
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FactorPower& a, const FactorPower& b) { return a.factor < b.factor; });
    return out;
}

}  // namespace detail

/// Factorization of a monic polynomial into monic irreducibles; complete over
/// GF(p), rational-root extraction over Q (residual flagged when nonlinear
/// content remains).
inline Factorization factor_irreducible(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor_irreducible: zero polynomial");
    if (!p.is_monic()) throw std::invalid_argument("factor_irreducible: input must be monic");
    if (p.is_constant()) return Factorization{{}, Poly::one(p.field())};
    return p.field().is_prime_field() ? detail::factor_gfp(p) : detail::factor_rationals(p);
}

/// Exact over GF(p); over Q the answer may be `unknown` for squarefree
/// polynomials of degree >= 2 without rational roots (full factorization over
/// Q is out of scope).
inline Irreducibility irreducibility(const Poly& f) {
    if (f.degree() < 1) return Irreducibility::reducible;
    if (f.degree() == 1) return Irreducibility::irreducible;
    Poly m = f.monic();
    if (f.field().is_prime_field()) {
        Factorization fac = factor_irreducible(m);
        bool irr = fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
        return irr ? Irreducibility::irreducible : Irreducibility::reducible;
    }
    if (!poly_gcd(m, m.derivative()).is_one()) return Irreducibility::reducible;
    Factorization fac = factor_irreducible(m);
    if (!fac.factors.empty()) return Irreducibility::reducible;
    return Irreducibility::unknown;
}

/// Squarefree part decomposition p = prod g_i^i with the g_i pairwise coprime
/// and squarefree; exposed for tests.
inline std::vector<std::pair<Poly, std::size_t>> squarefree_decomposition(const Poly& p) {
    if (p.is_zero() || !p.is_monic())
        throw std::invalid_argument("squarefree_decomposition: input must be monic nonzero");
    std::vector<std::pair<Poly, std::size_t>> out;
    if (p.field().is_prime_field()) {
        detail::sqfree_decompose_gfp(p, 1, out);
    } else {
        // Characteristic zero: plain Yun loop, derivative never vanishes.
        Poly f = p;
        Poly c = poly_gcd(f, f.derivative());
        Poly w = f / c;
        std::size_t i = 1;
        while (!w.is_one()) {
            Poly y = poly_gcd(w, c);
            Poly z = w / y;
            if (z.degree() > 0) out.emplace_back(z.monic(), i);
            ++i;
            w = std::move(y);
            c = c / w;
        }
    }
    return out;
}

}  // namespace rankpert
