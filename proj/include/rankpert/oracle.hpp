#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rankpert/perturb.hpp"

/// Brute-force verification harness over small prime fields: enumerate every
/// perturbation of rank <= m, compare the achieved characteristic-polynomial
/// set against the predicted set of all monic multiples of the required
/// divisor, and cross-check charpoly coefficients against principal minors.

namespace rankpert {

struct EnumerationBudget {
    std::uint64_t max_candidates = std::uint64_t{1} << 22;
    std::uint64_t seed = 0;  // recorded in reports of sampled runs
};

/// Enumeration would exceed the budget; shrink n, p or m.
class budget_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint64_t small_modulus(const FieldSpec& f) {
    if (!f.is_prime_field())
        throw std::invalid_argument("oracle: enumeration needs a prime field");
    if (f.modulus() > 1u << 20)
        throw budget_error("oracle: modulus too large to enumerate");
    return static_cast<std::uint64_t>(f.modulus());
}

inline BigInt pow_int(std::uint64_t base, std::uint64_t exp) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

// Odometer over `digits` base-p values; fn gets the digit vector.
inline void for_each_tuple(std::uint64_t p, std::size_t digits,
                           const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
    std::vector<std::uint64_t> v(digits, 0);
    while (true) {
        fn(v);
        std::size_t i = 0;
        while (i < digits && ++v[i] == p) v[i++] = 0;
        if (i == digits) return;
    }
}

inline Mat mat_from_digits(const FieldSpec& f, std::size_t rows, std::size_t cols,
                           const std::vector<std::uint64_t>& d) {
    Mat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = Scalar::of(f, static_cast<long>(d[i * cols + j]));
    return m;
}

// Reduced row echelon r x n matrices of full rank r, deterministic order:
// pivot-column combinations lexicographically, then free entries.
inline void for_each_rref(const FieldSpec& f, std::size_t r, std::size_t n,
                          const std::function<void(const Mat&)>& fn) {
    const std::uint64_t p = small_modulus(f);
    std::vector<std::size_t> piv(r);
    for (std::size_t i = 0; i < r; ++i) piv[i] = i;
    while (true) {
        std::vector<bool> is_piv(n, false);
        for (std::size_t c : piv) is_piv[c] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free_cells;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = piv[i] + 1; j < n; ++j)
                if (!is_piv[j]) free_cells.emplace_back(i, j);

        for_each_tuple(p, free_cells.size(), [&](const std::vector<std::uint64_t>& vals) {
            Mat m(f, r, n);
            for (std::size_t i = 0; i < r; ++i) m.at(i, piv[i]) = Scalar::one(f);
            for (std::size_t k = 0; k < free_cells.size(); ++k)
                m.at(free_cells[k].first, free_cells[k].second) =
                    Scalar::of(f, static_cast<long>(vals[k]));
            fn(m);
        });

        // next combination
        std::size_t i = r;
        bool advanced = false;
        while (i-- > 0) {
            if (piv[i] != i + n - r) {
                ++piv[i];
                for (std::size_t j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

}  // namespace detail

/// Number of n x n matrices of rank exactly r over GF(p):
/// gaussian_binomial(n, r) * prod_{i<r} (p^n - p^i).
inline BigInt gaussian_binomial(std::size_t n, std::size_t r, std::uint64_t p) {
    if (r > n) return 0;
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < r; ++i) {
        num *= detail::pow_int(p, n - i) - 1;
        den *= detail::pow_int(p, i + 1) - 1;
    }
    return num / den;
}

inline BigInt rank_matrix_count(std::size_t n, std::size_t r, std::uint64_t p) {
    BigInt c = gaussian_binomial(n, r, p);
    for (std::size_t i = 0; i < r; ++i) c *= detail::pow_int(p, n) - detail::pow_int(p, i);
    return c;
}

/// Every n x n matrix over GF(p) of rank <= m, each exactly once, in a
/// deterministic order.  Full sweep with a rank filter while p^(n^2) <= 2^20;
/// rank-stratified generation (canonical row space x coordinate matrix)
/// above that.
inline void enumerate_rank_le(const FieldSpec& f, std::size_t n, std::size_t m,
                              const EnumerationBudget& budget,
                              const std::function<void(const Mat&)>& fn) {
    const std::uint64_t p = detail::small_modulus(f);
    const std::size_t r_max = std::min(m, n);
    const BigInt sweep_cost = detail::pow_int(p, n * n);

    if (sweep_cost <= (std::uint64_t{1} << 20)) {
        if (sweep_cost > budget.max_candidates)
            throw budget_error("enumerate_rank_le: sweep exceeds the candidate budget");
        detail::for_each_tuple(p, n * n, [&](const std::vector<std::uint64_t>& d) {
            Mat b = detail::mat_from_digits(f, n, n, d);
            if (b.rank() <= r_max) fn(b);
        });
        return;
    }

    BigInt cost = 0;
    for (std::size_t r = 1; r <= r_max; ++r)
        cost += gaussian_binomial(n, r, p) * detail::pow_int(p, n * r);
    if (cost > budget.max_candidates)
        throw budget_error("enumerate_rank_le: stratified enumeration exceeds the candidate budget");

    fn(Mat::zero(f, n));  // rank 0
    for (std::size_t r = 1; r <= r_max; ++r) {
        detail::for_each_rref(f, r, n, [&](const Mat& rref) {
            detail::for_each_tuple(p, n * r, [&](const std::vector<std::uint64_t>& d) {
                Mat c = detail::mat_from_digits(f, n, r, d);
                if (c.rank() == r) fn(c * rref);
            });
        });
    }
}

inline std::vector<Mat> collect_rank_le(const FieldSpec& f, std::size_t n, std::size_t m,
                                        const EnumerationBudget& budget) {
    std::vector<Mat> out;
    enumerate_rank_le(f, n, m, budget, [&](const Mat& b) { out.push_back(b); });
    return out;
}

/// { charpoly(A + B) : rank(B) <= m }, by exhaustive enumeration.
inline std::set<Poly> achievable_set_bruteforce(const Mat& a, std::size_t m,
                                                const EnumerationBudget& budget) {
    if (!a.is_square()) throw std::invalid_argument("achievable_set_bruteforce: square matrix expected");
    std::set<Poly> out;
    enumerate_rank_le(a.field(), a.rows(), m, budget,
                      [&](const Mat& b) { out.insert((a + b).charpoly()); });
    return out;
}

/// The predicted achievable set: every monic degree-n multiple of
/// p_1 ... p_{s-m}.  Finite only over prime fields.
inline std::set<Poly> achievable_set_predicted(const Mat& a, std::size_t m) {
    if (!a.is_square()) throw std::invalid_argument("achievable_set_predicted: square matrix expected");
    if (!a.field().is_prime_field())
        throw std::invalid_argument("achievable_set_predicted: infinite set over the rationals");
    const std::uint64_t p = detail::small_modulus(a.field());
    const FieldSpec& f = a.field();

    Poly divisor = required_divisor(smith_invariant_factors(a), m);
    const std::size_t k = a.rows() - static_cast<std::size_t>(divisor.degree());

    std::set<Poly> out;
    detail::for_each_tuple(p, k, [&](const std::vector<std::uint64_t>& d) {
        std::vector<Scalar> coeffs;
        coeffs.reserve(k + 1);
        for (std::uint64_t v : d) coeffs.push_back(Scalar::of(f, static_cast<long>(v)));
        coeffs.push_back(Scalar::one(f));
        out.insert(divisor * Poly(f, std::move(coeffs)));
    });
    return out;
}

struct TheoremReport {
    FieldSpec field;
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t bruteforce_count = 0;
    std::uint64_t predicted_count = 0;
    bool equal = false;
    std::optional<Poly> counterexample;  // smallest element of the symmetric difference
    std::optional<Mat> counterexample_B;  // witness when the brute-force side is larger
    std::uint64_t seed = 0;
    double wall_ms = 0.0;
};

/// Both directions of the characterization at once: the enumerated and predicted sets
/// must be equal for every input; any difference is an implementation bug.
inline TheoremReport theorem_check(const Mat& a, std::size_t m, const EnumerationBudget& budget) {
    auto t0 = std::chrono::steady_clock::now();
    TheoremReport rep{a.field(), a.rows(), m, 0, 0, false, {}, {}, budget.seed, 0.0};

    std::set<Poly> bf = achievable_set_bruteforce(a, m, budget);
    std::set<Poly> pred = achievable_set_predicted(a, m);
    rep.bruteforce_count = bf.size();
    rep.predicted_count = pred.size();
    rep.equal = bf == pred;

    if (!rep.equal) {
        std::vector<Poly> diff;
        std::set_symmetric_difference(bf.begin(), bf.end(), pred.begin(), pred.end(),
                                      std::back_inserter(diff));
        rep.counterexample = diff.front();
        if (bf.count(diff.front()) > 0) {
            enumerate_rank_le(a.field(), a.rows(), m, budget, [&](const Mat& b) {
                if (!rep.counterexample_B && (a + b).charpoly() == *rep.counterexample)
                    rep.counterexample_B = b;
            });
        }
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

struct NecessityReport {
    std::uint64_t pairs_checked = 0;
    bool all_hold = true;
    std::optional<Mat> violating_B;
};

/// Necessity refinement, independent of set equality: every enumerated B of
/// rank <= m must satisfy the per-factor inequality for q = charpoly(A+B).
inline NecessityReport necessity_check(const Mat& a, std::size_t m,
                                       const EnumerationBudget& budget) {
    InvariantFactors inv = smith_invariant_factors(a);
    JordanData jd =
        inv.count() == 0 ? JordanData{{}, true}
                         : jordan_from_invariants(inv, factor_irreducible(inv.factors.back()));

    NecessityReport rep;
    enumerate_rank_le(a.field(), a.rows(), m, budget, [&](const Mat& b) {
        ++rep.pairs_checked;
        if (rep.all_hold && !check_jordan_condition(jd, (a + b).charpoly(), m)) {
            rep.all_hold = false;
            rep.violating_B = b;
        }
    });
    return rep;
}

/// Coefficient identity: coeff_j(charpoly(M)) == (-1)^(n-j) * principal minor sum
/// of order n-j, for every j.
inline bool charpoly_minor_crosscheck(const Mat& m) {
    if (!m.is_square()) throw std::invalid_argument("charpoly_minor_crosscheck: square matrix expected");
    const std::size_t n = m.rows();
    if (n > 8) throw std::invalid_argument("charpoly_minor_crosscheck: n <= 8 expected");
    Poly cp = m.charpoly();
    for (std::size_t j = 0; j <= n; ++j) {
        Scalar minors = m.principal_minor_sum(n - j);
        if ((n - j) % 2 != 0) minors = -minors;
        if (cp.coeff(j) != minors) return false;
    }
    return true;
}

/// All p^(n^2) matrices over GF(p), deterministic order; used by exhaustive
/// sweeps over the base matrix A itself.
inline void enumerate_all_matrices(const FieldSpec& f, std::size_t n,
                                   const EnumerationBudget& budget,
                                   const std::function<void(const Mat&)>& fn) {
    const std::uint64_t p = detail::small_modulus(f);
    if (detail::pow_int(p, n * n) > budget.max_candidates)
        throw budget_error("enumerate_all_matrices: exceeds the candidate budget");
    detail::for_each_tuple(p, n * n,
                           [&](const std::vector<std::uint64_t>& d) { fn(detail::mat_from_digits(f, n, n, d)); });
}

}  // namespace rankpert
