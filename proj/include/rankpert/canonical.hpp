#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rankpert/factor.hpp"
#include "rankpert/matrix.hpp"
#include "rankpert/polymat.hpp"

/// Invariant factors via the Smith normal form of xI - A, rational canonical
/// form with an explicit change of basis, and Jordan block-size data computed
/// two independent ways (from the invariant factors, and from rank chains).

namespace rankpert {

/// Raised when a self-verified construction fails its own check; signals an
/// implementation bug, never a bad input.
class internal_check_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The monic divisibility chain p_1 | p_2 | ... | p_s (nonconstant invariant
/// factors of xI - A); their product is the characteristic polynomial.
struct InvariantFactors {
    FieldSpec field;
    std::vector<Poly> factors;  // ascending divisibility order

    std::size_t count() const { return factors.size(); }

    Poly product() const {
        Poly p = Poly::one(field);
        for (const Poly& f : factors) p *= f;
        return p;
    }
};

/// Block-diagonal R of companion matrices (largest invariant factor first)
/// with invertible S satisfying S^{-1} A S = R.
struct RcfDecomposition {
    Mat R;
    Mat S;
    InvariantFactors inv;
};

/// Jordan block sizes per irreducible factor f: block_multiplicities[j-1] is
/// the multiplicity of f in p_{s-j+1}, i.e. the j-th largest block size for
/// any root of f.  Identifying conjugate roots keeps all data inside F.
struct JordanEntry {
    Poly factor;
    std::vector<std::size_t> block_multiplicities;  // non-increasing
    std::size_t algebraic_multiplicity;
};

struct JordanData {
    std::vector<JordanEntry> entries;
    bool complete;  // false over Q when an unfactored residual remains
};

namespace detail {

struct SmithResult {
    std::vector<Poly> diagonal;  // d_1 | d_2 | ... | d_n, monic or zero
    PolyMat pinv;                // P^{-1} where P collects the row operations
};

/// Diagonalizes W by unimodular operations.  Pivot rule: nonzero entry of
/// minimal degree in the working submatrix; division failures demote the
/// remainder to pivot, which strictly lowers the pivot degree and so
/// terminates.  Row operations are tracked in pinv (right-multiplied by the
/// inverse elementary op); column operations need no tracking here.
inline SmithResult smith_reduce(PolyMat w) {
    const std::size_t n = w.rows();
    if (n != w.cols()) throw std::invalid_argument("smith_reduce: square input expected");
    PolyMat pinv = PolyMat::identity(w.field(), n);

    for (std::size_t t = 0; t < n; ++t) {
    restart:
        // Minimal-degree nonzero pivot in the submatrix [t..n) x [t..n).
        std::size_t pr = n, pc = n;
        int best = -1;
        for (std::size_t i = t; i < n; ++i) {
            for (std::size_t j = t; j < n; ++j) {
                const Poly& e = w.at(i, j);
                if (e.is_zero()) continue;
                if (best < 0 || e.degree() < best) {
                    best = e.degree();
                    pr = i;
                    pc = j;
                }
            }
        }
        if (best < 0) break;  // all-zero tail
        if (pr != t) {
            w.swap_rows(pr, t);
            pinv.swap_cols(pr, t);
        }
        if (pc != t) w.swap_cols(pc, t);

        // Clear below the pivot.
        for (std::size_t i = t + 1; i < n; ++i) {
            if (w.at(i, t).is_zero()) continue;
            auto [q, r] = poly_divmod(w.at(i, t), w.at(t, t));
            w.add_row_multiple(i, t, -q);
            pinv.add_col_multiple(t, i, q);
            if (!r.is_zero()) {
                w.swap_rows(i, t);
                pinv.swap_cols(i, t);
                goto restart;
            }
        }
        // Clear to the right of the pivot.
        for (std::size_t j = t + 1; j < n; ++j) {
            if (w.at(t, j).is_zero()) continue;
            auto [q, r] = poly_divmod(w.at(t, j), w.at(t, t));
            w.add_col_multiple(j, t, -q);
            if (!r.is_zero()) {
                w.swap_cols(j, t);
                goto restart;
            }
        }
        // Divisibility sweep: the pivot must divide the whole remaining block.
        for (std::size_t i = t + 1; i < n; ++i) {
            for (std::size_t j = t + 1; j < n; ++j) {
                if (!(w.at(i, j) % w.at(t, t)).is_zero()) {
                    w.add_row_multiple(t, i, Poly::one(w.field()));
                    pinv.add_col_multiple(i, t, -Poly::one(w.field()));
                    goto restart;
                }
            }
        }
        if (!w.at(t, t).is_monic()) {
            Scalar lead = w.at(t, t).leading();
            w.scale_row(t, lead.inverse());
            pinv.scale_col(t, lead);
        }
    }

    std::vector<Poly> diag;
    diag.reserve(n);
    for (std::size_t i = 0; i < n; ++i) diag.push_back(w.at(i, i));
    return {std::move(diag), std::move(pinv)};
}

/// phi(column of polynomials) = sum_j h_j(A) e_j, evaluated by Horner on
/// vectors: one matrix-vector product per coefficient degree.
inline Mat apply_poly_column(const Mat& a, const PolyMat& pinv, std::size_t col) {
    const std::size_t n = a.rows();
    int maxdeg = 0;
    for (std::size_t j = 0; j < n; ++j) maxdeg = std::max(maxdeg, pinv.at(j, col).degree());
    Mat v(a.field(), n, 1);
    for (int k = maxdeg; k >= 0; --k) {
        v = a * v;
        for (std::size_t j = 0; j < n; ++j)
            v.at(j, 0) += pinv.at(j, col).coeff(static_cast<std::size_t>(k));
    }
    return v;
}

}  // namespace detail

/// Block diagonal of companion matrices, largest factor top-left: the R
/// layout of the canonical form (and of the construction's target).
inline Mat companion_block_diagonal(const InvariantFactors& inv) {
    std::size_t n = 0;
    for (const Poly& p : inv.factors) n += static_cast<std::size_t>(p.degree());
    Mat r(inv.field, n, n);
    std::size_t off = 0;
    for (std::size_t i = inv.count(); i-- > 0;) {  // p_s first
        Mat c = companion(inv.factors[i]);
        for (std::size_t a = 0; a < c.rows(); ++a)
            for (std::size_t b = 0; b < c.cols(); ++b) r.at(off + a, off + b) = c.at(a, b);
        off += c.rows();
    }
    return r;
}

/// Nonconstant invariant factors of xI - A, in divisibility order.
inline InvariantFactors smith_invariant_factors(const Mat& a) {
    if (!a.is_square())
        throw std::invalid_argument("smith_invariant_factors: square input expected");
    detail::SmithResult sm = detail::smith_reduce(PolyMat::char_matrix(a));
    InvariantFactors inv{a.field(), {}};
    std::size_t degsum = 0;
    for (const Poly& d : sm.diagonal) {
        if (d.is_zero()) throw internal_check_error("smith: zero invariant factor for xI - A");
        if (d.degree() > 0) {
            inv.factors.push_back(d);
            degsum += static_cast<std::size_t>(d.degree());
        }
    }
    for (std::size_t i = 0; i + 1 < inv.count(); ++i)
        if (!(inv.factors[i + 1] % inv.factors[i]).is_zero())
            throw internal_check_error("smith: divisibility chain broken");
    if (degsum != a.rows()) throw internal_check_error("smith: degree sum mismatch");
    return inv;
}

/// Rational canonical form with explicit basis change: returns (R, S, inv)
/// with S^{-1} A S = R, verified before returning.  R lays out companion
/// blocks largest invariant factor first.  When A is already in that layout,
/// S is the identity.
inline RcfDecomposition rcf_transform(const Mat& a) {
    if (!a.is_square()) throw std::invalid_argument("rcf_transform: square input expected");
    const std::size_t n = a.rows();
    detail::SmithResult sm = detail::smith_reduce(PolyMat::char_matrix(a));

    InvariantFactors inv{a.field(), {}};
    std::vector<std::size_t> positions;  // smith column of each nonconstant factor
    for (std::size_t i = 0; i < n; ++i) {
        if (sm.diagonal[i].degree() > 0) {
            inv.factors.push_back(sm.diagonal[i]);
            positions.push_back(i);
        }
    }
    Mat r = companion_block_diagonal(inv);
    if (r.rows() != n) throw internal_check_error("rcf: invariant factor degrees do not sum to n");
    if (a == r) return {r, Mat::identity(a.field(), n), std::move(inv)};

    // Cyclic generators: w_i = phi(P^{-1} e_i) for each nonconstant factor,
    // then Krylov columns w, Aw, ..., A^{deg-1} w per block, p_s block first.
    Mat s(a.field(), n, n);
    std::size_t col = 0;
    for (std::size_t i = inv.count(); i-- > 0;) {
        Mat w = detail::apply_poly_column(a, sm.pinv, positions[i]);
        const std::size_t d = static_cast<std::size_t>(inv.factors[i].degree());
        for (std::size_t k = 0; k < d; ++k) {
            s.set_col(col++, w);
            if (k + 1 < d) w = a * w;
        }
    }

    Mat sinv(a.field(), n, n);
    try {
        sinv = s.inverse();
    } catch (const std::domain_error&) {
        throw internal_check_error("rcf: constructed basis is singular");
    }
    if (sinv * a * s != r) throw internal_check_error("rcf: S^{-1} A S != R");
    return {std::move(r), std::move(s), std::move(inv)};
}

/// Jordan block sizes read off the invariant factors: for each irreducible f
/// of p_s, the j-th largest block is the multiplicity of f in p_{s-j+1}.
inline JordanData jordan_from_invariants(const InvariantFactors& inv, const Factorization& facts) {
    if (inv.count() == 0) return {{}, true};
    const Poly& ps = inv.factors.back();
    if (facts.product() != ps)
        throw std::invalid_argument("jordan_from_invariants: factorization does not multiply to p_s");

    JordanData jd{{}, facts.complete()};
    for (const FactorPower& fp : facts.factors) {
        JordanEntry e{fp.factor, {}, 0};
        for (std::size_t i = inv.count(); i-- > 0;) {
            std::size_t k = factor_multiplicity(inv.factors[i], fp.factor);
            if (k == 0) break;  // divisibility chain: once absent, absent below
            e.block_multiplicities.push_back(k);
            e.algebraic_multiplicity += k;
        }
        jd.entries.push_back(std::move(e));
    }
    return jd;
}

/// Independent route to the same block sizes: the number of blocks of size
/// >= k for roots of f is (nullity f(A)^k - nullity f(A)^{k-1}) / deg f.
/// Returns the empty list when f does not divide the characteristic
/// polynomial.
inline std::vector<std::size_t> jordan_from_ranks(const Mat& a, const Poly& f) {
    if (!a.is_square()) throw std::invalid_argument("jordan_from_ranks: square input expected");
    if (f.field() != a.field()) throw std::invalid_argument("jordan_from_ranks: field mismatch");
    if (irreducibility(f) == Irreducibility::reducible)
        throw std::invalid_argument("jordan_from_ranks: factor is reducible");

    const std::size_t n = a.rows();
    const std::size_t df = static_cast<std::size_t>(f.degree());
    Mat fa = poly_eval_matrix(f.monic(), a);
    Mat power = Mat::identity(a.field(), n);

    std::vector<std::size_t> count_ge;  // count_ge[k-1] = #blocks of size >= k
    std::size_t prev_nullity = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        power = power * fa;
        std::size_t nl = power.nullity();
        std::size_t delta = nl - prev_nullity;
        if (delta == 0) break;
        if (delta % df != 0)
            throw std::invalid_argument("jordan_from_ranks: nullity step not divisible by deg f; "
                                        "factor is not irreducible over the field");
        count_ge.push_back(delta / df);
        prev_nullity = nl;
    }

    std::vector<std::size_t> blocks;  // built largest-first
    for (std::size_t size = count_ge.size(); size-- > 0;) {
        std::size_t exactly =
            count_ge[size] - (size + 1 < count_ge.size() ? count_ge[size + 1] : 0);
        for (std::size_t c = 0; c < exactly; ++c)
            blocks.push_back(size + 1);
    }
    return blocks;
}

}  // namespace rankpert
