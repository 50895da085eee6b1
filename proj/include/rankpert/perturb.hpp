#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rankpert/canonical.hpp"

/// Deciding and constructing rank-bounded perturbations with a prescribed
/// characteristic polynomial: q is achievable by A + B with rank(B) <= m
/// exactly when p_1 ... p_{s-m} divides q, equivalently when the per-factor
/// block inequality holds.  The construction replaces columns
/// delta_1, ..., delta_m of the rational canonical form.

namespace rankpert {

struct JordanReportRow {
    Poly factor;
    std::size_t multiplicity_in_q;
    std::size_t algebraic_multiplicity;
    std::size_t sum_largest_m_blocks;
    bool satisfied;  // multiplicity_in_q >= algebraic_multiplicity - sum_largest_m_blocks
};

/// Decision evidence: the required divisor p_1 ... p_{s-m}, the quotient h
/// when it divides q (or the remainder when it does not), and per-factor
/// rows of the block inequality where the factorization is available.
struct FeasibilityCertificate {
    bool feasible = false;
    std::size_t m_requested = 0;
    std::size_t m_effective = 0;  // min(m, s)
    Poly required_divisor;
    std::optional<Poly> quotient_h;  // present iff feasible
    std::optional<Poly> remainder;   // present iff infeasible
    bool jordan_complete = false;    // rows cover every factor (always over GF(p))
    std::vector<JordanReportRow> jordan_report;

    FeasibilityCertificate() : required_divisor(FieldSpec::rationals()) {}
    explicit FeasibilityCertificate(const FieldSpec& f) : required_divisor(Poly::one(f)) {}
};

/// The constructed perturbation, with the data needed to re-check it.
struct Perturbation {
    Mat B;
    std::size_t rank_B;
    std::vector<std::size_t> altered_columns_rcf;  // the delta_i, 1-based
    Poly achieved_charpoly;
};

struct VerifyReport {
    std::size_t rank_B = 0;
    bool rank_ok = false;
    Poly achieved_charpoly;
    bool charpoly_ok = false;

    bool pass() const { return rank_ok && charpoly_ok; }
    explicit VerifyReport(const FieldSpec& f) : achieved_charpoly(Poly::zero(f)) {}
};

/// Raised when the requested polynomial is not achievable; carries the
/// certificate explaining why.
class infeasible_error : public std::runtime_error {
  public:
    explicit infeasible_error(FeasibilityCertificate cert)
        : std::runtime_error("perturbation infeasible: " + cert.required_divisor.str() +
                             " does not divide the requested polynomial"),
          certificate(std::move(cert)) {}

    FeasibilityCertificate certificate;
};

/// p_1 * ... * p_{s - min(m, s)}; the empty product is 1.
inline Poly required_divisor(const InvariantFactors& inv, std::size_t m) {
    const std::size_t s = inv.count();
    const std::size_t m_eff = std::min(m, s);
    Poly d = Poly::one(inv.field);
    for (std::size_t i = 0; i < s - m_eff; ++i) d *= inv.factors[i];
    return d;
}

namespace detail {

inline std::vector<JordanReportRow> jordan_rows(const JordanData& jd, const Poly& q,
                                                std::size_t m) {
    std::vector<JordanReportRow> rows;
    for (const JordanEntry& e : jd.entries) {
        std::size_t mq = factor_multiplicity(q, e.factor);
        std::size_t top = 0;
        for (std::size_t j = 0; j < std::min(m, e.block_multiplicities.size()); ++j)
            top += e.block_multiplicities[j];
        std::size_t deficit = e.algebraic_multiplicity - top;  // top <= alg by construction
        rows.push_back({e.factor, mq, e.algebraic_multiplicity, top, mq >= deficit});
    }
    return rows;
}

}  // namespace detail

/// Feasibility decision via the divisibility form, with the
/// per-factor inequality attached as evidence where factorization allows.
inline FeasibilityCertificate check_feasible(const Mat& a, const Poly& q, std::size_t m) {
    if (!a.is_square()) throw std::invalid_argument("check_feasible: square matrix expected");
    if (q.field() != a.field()) throw std::invalid_argument("check_feasible: field mismatch");
    if (!q.is_monic()) throw std::invalid_argument("check_feasible: q must be monic");
    if (q.degree() != static_cast<int>(a.rows()))
        throw std::invalid_argument("check_feasible: deg q must equal the matrix dimension");

    InvariantFactors inv = smith_invariant_factors(a);
    FeasibilityCertificate cert(a.field());
    cert.m_requested = m;
    cert.m_effective = std::min(m, inv.count());
    cert.required_divisor = required_divisor(inv, m);

    auto [h, rem] = poly_divmod(q, cert.required_divisor);
    cert.feasible = rem.is_zero();
    if (cert.feasible)
        cert.quotient_h = std::move(h);
    else
        cert.remainder = std::move(rem);

    if (inv.count() > 0) {
        JordanData jd = jordan_from_invariants(inv, factor_irreducible(inv.factors.back()));
        cert.jordan_complete = jd.complete;
        cert.jordan_report = detail::jordan_rows(jd, q, m);
    } else {
        cert.jordan_complete = true;  // 0 x 0 matrix, nothing to report
    }
    return cert;
}

/// The per-eigenvalue inequality, evaluated per irreducible factor:
/// mult_f(q) >= alg_f(A) - (sum of the largest m block sizes for f).
/// Requires complete Jordan data, otherwise the check would be unsound.
inline bool check_jordan_condition(const JordanData& jd, const Poly& q, std::size_t m) {
    if (!jd.complete)
        throw std::invalid_argument("check_jordan_condition: incomplete Jordan data");
    for (const JordanReportRow& row : detail::jordan_rows(jd, q, m))
        if (!row.satisfied) return false;
    return true;
}

/// Column replacement in the canonical basis (the constructive direction):
/// alters columns delta_1, ..., delta_m of R = blockdiag(p_s, ..., p_1) so
/// the leading delta_m block becomes the companion matrix of h = q / divisor;
/// R + B is then blockdiag(h, p_{s-m}, ..., p_1).
inline std::pair<Mat, std::vector<std::size_t>> construct_in_rcf(const InvariantFactors& inv,
                                                                 const Poly& q, std::size_t m) {
    const std::size_t s = inv.count();
    const std::size_t m_eff = std::min(m, s);
    const Poly divisor = required_divisor(inv, m);
    auto [h, rem] = poly_divmod(q, divisor);
    if (!rem.is_zero())
        throw std::invalid_argument("construct_in_rcf: required divisor does not divide q");

    std::size_t n = 0;
    for (const Poly& p : inv.factors) n += static_cast<std::size_t>(p.degree());
    Mat r = companion_block_diagonal(inv);

    std::vector<std::size_t> altered;
    if (m_eff == 0) return {Mat::zero(inv.field, n), altered};

    // Target block layout: companion(h) on the first delta_m rows/columns,
    // untouched blocks p_{s-m}, ..., p_1 after it.
    InvariantFactors tail{inv.field, {}};
    for (std::size_t i = 0; i < s - m_eff; ++i) tail.factors.push_back(inv.factors[i]);
    tail.factors.push_back(h);  // h takes the leading slot in the layout below
    Mat target = companion_block_diagonal(tail);

    Mat b = target - r;
    std::size_t delta = 0;
    for (std::size_t i = 0; i < m_eff; ++i) {
        delta += static_cast<std::size_t>(inv.factors[s - 1 - i].degree());
        altered.push_back(delta);  // 1-based column numbers, as in the proof
    }
    return {std::move(b), std::move(altered)};
}

/// Full pipeline: feasibility, canonical form, column replacement, conjugate
/// back, then re-verify rank and characteristic polynomial before returning.
inline Perturbation construct(const Mat& a, const Poly& q, std::size_t m) {
    FeasibilityCertificate cert = check_feasible(a, q, m);
    if (!cert.feasible) throw infeasible_error(std::move(cert));

    RcfDecomposition rcf = rcf_transform(a);
    auto [b_rcf, altered] = construct_in_rcf(rcf.inv, q, m);
    Mat b = rcf.S * b_rcf * rcf.S.inverse();

    Perturbation out{std::move(b), 0, std::move(altered), Poly::zero(a.field())};
    out.rank_B = out.B.rank();
    out.achieved_charpoly = (a + out.B).charpoly();
    if (out.rank_B > m) throw internal_check_error("construct: rank bound violated");
    if (out.achieved_charpoly != q)
        throw internal_check_error("construct: achieved characteristic polynomial mismatch");
    return out;
}

/// Independent re-check of any claimed perturbation.
inline VerifyReport verify_perturbation(const Mat& a, const Mat& b, const Poly& q,
                                        std::size_t m) {
    if (a.field() != b.field() || a.field() != q.field())
        throw std::invalid_argument("verify_perturbation: field mismatch");
    if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("verify_perturbation: dimension mismatch");

    VerifyReport rep(a.field());
    rep.rank_B = b.rank();
    rep.rank_ok = rep.rank_B <= m;
    rep.achieved_charpoly = (a + b).charpoly();
    rep.charpoly_ok = rep.achieved_charpoly == q;
    return rep;
}

/// (B+A)^k = [sum_{j=0}^{k-1} A^j B (B+A)^{k-j-1}] + A^k.  Holds in any ring;
/// returning false would mean broken matrix arithmetic.
inline bool telescoping_check(const Mat& a, const Mat& b, std::size_t k) {
    if (a.field() != b.field() || a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square())
        throw std::invalid_argument("telescoping_check: dimension mismatch");
    if (k < 1) throw std::invalid_argument("telescoping_check: k >= 1 expected");

    const Mat sum_ab = a + b;
    std::vector<Mat> apow{Mat::identity(a.field(), a.rows())};
    std::vector<Mat> spow{Mat::identity(a.field(), a.rows())};
    for (std::size_t i = 1; i <= k; ++i) {
        apow.push_back(apow.back() * a);
        spow.push_back(spow.back() * sum_ab);
    }
    Mat rhs = apow[k];
    for (std::size_t j = 0; j < k; ++j) rhs = rhs + apow[j] * b * spow[k - j - 1];
    return spow[k] == rhs;
}

/// lhs = rank((A+B)^k), rhs = k rank(B) + rank(A^k); callers assert lhs <= rhs.
inline std::pair<std::size_t, std::size_t> rank_bound_check(const Mat& a, const Mat& b,
                                                            std::size_t k) {
    if (a.field() != b.field() || a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square())
        throw std::invalid_argument("rank_bound_check: dimension mismatch");
    if (k < 1) throw std::invalid_argument("rank_bound_check: k >= 1 expected");
    std::size_t lhs = (a + b).pow(k).rank();
    std::size_t rhs = k * b.rank() + a.pow(k).rank();
    return {lhs, rhs};
}

}  // namespace rankpert
