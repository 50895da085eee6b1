#pragma once

#include <cstdint>
#include <random>

#include "rankpert/matrix.hpp"

/// Seeded generators for property tests and the CLI selftest batteries.
/// Everything is driven by an explicit std::mt19937_64 so runs reproduce.

namespace rankpert {

using Rng = std::mt19937_64;

/// Over Q: an integer in [lo, hi].  Over GF(p): a uniform residue.
inline Scalar random_scalar(const FieldSpec& f, Rng& rng, long lo = -5, long hi = 5) {
    if (f.is_prime_field()) {
        std::uniform_int_distribution<std::uint64_t> d(
            0, static_cast<std::uint64_t>(f.modulus()) - 1);
        return Scalar::of(f, static_cast<long>(d(rng)));
    }
    std::uniform_int_distribution<long> d(lo, hi);
    return Scalar::of(f, d(rng));
}

inline Scalar random_nonzero_scalar(const FieldSpec& f, Rng& rng, long lo = -5, long hi = 5) {
    while (true) {
        Scalar s = random_scalar(f, rng, lo, hi);
        if (!s.is_zero()) return s;
    }
}

inline Mat random_mat(const FieldSpec& f, std::size_t rows, std::size_t cols, Rng& rng,
                      long lo = -5, long hi = 5) {
    Mat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(f, rng, lo, hi);
    return m;
}

inline Poly random_monic_poly(const FieldSpec& f, std::size_t degree, Rng& rng, long lo = -5,
                              long hi = 5) {
    std::vector<Scalar> c;
    c.reserve(degree + 1);
    for (std::size_t i = 0; i < degree; ++i) c.push_back(random_scalar(f, rng, lo, hi));
    c.push_back(Scalar::one(f));
    return Poly(f, std::move(c));
}

inline Mat random_invertible_mat(const FieldSpec& f, std::size_t n, Rng& rng, long lo = -5,
                                 long hi = 5) {
    while (true) {
        Mat m = random_mat(f, n, n, rng, lo, hi);
        if (!m.det().is_zero()) return m;
    }
}

/// A random matrix of rank at most r (product of n x r and r x n factors).
inline Mat random_mat_rank_le(const FieldSpec& f, std::size_t n, std::size_t r, Rng& rng,
                              long lo = -2, long hi = 2) {
    return random_mat(f, n, r, rng, lo, hi) * random_mat(f, r, n, rng, lo, hi);
}

}  // namespace rankpert
