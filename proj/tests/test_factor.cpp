#include <catch2/catch_amalgamated.hpp>

#include "rankpert/factor.hpp"
#include "rankpert/random.hpp"

using namespace rankpert;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime_field(2);
const FieldSpec F3 = FieldSpec::prime_field(3);
const FieldSpec F5 = FieldSpec::prime_field(5);
}  // namespace

TEST_CASE("factorization worked examples over GF(p)") {
    // x^2 + x = x (x + 1) over GF(2)
    Factorization f1 = factor_irreducible(Poly::from_ints(F2, {0, 1, 1}));
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.complete());
    CHECK(f1.factors[0].factor == Poly::x(F2));
    CHECK(f1.factors[0].multiplicity == 1);
    CHECK(f1.factors[1].factor == Poly::from_ints(F2, {1, 1}));
    CHECK(f1.factors[1].multiplicity == 1);

    // x^2 + 1 = (x + 1)^2 over GF(2)
    Factorization f2 = factor_irreducible(Poly::from_ints(F2, {1, 0, 1}));
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].factor == Poly::from_ints(F2, {1, 1}));
    CHECK(f2.factors[0].multiplicity == 2);

    // x^4 - 1 over GF(5): all of GF(5)* are 4th roots of unity; every factor
    // is linear.  Verify by evaluating each claimed factor's root.
    Factorization f3 = factor_irreducible(Poly::from_ints(F5, {-1, 0, 0, 0, 1}));
    REQUIRE(f3.factors.size() == 4);
    CHECK(f3.complete());
    for (const auto& [f, e] : f3.factors) {
        CHECK(f.degree() == 1);
        CHECK(e == 1);
        Scalar root = -f.coeff(0);
        CHECK(Poly::from_ints(F5, {-1, 0, 0, 0, 1}).eval(root).is_zero());
        CHECK_FALSE(root.is_zero());
    }
}

TEST_CASE("irreducible quadratic over GF(2) stays intact under ddf") {
    // x^2 + x + 1 is the unique irreducible quadratic over GF(2)
    Factorization f = factor_irreducible(Poly::from_ints(F2, {1, 1, 1}));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].factor == Poly::from_ints(F2, {1, 1, 1}));
    CHECK(f.factors[0].multiplicity == 1);
}

TEST_CASE("factorization re-multiplies to the input") {
    Rng rng(99);
    for (const FieldSpec& f : {F2, F3, F5}) {
        for (int trial = 0; trial < 40; ++trial) {
            Poly p = random_monic_poly(f, 1 + rng() % 6, rng);
            Factorization fac = factor_irreducible(p);
            CHECK(fac.complete());
            CHECK(fac.product() == p);
            for (const auto& [g, e] : fac.factors)
                CHECK(irreducibility(g) == Irreducibility::irreducible);
        }
    }
}

TEST_CASE("inseparable-style inputs: perfect powers in characteristic p") {
    // (x + 1)^4 over GF(2) has zero derivative at intermediate stages
    Poly p = Poly::from_ints(F2, {1, 1}).pow(4);
    Factorization fac = factor_irreducible(p);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].factor == Poly::from_ints(F2, {1, 1}));
    CHECK(fac.factors[0].multiplicity == 4);

    // x^3 over GF(3)
    Factorization f3 = factor_irreducible(Poly::from_ints(F3, {0, 0, 0, 1}));
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].factor == Poly::x(F3));
    CHECK(f3.factors[0].multiplicity == 3);
}

TEST_CASE("rational factorization extracts rational roots only") {
    // x^2 (x - 7); factors come back in a deterministic structural order,
    // negative constant terms first
    Factorization f1 = factor_irreducible(Poly::from_ints(Q, {0, 0, -7, 1}));
    CHECK(f1.complete());
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0].factor == Poly::from_ints(Q, {-7, 1}));
    CHECK(f1.factors[0].multiplicity == 1);
    CHECK(f1.factors[1].factor == Poly::x(Q));
    CHECK(f1.factors[1].multiplicity == 2);

    // (x^2 + 1)(x - 1/2): only the rational root comes out, the quadratic
    // stays behind as residual
    Poly p = Poly::from_ints(Q, {1, 0, 1}) * (Poly::x(Q) - Poly::constant(Scalar::fraction(Q, 1, 2)));
    Factorization f2 = factor_irreducible(p);
    CHECK_FALSE(f2.complete());
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].factor == Poly::x(Q) - Poly::constant(Scalar::fraction(Q, 1, 2)));
    CHECK(f2.residual == Poly::from_ints(Q, {1, 0, 1}));
}

TEST_CASE("rational residual is flagged incomplete") {
    // x^2 + 1 has no rational roots; the whole thing is residual
    Factorization f = factor_irreducible(Poly::from_ints(Q, {1, 0, 1}));
    CHECK_FALSE(f.complete());
    CHECK(f.residual == Poly::from_ints(Q, {1, 0, 1}));
    CHECK(f.factors.empty());
    CHECK(f.product() == Poly::from_ints(Q, {1, 0, 1}));

    // mixed: x (x^2 + 1)
    Factorization g = factor_irreducible(Poly::from_ints(Q, {0, 1, 0, 1}));
    CHECK_FALSE(g.complete());
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].factor == Poly::x(Q));
    CHECK(g.residual == Poly::from_ints(Q, {1, 0, 1}));
}

TEST_CASE("rational roots with denominators") {
    // (2x - 1)(3x + 2) / 6 made monic: roots 1/2 and -2/3
    Poly p = (Poly::x(Q) - Poly::constant(Scalar::fraction(Q, 1, 2))) *
             (Poly::x(Q) + Poly::constant(Scalar::fraction(Q, 2, 3)));
    Factorization f = factor_irreducible(p);
    CHECK(f.complete());
    REQUIRE(f.factors.size() == 2);
    CHECK(f.product() == p);
}

TEST_CASE("factorization preconditions") {
    CHECK_THROWS_AS(factor_irreducible(Poly::zero(Q)), std::invalid_argument);
    CHECK_THROWS_AS(factor_irreducible(Poly::from_ints(Q, {1, 2})), std::invalid_argument);
}

TEST_CASE("squarefree decomposition re-multiplies") {
    Rng rng(5);
    for (const FieldSpec& f : {Q, F2, F3}) {
        for (int trial = 0; trial < 30; ++trial) {
            Poly p = random_monic_poly(f, 1 + rng() % 3, rng) *
                     random_monic_poly(f, 1 + rng() % 3, rng).pow(1 + rng() % 3);
            auto parts = squarefree_decomposition(p);
            Poly prod = Poly::one(f);
            for (const auto& [g, e] : parts) {
                prod *= g.pow(e);
                CHECK(poly_gcd(g, g.derivative()).is_one());  // each part squarefree
            }
            CHECK(prod == p);
        }
    }
}

TEST_CASE("irreducibility judgements") {
    CHECK(irreducibility(Poly::from_ints(F2, {1, 1, 1})) == Irreducibility::irreducible);
    CHECK(irreducibility(Poly::from_ints(F2, {1, 0, 1})) == Irreducibility::reducible);
    CHECK(irreducibility(Poly::from_ints(Q, {-1, 1})) == Irreducibility::irreducible);
    CHECK(irreducibility(Poly::from_ints(Q, {-1, 0, 1})) == Irreducibility::reducible);
    CHECK(irreducibility(Poly::from_ints(Q, {1, 0, 1})) == Irreducibility::unknown);
    CHECK(irreducibility(Poly::one(Q)) == Irreducibility::reducible);
}
