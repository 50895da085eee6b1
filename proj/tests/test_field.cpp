#include <catch2/catch_amalgamated.hpp>

#include "rankpert/field.hpp"
#include "rankpert/random.hpp"

using namespace rankpert;

TEST_CASE("field spec construction and parsing") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(q.is_rationals());
    CHECK(q.str() == "Q");
    CHECK(FieldSpec::parse("Q") == q);

    FieldSpec f7 = FieldSpec::prime_field(7);
    CHECK(f7.is_prime_field());
    CHECK(f7.modulus() == 7);
    CHECK(f7.str() == "GF(7)");
    CHECK(FieldSpec::parse("GF(7)") == f7);
    CHECK(FieldSpec::parse("GF(101)").modulus() == 101);

    CHECK_THROWS_AS(FieldSpec::prime_field(6), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime_field(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("GF(10)"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("R"), std::invalid_argument);

    // larger primes go through Miller-Rabin
    CHECK_NOTHROW(FieldSpec::prime_field(BigInt("1000000007")));
    CHECK_THROWS_AS(FieldSpec::prime_field(BigInt("1000000008")), std::invalid_argument);
}

TEST_CASE("rational scalars are canonical") {
    FieldSpec q = FieldSpec::rationals();
    Scalar half = Scalar::fraction(q, 2, 4);
    CHECK(half.num() == 1);
    CHECK(half.den() == 2);
    CHECK(half.str() == "1/2");

    Scalar neg = Scalar::fraction(q, 3, -6);
    CHECK(neg.num() == -1);
    CHECK(neg.den() == 2);
    CHECK(neg.str() == "-1/2");

    CHECK(half + neg == Scalar::zero(q));
    CHECK(Scalar::fraction(q, 0, -7) == Scalar::zero(q));
    CHECK(Scalar::of(q, 5).str() == "5");
    CHECK_THROWS_AS(Scalar::fraction(q, 1, 0), std::invalid_argument);
}

TEST_CASE("prime field scalars reduce into [0, p)") {
    FieldSpec f5 = FieldSpec::prime_field(5);
    CHECK(Scalar::of(f5, 7) == Scalar::of(f5, 2));
    CHECK(Scalar::of(f5, -1) == Scalar::of(f5, 4));
    CHECK((-Scalar::of(f5, 2)) == Scalar::of(f5, 3));
    CHECK(Scalar::of(f5, 3).inverse() == Scalar::of(f5, 2));
    CHECK(Scalar::fraction(f5, 1, 2) == Scalar::of(f5, 3));  // 2 * 3 = 6 = 1
    CHECK_THROWS_AS(Scalar::zero(f5).inverse(), std::domain_error);
}

TEST_CASE("scalar parsing") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(Scalar::parse(q, "-3/9") == Scalar::fraction(q, -1, 3));
    CHECK(Scalar::parse(q, "42") == Scalar::of(q, 42));
    FieldSpec f3 = FieldSpec::prime_field(3);
    CHECK(Scalar::parse(f3, "-1") == Scalar::of(f3, 2));
    CHECK(Scalar::parse(f3, "1/2") == Scalar::of(f3, 2));
    CHECK_THROWS_AS(Scalar::parse(q, "abc"), std::invalid_argument);
}

TEST_CASE("mixing fields is rejected") {
    Scalar a = Scalar::of(FieldSpec::rationals(), 1);
    Scalar b = Scalar::of(FieldSpec::prime_field(5), 1);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK(a != b);
}

TEST_CASE("field axioms on randomized triples") {
    Rng rng(2024);
    for (const FieldSpec& f :
         {FieldSpec::rationals(), FieldSpec::prime_field(2), FieldSpec::prime_field(101)}) {
        for (int trial = 0; trial < 200; ++trial) {
            Scalar a = random_scalar(f, rng, -9, 9);
            Scalar b = random_scalar(f, rng, -9, 9);
            Scalar c = random_scalar(f, rng, -9, 9);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a + (-a) == Scalar::zero(f));
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Scalar::one(f));
                CHECK((b / a) * a == b);
            }
        }
    }
}
