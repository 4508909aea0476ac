#include "doctest.h"

#include "colie/rng.hpp"
#include "colie/scalar.hpp"

using namespace colie;

TEST_CASE("field spec construction and rendering") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(q.characteristic() == 0);
    CHECK(q.str() == "Q");

    FieldSpec f5 = FieldSpec::prime_field(5);
    CHECK(f5.characteristic() == 5);
    CHECK(f5.str() == "F5");

    CHECK_THROWS_AS(FieldSpec::prime_field(4), PreconditionError);
    CHECK_THROWS_AS(FieldSpec::prime_field(1), PreconditionError);
    CHECK_NOTHROW(FieldSpec::prime_field(2));
    CHECK_NOTHROW(FieldSpec::prime_field(1000003));
}

TEST_CASE("rational arithmetic") {
    FieldSpec q = FieldSpec::rationals();
    Scalar a = Scalar::of_ratio(2, 3, q);
    Scalar b = Scalar::of_ratio(1, 6, q);
    CHECK((a + b).str() == "5/6");
    CHECK((a - b).str() == "1/2");
    CHECK((a * b).str() == "1/9");
    CHECK((a / b).str() == "4");
    CHECK((-a).str() == "-2/3");
    CHECK(a.inv().str() == "3/2");
}

TEST_CASE("prime field arithmetic") {
    FieldSpec f5 = FieldSpec::prime_field(5);
    CHECK((Scalar::of_int(3, f5) * Scalar::of_int(4, f5)) == Scalar::of_int(2, f5));

    FieldSpec f7 = FieldSpec::prime_field(7);
    CHECK(Scalar::of_int(3, f7).inv() == Scalar::of_int(5, f7));
    CHECK(Scalar::of_int(-1, f7).str() == "6");
}

TEST_CASE("division by zero and field mixing are rejected") {
    FieldSpec q = FieldSpec::rationals();
    FieldSpec f5 = FieldSpec::prime_field(5);
    CHECK_THROWS_AS(Scalar::one(q) / Scalar::zero(q), DivisionByZero);
    CHECK_THROWS_AS(Scalar::zero(f5).inv(), DivisionByZero);
    CHECK_THROWS_AS(Scalar::one(q) + Scalar::one(f5), FieldMismatch);
    CHECK_THROWS_AS(Scalar::one(f5) * Scalar::one(FieldSpec::prime_field(7)), FieldMismatch);
}

TEST_CASE("scalar parsing") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(parse_scalar("-3/6", q).str() == "-1/2");
    CHECK(parse_scalar("7", FieldSpec::prime_field(5)).str() == "2");
    CHECK_THROWS_AS(parse_scalar("1/0", q), ParseError);
    CHECK_THROWS_AS(parse_scalar("", q), ParseError);
    CHECK_THROWS_AS(parse_scalar("a", q), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/2/3", q), ParseError);
    CHECK(parse_scalar("+4/2", q).str() == "2");
}

TEST_CASE("field axioms on seeded random triples") {
    std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime_field(2),
                                  FieldSpec::prime_field(3), FieldSpec::prime_field(5),
                                  FieldSpec::prime_field(7)};
    for (const FieldSpec& f : fields) {
        Rng rng(0x5ca1ab1e + f.characteristic());
        for (int t = 0; t < 100; ++t) {
            Scalar a = random_scalar(rng, f, 50, false);
            Scalar b = random_scalar(rng, f, 50, false);
            Scalar c = random_scalar(rng, f, 50, false);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            if (!a.is_zero()) CHECK(a * a.inv() == Scalar::one(f));
        }
    }
}

TEST_CASE("canonical residues and reduced fractions") {
    FieldSpec f3 = FieldSpec::prime_field(3);
    // residues always land in 0..p-1 regardless of input sign
    CHECK(Scalar::of_int(-4, f3) == Scalar::of_int(2, f3));
    CHECK(Scalar::of_ratio(1, 2, f3) == Scalar::of_int(2, f3)); // 2^-1 = 2 mod 3

    FieldSpec q = FieldSpec::rationals();
    CHECK(Scalar::of_ratio(-6, -4, q).str() == "3/2");
    CHECK(Scalar::of_ratio(6, -4, q).str() == "-3/2");
    CHECK_THROWS_AS(Scalar::of_ratio(1, 0, q), DivisionByZero);
}
