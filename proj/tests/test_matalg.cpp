#include "doctest.h"

#include "colie/matalg.hpp"
#include "colie/nc_eval.hpp"
#include "colie/rng.hpp"

using namespace colie;

namespace {

SquareMat<Scalar> from_rows(const FieldSpec& f, std::size_t n,
                            std::initializer_list<long long> es) {
    SquareMat<Scalar> m = scalar_mat_zero(n, f);
    std::size_t k = 0;
    for (long long e : es) {
        m.at(k / n, k % n) = Scalar::of_int(e, f);
        ++k;
    }
    return m;
}

} // namespace

TEST_CASE("membership predicates") {
    FieldSpec q = FieldSpec::rationals();
    AlgebraSpec so3 = AlgebraSpec::so(3, q);
    CHECK(member_of(so3, from_rows(q, 3, {0, 1, 0, -1, 0, 0, 0, 0, 0})));
    CHECK_FALSE(member_of(so3, scalar_mat_identity(3, q)));

    AlgebraSpec sp2 = AlgebraSpec::sp(2, q);
    CHECK(member_of(sp2, from_rows(q, 2, {1, 0, 0, -1}))); // sp2 = sl2
    CHECK(member_of(sp2, from_rows(q, 2, {0, 1, 0, 0})));
    CHECK_FALSE(member_of(sp2, scalar_mat_identity(2, q)));

    AlgebraSpec gl2 = AlgebraSpec::gl(2, q);
    CHECK(member_of(gl2, scalar_mat_identity(2, q)));

    CHECK(so3.str() == "so3");
    CHECK(sp2.str() == "sp2");
    CHECK_THROWS_AS(member_of(so3, scalar_mat_identity(2, q)), PreconditionError);
}

TEST_CASE("algebra construction constraints") {
    FieldSpec q = FieldSpec::rationals();
    CHECK_THROWS_AS(AlgebraSpec::sp(3, q), PreconditionError); // odd size
    // explicit J must be alternating and invertible
    CHECK_THROWS_AS(AlgebraSpec::sp(2, q, from_rows(q, 2, {0, 1, 1, 0})), PreconditionError);
    CHECK_THROWS_AS(AlgebraSpec::sp(2, q, scalar_mat_zero(2, q)), PreconditionError);
    CHECK_NOTHROW(AlgebraSpec::sp(2, q, from_rows(q, 2, {0, 2, -2, 0})));
}

TEST_CASE("random elements are members, deterministically") {
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(7)}) {
        std::vector<AlgebraSpec> kinds{AlgebraSpec::so(3, f), AlgebraSpec::so(4, f),
                                       AlgebraSpec::sp(2, f), AlgebraSpec::sp(4, f),
                                       AlgebraSpec::gl(3, f)};
        for (const AlgebraSpec& g : kinds) {
            for (std::uint64_t seed = 0; seed < 100; ++seed) {
                SquareMat<Scalar> m = random_element(g, seed, 5);
                CHECK(member_of(g, m));
                CHECK(m == random_element(g, seed, 5));
            }
        }
    }
}

TEST_CASE("so2 is one-dimensional") {
    FieldSpec q = FieldSpec::rationals();
    AlgebraSpec so2 = AlgebraSpec::so(2, q);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SquareMat<Scalar> m = random_element(so2, seed, 5);
        CHECK(m.at(0, 0).is_zero());
        CHECK(m.at(1, 1).is_zero());
        CHECK(m.at(0, 1) == -m.at(1, 0));
    }
}

TEST_CASE("so and sp are closed under commutator") {
    for (const FieldSpec& f :
         {FieldSpec::rationals(), FieldSpec::prime_field(5), FieldSpec::prime_field(7)}) {
        for (const AlgebraSpec& g : {AlgebraSpec::so(3, f), AlgebraSpec::sp(4, f)}) {
            for (std::uint64_t seed = 0; seed < 100; ++seed) {
                SquareMat<Scalar> a = random_element(g, seed, 4);
                SquareMat<Scalar> b = random_element(g, seed + 7777, 4);
                CHECK(member_of(g, commutator(a, b)));
            }
        }
    }
}
