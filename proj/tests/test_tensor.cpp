#include "doctest.h"

#include "colie/linalg.hpp"
#include "colie/rng.hpp"
#include "colie/tensor.hpp"

using namespace colie;

namespace {

SpacePtr q2() { return SymplecticSpace::standard(2, FieldSpec::rationals()); }

TensorElem mono(const SpacePtr& sp, std::initializer_list<Letter> ls, long long c = 1) {
    return TensorElem::monomial(sp, Word(std::vector<Letter>(ls)), Scalar::of_int(c, sp->field()));
}

TensorElem random_tensor(Rng& rng, const SpacePtr& sp, std::size_t max_len) {
    TensorElem t(sp);
    std::size_t terms = 1 + rng.below(4);
    for (std::size_t k = 0; k < terms; ++k) {
        std::size_t l = rng.below(max_len + 1);
        t.add_term(random_word(rng, sp->dim(), l), random_scalar(rng, sp->field(), 5, true));
    }
    return t;
}

// independent eigenspace dimension: exact kernel of (signed reversal -+ id)
// in the word basis of V^{(x)l}
std::size_t eigenspace_dim_oracle(const SpacePtr& sp, std::size_t l, int sign) {
    const FieldSpec& f = sp->field();
    auto words = all_words(sp->dim(), l);
    std::map<Word, std::size_t> idx;
    for (std::size_t k = 0; k < words.size(); ++k) idx.emplace(words[k], k);
    Scalar rev_sign = l % 2 == 0 ? Scalar::one(f) : -Scalar::one(f);
    std::vector<SparseVec> rows(words.size());
    for (std::size_t k = 0; k < words.size(); ++k) {
        // row k: (iota(w_k) - sign * w_k) coordinates
        SparseVec row;
        row.emplace(idx.at(words[k].reversed()), rev_sign);
        Scalar s = sign > 0 ? -Scalar::one(f) : Scalar::one(f);
        auto [it, fresh] = row.emplace(k, s);
        if (!fresh) {
            it->second += s;
            if (it->second.is_zero()) row.erase(it);
        }
        rows[k] = std::move(row);
    }
    return words.size() - sparse_rank(rows);
}

} // namespace

TEST_CASE("signed and plain reversal examples") {
    SpacePtr sp = q2();
    CHECK(signed_reverse(mono(sp, {0, 1, 1})) == mono(sp, {1, 1, 0}, -1));
    CHECK(signed_reverse(mono(sp, {0, 1})) == mono(sp, {1, 0}));
    CHECK(plain_reverse(mono(sp, {0, 1, 1})) == mono(sp, {1, 1, 0}));
    CHECK(plain_reverse(mono(sp, {0, 0})) == mono(sp, {0, 0}));
}

TEST_CASE("reversal properties on random elements") {
    SpacePtr sp = q2();
    Rng rng(31337);
    for (int t = 0; t < 100; ++t) {
        TensorElem a = random_tensor(rng, sp, 6);
        CHECK(signed_reverse(signed_reverse(a)) == a);
        CHECK(plain_reverse(plain_reverse(a)) == a);
    }
}

TEST_CASE("signed reversal vs plain reversal: sign (-1)^l, same letters") {
    SpacePtr sp = q2();
    for (std::size_t l = 0; l <= 5; ++l) {
        for (const Word& w : all_words(2, l)) {
            TensorElem m = TensorElem::monomial(sp, w, Scalar::one(sp->field()));
            TensorElem si = signed_reverse(m);
            TensorElem pl = plain_reverse(m);
            CHECK(si == (l % 2 == 0 ? pl : -pl));
            CHECK(si.terms().begin()->first == w.reversed());
        }
    }
}

TEST_CASE("signed reversal reverses concatenations with total sign") {
    // letters of iota(uv) are the reverse of uv; sign is (-1)^(|u|+|v|)
    SpacePtr sp = q2();
    Rng rng(0xabba);
    for (int t = 0; t < 100; ++t) {
        Word u = random_word(rng, 2, rng.below(5));
        Word v = random_word(rng, 2, rng.below(5));
        TensorElem lhs = signed_reverse(
            TensorElem::monomial(sp, u.concat(v), Scalar::one(sp->field())));
        Word expect = v.reversed().concat(u.reversed());
        Scalar sign = (u.length() + v.length()) % 2 == 0 ? Scalar::one(sp->field())
                                                         : -Scalar::one(sp->field());
        CHECK(lhs == TensorElem::monomial(sp, expect, sign));
    }
}

TEST_CASE("rotation on elements") {
    SpacePtr sp = q2();
    TensorElem t = mono(sp, {0, 1, 0}) + mono(sp, {1, 1}, 3);
    TensorElem r = rotate(t, 1);
    CHECK(r == mono(sp, {1, 0, 0}) + mono(sp, {1, 1}, 3));
}

TEST_CASE("eigenbasis examples at dim 2") {
    SpacePtr sp = q2();

    auto b1 = signed_reverse_eigenbasis(sp, 1, -1);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == mono(sp, {0}));
    CHECK(b1[1] == mono(sp, {1}));
    CHECK(signed_reverse_eigenbasis(sp, 1, +1).empty());

    auto b2 = signed_reverse_eigenbasis(sp, 2, +1);
    REQUIRE(b2.size() == 3);
    CHECK(b2[0] == mono(sp, {0, 0}));
    CHECK(b2[1] == mono(sp, {0, 1}) + mono(sp, {1, 0}));
    CHECK(b2[2] == mono(sp, {1, 1}));
}

TEST_CASE("eigenbasis spans the eigenspace: dimension oracle") {
    for (std::size_t dim : {std::size_t(2), std::size_t(3)}) {
        for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
            SpacePtr sp = SymplecticSpace::standard(dim, f);
            for (std::size_t l = 1; l <= 4; ++l) {
                auto plus = signed_reverse_eigenbasis(sp, l, +1);
                auto minus = signed_reverse_eigenbasis(sp, l, -1);
                std::size_t total = 1;
                for (std::size_t k = 0; k < l; ++k) total *= dim;
                CHECK(plus.size() + minus.size() == total);
                CHECK(plus.size() == eigenspace_dim_oracle(sp, l, +1));
                CHECK(minus.size() == eigenspace_dim_oracle(sp, l, -1));
                for (const auto& e : plus) CHECK(is_signed_reverse_eigenvector(e, +1));
                for (const auto& e : minus) CHECK(is_signed_reverse_eigenvector(e, -1));
            }
        }
    }
}

TEST_CASE("eigenprojection") {
    SpacePtr sp = q2();
    Rng rng(99);
    for (int t = 0; t < 60; ++t) {
        TensorElem a = random_tensor(rng, sp, 5);
        TensorElem p = signed_reverse_projection(a, +1);
        TensorElem m = signed_reverse_projection(a, -1);
        CHECK(p + m == a);
        CHECK(is_signed_reverse_eigenvector(p, +1));
        CHECK(is_signed_reverse_eigenvector(m, -1));
        CHECK(signed_reverse_projection(p, +1) == p);
        CHECK(signed_reverse_projection(p, -1).is_zero());
    }
    SpacePtr f2 = SymplecticSpace::standard(2, FieldSpec::prime_field(2));
    CHECK_THROWS_AS(signed_reverse_projection(TensorElem(f2), +1), PreconditionError);
}

TEST_CASE("cyclic invariant basis") {
    SpacePtr sp = q2();
    auto basis = cyclic_invariant_basis(sp, 2);
    REQUIRE(basis.size() == 3);
    for (const auto& b : basis) CHECK(rotate(b, 1) == b);
    // spans {xx, yy, xy+yx}: compare as a set
    TensorElem mixed = mono(sp, {0, 1}) + mono(sp, {1, 0});
    bool found = false;
    for (const auto& b : basis) found = found || b == mixed || b == -mixed;
    CHECK(found);

    SpacePtr f2 = SymplecticSpace::standard(2, FieldSpec::prime_field(2));
    CHECK(cyclic_invariant_basis(f2, 2).size() == 3);

    // orbit sums are invariant at every length
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        std::size_t l = 1 + rng.below(6);
        Word w = random_word(rng, 2, l);
        TensorElem orbit(sp);
        for (std::size_t r = 0; r < l; ++r)
            orbit.add_term(w.rotated(r), Scalar::one(sp->field()));
        CHECK(rotate(orbit, 1) == orbit);
    }
}

TEST_CASE("first-letter decomposition") {
    SpacePtr sp = q2();

    auto tails = first_letter_decompose(mono(sp, {0, 1}) + mono(sp, {1, 0}));
    REQUIRE(tails.size() == 2);
    CHECK(tails[0] == mono(sp, {1}));
    CHECK(tails[1] == mono(sp, {0}));

    auto tails3 =
        first_letter_decompose(mono(sp, {0, 0, 1}) + mono(sp, {0, 1, 0}) + mono(sp, {1, 0, 0}));
    CHECK(tails3[0] == mono(sp, {0, 1}) + mono(sp, {1, 0}));
    CHECK(tails3[1] == mono(sp, {0, 0}));

    // reassembly round trip on random homogeneous elements
    Rng rng(1234);
    for (int t = 0; t < 60; ++t) {
        std::size_t l = 1 + rng.below(5);
        TensorElem a(sp);
        for (int k = 0; k < 3; ++k)
            a.add_term(random_word(rng, 2, l), random_scalar(rng, sp->field(), 5, true));
        if (a.is_zero()) continue;
        auto ps = first_letter_decompose(a);
        TensorElem back(sp);
        for (Letter i = 0; i < 2; ++i)
            for (const auto& [w, c] : ps[i].terms())
                back.add_term(Word(std::vector<Letter>{i}).concat(w), c);
        CHECK(back == a);
    }

    CHECK_THROWS_AS(first_letter_decompose(TensorElem(sp)), PreconditionError);
    CHECK_THROWS_AS(first_letter_decompose(mono(sp, {0}) + mono(sp, {0, 1})), PreconditionError);
    CHECK_THROWS_AS(first_letter_decompose(TensorElem::monomial(sp, Word(), Scalar::one(sp->field()))),
                    PreconditionError);
}

TEST_CASE("form values") {
    SpacePtr sp = q2();
    CHECK(form_value(sp, 0, 1).is_one());
    CHECK(form_value(sp, 0, 0).is_zero());
    CHECK(form_value(sp, 1, 0) == -Scalar::one(sp->field()));
}

TEST_CASE("homogeneity predicate") {
    SpacePtr sp = q2();
    CHECK(mono(sp, {0, 1}).homogeneous_length() == 2);
    CHECK(!TensorElem(sp).homogeneous_length().has_value());
    CHECK(!(mono(sp, {0}) + mono(sp, {0, 1})).homogeneous_length().has_value());
}
