#include "colie/fields2d.hpp"

namespace colie {

namespace {

void check_dim2(const SpacePtr& space) {
    if (space->dim() != 2 || !space->form(0, 1).is_one())
        throw PreconditionError("needs dim 2 with <x, y> = 1");
}

std::vector<SquareMat<Scalar>> pair_assignment(const SquareMat<Scalar>& X,
                                               const SquareMat<Scalar>& Y) {
    return {X, Y};
}

} // namespace

PQPair pq_decompose(const CoinvElem& a) {
    check_dim2(a.space());
    TensorElem p(a.space());
    TensorElem q(a.space());
    for (const auto& [n, c] : a.terms()) {
        const Word& u = n.rep();
        for (std::size_t i = 1; i <= u.length(); ++i) {
            if (u.letter_at(i) == 0)
                p.add_term(u.segment(i, i), c);
            else
                q.add_term(u.segment(i, i), -c);
        }
    }
    return PQPair{std::move(p), std::move(q)};
}

VFValue vf_value(const CoinvElem& a, const SquareMat<Scalar>& X, const SquareMat<Scalar>& Y) {
    PQPair pq = pq_decompose(a);
    auto at = pair_assignment(X, Y);
    return VFValue{-nc_eval(pq.q, at), -nc_eval(pq.p, at)};
}

SquareMat<Scalar> tangency_defect(const CoinvElem& a, const SquareMat<Scalar>& X,
                                  const SquareMat<Scalar>& Y) {
    PQPair pq = pq_decompose(a);
    auto at = pair_assignment(X, Y);
    SquareMat<Scalar> P = nc_eval(pq.p, at);
    SquareMat<Scalar> Q = nc_eval(pq.q, at);
    return -(commutator(X, P) + commutator(Q, Y));
}

VFValue vf_bracket_defect(const CoinvElem& a, const CoinvElem& b, const SquareMat<Scalar>& X,
                          const SquareMat<Scalar>& Y, const Mutations& mut) {
    VFValue va = vf_value(a, X, Y);
    VFValue vb = vf_value(b, X, Y);
    PQPair pqa = pq_decompose(a);
    PQPair pqb = pq_decompose(b);
    auto base = pair_assignment(X, Y);
    auto dir_a = pair_assignment(va.first, va.second);
    auto dir_b = pair_assignment(vb.first, vb.second);

    // d/deps of the value of one field along the value of the other; the
    // value components are (-q, -p).
    auto derive = [&](const PQPair& pq, const std::vector<SquareMat<Scalar>>& dir) {
        return VFValue{-directional_derivative(pq.q, base, dir, mut.segment_mode),
                       -directional_derivative(pq.p, base, dir, mut.segment_mode)};
    };
    VFValue da_along_b = derive(pqa, dir_b);
    VFValue db_along_a = derive(pqb, dir_a);

    VFValue vab = vf_value(bracket(a, b, mut), X, Y);
    return VFValue{da_along_b.first - db_along_a.first - vab.first,
                   da_along_b.second - db_along_a.second - vab.second};
}

VFValue vf_bracket_defect_composed(const CoinvElem& a, const CoinvElem& b,
                                   const SquareMat<Scalar>& X, const SquareMat<Scalar>& Y) {
    const FieldSpec f = a.field();
    const std::size_t size = X.size();
    PQPair pqa = pq_decompose(a);
    PQPair pqb = pq_decompose(b);
    const Jet eps = Jet::eps(f, 3);

    // One application of F_c to a jet-valued point.
    auto apply = [&](const PQPair& pq, const SquareMat<Jet>& U, const SquareMat<Jet>& W) {
        std::vector<SquareMat<Jet>> at{U, W};
        SquareMat<Jet> qv = nc_eval(pq.q, at);
        SquareMat<Jet> pv = nc_eval(pq.p, at);
        return std::make_pair(U - qv.scaled(eps), W - pv.scaled(eps));
    };

    auto compose = [&](const PQPair& outer, const PQPair& inner) {
        auto [u1, w1] = apply(inner, to_jet(X, 3), to_jet(Y, 3));
        return apply(outer, u1, w1);
    };

    auto [ab1, ab2] = compose(pqa, pqb);
    auto [ba1, ba2] = compose(pqb, pqa);
    SquareMat<Jet> d1 = ab1 - ba1;
    SquareMat<Jet> d2 = ab2 - ba2;
    // Orders 0 and 1 cancel identically; the bracket sits at eps^2.
    if (!jet_coeff(d1, 0).is_zero() || !jet_coeff(d2, 0).is_zero() ||
        !jet_coeff(d1, 1).is_zero() || !jet_coeff(d2, 1).is_zero())
        throw std::logic_error("composition difference has unexpected low-order terms");

    VFValue vab = vf_value(bracket(a, b), X, Y);
    return VFValue{jet_coeff(d1, 2) - vab.first, jet_coeff(d2, 2) - vab.second};
}

bool g_closure_check(const TensorElem& p, const AlgebraSpec& g,
                     const std::vector<std::uint64_t>& seeds, std::uint64_t bound) {
    if (p.field().characteristic() == 2)
        throw PreconditionError("closure check needs odd characteristic");
    if (p.field() != g.field()) throw FieldMismatch("element/algebra field mismatch");
    if (!is_signed_reverse_eigenvector(p, -1))
        throw PreconditionError("p must be a (-1)-eigenvector of signed reversal");
    const std::size_t r = p.space()->dim();
    for (std::uint64_t seed : seeds) {
        std::vector<SquareMat<Scalar>> tuple;
        tuple.reserve(r);
        for (std::size_t i = 0; i < r; ++i)
            tuple.push_back(random_element(g, seed + 0x9E3779B97F4A7C15ull * i, bound));
        if (!member_of(g, nc_eval(p, tuple))) return false;
    }
    return true;
}

bool proposition_check(const CoinvElem& a, const AlgebraSpec& g, const SquareMat<Scalar>& X,
                       const SquareMat<Scalar>& Y) {
    if (a.field().characteristic() == 2)
        throw PreconditionError("needs odd characteristic");
    if (!is_signed_reverse_eigenvector(a, +1))
        throw PreconditionError("a must be a (+1)-eigenvector of signed reversal");
    if (!member_of(g, X) || !member_of(g, Y))
        throw PreconditionError("X and Y must belong to the algebra");
    VFValue v = vf_value(a, X, Y);
    if (!member_of(g, v.first) || !member_of(g, v.second)) return false;
    return tangency_defect(a, X, Y).is_zero();
}

} // namespace colie
