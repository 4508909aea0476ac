#pragma once

#include "colie/coinv.hpp"
#include "colie/matalg.hpp"

namespace colie {

/// Decomposition trace_N(a) = x (x) p - y (x) q grouped by first letter.
struct PQPair {
    TensorElem p;
    TensorElem q;
};

/// Value of the vector field attached to a class at a point (X, Y):
/// (-q(X,Y), -p(X,Y)).
struct VFValue {
    SquareMat<Scalar> first;
    SquareMat<Scalar> second;

    bool is_zero() const { return first.is_zero() && second.is_zero(); }
    bool operator==(const VFValue& o) const { return first == o.first && second == o.second; }
};

/// Requires dim V = 2 with <x, y> = 1 on the basis (x = letter 0,
/// y = letter 1). p collects the deleted-position words with an x deleted,
/// q the negatives of those with a y deleted.
PQPair pq_decompose(const CoinvElem& a);

VFValue vf_value(const CoinvElem& a, const SquareMat<Scalar>& X, const SquareMat<Scalar>& Y);

/// eps-coefficient of the commutator along the field:
/// -([X, p(X,Y)] + [q(X,Y), Y]). Zero for every class.
SquareMat<Scalar> tangency_defect(const CoinvElem& a, const SquareMat<Scalar>& X,
                                  const SquareMat<Scalar>& Y);

/// [F_a, F_b](X,Y) - F_[a,b](X,Y). The vector-field bracket is the
/// directional derivative of the value of a along the value of b minus the
/// derivative of the value of b along the value of a; that orientation is
/// pinned by requiring the defect to vanish (see the unit tests for the
/// frozen generating example) and matches composition order
/// F_a . F_b - F_b . F_a at second order. Expected: (0, 0).
VFValue vf_bracket_defect(const CoinvElem& a, const CoinvElem& b, const SquareMat<Scalar>& X,
                          const SquareMat<Scalar>& Y, const Mutations& mut = {});

/// Independent route to the same defect: compose the eps-parameterized maps
/// F_a and F_b both ways over Jet(k = 3) and read the eps^2 coefficient of
/// the difference, minus the value of the bracket class.
VFValue vf_bracket_defect_composed(const CoinvElem& a, const CoinvElem& b,
                                   const SquareMat<Scalar>& X, const SquareMat<Scalar>& Y);

/// True iff nc_eval(p, X_1..X_r) lies in g for every tuple sampled from the
/// given seeds. p must be an exact (-1)-eigenvector of signed reversal;
/// violating that is a precondition error, not a falsification.
bool g_closure_check(const TensorElem& p, const AlgebraSpec& g,
                     const std::vector<std::uint64_t>& seeds, std::uint64_t bound);

/// True iff both components of vf_value(a, X, Y) belong to g and the
/// tangency defect vanishes. a must be a (+1)-eigenvector; X, Y members
/// of g; characteristic not 2.
bool proposition_check(const CoinvElem& a, const AlgebraSpec& g, const SquareMat<Scalar>& X,
                       const SquareMat<Scalar>& Y);

} // namespace colie
