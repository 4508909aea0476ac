#include "colie/nc_eval.hpp"

namespace colie {

namespace {

Scalar embed(const Scalar& c, const Scalar&) { return c; }
Jet embed(const Scalar& c, const Jet& exemplar) { return Jet::constant(c, exemplar.order()); }

template <class R>
void check_assignment(const TensorElem& t, const std::vector<SquareMat<R>>& images) {
    if (images.size() != t.space()->dim())
        throw PreconditionError("assignment must cover every basis letter exactly");
    const std::size_t n = images.front().size();
    for (const auto& m : images) {
        if (m.size() != n) throw PreconditionError("assigned matrices must share one size");
        if (m.at(0, 0).field() != t.field())
            throw FieldMismatch("assigned matrices must live over the element's field");
    }
}

template <class R>
SquareMat<R> eval_word(const Word& w, const std::vector<SquareMat<R>>& images,
                       const SquareMat<R>& identity) {
    SquareMat<R> acc = identity;
    for (Letter x : w.letters()) acc = acc * images[x];
    return acc;
}

template <class R>
SquareMat<R> make_identity(const std::vector<SquareMat<R>>& images) {
    const SquareMat<R>& m = images.front();
    R zero = m.at(0, 0) - m.at(0, 0);
    R one = zero;
    if constexpr (std::is_same_v<R, Scalar>) {
        one = Scalar::one(zero.field());
    } else {
        one = Jet::constant(Scalar::one(zero.field()), zero.order());
    }
    return SquareMat<R>::identity(m.size(), zero, one);
}

} // namespace

template <class R>
SquareMat<R> nc_eval(const TensorElem& t, const std::vector<SquareMat<R>>& images) {
    check_assignment(t, images);
    SquareMat<R> identity = make_identity(images);
    SquareMat<R> acc = identity - identity; // zero
    for (const auto& [w, c] : t.terms())
        acc += eval_word(w, images, identity).scaled(embed(c, identity.at(0, 0)));
    return acc;
}

template SquareMat<Scalar> nc_eval(const TensorElem&, const std::vector<SquareMat<Scalar>>&);
template SquareMat<Jet> nc_eval(const TensorElem&, const std::vector<SquareMat<Jet>>&);

SquareMat<Jet> expand_first_order(const Word& w, const std::vector<SquareMat<Scalar>>& base,
                                  const std::vector<SquareMat<Scalar>>& direction,
                                  SegmentMode mode) {
    if (base.size() != direction.size())
        throw PreconditionError("base and direction assignments must match");
    if (base.empty()) throw PreconditionError("empty assignment");
    const std::size_t size = base.front().size();
    const FieldSpec f = base.front().at(0, 0).field();
    for (const auto& lst : {&base, &direction})
        for (const auto& m : *lst) {
            if (m.size() != size) throw PreconditionError("assigned matrices must share one size");
            if (m.at(0, 0).field() != f) throw FieldMismatch("mixed fields in assignment");
        }
    if (w.min_dim() > base.size())
        throw PreconditionError("word uses letters outside the assignment");

    SquareMat<Scalar> identity = scalar_mat_identity(size, f);
    SquareMat<Scalar> zero = scalar_mat_zero(size, f);
    auto eval = [&](const Word& u, bool* killed) -> SquareMat<Scalar> {
        if (u.empty() && mode == SegmentMode::LiteralZero) {
            *killed = true;
            return zero;
        }
        return eval_word(u, base, identity);
    };

    const std::size_t n = w.length();
    SquareMat<Scalar> order0 = eval_word(w, base, identity);
    SquareMat<Scalar> order1 = zero;
    for (std::size_t k = 1; k <= n; ++k) {
        bool killed = false;
        SquareMat<Scalar> prefix = eval(w.segment(n, k), &killed);
        SquareMat<Scalar> suffix = eval(w.segment(k, 1), &killed);
        if (killed) continue;
        order1 += prefix * direction[w.letter_at(k)] * suffix;
    }

    const Jet eps = Jet::eps(f, 2);
    SquareMat<Jet> out = jet_mat_zero(size, f, 2);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            out.at(i, j) = Jet::constant(order0.at(i, j), 2) + eps.scaled(order1.at(i, j));
    return out;
}

SquareMat<Scalar> directional_derivative(const TensorElem& t,
                                         const std::vector<SquareMat<Scalar>>& base,
                                         const std::vector<SquareMat<Scalar>>& direction,
                                         SegmentMode mode) {
    check_assignment(t, base);
    check_assignment(t, direction);
    const std::size_t size = base.front().size();
    SquareMat<Scalar> acc = scalar_mat_zero(size, t.field());
    for (const auto& [w, c] : t.terms())
        acc += jet_coeff(expand_first_order(w, base, direction, mode), 1).scaled(c);
    return acc;
}

} // namespace colie
