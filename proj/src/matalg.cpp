#include "colie/matalg.hpp"

namespace colie {

AlgebraSpec AlgebraSpec::gl(std::size_t n, const FieldSpec& f) {
    if (n == 0) throw PreconditionError("algebra size must be positive");
    return AlgebraSpec(AlgKind::gl, n, f, std::nullopt, std::nullopt);
}

AlgebraSpec AlgebraSpec::so(std::size_t n, const FieldSpec& f) {
    if (n == 0) throw PreconditionError("algebra size must be positive");
    return AlgebraSpec(AlgKind::so, n, f, std::nullopt, std::nullopt);
}

AlgebraSpec AlgebraSpec::sp(std::size_t n, const FieldSpec& f,
                            std::optional<SquareMat<Scalar>> J) {
    if (n == 0 || n % 2 != 0) throw PreconditionError("sp needs even positive size");
    if (!J) {
        SquareMat<Scalar> j = scalar_mat_zero(n, f);
        const Scalar one = Scalar::one(f);
        for (std::size_t i = 0; i < n / 2; ++i) {
            j.at(i, i + n / 2) = one;
            j.at(i + n / 2, i) = -one;
        }
        J = std::move(j);
    } else {
        if (J->size() != n) throw PreconditionError("J size mismatch");
        for (std::size_t i = 0; i < n; ++i) {
            if (!J->at(i, i).is_zero()) throw PreconditionError("J must have zero diagonal");
            for (std::size_t k = 0; k < n; ++k)
                if (!(J->at(i, k) + J->at(k, i)).is_zero())
                    throw PreconditionError("J must be antisymmetric");
        }
    }
    auto inv = try_inverse(*J);
    if (!inv) throw PreconditionError("J must be invertible");
    return AlgebraSpec(AlgKind::sp, n, f, std::move(J), std::move(inv));
}

const SquareMat<Scalar>& AlgebraSpec::form() const {
    if (!j_) throw PreconditionError("form() is defined for sp only");
    return *j_;
}

std::string AlgebraSpec::str() const {
    const char* k = kind_ == AlgKind::gl ? "gl" : kind_ == AlgKind::so ? "so" : "sp";
    return std::string(k) + std::to_string(n_);
}

bool member_of(const AlgebraSpec& g, const SquareMat<Scalar>& m) {
    if (m.size() != g.n()) throw PreconditionError("matrix size does not match algebra");
    switch (g.kind()) {
    case AlgKind::gl:
        return true;
    case AlgKind::so:
        return (m.transposed() + m).is_zero();
    case AlgKind::sp:
        return (m.transposed() * g.form() + g.form() * m).is_zero();
    }
    return false;
}

SquareMat<Scalar> random_matrix(Rng& rng, std::size_t n, const FieldSpec& f,
                                std::uint64_t bound) {
    SquareMat<Scalar> m = scalar_mat_zero(n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_scalar(rng, f, bound, false);
    return m;
}

SquareMat<Scalar> random_element(const AlgebraSpec& g, std::uint64_t seed, std::uint64_t bound) {
    Rng rng(seed);
    SquareMat<Scalar> a = random_matrix(rng, g.n(), g.field(), bound);
    switch (g.kind()) {
    case AlgKind::gl:
        return a;
    case AlgKind::so:
        return a - a.transposed();
    case AlgKind::sp: {
        SquareMat<Scalar> s = a + a.transposed(); // symmetric
        return *g.j_inv_ * s;
    }
    }
    throw PreconditionError("unreachable");
}

} // namespace colie
