#pragma once

#include <optional>

#include "colie/matrix.hpp"
#include "colie/rng.hpp"

namespace colie {

enum class AlgKind : std::uint8_t { gl, so, sp };

/// One of gl_n, so_n (skew matrices), sp_n (M^t J + J M = 0 for a fixed
/// invertible alternating J) over an exact field.
class AlgebraSpec {
public:
    static AlgebraSpec gl(std::size_t n, const FieldSpec& f);
    static AlgebraSpec so(std::size_t n, const FieldSpec& f);

    /// n must be even. Default J is block [[0, I], [-I, 0]]; a custom J must
    /// be alternating and invertible.
    static AlgebraSpec sp(std::size_t n, const FieldSpec& f,
                          std::optional<SquareMat<Scalar>> J = std::nullopt);

    AlgKind kind() const { return kind_; }
    std::size_t n() const { return n_; }
    const FieldSpec& field() const { return field_; }

    /// sp only.
    const SquareMat<Scalar>& form() const;

    std::string str() const;

private:
    AlgebraSpec(AlgKind k, std::size_t n, FieldSpec f, std::optional<SquareMat<Scalar>> J,
                std::optional<SquareMat<Scalar>> Jinv)
        : kind_(k), n_(n), field_(f), j_(std::move(J)), j_inv_(std::move(Jinv)) {}

    AlgKind kind_;
    std::size_t n_;
    FieldSpec field_;
    std::optional<SquareMat<Scalar>> j_;
    std::optional<SquareMat<Scalar>> j_inv_;

    friend SquareMat<Scalar> random_element(const AlgebraSpec&, std::uint64_t, std::uint64_t);
};

/// Exact membership predicate; gl accepts everything of the right shape.
bool member_of(const AlgebraSpec& g, const SquareMat<Scalar>& m);

/// Entry-wise random matrix with height-bounded entries.
SquareMat<Scalar> random_matrix(Rng& rng, std::size_t n, const FieldSpec& f, std::uint64_t bound);

/// Member of g by construction, deterministic in the seed:
/// so: A - A^t; sp: J^{-1} S with S symmetric; gl: unconstrained.
SquareMat<Scalar> random_element(const AlgebraSpec& g, std::uint64_t seed, std::uint64_t bound);

} // namespace colie
