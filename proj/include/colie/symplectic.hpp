#pragma once

#include <memory>
#include <string>
#include <vector>

#include "colie/scalar.hpp"
#include "colie/word.hpp"

namespace colie {

/// Finite-dimensional space with a fixed basis and an alternating bilinear
/// form given by its Gram matrix. The form may be degenerate; operations
/// that need nondegeneracy check for it explicitly.
class SymplecticSpace {
public:
    /// `gram` is row-major, dim*dim entries over `f`. Throws unless the
    /// matrix is alternating (antisymmetric with zero diagonal) and basis
    /// names are nonempty and distinct.
    SymplecticSpace(FieldSpec f, std::vector<std::string> basis_names, std::vector<Scalar> gram);

    /// Basis x1..xn with the block form <x_i, x_{i+n/2}> = 1 on pairs; for
    /// odd dimension the last basis vector pairs to zero with everything.
    /// Dimension 2 uses names {x, y} with <x, y> = 1.
    static std::shared_ptr<const SymplecticSpace> standard(std::size_t dim, const FieldSpec& f);

    std::size_t dim() const { return names_.size(); }
    const FieldSpec& field() const { return field_; }

    const Scalar& form(Letter i, Letter j) const;
    const std::string& name(Letter i) const;

    /// Index of the basis vector with the given name, or throws.
    Letter index_of(const std::string& name) const;

    bool single_char_names() const { return single_char_; }

    bool form_nondegenerate() const;

    const std::vector<Scalar>& gram() const { return gram_; }

    bool operator==(const SymplecticSpace& o) const;

private:
    FieldSpec field_;
    std::vector<std::string> names_;
    std::vector<Scalar> gram_;
    bool single_char_;
};

using SpacePtr = std::shared_ptr<const SymplecticSpace>;

/// Shared-structure check used by element operations: same dimension, field
/// and Gram matrix (names may differ only if the pointers differ).
void check_same_space(const SpacePtr& a, const SpacePtr& b);

} // namespace colie
