#include "colie/symplectic.hpp"

#include <set>

#include "colie/linalg.hpp"

namespace colie {

SymplecticSpace::SymplecticSpace(FieldSpec f, std::vector<std::string> basis_names,
                                 std::vector<Scalar> gram)
    : field_(f), names_(std::move(basis_names)), gram_(std::move(gram)) {
    const std::size_t n = names_.size();
    if (n == 0) throw PreconditionError("space dimension must be positive");
    if (gram_.size() != n * n)
        throw PreconditionError("Gram matrix size mismatch: expected " + std::to_string(n * n) +
                                " entries, got " + std::to_string(gram_.size()));
    std::set<std::string> seen;
    single_char_ = true;
    for (const auto& name : names_) {
        if (name.empty()) throw PreconditionError("basis names must be nonempty");
        if (!seen.insert(name).second)
            throw PreconditionError("duplicate basis name: " + name);
        if (name.size() != 1) single_char_ = false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& g = gram_[i * n + j];
            if (g.field() != field_) throw FieldMismatch("Gram entry field mismatch");
            if (i == j && !g.is_zero())
                throw PreconditionError("form must vanish on the diagonal");
            if (!(g + gram_[j * n + i]).is_zero())
                throw PreconditionError("form must be antisymmetric");
        }
    }
}

SpacePtr SymplecticSpace::standard(std::size_t dim, const FieldSpec& f) {
    std::vector<std::string> names;
    if (dim == 2) {
        names = {"x", "y"};
    } else {
        for (std::size_t i = 1; i <= dim; ++i) names.push_back("x" + std::to_string(i));
    }
    std::vector<Scalar> gram(dim * dim, Scalar::zero(f));
    const Scalar one = Scalar::one(f);
    const std::size_t h = dim / 2;
    for (std::size_t i = 0; i < h; ++i) {
        gram[i * dim + (i + h)] = one;
        gram[(i + h) * dim + i] = -one;
    }
    return std::make_shared<const SymplecticSpace>(f, std::move(names), std::move(gram));
}

const Scalar& SymplecticSpace::form(Letter i, Letter j) const {
    const std::size_t n = dim();
    if (i >= n || j >= n) throw PreconditionError("basis index out of range");
    return gram_[std::size_t(i) * n + j];
}

const std::string& SymplecticSpace::name(Letter i) const {
    if (i >= dim()) throw PreconditionError("basis index out of range");
    return names_[i];
}

Letter SymplecticSpace::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<Letter>(i);
    throw PreconditionError("unknown basis name: " + name);
}

bool SymplecticSpace::form_nondegenerate() const {
    const std::size_t n = dim();
    std::vector<SparseVec> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!gram_[i * n + j].is_zero()) rows[i].emplace(j, gram_[i * n + j]);
    return sparse_rank(std::move(rows)) == n;
}

bool SymplecticSpace::operator==(const SymplecticSpace& o) const {
    if (field_ != o.field_ || names_.size() != o.names_.size()) return false;
    for (std::size_t k = 0; k < gram_.size(); ++k)
        if (gram_[k] != o.gram_[k]) return false;
    return true;
}

void check_same_space(const SpacePtr& a, const SpacePtr& b) {
    if (!a || !b) throw PreconditionError("null space");
    if (a.get() == b.get()) return;
    if (!(*a == *b)) throw FieldMismatch("elements live over different spaces");
}

} // namespace colie
