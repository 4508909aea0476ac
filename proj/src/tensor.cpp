#include "colie/tensor.hpp"

#include "colie/linalg.hpp"

namespace colie {

TensorElem::TensorElem(SpacePtr space) : space_(std::move(space)) {
    if (!space_) throw PreconditionError("null space");
}

TensorElem TensorElem::monomial(SpacePtr space, Word w, Scalar c) {
    TensorElem out(std::move(space));
    if (w.min_dim() > out.space_->dim())
        throw PreconditionError("word uses letters outside the space basis");
    if (c.field() != out.field()) throw FieldMismatch("coefficient field mismatch");
    out.add_term(w, c);
    return out;
}

void TensorElem::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElem TensorElem::operator+(const TensorElem& o) const {
    check_same_space(space_, o.space_);
    TensorElem out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, c);
    return out;
}

TensorElem TensorElem::operator-(const TensorElem& o) const {
    check_same_space(space_, o.space_);
    TensorElem out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, -c);
    return out;
}

TensorElem TensorElem::operator-() const {
    TensorElem out(space_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

TensorElem TensorElem::scaled(const Scalar& c) const {
    TensorElem out(space_);
    if (c.field() != field()) throw FieldMismatch("coefficient field mismatch");
    for (const auto& [w, v] : terms_) out.add_term(w, v * c);
    return out;
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
    check_same_space(space_, o.space_);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

bool TensorElem::operator==(const TensorElem& o) const {
    check_same_space(space_, o.space_);
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [w, c] : terms_) {
        if (!(w == it->first) || c != it->second) return false;
        ++it;
    }
    return true;
}

std::optional<std::size_t> TensorElem::homogeneous_length() const {
    if (terms_.empty()) return std::nullopt;
    std::size_t l = terms_.begin()->first.length();
    for (const auto& [w, c] : terms_)
        if (w.length() != l) return std::nullopt;
    return l;
}

Scalar form_value(const SpacePtr& space, Letter a, Letter b) { return space->form(a, b); }

TensorElem signed_reverse(const TensorElem& a) {
    TensorElem out(a.space());
    for (const auto& [w, c] : a.terms()) {
        Scalar v = (w.length() % 2 == 1) ? -c : c;
        out.add_term(w.reversed(), v);
    }
    return out;
}

TensorElem plain_reverse(const TensorElem& a) {
    TensorElem out(a.space());
    for (const auto& [w, c] : a.terms()) out.add_term(w.reversed(), c);
    return out;
}

TensorElem rotate(const TensorElem& a, std::size_t r) {
    TensorElem out(a.space());
    for (const auto& [w, c] : a.terms()) out.add_term(w.rotated(r), c);
    return out;
}

bool is_signed_reverse_eigenvector(const TensorElem& a, int sign) {
    if (sign != 1 && sign != -1) throw PreconditionError("sign must be +1 or -1");
    TensorElem expect = (sign == 1) ? a : -a;
    return signed_reverse(a) == expect;
}

TensorElem signed_reverse_projection(const TensorElem& a, int sign) {
    if (sign != 1 && sign != -1) throw PreconditionError("sign must be +1 or -1");
    if (a.field().characteristic() == 2)
        throw PreconditionError("eigenprojection needs 2 to be invertible");
    const Scalar half = Scalar::of_ratio(1, 2, a.field());
    TensorElem img = signed_reverse(a);
    TensorElem sum = (sign == 1) ? a + img : a - img;
    return sum.scaled(half);
}

std::vector<TensorElem> signed_reverse_eigenbasis(const SpacePtr& space, std::size_t l, int sign) {
    if (sign != 1 && sign != -1) throw PreconditionError("sign must be +1 or -1");
    const FieldSpec& f = space->field();
    const Scalar one = Scalar::one(f);
    // Sign carried by reversal on length l; the requested eigenvalue is
    // reached by pairing each word with its reversal.
    const bool flip = (l % 2 == 1);
    std::vector<TensorElem> basis;
    for (const Word& w : all_words(space->dim(), l)) {
        Word rev = w.reversed();
        if (rev < w) continue; // one representative per reversal orbit
        if (rev == w) {
            // signed_reverse(w) = (+-1)^l w; keep when that matches `sign`.
            int eig = flip ? -1 : 1;
            if (eig == sign) basis.push_back(TensorElem::monomial(space, w, one));
            continue;
        }
        TensorElem v = TensorElem::monomial(space, w, one);
        Scalar c = (sign == 1) == !flip ? one : -one;
        v.add_term(rev, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<TensorElem> cyclic_invariant_basis(const SpacePtr& space, std::size_t l) {
    const FieldSpec& f = space->field();
    const std::vector<Word> words = all_words(space->dim(), l);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);

    // Rows of (shift - id) in word coordinates.
    std::vector<SparseVec> rows;
    rows.reserve(words.size());
    const Scalar one = Scalar::one(f);
    for (std::size_t i = 0; i < words.size(); ++i) {
        std::size_t j = index.at(words[i].rotated(1));
        if (j == i) continue;
        SparseVec row;
        row.emplace(i, -one);
        row.emplace(j, one);
        rows.push_back(std::move(row));
    }
    std::vector<TensorElem> basis;
    for (const SparseVec& v : sparse_kernel(rows, words.size(), f)) {
        TensorElem a(space);
        for (const auto& [col, c] : v) a.add_term(words[col], c);
        basis.push_back(std::move(a));
    }
    return basis;
}

std::vector<TensorElem> first_letter_decompose(const TensorElem& a) {
    auto l = a.homogeneous_length();
    if (!l || *l == 0)
        throw PreconditionError("first-letter decomposition needs a homogeneous element of length >= 1");
    std::vector<TensorElem> tails(a.space()->dim(), TensorElem(a.space()));
    for (const auto& [w, c] : a.terms()) {
        std::vector<Letter> rest(w.letters().begin() + 1, w.letters().end());
        tails[w[0]].add_term(Word(std::move(rest)), c);
    }
    return tails;
}

} // namespace colie
