#include "colie/coinv.hpp"

#include "colie/linalg.hpp"

namespace colie {

CoinvElem::CoinvElem(SpacePtr space) : space_(std::move(space)) {
    if (!space_) throw PreconditionError("null space");
}

CoinvElem CoinvElem::from_word(SpacePtr space, const Word& w, Scalar c) {
    CoinvElem out(std::move(space));
    if (w.min_dim() > out.space_->dim())
        throw PreconditionError("word uses letters outside the space basis");
    if (c.field() != out.field()) throw FieldMismatch("coefficient field mismatch");
    out.add_term(Necklace(w), c);
    return out;
}

void CoinvElem::add_term(const Necklace& n, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(n);
    if (it == terms_.end()) {
        terms_.emplace(n, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CoinvElem CoinvElem::operator+(const CoinvElem& o) const {
    check_same_space(space_, o.space_);
    CoinvElem out = *this;
    for (const auto& [n, c] : o.terms_) out.add_term(n, c);
    return out;
}

CoinvElem CoinvElem::operator-(const CoinvElem& o) const {
    check_same_space(space_, o.space_);
    CoinvElem out = *this;
    for (const auto& [n, c] : o.terms_) out.add_term(n, -c);
    return out;
}

CoinvElem CoinvElem::operator-() const {
    CoinvElem out(space_);
    for (const auto& [n, c] : terms_) out.terms_.emplace(n, -c);
    return out;
}

CoinvElem CoinvElem::scaled(const Scalar& c) const {
    if (c.field() != field()) throw FieldMismatch("coefficient field mismatch");
    CoinvElem out(space_);
    for (const auto& [n, v] : terms_) out.add_term(n, v * c);
    return out;
}

bool CoinvElem::operator==(const CoinvElem& o) const {
    check_same_space(space_, o.space_);
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [n, c] : terms_) {
        if (!(n == it->first) || c != it->second) return false;
        ++it;
    }
    return true;
}

bool CoinvElem::has_extended_terms() const {
    for (const auto& [n, c] : terms_)
        if (n.length() < 2) return true;
    return false;
}

CoinvElem project(const TensorElem& t) {
    CoinvElem out(t.space());
    for (const auto& [w, c] : t.terms()) out.add_term(Necklace(w), c);
    return out;
}

namespace {

void accumulate_bracket(CoinvElem& out, const SpacePtr& space, const Word& u, const Word& v,
                        const Scalar& c, const Mutations& mut) {
    const std::size_t l = u.length();
    const std::size_t m = v.length();
    for (std::size_t i = 1; i <= l; ++i) {
        const Word left = u.segment(i, i);
        if (mut.segment_mode == SegmentMode::LiteralZero && left.empty()) continue;
        for (std::size_t j = 1; j <= m; ++j) {
            Scalar g = mut.bracket_sign_flip ? space->form(v.letter_at(j), u.letter_at(i))
                                             : space->form(u.letter_at(i), v.letter_at(j));
            if (g.is_zero()) continue;
            Word right = v.segment(j, j);
            if (mut.segment_mode == SegmentMode::LiteralZero && right.empty()) continue;
            out.add_term(Necklace(left.concat(right)), c * g);
        }
    }
}

void accumulate_derivation(CoinvElem& out, Letter x, const Word& u, const Scalar& c) {
    for (std::size_t i = 1; i <= u.length(); ++i)
        if (u.letter_at(i) == x) out.add_term(Necklace(u.segment(i, i)), c);
}

} // namespace

CoinvElem bracket_on_words(const SpacePtr& space, const Word& u, const Word& v,
                           const Mutations& mut) {
    CoinvElem out(space);
    accumulate_bracket(out, space, u, v, Scalar::one(space->field()), mut);
    return out;
}

CoinvElem derivation_on_word(const SpacePtr& space, Letter x, const Word& u) {
    CoinvElem out(space);
    accumulate_derivation(out, x, u, Scalar::one(space->field()));
    return out;
}

TensorElem trace_on_word(const SpacePtr& space, const Word& u) {
    TensorElem out(space);
    const Scalar one = Scalar::one(space->field());
    for (std::size_t r = 0; r < u.length(); ++r) out.add_term(u.rotated(r), one);
    return out;
}

CoinvElem bracket(const CoinvElem& a, const CoinvElem& b, const Mutations& mut) {
    check_same_space(a.space(), b.space());
    const SpacePtr& space = a.space();
    CoinvElem out(space);
    for (const auto& [na, ca] : a.terms())
        for (const auto& [nb, cb] : b.terms())
            accumulate_bracket(out, space, na.rep(), nb.rep(), ca * cb, mut);
    return out;
}

CoinvElem derivation(Letter x, const CoinvElem& a) {
    if (x >= a.space()->dim()) throw PreconditionError("basis index out of range");
    CoinvElem out(a.space());
    for (const auto& [n, c] : a.terms()) accumulate_derivation(out, x, n.rep(), c);
    return out;
}

TensorElem trace_N(const CoinvElem& a) {
    TensorElem out(a.space());
    for (const auto& [n, c] : a.terms())
        for (std::size_t r = 0; r < n.length(); ++r) out.add_term(n.rep().rotated(r), c);
    return out;
}

CoinvElem signed_reverse_coinv(const CoinvElem& a) {
    CoinvElem out(a.space());
    for (const auto& [n, c] : a.terms()) {
        Scalar v = (n.length() % 2 == 1) ? -c : c;
        out.add_term(Necklace(n.rep().reversed()), v);
    }
    return out;
}

CoinvElem p_projection(const CoinvElem& a, int sign) {
    if (sign != 1 && sign != -1) throw PreconditionError("sign must be +1 or -1");
    if (a.field().characteristic() == 2)
        throw PreconditionError("eigenprojection needs 2 to be invertible");
    const Scalar half = Scalar::of_ratio(1, 2, a.field());
    CoinvElem img = signed_reverse_coinv(a);
    CoinvElem sum = (sign == 1) ? a + img : a - img;
    return sum.scaled(half);
}

bool is_signed_reverse_eigenvector(const CoinvElem& a, int sign) {
    if (sign != 1 && sign != -1) throw PreconditionError("sign must be +1 or -1");
    CoinvElem expect = (sign == 1) ? a : -a;
    return signed_reverse_coinv(a) == expect;
}

CoinvElem induced_map(const SpacePtr& target, const std::vector<std::vector<Scalar>>& phi_columns,
                      const CoinvElem& a) {
    const SpacePtr& source = a.space();
    const std::size_t r = source->dim();
    const std::size_t s = target->dim();
    if (target->field() != source->field()) throw FieldMismatch("source/target field mismatch");
    if (phi_columns.size() != r) throw PreconditionError("phi needs one column per source basis vector");
    for (const auto& col : phi_columns)
        if (col.size() != s) throw PreconditionError("phi column length must be the target dimension");

    // <phi e_i, phi e_j>_W must reproduce the source Gram matrix.
    for (Letter i = 0; i < r; ++i)
        for (Letter j = 0; j < r; ++j) {
            Scalar acc = Scalar::zero(source->field());
            for (Letter k = 0; k < s; ++k) {
                if (phi_columns[i][k].is_zero()) continue;
                for (Letter m = 0; m < s; ++m)
                    acc += phi_columns[i][k] * phi_columns[j][m] * target->form(k, m);
            }
            if (acc != source->form(i, j))
                throw PreconditionError("phi does not preserve the form");
        }

    CoinvElem out(target);
    for (const auto& [n, c] : a.terms()) {
        // Multilinear expansion of the letter-wise substitution.
        std::vector<std::pair<Word, Scalar>> partial{{Word(), c}};
        for (Letter x : n.rep().letters()) {
            std::vector<std::pair<Word, Scalar>> next;
            for (const auto& [w, coef] : partial)
                for (Letter k = 0; k < s; ++k) {
                    const Scalar& e = phi_columns[x][k];
                    if (e.is_zero()) continue;
                    next.emplace_back(w.concat(Word::single(k)), coef * e);
                }
            partial = std::move(next);
        }
        for (const auto& [w, coef] : partial) out.add_term(Necklace(w), coef);
    }
    return out;
}

std::optional<long long> degree(const CoinvElem& a) {
    if (a.is_zero()) return std::nullopt;
    std::size_t l = a.terms().begin()->first.length();
    for (const auto& [n, c] : a.terms())
        if (n.length() != l) return std::nullopt;
    return static_cast<long long>(l) - 2;
}

SquareMat<Scalar> sp_iso(const CoinvElem& a) {
    const SpacePtr& space = a.space();
    for (const auto& [n, c] : a.terms())
        if (n.length() != 2) throw PreconditionError("sp identification needs length-2 classes");
    if (!space->form_nondegenerate())
        throw PreconditionError("sp identification needs a nondegenerate form");
    const std::size_t r = space->dim();
    SquareMat<Scalar> out = scalar_mat_zero(r, space->field());
    for (const auto& [n, c] : a.terms()) {
        Letter u = n.rep()[0];
        Letter v = n.rep()[1];
        // column k of the summand: <u, e_k> v + <v, e_k> u
        for (Letter k = 0; k < r; ++k) {
            out.at(v, k) += c * space->form(u, k);
            out.at(u, k) += c * space->form(v, k);
        }
    }
    return out;
}

std::uint64_t graded_dimension(std::size_t r, std::size_t l) {
    std::uint64_t count = 0;
    for (const Word& w : all_words(r, l))
        if (least_rotation_index(w) == 0) ++count;
    return count;
}

std::uint64_t coinvariant_rank_oracle(std::size_t r, std::size_t l, const FieldSpec& f) {
    const std::vector<Word> words = all_words(r, l);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
    const Scalar one = Scalar::one(f);
    std::vector<SparseVec> rows;
    rows.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        std::size_t j = index.at(words[i].rotated(1));
        if (j == i) continue;
        SparseVec row;
        row.emplace(i, one);
        row.emplace(j, -one);
        rows.push_back(std::move(row));
    }
    return words.size() - sparse_rank(std::move(rows));
}

} // namespace colie
