#pragma once

#include <map>
#include <optional>

#include "colie/matrix.hpp"
#include "colie/nc_eval.hpp"
#include "colie/necklace.hpp"
#include "colie/tensor.hpp"

namespace colie {

/// Deliberately broken variants injected by the CLI's hidden --mutate flag
/// so the verification suites can prove they are able to fail.
struct Mutations {
    /// Replace <a_i, b_j> by <b_j, a_i> in the bracket.
    bool bracket_sign_flip = false;
    /// Treat empty segment results as literal zero instead of the empty word.
    SegmentMode segment_mode = SegmentMode::EmptyWord;
};

/// Element of the direct sum over l >= 0 of the length-l cyclic
/// coinvariants: a finite combination of necklaces. Lengths 0 and 1 lie
/// outside the graded Lie algebra proper (degrees -2 and -1) but are
/// admitted so the derivation identity is closed under taking D_x.
class CoinvElem {
public:
    explicit CoinvElem(SpacePtr space);
    static CoinvElem from_word(SpacePtr space, const Word& w, Scalar c);

    const SpacePtr& space() const { return space_; }
    const FieldSpec& field() const { return space_->field(); }
    const std::map<Necklace, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    void add_term(const Necklace& n, const Scalar& c);

    CoinvElem operator+(const CoinvElem& o) const;
    CoinvElem operator-(const CoinvElem& o) const;
    CoinvElem operator-() const;
    CoinvElem scaled(const Scalar& c) const;

    bool operator==(const CoinvElem& o) const;
    bool operator!=(const CoinvElem& o) const { return !(*this == o); }

    /// True when some necklace has length < 2, i.e. the element leaves the
    /// graded Lie algebra and lives only in the extended module.
    bool has_extended_terms() const;

private:
    SpacePtr space_;
    std::map<Necklace, Scalar> terms_;
};

/// Class map: each word goes to its necklace, coefficients accumulate.
CoinvElem project(const TensorElem& t);

/// The bracket double sum applied to two words exactly as written, with no
/// prior canonicalization. bracket() applies this to canonical
/// representatives; rotation independence of the formula is a verified
/// property, not an assumption.
CoinvElem bracket_on_words(const SpacePtr& space, const Word& u, const Word& v,
                           const Mutations& mut = {});

/// The derivation sum applied to one word as written.
CoinvElem derivation_on_word(const SpacePtr& space, Letter x, const Word& u);

/// The rotation-sum trace applied to one word as written.
TensorElem trace_on_word(const SpacePtr& space, const Word& u);

/// On representatives a (length l) and b (length m):
///   sum_{i<=l, j<=m} <a_i, b_j> * class( D(i,i)(a) concat D(j,j)(b) ),
/// extended bilinearly. Output is homogeneous of length l+m-2 per pair of
/// homogeneous inputs; independent of the chosen representatives.
CoinvElem bracket(const CoinvElem& a, const CoinvElem& b, const Mutations& mut = {});

/// Cyclic derivative: sum over positions carrying the letter x of the
/// class of the word with that position deleted.
CoinvElem derivation(Letter x, const CoinvElem& a);

/// Sum of all rotations of a representative; lands in the shift-invariant
/// subspace and is independent of the representative.
TensorElem trace_N(const CoinvElem& a);

/// Signed reversal descends to classes (it conjugates the shift).
CoinvElem signed_reverse_coinv(const CoinvElem& a);

/// (a + sign * signed_reverse_coinv(a)) / 2; characteristic 2 rejected.
CoinvElem p_projection(const CoinvElem& a, int sign);

bool is_signed_reverse_eigenvector(const CoinvElem& a, int sign);

/// Functorial map along a form-preserving linear map phi: V -> W.
/// phi_columns[i] holds the coordinates of phi(e_i) in the target basis;
/// each letter is substituted by its image and the result expanded
/// multilinearly, then projected. Throws unless phi preserves the forms.
CoinvElem induced_map(const SpacePtr& target, const std::vector<std::vector<Scalar>>& phi_columns,
                      const CoinvElem& a);

/// l - 2 when every necklace has one length l; nullopt for zero or mixed.
std::optional<long long> degree(const CoinvElem& a);

/// Degree-0 identification with sp(V): class(u (x) v) becomes the
/// endomorphism w -> <u,w>v + <v,w>u (columns indexed by basis vectors).
/// Requires every necklace of length 2 and a nondegenerate form.
SquareMat<Scalar> sp_iso(const CoinvElem& a);

/// Number of necklaces of length l over r letters, by direct enumeration
/// of canonical words.
std::uint64_t graded_dimension(std::size_t r, std::size_t l);

/// Independent dimension oracle: r^l minus the exact rank of the span of
/// { w - shift(w) }, computed over f by sparse elimination.
std::uint64_t coinvariant_rank_oracle(std::size_t r, std::size_t l, const FieldSpec& f);

} // namespace colie
