#include "colie/parse.hpp"
#include "colie/verify.hpp"

namespace colie {

namespace {

constexpr std::uint64_t kHeightBound = 3;

Scalar rnd_coeff(TrialContext& ctx) {
    return random_scalar(ctx.rng, ctx.space->field(), kHeightBound, true);
}

CoinvElem random_class(TrialContext& ctx, std::size_t min_len, std::size_t max_len,
                       std::size_t max_terms) {
    CoinvElem out(ctx.space);
    const std::size_t terms = 1 + ctx.rng.below(max_terms);
    for (std::size_t t = 0; t < terms; ++t) {
        std::size_t l = min_len + ctx.rng.below(max_len - min_len + 1);
        out.add_term(Necklace(random_word(ctx.rng, ctx.space->dim(), l)), rnd_coeff(ctx));
    }
    return out;
}

CoinvElem random_homogeneous(TrialContext& ctx, std::size_t l, std::size_t max_terms) {
    CoinvElem out(ctx.space);
    const std::size_t terms = 1 + ctx.rng.below(max_terms);
    for (std::size_t t = 0; t < terms; ++t)
        out.add_term(Necklace(random_word(ctx.rng, ctx.space->dim(), l)), rnd_coeff(ctx));
    return out;
}

std::size_t sample_len(TrialContext& ctx) {
    const std::size_t lo = 2;
    const std::size_t hi = std::max<std::size_t>(2, ctx.cfg.max_len);
    return lo + ctx.rng.below(hi - lo + 1);
}

std::string show(const CoinvElem& a) { return element_str(a); }

// ---------------------------------------------------------------- jacobi

// First basis pair with a nonvanishing pairing, if any.
std::optional<std::pair<Letter, Letter>> first_hyperbolic_pair(const SpacePtr& space) {
    for (Letter i = 0; i < space->dim(); ++i)
        for (Letter j = 0; j < space->dim(); ++j)
            if (!space->form(i, j).is_zero()) return std::make_pair(i, j);
    return std::nullopt;
}

// Trial 0 pins the bracket's orientation on hand-expanded low-degree
// structure constants; the Jacobi identity alone is insensitive to a global
// sign change of the bracket, so without this anchor the suite could not
// detect the sign-flip mutation it is required to catch.
void jacobi_anchor(TrialContext& ctx) {
    auto pair = first_hyperbolic_pair(ctx.space);
    if (!pair) {
        ctx.note("anchor", "skipped: form is identically zero");
        return;
    }
    auto [a, b] = *pair;
    const Scalar c = ctx.space->form(a, b);
    const Scalar one = Scalar::one(ctx.space->field());
    const Scalar two = Scalar::of_int(2, ctx.space->field());
    const Scalar four = Scalar::of_int(4, ctx.space->field());

    auto cls = [&](std::initializer_list<Letter> ls) {
        return CoinvElem::from_word(ctx.space, Word(std::vector<Letter>(ls)), one);
    };
    CoinvElem ab = cls({a, b});
    CoinvElem aa = cls({a, a});
    CoinvElem bb = cls({b, b});

    struct Case {
        const char* label;
        CoinvElem got;
        CoinvElem want;
    };
    const Case cases[] = {
        {"[ab,bb]", bracket(ab, bb, ctx.cfg.mutations), bb.scaled(two * c)},
        {"[ab,aa]", bracket(ab, aa, ctx.cfg.mutations), aa.scaled(-(two * c))},
        {"[aa,bb]", bracket(aa, bb, ctx.cfg.mutations), ab.scaled(four * c)},
    };
    for (const auto& k : cases)
        if (!(k.got == k.want))
            ctx.fail(std::string("orientation anchor ") + k.label + ": got " + show(k.got) +
                     ", want " + show(k.want));
}

void jacobi_trial(TrialContext& ctx) {
    if (ctx.index == 0) {
        jacobi_anchor(ctx);
        return;
    }
    const Mutations& mut = ctx.cfg.mutations;
    CoinvElem a = random_class(ctx, 2, ctx.cfg.max_len, 3);
    CoinvElem b = random_class(ctx, 2, ctx.cfg.max_len, 3);
    CoinvElem c = random_class(ctx, 2, ctx.cfg.max_len, 3);
    CoinvElem jac = bracket(a, bracket(b, c, mut), mut) + bracket(b, bracket(c, a, mut), mut) +
                    bracket(c, bracket(a, b, mut), mut);
    if (!jac.is_zero())
        ctx.fail("jacobi sum nonzero: a=" + show(a) + " b=" + show(b) + " c=" + show(c) +
                 " sum=" + show(jac));
}

// ----------------------------------------------------------- alternating

void alternating_trial(TrialContext& ctx) {
    const Mutations& mut = ctx.cfg.mutations;
    CoinvElem a = random_class(ctx, 2, ctx.cfg.max_len, 3);
    CoinvElem b = random_class(ctx, 2, ctx.cfg.max_len, 3);
    CoinvElem self = bracket(a, a, mut);
    if (!self.is_zero()) ctx.fail("[a,a] != 0: a=" + show(a) + " got " + show(self));
    CoinvElem anti = bracket(a, b, mut) + bracket(b, a, mut);
    if (!anti.is_zero())
        ctx.fail("[a,b]+[b,a] != 0: a=" + show(a) + " b=" + show(b) + " got " + show(anti));
}

// --------------------------------------------------------------- grading

void grading_trial(TrialContext& ctx) {
    std::size_t l = sample_len(ctx);
    std::size_t m = sample_len(ctx);
    CoinvElem a = random_homogeneous(ctx, l, 3);
    CoinvElem b = random_homogeneous(ctx, m, 3);
    CoinvElem ab = bracket(a, b, ctx.cfg.mutations);
    if (ab.is_zero()) return;
    auto d = degree(ab);
    long long want = static_cast<long long>(l) + static_cast<long long>(m) - 4;
    if (!d || *d != want)
        ctx.fail("degree not additive: a=" + show(a) + " b=" + show(b) + " [a,b]=" + show(ab));
}

// ------------------------------------------------------------ derivation

void derivation_trial(TrialContext& ctx) {
    const Mutations& mut = ctx.cfg.mutations;
    CoinvElem a = random_class(ctx, 2, ctx.cfg.max_len, 3);
    CoinvElem b = random_class(ctx, 2, ctx.cfg.max_len, 3);
    CoinvElem ab = bracket(a, b, mut);
    for (Letter x = 0; x < ctx.space->dim(); ++x) {
        CoinvElem lhs = derivation(x, ab);
        CoinvElem rhs = bracket(derivation(x, a), b, mut) + bracket(a, derivation(x, b), mut);
        if (!(lhs == rhs))
            ctx.fail("derivation fails at letter " + ctx.space->name(x) + ": a=" + show(a) +
                     " b=" + show(b) + " D[a,b]=" + show(lhs) + " [Da,b]+[a,Db]=" + show(rhs));
    }
}

// ---------------------------------------------------------- well-defined

std::size_t well_defined_cap(const RunConfig& cfg) {
    return std::min<std::size_t>(cfg.max_len, 5);
}

std::size_t well_defined_planned(const RunConfig& cfg) {
    std::size_t L = well_defined_cap(cfg);
    return L < 2 ? 0 : (L - 1) * (L - 1);
}

// Exhaustive: the defining formulas applied to every rotation of every word
// must match their value on the canonical representative.
void well_defined_trial(TrialContext& ctx) {
    const std::size_t L = well_defined_cap(ctx.cfg);
    const std::size_t span = L - 1;
    const std::size_t l = 2 + ctx.index / span;
    const std::size_t m = 2 + ctx.index % span;
    const SpacePtr& sp = ctx.space;
    const std::size_t r = sp->dim();

    for (const Word& u : all_words(r, l)) {
        for (const Word& v : all_words(r, m)) {
            CoinvElem base = bracket_on_words(sp, u, v, ctx.cfg.mutations);
            for (std::size_t s = 0; s < l; ++s) {
                for (std::size_t t = 0; t < m; ++t) {
                    if (s == 0 && t == 0) continue;
                    CoinvElem rot =
                        bracket_on_words(sp, u.rotated(s), v.rotated(t), ctx.cfg.mutations);
                    if (!(rot == base)) {
                        ctx.fail("bracket depends on representatives: u=" + word_str(u, sp) +
                                 " v=" + word_str(v, sp) + " rotations (" + std::to_string(s) +
                                 "," + std::to_string(t) + ")");
                        return;
                    }
                }
            }
        }
    }
    if (l == m) {
        for (const Word& u : all_words(r, l)) {
            TensorElem trace_base = trace_on_word(sp, u);
            for (std::size_t s = 1; s < l; ++s) {
                Word us = u.rotated(s);
                if (!(trace_on_word(sp, us) == trace_base)) {
                    ctx.fail("trace depends on representative: u=" + word_str(u, sp));
                    return;
                }
                for (Letter x = 0; x < r; ++x)
                    if (!(derivation_on_word(sp, x, us) == derivation_on_word(sp, x, u))) {
                        ctx.fail("derivation depends on representative: u=" + word_str(u, sp) +
                                 " letter " + sp->name(x));
                        return;
                    }
            }
        }
    }
}

// ------------------------------------------------------------ functorial

std::vector<std::vector<Scalar>> identity_columns(const SpacePtr& space) {
    const std::size_t r = space->dim();
    std::vector<std::vector<Scalar>> cols(r, std::vector<Scalar>(r, Scalar::zero(space->field())));
    for (std::size_t i = 0; i < r; ++i) cols[i][i] = Scalar::one(space->field());
    return cols;
}

// Random product of symplectic transvections v -> v + c<v,w>w; each factor
// preserves the form exactly, for degenerate forms included.
std::vector<std::vector<Scalar>> random_form_preserving(TrialContext& ctx) {
    const SpacePtr& sp = ctx.space;
    const std::size_t r = sp->dim();
    auto cols = identity_columns(sp);
    const std::size_t reps = 1 + ctx.rng.below(3);
    for (std::size_t t = 0; t < reps; ++t) {
        std::vector<Scalar> w(r, Scalar::zero(sp->field()));
        bool nonzero = false;
        while (!nonzero) {
            for (auto& e : w) {
                e = random_scalar(ctx.rng, sp->field(), kHeightBound, false);
                nonzero = nonzero || !e.is_zero();
            }
        }
        Scalar c = rnd_coeff(ctx);
        for (auto& col : cols) {
            // <col, w> with respect to the Gram matrix
            Scalar pairing = Scalar::zero(sp->field());
            for (Letter a = 0; a < r; ++a) {
                if (col[a].is_zero()) continue;
                for (Letter b = 0; b < r; ++b) pairing += col[a] * w[b] * sp->form(a, b);
            }
            Scalar factor = c * pairing;
            for (std::size_t k = 0; k < r; ++k) col[k] += factor * w[k];
        }
    }
    return cols;
}

void functorial_trial(TrialContext& ctx) {
    const Mutations& mut = ctx.cfg.mutations;
    auto phi = random_form_preserving(ctx);
    CoinvElem a = random_class(ctx, 2, ctx.cfg.max_len, 2);
    CoinvElem b = random_class(ctx, 2, ctx.cfg.max_len, 2);
    CoinvElem lhs = induced_map(ctx.space, phi, bracket(a, b, mut));
    CoinvElem rhs = bracket(induced_map(ctx.space, phi, a), induced_map(ctx.space, phi, b), mut);
    if (!(lhs == rhs))
        ctx.fail("induced map is not a bracket homomorphism: a=" + show(a) + " b=" + show(b));
}

// -------------------------------------------------------------- iota-hom

void iota_hom_trial(TrialContext& ctx) {
    const Mutations& mut = ctx.cfg.mutations;
    CoinvElem a = random_class(ctx, 2, ctx.cfg.max_len, 3);
    CoinvElem b = random_class(ctx, 2, ctx.cfg.max_len, 3);
    if (!(signed_reverse_coinv(signed_reverse_coinv(a)) == a))
        ctx.fail("involution squared is not the identity: a=" + show(a));
    CoinvElem lhs = signed_reverse_coinv(bracket(a, b, mut));
    CoinvElem rhs = bracket(signed_reverse_coinv(a), signed_reverse_coinv(b), mut);
    if (!(lhs == rhs))
        ctx.fail("involution is not a bracket homomorphism: a=" + show(a) + " b=" + show(b));

    if (ctx.space->field().characteristic() != 2) {
        CoinvElem ap = p_projection(a, +1);
        CoinvElem bp = p_projection(b, +1);
        CoinvElem am = p_projection(a, -1);
        CoinvElem bm = p_projection(b, -1);
        CoinvElem pp = bracket(ap, bp, mut);
        if (!is_signed_reverse_eigenvector(pp, +1))
            ctx.fail("[P+,P+] left the (+1)-eigenspace: a=" + show(a) + " b=" + show(b));
        CoinvElem mm = bracket(am, bm, mut);
        if (!is_signed_reverse_eigenvector(mm, +1))
            ctx.fail("[P-,P-] left the (+1)-eigenspace: a=" + show(a) + " b=" + show(b));
    }
}

// ----------------------------------------------------------------- lemma

std::size_t lemma_cap(const RunConfig& cfg) { return std::min<std::size_t>(cfg.max_len, 5); }

std::size_t lemma_planned(const RunConfig& cfg) {
    std::size_t L = lemma_cap(cfg);
    return L < 2 ? 0 : 2 * (L - 1);
}

// Exhaustive: shift-invariant eigenvectors of the signed reversal have all
// their first-letter tails in the opposite eigenspace one length down.
void lemma_trial(TrialContext& ctx) {
    const std::size_t l = 2 + ctx.index / 2;
    const int sign = (ctx.index % 2 == 0) ? +1 : -1;
    const SpacePtr& sp = ctx.space;
    for (const TensorElem& t : cyclic_invariant_basis(sp, l)) {
        TensorElem tp = signed_reverse_projection(t, sign);
        if (tp.is_zero()) continue;
        if (!(rotate(tp, 1) == tp)) {
            ctx.fail("projection broke shift invariance at length " + std::to_string(l));
            return;
        }
        auto tails = first_letter_decompose(tp);
        for (Letter x = 0; x < sp->dim(); ++x) {
            if (tails[x].is_zero()) continue;
            if (!is_signed_reverse_eigenvector(tails[x], -sign)) {
                ctx.fail("tail escaped the opposite eigenspace: length " + std::to_string(l) +
                         ", sign " + std::to_string(sign) + ", source " + tensor_str(tp) +
                         ", tail of " + sp->name(x) + " = " + tensor_str(tails[x]));
                return;
            }
        }
    }
}

// ---------------------------------------------------------------- sp-iso

void sp_iso_trial(TrialContext& ctx) {
    const SpacePtr& sp = ctx.space;
    const FieldSpec& f = sp->field();
    const Scalar one = Scalar::one(f);

    std::vector<CoinvElem> basis;
    for (const Word& w : all_words(sp->dim(), 2))
        if (least_rotation_index(w) == 0) basis.push_back(CoinvElem::from_word(sp, w, one));

    std::vector<Scalar> candidates;
    for (long long v : {1, -1, 2, -2}) candidates.push_back(Scalar::of_int(v, f));
    candidates.push_back(Scalar::of_ratio(1, 2, f));
    candidates.push_back(Scalar::of_ratio(-1, 2, f));

    std::vector<bool> alive(candidates.size(), true);
    bool any_nonzero = false;
    for (const CoinvElem& a : basis) {
        for (const CoinvElem& b : basis) {
            SquareMat<Scalar> lhs = sp_iso(bracket(a, b, ctx.cfg.mutations));
            SquareMat<Scalar> rhs = commutator(sp_iso(a), sp_iso(b));
            if (!rhs.is_zero()) any_nonzero = true;
            for (std::size_t k = 0; k < candidates.size(); ++k)
                if (alive[k] && !(lhs == rhs.scaled(candidates[k]))) alive[k] = false;
        }
    }
    std::string surviving;
    for (std::size_t k = 0; k < candidates.size(); ++k)
        if (alive[k]) {
            if (!surviving.empty()) surviving += ",";
            surviving += candidates[k].str();
        }
    if (surviving.empty()) {
        ctx.fail("no candidate scale makes the degree-0 identification a homomorphism");
        return;
    }
    if (!any_nonzero) ctx.note("scale_status", "indeterminate: all commutators vanished");
    ctx.note("s", surviving);
}

// ------------------------------------------------------------------ dims

std::size_t dims_planned(const RunConfig& cfg) {
    return cfg.max_len < 2 ? 0 : cfg.max_len - 1;
}

void dims_trial(TrialContext& ctx) {
    const std::size_t l = 2 + ctx.index;
    const std::size_t r = ctx.space->dim();
    std::uint64_t count = graded_dimension(r, l);
    ctx.note("l=" + std::to_string(l), std::to_string(count));
    if (r == 2) {
        // Hand-enumerated low lengths, pinned.
        const std::map<std::size_t, std::uint64_t> pinned{{2, 3}, {3, 4}, {4, 6}};
        auto it = pinned.find(l);
        if (it != pinned.end() && count != it->second)
            ctx.fail("necklace count at length " + std::to_string(l) + " is " +
                     std::to_string(count) + ", expected " + std::to_string(it->second));
    }
    if (ctx.cfg.oracle) {
        std::uint64_t rank = coinvariant_rank_oracle(r, l, ctx.space->field());
        if (rank != count)
            ctx.fail("enumeration disagrees with quotient rank at length " + std::to_string(l) +
                     ": " + std::to_string(count) + " vs " + std::to_string(rank));
    }
}

// -------------------------------------------------------------- tangency

SquareMat<Scalar> rnd_matrix(TrialContext& ctx, std::size_t n) {
    return random_matrix(ctx.rng, n, ctx.space->field(), kHeightBound);
}

void tangency_trial(TrialContext& ctx) {
    CoinvElem a = random_class(ctx, 2, ctx.cfg.max_len, 3);
    const std::size_t n = 2 + ctx.index % 2;
    SquareMat<Scalar> X = rnd_matrix(ctx, n);
    SquareMat<Scalar> Y = rnd_matrix(ctx, n);
    SquareMat<Scalar> defect = tangency_defect(a, X, Y);
    if (!defect.is_zero())
        ctx.fail("commutator not constant to first order: a=" + show(a) + " X=" + matrix_str(X) +
                 " Y=" + matrix_str(Y) + " defect=" + matrix_str(defect));
}

// ---------------------------------------------------------------- vf-hom

void vf_hom_trial(TrialContext& ctx) {
    const FieldSpec& f = ctx.space->field();
    CoinvElem a(ctx.space);
    CoinvElem b(ctx.space);
    SquareMat<Scalar> X = scalar_mat_zero(2, f);
    SquareMat<Scalar> Y = scalar_mat_zero(2, f);
    if (ctx.index == 0) {
        // Pinned generating example: the classes of xy and yy at the
        // standard nilpotent pair.
        const Scalar one = Scalar::one(f);
        a = CoinvElem::from_word(ctx.space, Word({0, 1}), one);
        b = CoinvElem::from_word(ctx.space, Word({1, 1}), one);
        X.at(0, 1) = one;
        Y.at(1, 0) = one;
    } else {
        a = random_class(ctx, 2, ctx.cfg.max_len, 2);
        b = random_class(ctx, 2, ctx.cfg.max_len, 2);
        const std::size_t n = 2 + ctx.index % 2;
        X = rnd_matrix(ctx, n);
        Y = rnd_matrix(ctx, n);
    }
    VFValue defect = vf_bracket_defect(a, b, X, Y, ctx.cfg.mutations);
    if (!defect.is_zero())
        ctx.fail("field bracket mismatch: a=" + show(a) + " b=" + show(b) + " X=" + matrix_str(X) +
                 " Y=" + matrix_str(Y) + " defect=(" + matrix_str(defect.first) + " | " +
                 matrix_str(defect.second) + ")");
    if (ctx.cfg.oracle) {
        VFValue composed = vf_bracket_defect_composed(a, b, X, Y);
        if (!composed.is_zero())
            ctx.fail("composition route disagrees: a=" + show(a) + " b=" + show(b));
    }
}

// --------------------------------------------------------- so-sp-closure

AlgebraSpec trial_algebra(TrialContext& ctx) {
    const FieldSpec& f = ctx.space->field();
    switch (ctx.index % 4) {
    case 0: return AlgebraSpec::so(3, f);
    case 1: return AlgebraSpec::so(4, f);
    case 2: return AlgebraSpec::sp(2, f);
    default: return AlgebraSpec::sp(4, f);
    }
}

void closure_trial(TrialContext& ctx) {
    const SpacePtr& sp = ctx.space;
    AlgebraSpec g = trial_algebra(ctx);

    // Random member of the (-1)-eigenspace of signed reversal, mixing one
    // or two homogeneous lengths.
    TensorElem p(sp);
    const std::size_t pieces = 1 + ctx.rng.below(2);
    for (std::size_t k = 0; k < pieces; ++k) {
        std::size_t l = sample_len(ctx);
        auto basis = signed_reverse_eigenbasis(sp, l, -1);
        if (basis.empty()) continue;
        p += basis[ctx.rng.below(basis.size())].scaled(rnd_coeff(ctx));
    }
    if (p.is_zero()) {
        // Rare cancellation; fall back to a fixed eigenvector so the trial
        // still exercises the property.
        auto basis = signed_reverse_eigenbasis(sp, 2, -1);
        if (basis.empty()) return;
        p = basis.front();
    }

    std::vector<std::uint64_t> seeds{ctx.rng.next(), ctx.rng.next(), ctx.rng.next()};
    if (!g_closure_check(p, g, seeds, kHeightBound))
        ctx.fail("evaluation left " + g.str() + ": p=" + tensor_str(p));
}

// ----------------------------------------------------------- proposition

void proposition_trial(TrialContext& ctx) {
    AlgebraSpec g = trial_algebra(ctx);
    CoinvElem a = p_projection(random_class(ctx, 2, ctx.cfg.max_len, 3), +1);
    if (a.is_zero())
        a = CoinvElem::from_word(ctx.space, Word({0, 1}), Scalar::one(ctx.space->field()));
    SquareMat<Scalar> X = random_element(g, ctx.rng.next(), kHeightBound);
    SquareMat<Scalar> Y = random_element(g, ctx.rng.next(), kHeightBound);
    if (!proposition_check(a, g, X, Y))
        ctx.fail("restriction to " + g.str() + " failed: a=" + show(a) + " X=" + matrix_str(X) +
                 " Y=" + matrix_str(Y));
}

std::size_t by_trials(const RunConfig& cfg) { return cfg.trials; }
std::size_t just_one(const RunConfig&) { return 1; }

} // namespace

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> suites = [] {
        std::vector<Suite> v;
        v.push_back({"jacobi",
                     "Jacobi identity on random triples, plus a pinned orientation anchor",
                     false, false, false, by_trials, jacobi_trial});
        v.push_back({"alternating", "[a,a] = 0 and [a,b] + [b,a] = 0 on random pairs", false,
                     false, false, by_trials, alternating_trial});
        v.push_back({"grading", "degrees add under the bracket", false, false, false, by_trials,
                     grading_trial});
        v.push_back({"derivation", "the cyclic derivatives satisfy the Leibniz rule", false,
                     false, false, by_trials, derivation_trial});
        v.push_back({"well-defined",
                     "exhaustive representative independence of bracket, derivative and trace "
                     "(lengths capped at 5)",
                     false, false, false, well_defined_planned, well_defined_trial});
        v.push_back({"functorial", "form-preserving substitutions commute with the bracket",
                     false, false, false, by_trials, functorial_trial});
        v.push_back({"iota-hom",
                     "signed reversal is an involutive bracket homomorphism; eigenspace "
                     "composition rules (char != 2 part)",
                     false, false, false, by_trials, iota_hom_trial});
        v.push_back({"lemma",
                     "first-letter tails of shift-invariant eigenvectors flip eigenspace "
                     "(exhaustive, lengths capped at 5)",
                     true, false, false, lemma_planned, lemma_trial});
        v.push_back({"sp-iso",
                     "a single scale makes the degree-0 identification a homomorphism on all "
                     "length-2 pairs",
                     true, false, true, just_one, sp_iso_trial});
        v.push_back({"dims", "necklace enumeration per length; quotient rank with --oracle",
                     false, false, false, dims_planned, dims_trial});
        v.push_back({"tangency", "the fields are tangent to the commutator fibers", false, true,
                     false, by_trials, tangency_trial});
        v.push_back({"vf-hom", "class bracket matches the vector-field bracket", false, true,
                     false, by_trials, vf_hom_trial});
        v.push_back({"so-sp-closure",
                     "(-1)-eigenvectors evaluate into so/sp at so/sp arguments", true, false,
                     false, by_trials, closure_trial});
        v.push_back({"proposition",
                     "(+1)-classes restrict to fields on so/sp with tangency intact", true, true,
                     false, by_trials, proposition_trial});
        return v;
    }();
    return suites;
}

} // namespace colie
