#include "colie/parse.hpp"

#include <cctype>
#include <map>

namespace colie {

namespace {

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    if (lead) *lead = b;
    return s.substr(b, e - b);
}

Word parse_word_at(std::string_view text, const SpacePtr& space, std::size_t base) {
    if (text.empty()) throw ParseError("word: empty input", base);
    if (text == "()") return Word();
    std::vector<Letter> letters;
    if (space->single_char_names()) {
        std::map<char, Letter> by_char;
        for (Letter i = 0; i < space->dim(); ++i) by_char.emplace(space->name(i)[0], i);
        for (std::size_t k = 0; k < text.size(); ++k) {
            auto it = by_char.find(text[k]);
            if (it == by_char.end())
                throw ParseError(std::string("word: unknown letter '") + text[k] + "'", base + k);
            letters.push_back(it->second);
        }
    } else {
        std::size_t k = 0;
        for (;;) {
            std::size_t start = k;
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
            if (k == start) throw ParseError("word: expected basis index", base + k);
            unsigned long idx = 0;
            try {
                idx = std::stoul(std::string(text.substr(start, k - start)));
            } catch (const std::out_of_range&) {
                throw ParseError("word: basis index out of range", base + start);
            }
            if (idx < 1 || idx > space->dim())
                throw ParseError("word: basis index out of range: " + std::to_string(idx),
                                 base + start);
            letters.push_back(static_cast<Letter>(idx - 1));
            if (k == text.size()) break;
            if (text[k] != '.') throw ParseError("word: expected '.'", base + k);
            ++k;
        }
    }
    return Word(std::move(letters));
}

Scalar parse_scalar_at(std::string_view text, const FieldSpec& f, std::size_t base) {
    try {
        return parse_scalar(text, f);
    } catch (const ParseError& e) {
        throw ParseError("element coefficient: invalid scalar", base + e.offset());
    }
}

} // namespace

Word parse_word(std::string_view text, const SpacePtr& space) {
    return parse_word_at(text, space, 0);
}

CoinvElem parse_element(std::string_view text, const SpacePtr& space) {
    CoinvElem out(space);
    const FieldSpec& f = space->field();
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw ParseError("element: empty input", pos);

    bool first = true;
    while (pos < text.size()) {
        bool negative = false;
        if (text[pos] == '+' || text[pos] == '-') {
            negative = text[pos] == '-';
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError("element: expected '+' or '-'", pos);
        }
        std::size_t term_start = pos;
        while (pos < text.size() && text[pos] != '+' && text[pos] != '-') ++pos;
        std::size_t lead = 0;
        std::string_view term = trim(text.substr(term_start, pos - term_start), &lead);
        if (term.empty()) throw ParseError("element: empty term", term_start);
        const std::size_t term_base = term_start + lead;

        Scalar coeff = Scalar::one(f);
        std::string_view word_text = term;
        std::size_t word_base = term_base;
        bool had_coeff = false;
        if (auto star = term.find('*'); star != std::string_view::npos) {
            std::string_view coeff_text = trim(term.substr(0, star));
            if (coeff_text.empty()) throw ParseError("element: empty coefficient", term_base);
            coeff = parse_scalar_at(coeff_text, f, term_base);
            had_coeff = true;
            std::size_t wlead = 0;
            word_text = trim(term.substr(star + 1), &wlead);
            word_base = term_base + star + 1 + wlead;
            if (word_text.empty()) throw ParseError("element: missing word after '*'", word_base);
        }
        if (negative) coeff = -coeff;

        if (word_text == "0" && !had_coeff) {
            // Zero term; contributes nothing (the zero element spells "0").
        } else {
            Word w = parse_word_at(word_text, space, word_base);
            if (w.min_dim() > space->dim())
                throw ParseError("word uses letters outside the space basis", word_base);
            out.add_term(Necklace(w), coeff);
        }
        skip_ws();
        first = false;
    }
    return out;
}

SquareMat<Scalar> parse_matrix(std::string_view text, const FieldSpec& f) {
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> row;
    auto flush_entry = [&](std::size_t start, std::size_t end) {
        std::size_t lead = 0;
        std::string_view entry = trim(text.substr(start, end - start), &lead);
        if (entry.empty()) throw ParseError("matrix: empty entry", start);
        try {
            row.push_back(parse_scalar(entry, f));
        } catch (const ParseError& e) {
            throw ParseError("matrix: invalid scalar", start + lead + e.offset());
        }
    };
    std::size_t entry_start = 0;
    for (std::size_t pos = 0; pos <= text.size(); ++pos) {
        if (pos == text.size() || text[pos] == ';' || text[pos] == ',') {
            flush_entry(entry_start, pos);
            entry_start = pos + 1;
            if (pos == text.size() || text[pos] == ';') {
                rows.push_back(std::move(row));
                row.clear();
            }
        }
    }
    const std::size_t n = rows.size();
    if (n == 0) throw ParseError("matrix: empty input", 0);
    for (const auto& r : rows)
        if (r.size() != n)
            throw ParseError("matrix: must be square, got row of length " +
                                 std::to_string(r.size()) + " in a " + std::to_string(n) +
                                 "-row matrix",
                             0);
    SquareMat<Scalar> m = scalar_mat_zero(n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    return m;
}

std::string word_str(const Word& w, const SpacePtr& space) {
    if (w.empty()) return "()";
    std::string out;
    if (space->single_char_names()) {
        for (Letter x : w.letters()) out += space->name(x);
    } else {
        for (std::size_t k = 0; k < w.length(); ++k) {
            if (k) out += ".";
            out += std::to_string(w[k] + 1);
        }
    }
    return out;
}

namespace {

// Shared term-list printer for classes and tensors.
template <class Terms>
std::string terms_str(const Terms& terms, const SpacePtr& space) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms) {
        mpq_class v = c.value();
        bool neg = sgn(v) < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        mpq_class mag = neg ? mpq_class(-v) : v;
        std::string word_part;
        if constexpr (std::is_same_v<std::decay_t<decltype(key)>, Necklace>) {
            word_part = word_str(key.rep(), space);
        } else {
            word_part = word_str(key, space);
        }
        if (mag == 1)
            out += word_part;
        else
            out += mag.get_str() + "*" + word_part;
        first = false;
    }
    return out;
}

} // namespace

std::string element_str(const CoinvElem& a) { return terms_str(a.terms(), a.space()); }

std::string tensor_str(const TensorElem& t) { return terms_str(t.terms(), t.space()); }

} // namespace colie
