#include "braid3/words.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace braid3 {

long long FreeWord::total_degree() const {
    long long d = 0;
    for (const auto& b : blocks_) d += std::llabs(b.exp);
    return d;
}

FreeWord free_reduce(std::vector<Block> raw) {
    FreeWord w;
    for (const auto& b : raw) {
        if (b.exp == 0) continue;
        if (!w.blocks_.empty() && w.blocks_.back().gen == b.gen) {
            w.blocks_.back().exp += b.exp;
            if (w.blocks_.back().exp == 0) w.blocks_.pop_back();
        } else {
            w.blocks_.push_back(b);
        }
    }
    return w;
}

FreeWord concat(const FreeWord& u, const FreeWord& v) {
    std::vector<Block> raw = u.blocks();
    raw.insert(raw.end(), v.blocks().begin(), v.blocks().end());
    return free_reduce(std::move(raw));
}

FreeWord inverse_word(const FreeWord& w) {
    std::vector<Block> raw;
    raw.reserve(w.size());
    for (auto it = w.blocks().rbegin(); it != w.blocks().rend(); ++it)
        raw.push_back({it->gen, -it->exp});
    return free_reduce(std::move(raw));
}

FreeWord swap_generators(const FreeWord& w) {
    std::vector<Block> raw = w.blocks();
    for (auto& b : raw) b.gen = other(b.gen);
    return free_reduce(std::move(raw));
}

namespace {

bool block_less(const Block& x, const Block& y) {
    if (x.gen != y.gen) return static_cast<int>(x.gen) < static_cast<int>(y.gen);
    return x.exp < y.exp;
}

std::vector<Block> min_rotation(std::vector<Block> v) {
    if (v.size() <= 1) return v;
    std::vector<Block> best = v;
    for (std::size_t r = 1; r < v.size(); ++r) {
        std::rotate(v.begin(), v.begin() + 1, v.end());
        if (std::lexicographical_compare(v.begin(), v.end(), best.begin(), best.end(),
                                         block_less))
            best = v;
    }
    return best;
}

} // namespace

CyclicFreeWord::CyclicFreeWord(const FreeWord& w) {
    std::vector<Block> v = w.blocks();
    // Merge across the wrap-around until the result is cyclically reduced.
    while (v.size() >= 2 && v.front().gen == v.back().gen) {
        v.front().exp += v.back().exp;
        v.pop_back();
        if (v.front().exp == 0) v.erase(v.begin());
        // a full cancellation can expose a new same-generator wrap pair
    }
    blocks_ = min_rotation(std::move(v));
}

long long CyclicFreeWord::total_degree() const {
    long long d = 0;
    for (const auto& b : blocks_) d += std::llabs(b.exp);
    return d;
}

FreeWord CyclicFreeWord::linear() const { return free_reduce(blocks_); }

namespace {

bool is_unit(const Block& b) { return b.exp == 1 || b.exp == -1; }

SyllableDecomposition decompose_blocks(const std::vector<Block>& blocks,
                                       const FreeWord& source) {
    SyllableDecomposition dec;
    dec.source = source;
    std::size_t i = 0;
    const std::size_t n = blocks.size();
    while (i < n) {
        if (!is_unit(blocks[i])) {
            dec.syllables.push_back(
                {SyllableKind::Form1, i, 1, std::llabs(blocks[i].exp)});
            ++i;
            continue;
        }
        // maximal run of unit terms of equal sign
        std::size_t j = i;
        while (j + 1 < n && is_unit(blocks[j + 1]) && blocks[j + 1].exp == blocks[i].exp)
            ++j;
        const std::size_t count = j - i + 1;
        if (count >= 2)
            dec.syllables.push_back(
                {SyllableKind::Form2, i, count, static_cast<long long>(count)});
        else
            dec.syllables.push_back({SyllableKind::Singleton, i, 1, 1});
        i = j + 1;
    }
    return dec;
}

} // namespace

SyllableDecomposition syllable_decompose(const FreeWord& w) {
    if (w.empty()) throw EmptyWordError("syllable_decompose: empty word");
    return decompose_blocks(w.blocks(), w);
}

CyclicSyllables cyclic_syllable_decompose(const CyclicFreeWord& cw) {
    const auto& v = cw.blocks();
    if (v.empty()) throw EmptyWordError("cyclic_syllable_decompose: empty word");
    if (v.size() == 1) {
        return CyclicExceptional{v[0].gen == Gen::A1
                                     ? CyclicExceptional::Pattern::PowerA1
                                     : CyclicExceptional::Pattern::PowerA2};
    }
    const bool all_same_unit =
        std::all_of(v.begin(), v.end(),
                    [&](const Block& b) { return b.exp == v.front().exp; }) &&
        is_unit(v.front());
    if (all_same_unit) return CyclicExceptional{CyclicExceptional::Pattern::Alternating};

    // A cut between blocks r-1 and r is a syllable boundary of the periodic
    // word unless both are unit terms of the same sign (one Form2 run).
    std::size_t cut = v.size();
    for (std::size_t r = 0; r < v.size(); ++r) {
        const Block& prev = v[(r + v.size() - 1) % v.size()];
        const Block& here = v[r];
        if (is_unit(prev) && is_unit(here) && prev.exp == here.exp) continue;
        cut = r;
        break;
    }
    assert(cut < v.size());
    std::vector<Block> rotated(v.begin() + static_cast<std::ptrdiff_t>(cut), v.end());
    rotated.insert(rotated.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(cut));
    FreeWord lin = free_reduce(rotated);
    return decompose_blocks(lin.blocks(), lin);
}

double script_L(const SyllableDecomposition& dec) {
    double sum = 0;
    for (const auto& s : dec.syllables)
        sum += std::log(4.0 * static_cast<double>(s.degree) - 1.0);
    return sum;
}

// --- Parsing ----------------------------------------------------------------

namespace {

struct Token {
    std::string text;
    std::size_t offset;
};

std::vector<Token> split_tokens(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        out.push_back({text.substr(i, j - i), i});
        i = j;
    }
    return out;
}

long long parse_exponent(const Token& tok, std::size_t caret) {
    const std::string digits = tok.text.substr(caret + 1);
    long long e = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), e);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw SyntaxError("bad exponent in token '" + tok.text + "'",
                          tok.offset + caret + 1);
    if (e == 0)
        throw SyntaxError("zero exponent in token '" + tok.text + "'",
                          tok.offset + caret + 1);
    return e;
}

} // namespace

BraidWord parse_braid(const std::string& text) {
    BraidWord w;
    for (const Token& tok : split_tokens(text)) {
        const std::size_t caret = tok.text.find('^');
        const std::string head = tok.text.substr(0, caret);
        BraidSym sym;
        if (head == "s1")
            sym = BraidSym::Sigma1;
        else if (head == "s2")
            sym = BraidSym::Sigma2;
        else if (head == "d")
            sym = BraidSym::Delta;
        else
            throw SyntaxError("unknown token '" + tok.text + "'", tok.offset);
        const long long e = caret == std::string::npos ? 1 : parse_exponent(tok, caret);
        w.letters.push_back({sym, e});
    }
    return w;
}

FreeWord parse_pure_word(const std::string& text) {
    std::vector<Block> raw;
    for (const Token& tok : split_tokens(text)) {
        const std::size_t caret = tok.text.find('^');
        const std::string head = tok.text.substr(0, caret);
        Gen g;
        if (head == "a1")
            g = Gen::A1;
        else if (head == "a2")
            g = Gen::A2;
        else
            throw SyntaxError("unknown token '" + tok.text + "'", tok.offset);
        const long long e = caret == std::string::npos ? 1 : parse_exponent(tok, caret);
        raw.push_back({g, e});
    }
    return free_reduce(std::move(raw));
}

namespace {

void append_token(std::ostringstream& os, bool& first, const std::string& head,
                  long long exp) {
    if (!first) os << ' ';
    first = false;
    os << head;
    if (exp != 1) os << '^' << exp;
}

} // namespace

std::string render(const BraidWord& w) {
    std::ostringstream os;
    bool first = true;
    for (const auto& l : w.letters) {
        const char* head = l.sym == BraidSym::Sigma1   ? "s1"
                           : l.sym == BraidSym::Sigma2 ? "s2"
                                                       : "d";
        append_token(os, first, head, l.exp);
    }
    return os.str();
}

std::string render(const FreeWord& w) {
    std::ostringstream os;
    bool first = true;
    for (const auto& b : w.blocks())
        append_token(os, first, b.gen == Gen::A1 ? "a1" : "a2", b.exp);
    return os.str();
}

std::string render(const CyclicFreeWord& w) { return render(w.linear()); }

} // namespace braid3
