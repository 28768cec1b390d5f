#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "braid3/errors.hpp"

namespace braid3 {

/// Generator index for the free group on a1 = sigma1^2, a2 = sigma2^2.
enum class Gen : int { A1 = 1, A2 = 2 };

inline Gen other(Gen g) { return g == Gen::A1 ? Gen::A2 : Gen::A1; }

/// Letters of raw braid input: sigma1, sigma2 and the Garside half-twist.
enum class BraidSym : int { Sigma1 = 1, Sigma2 = 2, Delta = 3 };

struct BraidLetter {
    BraidSym sym;
    long long exp; // nonzero
    bool operator==(const BraidLetter&) const = default;
};

/// Unreduced braid word; the empty word is the identity braid.
struct BraidWord {
    std::vector<BraidLetter> letters;
    bool empty() const { return letters.empty(); }
    bool operator==(const BraidWord&) const = default;
};

struct Block {
    Gen gen;
    long long exp; // nonzero
    auto operator<=>(const Block&) const = default;
};

/// Freely reduced word in a1, a2: adjacent blocks carry distinct generators.
class FreeWord {
public:
    FreeWord() = default;

    const std::vector<Block>& blocks() const { return blocks_; }
    bool empty() const { return blocks_.empty(); }
    std::size_t size() const { return blocks_.size(); }
    long long total_degree() const;

    bool operator==(const FreeWord&) const = default;

    friend FreeWord free_reduce(std::vector<Block> raw);

private:
    std::vector<Block> blocks_; // invariant: reduced
};

/// Free reduction: merge equal-generator neighbours, drop zero exponents.
FreeWord free_reduce(std::vector<Block> raw);

FreeWord concat(const FreeWord& u, const FreeWord& v);
FreeWord inverse_word(const FreeWord& w);
/// Swap a1 <-> a2 in every block (conjugation by the half-twist).
FreeWord swap_generators(const FreeWord& w);

/// Cyclic word: cyclically reduced and stored in its lexicographically
/// minimal rotation, so equality of values is equality of rotation classes.
class CyclicFreeWord {
public:
    CyclicFreeWord() = default;
    explicit CyclicFreeWord(const FreeWord& w);

    const std::vector<Block>& blocks() const { return blocks_; }
    bool empty() const { return blocks_.empty(); }
    long long total_degree() const;
    bool cyclically_reduced() const { return true; }

    /// The canonical rotation read as a linear word.
    FreeWord linear() const;

    bool operator==(const CyclicFreeWord&) const = default;

private:
    std::vector<Block> blocks_;
};

inline CyclicFreeWord cyclic_reduce(const FreeWord& w) { return CyclicFreeWord(w); }

enum class SyllableKind { Form1, Form2, Singleton };

/// A syllable covers a contiguous range of terms (blocks) of the word.
struct Syllable {
    SyllableKind kind;
    std::size_t first_block;
    std::size_t block_count;
    long long degree;
    bool operator==(const Syllable&) const = default;
};

struct SyllableDecomposition {
    std::vector<Syllable> syllables;
    FreeWord source;
};

/// Three-rule decomposition: |n|>=2 blocks first, then maximal runs of
/// at least two unit terms of equal sign, the rest are singletons.
SyllableDecomposition syllable_decompose(const FreeWord& w);

/// The exceptional cyclic patterns for which the periodic word has no
/// syllable boundary.
struct CyclicExceptional {
    enum class Pattern { PowerA1, PowerA2, Alternating } pattern;
    bool operator==(const CyclicExceptional&) const = default;
};

using CyclicSyllables = std::variant<SyllableDecomposition, CyclicExceptional>;

/// Decompose one period of the bi-infinite word ...www... cut at a syllable
/// boundary; returns the exceptional tag when no boundary exists.
CyclicSyllables cyclic_syllable_decompose(const CyclicFreeWord& cw);

/// L(w) = sum over syllables of ln(4 d_j - 1); 0 for the identity word.
double script_L(const SyllableDecomposition& dec);

// --- Parsing and rendering -------------------------------------------------
//
// Grammar: whitespace-separated tokens `s1`, `s2`, `d` (braid alphabet) or
// `a1`, `a2` (pure alphabet), each with an optional `^<signed-int>` suffix.
// `^0` is rejected.

BraidWord parse_braid(const std::string& text);
FreeWord parse_pure_word(const std::string& text);

std::string render(const BraidWord& w);
std::string render(const FreeWord& w);
std::string render(const CyclicFreeWord& w);

} // namespace braid3
