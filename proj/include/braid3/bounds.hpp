#pragma once

#include <optional>
#include <string>

#include "braid3/normal_form.hpp"
#include "braid3/oracles.hpp"
#include "braid3/words.hpp"

namespace braid3 {

enum class Boundary { TrTr, PbPb, TrPb, PbTr, Conjugacy };

std::string to_string(Boundary bc);
std::optional<Boundary> boundary_from_string(const std::string& s);

struct Interval {
    double lo = 0;
    double hi = 0;
};

/// Certified two-sided bounds for one word / braid / conjugacy class.
/// Exceptional cases carry the zero interval and a tag naming the family.
struct BoundsReport {
    std::string word_text;
    Boundary boundary = Boundary::TrTr;
    double L = 0;
    double lambda_lower = 0;
    double lambda_upper = 0;
    // reciprocal interval; empty means the conformal module is infinite
    std::optional<double> module_lower;
    std::optional<double> module_upper;
    std::optional<double> entropy_lower;  // conjugacy only
    std::optional<double> entropy_upper;  // conjugacy only
    std::optional<double> entropy_exact;  // conjugacy only
    std::optional<std::string> exceptional;
    NTClass nt = NTClass::CentralPower;
    bool word_is_singleton = false; // hypothesis flag for the two-sided sum bound
};

/// Interval [L/(2pi), 300 L] with the tr / pb exceptional families.
BoundsReport word_bounds(const FreeWord& w, Boundary bc);

/// Mixed boundary values: the same interval, no exceptional cases.
BoundsReport bounds_mixed(const FreeWord& w, Boundary bc);

/// Conjugacy classes: Lambda and entropy intervals plus the exact entropy
/// from the matrix oracle.
BoundsReport class_bounds(const CyclicFreeWord& cw);

/// Arbitrary 3-braids through the normal form and theta.
BoundsReport braid_bounds(const BraidWord& b);

/// Per-syllable building-block bounds (statements 1-4).
Interval syllable_block_bounds(SyllableKind kind, long long degree, Boundary bc);

enum class Verdict { Pass, Fail };

/// Sandwich test of a conjugacy-class report against the exact-entropy oracle.
Verdict consistency_check(const BoundsReport& rep);

} // namespace braid3
