#include "braid3/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace braid3 {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_single_generator_power(const FreeWord& w, Gen g) {
    return w.size() == 1 && w.blocks().front().gen == g;
}

bool all_terms_same_unit_power(const FreeWord& w) {
    if (w.empty()) return true; // vacuous: no term breaks the condition
    const long long e0 = w.blocks().front().exp;
    if (e0 != 1 && e0 != -1) return false;
    return std::all_of(w.blocks().begin(), w.blocks().end(),
                       [&](const Block& b) { return b.exp == e0; });
}

void fill_interval(BoundsReport& rep, double L) {
    rep.L = L;
    rep.lambda_lower = L / (2 * kPi);
    rep.lambda_upper = 300 * L;
    if (L > 0) {
        rep.module_lower = 1.0 / rep.lambda_upper;
        rep.module_upper = 1.0 / rep.lambda_lower;
    }
}

void mark_exceptional(BoundsReport& rep, std::string tag) {
    rep.exceptional = std::move(tag);
    rep.lambda_lower = 0;
    rep.lambda_upper = 0;
    rep.module_lower.reset(); // infinite conformal module
    rep.module_upper.reset();
}

double word_L(const FreeWord& w) {
    return w.empty() ? 0.0 : script_L(syllable_decompose(w));
}

} // namespace

std::string to_string(Boundary bc) {
    switch (bc) {
    case Boundary::TrTr: return "tr";
    case Boundary::PbPb: return "pb";
    case Boundary::TrPb: return "tr_pb";
    case Boundary::PbTr: return "pb_tr";
    case Boundary::Conjugacy: return "conjugacy";
    }
    return "?";
}

std::optional<Boundary> boundary_from_string(const std::string& s) {
    if (s == "tr" || s == "tr_tr") return Boundary::TrTr;
    if (s == "pb" || s == "pb_pb") return Boundary::PbPb;
    if (s == "tr_pb" || s == "mixed") return Boundary::TrPb;
    if (s == "pb_tr") return Boundary::PbTr;
    if (s == "conjugacy") return Boundary::Conjugacy;
    return std::nullopt;
}

BoundsReport word_bounds(const FreeWord& w, Boundary bc) {
    if (bc != Boundary::TrTr && bc != Boundary::PbPb)
        throw UnsupportedCombinationError("word_bounds expects tr or pb boundary");
    BoundsReport rep;
    rep.word_text = render(w);
    rep.boundary = bc;
    rep.nt = nt_class(psl2_image(w));
    rep.word_is_singleton =
        w.size() == 1 && std::llabs(w.blocks().front().exp) == 1;
    fill_interval(rep, word_L(w));
    if (bc == Boundary::TrTr) {
        if (w.empty() || is_single_generator_power(w, Gen::A1))
            mark_exceptional(rep, "w = a1^n");
        else if (is_single_generator_power(w, Gen::A2))
            mark_exceptional(rep, "w = a2^n");
    } else {
        if (all_terms_same_unit_power(w))
            mark_exceptional(rep, "all terms of equal power +-1");
    }
    return rep;
}

BoundsReport bounds_mixed(const FreeWord& w, Boundary bc) {
    if (bc != Boundary::TrPb && bc != Boundary::PbTr)
        throw UnsupportedCombinationError("bounds_mixed expects mixed boundary");
    BoundsReport rep;
    rep.word_text = render(w);
    rep.boundary = bc;
    rep.nt = nt_class(psl2_image(w));
    rep.word_is_singleton =
        w.size() == 1 && std::llabs(w.blocks().front().exp) == 1;
    fill_interval(rep, word_L(w));
    return rep;
}

BoundsReport class_bounds(const CyclicFreeWord& cw) {
    BoundsReport rep;
    rep.word_text = render(cw);
    rep.boundary = Boundary::Conjugacy;
    rep.nt = nt_class(cw);
    rep.entropy_exact = entropy_exact(cw);

    if (cw.empty()) {
        mark_exceptional(rep, "identity class");
        rep.entropy_lower = 0;
        rep.entropy_upper = 0;
        return rep;
    }
    const CyclicSyllables cs = cyclic_syllable_decompose(cw);
    if (const auto* exc = std::get_if<CyclicExceptional>(&cs)) {
        switch (exc->pattern) {
        case CyclicExceptional::Pattern::PowerA1: mark_exceptional(rep, "w = a1^n"); break;
        case CyclicExceptional::Pattern::PowerA2: mark_exceptional(rep, "w = a2^n"); break;
        case CyclicExceptional::Pattern::Alternating:
            mark_exceptional(rep, "w = (a1 a2)^n");
            break;
        }
        rep.entropy_lower = 0;
        rep.entropy_upper = 0;
        return rep;
    }
    fill_interval(rep, script_L(std::get<SyllableDecomposition>(cs)));
    // h = (pi/2) Lambda turns [L/(2pi), 300 L] into [L/4, 150 pi L]
    rep.entropy_lower = rep.L / 4;
    rep.entropy_upper = 150 * kPi * rep.L;
    return rep;
}

BoundsReport braid_bounds(const BraidWord& b) {
    BoundsReport rep;
    rep.word_text = render(b);
    rep.boundary = Boundary::TrTr;
    rep.nt = nt_class(b);

    const NormalForm nf = normalize(b);
    if (std::holds_alternative<DeltaPower>(nf)) {
        mark_exceptional(rep, "b = Delta^l");
        return rep;
    }
    const Split& s = std::get<Split>(nf);
    if (s.b1.empty()) {
        mark_exceptional(rep, "b = sigma_j^k Delta^l");
        return rep;
    }
    const FreeWord w = theta(nf);
    rep.word_is_singleton =
        w.size() == 1 && std::llabs(w.blocks().front().exp) == 1;
    fill_interval(rep, word_L(w));
    return rep;
}

Interval syllable_block_bounds(SyllableKind kind, long long degree, Boundary bc) {
    const double d = static_cast<double>(degree);
    const bool mixed = bc == Boundary::TrPb || bc == Boundary::PbTr;
    if (mixed) // statements 2 and 3: any syllable kind
        return {std::log(4 * d - 1) / kPi, std::log(4 * d + 1) / kPi};
    if (kind == SyllableKind::Form1 && bc == Boundary::PbPb)
        return {2 / kPi * std::log(2 * d - 1), 2 / kPi * std::log(2 * d + 1)};
    if (kind == SyllableKind::Form2 && bc == Boundary::TrTr)
        return {2 / kPi * std::log(2 * d - 1), 2 / kPi * std::log(2 * d + 1)};
    throw UnsupportedCombinationError(
        "syllable_block_bounds: no statement covers this kind/boundary pair");
}

Verdict consistency_check(const BoundsReport& rep) {
    if (!rep.entropy_exact) return Verdict::Fail;
    const double h = *rep.entropy_exact;
    if (rep.exceptional) {
        const bool trace_ok = rep.nt != NTClass::PseudoAnosov;
        return (h == 0.0 && trace_ok) ? Verdict::Pass : Verdict::Fail;
    }
    if (rep.nt != NTClass::PseudoAnosov) return Verdict::Fail;
    if (!rep.entropy_lower || !rep.entropy_upper) return Verdict::Fail;
    return (*rep.entropy_lower <= h && h <= *rep.entropy_upper) ? Verdict::Pass
                                                                : Verdict::Fail;
}

} // namespace braid3
