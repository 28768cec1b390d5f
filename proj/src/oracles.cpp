#include "braid3/oracles.hpp"

#include <cmath>
#include <cstdlib>

namespace braid3 {

IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

IntMat2 inverse(const IntMat2& m) { return {m.d, -m.b, -m.c, m.a}; }

bool equal_up_to_sign(const IntMat2& x, const IntMat2& y) {
    if (x == y) return true;
    return x.a == -y.a && x.b == -y.b && x.c == -y.c && x.d == -y.d;
}

namespace {

const IntMat2 kS1{1, 1, 0, 1};
const IntMat2 kS2{1, 0, -1, 1};
const IntMat2 kDelta = kS1 * kS2 * kS1; // [[0,1],[-1,0]]

IntMat2 int_pow(IntMat2 base, long long e) {
    if (e < 0) {
        base = inverse(base);
        e = -e;
    }
    IntMat2 acc;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

} // namespace

IntMat2 psl2_image(const BraidWord& w) {
    IntMat2 m;
    for (const auto& l : w.letters) {
        const IntMat2& g = l.sym == BraidSym::Sigma1   ? kS1
                           : l.sym == BraidSym::Sigma2 ? kS2
                                                       : kDelta;
        m = m * int_pow(g, l.exp);
    }
    return m;
}

IntMat2 psl2_image(const FreeWord& w) {
    IntMat2 m;
    const IntMat2 a1 = kS1 * kS1;
    const IntMat2 a2 = kS2 * kS2;
    for (const auto& b : w.blocks())
        m = m * int_pow(b.gen == Gen::A1 ? a1 : a2, b.exp);
    return m;
}

IntMat2 psl2_image(const CyclicFreeWord& w) { return psl2_image(w.linear()); }

// --- Laurent polynomials -----------------------------------------------------

void LaurentPoly::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::constant(long long c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(long long exp, long long coeff) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exp] = coeff;
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.coeffs_[e] += c;
    r.prune();
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.coeffs_[e] -= c;
    r.prune();
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.coeffs_[e1 + e2] += c1 * c2;
    r.prune();
    return r;
}

LaurentMat2 operator*(const LaurentMat2& x, const LaurentMat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

namespace {

LaurentMat2 laurent_identity() {
    return {LaurentPoly::constant(1), LaurentPoly(), LaurentPoly(),
            LaurentPoly::constant(1)};
}

// Generator images and their explicit inverses.
const LaurentMat2 kB1{LaurentPoly::monomial(1, -1), LaurentPoly::constant(1),
                      LaurentPoly(), LaurentPoly::constant(1)};
const LaurentMat2 kB1i{LaurentPoly::monomial(-1, -1), LaurentPoly::monomial(-1, 1),
                       LaurentPoly(), LaurentPoly::constant(1)};
const LaurentMat2 kB2{LaurentPoly::constant(1), LaurentPoly(),
                      LaurentPoly::monomial(1, 1), LaurentPoly::monomial(1, -1)};
const LaurentMat2 kB2i{LaurentPoly::constant(1), LaurentPoly(),
                       LaurentPoly::constant(1), LaurentPoly::monomial(-1, -1)};

LaurentMat2 laurent_pow(const LaurentMat2& g, const LaurentMat2& gi, long long e) {
    LaurentMat2 acc = laurent_identity();
    const LaurentMat2& base = e >= 0 ? g : gi;
    for (long long i = 0; i < std::llabs(e); ++i) acc = acc * base;
    return acc;
}

} // namespace

LaurentMat2 burau_image(const BraidWord& w) {
    const LaurentMat2 delta = kB1 * kB2 * kB1;
    const LaurentMat2 deltai = kB1i * kB2i * kB1i;
    LaurentMat2 m = laurent_identity();
    for (const auto& l : w.letters) {
        switch (l.sym) {
        case BraidSym::Sigma1: m = m * laurent_pow(kB1, kB1i, l.exp); break;
        case BraidSym::Sigma2: m = m * laurent_pow(kB2, kB2i, l.exp); break;
        case BraidSym::Delta: m = m * laurent_pow(delta, deltai, l.exp); break;
        }
    }
    return m;
}

bool braids_equal(const BraidWord& b1, const BraidWord& b2) {
    return burau_image(b1) == burau_image(b2);
}

NTClass nt_class(const IntMat2& image) {
    if (image.is_identity() || image.is_minus_identity()) return NTClass::CentralPower;
    const BigInt t = abs(image.trace());
    if (t > 2) return NTClass::PseudoAnosov;
    if (t == 2) return NTClass::Reducible;
    return NTClass::Periodic;
}

NTClass nt_class(const BraidWord& w) { return nt_class(psl2_image(w)); }
NTClass nt_class(const CyclicFreeWord& w) { return nt_class(psl2_image(w)); }

double entropy_exact(const IntMat2& image) {
    const BigInt t = abs(image.trace());
    if (t <= 2) return 0.0;
    const double td = t.convert_to<double>();
    // log of the larger root of x^2 - t x + 1
    return std::log((td + std::sqrt(td * td - 4.0)) / 2.0);
}

double entropy_exact(const BraidWord& w) { return entropy_exact(psl2_image(w)); }
double entropy_exact(const CyclicFreeWord& w) { return entropy_exact(psl2_image(w)); }

} // namespace braid3
