#include "braid3/normal_form.hpp"

#include <cassert>
#include <cstdlib>
#include <optional>

namespace braid3 {

PermutationS3 compose(const PermutationS3& p, const PermutationS3& q) {
    PermutationS3 r;
    for (int i = 0; i < 3; ++i) r.image[i] = q.image[p.image[i]];
    return r;
}

PermutationS3 permutation(const BraidWord& w) {
    PermutationS3 p;
    for (const auto& l : w.letters) {
        if (l.exp % 2 == 0) continue; // transpositions are involutive
        const PermutationS3 g = l.sym == BraidSym::Sigma1   ? PermutationS3::t12()
                                : l.sym == BraidSym::Sigma2 ? PermutationS3::t23()
                                                            : PermutationS3::t13();
        p = compose(p, g);
    }
    return p;
}

long long q(long long k) {
    if (k == 0) throw ZeroInputError("q(0) is undefined");
    if (k % 2 == 0) return k;
    return k - (k > 0 ? 1 : -1);
}

namespace {

// Exponent sum of the underlying sigma-word; Delta counts three letters.
long long exponent_sum(const BraidWord& w) {
    long long e = 0;
    for (const auto& l : w.letters) e += l.exp * (l.sym == BraidSym::Delta ? 3 : 1);
    return e;
}

// Decode +-M as a reduced word in A = psl2(a1), B = psl2(a2).
// The images generate a free group (Sanov); peeling the dominant row keeps
// |a| odd and |c| even, so each division step has a unique admissible
// quotient and strictly shrinks max(|a|,|c|).
FreeWord sanov_decode(IntMat2 m) {
    std::vector<Block> out;
    auto emit = [&out](Gen g, long long e) {
        if (e != 0) out.push_back({g, e});
    };
    while (!(m.is_identity() || m.is_minus_identity())) {
        if (m.c == 0) {
            const BigInt bb = m.a == 1 ? m.b : -m.b;
            if (bb % 2 != 0 || bb == 0)
                throw NewtonDivergenceError("sanov_decode: not in the Sanov subgroup");
            emit(Gen::A1, (bb / 2).convert_to<long long>());
            break;
        }
        if (m.b == 0) {
            const BigInt cc = m.a == 1 ? m.c : -m.c;
            if (cc % 2 != 0 || cc == 0)
                throw NewtonDivergenceError("sanov_decode: not in the Sanov subgroup");
            emit(Gen::A2, (-cc / 2).convert_to<long long>());
            break;
        }
        if (abs(m.a) > abs(m.c)) {
            // peel a1^x from the left: pick x with |a - 2xc| < |c|
            BigInt x = m.a / (2 * m.c); // truncates toward zero
            while (abs(m.a - 2 * x * m.c) > abs(m.c))
                x += (m.a - 2 * x * m.c) * m.c > 0 ? 1 : -1;
            if (x == 0 || abs(m.a - 2 * x * m.c) >= abs(m.c))
                throw NewtonDivergenceError("sanov_decode: peel failure");
            emit(Gen::A1, x.convert_to<long long>());
            m.a -= 2 * x * m.c;
            m.b -= 2 * x * m.d;
        } else {
            BigInt y = -m.c / (2 * m.a);
            while (abs(m.c + 2 * y * m.a) > abs(m.a))
                y += (m.c + 2 * y * m.a) * m.a < 0 ? 1 : -1;
            if (y == 0 || abs(m.c + 2 * y * m.a) >= abs(m.a))
                throw NewtonDivergenceError("sanov_decode: peel failure");
            emit(Gen::A2, y.convert_to<long long>());
            m.c += 2 * y * m.a;
            m.d += 2 * y * m.b;
        }
    }
    return free_reduce(std::move(out));
}

BraidWord inverse_braid(const BraidWord& w) {
    BraidWord r;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back({it->sym, -it->exp});
    return r;
}

BraidWord concat_braid(BraidWord u, const BraidWord& v) {
    u.letters.insert(u.letters.end(), v.letters.begin(), v.letters.end());
    return u;
}

// Coset prefix with tau3(prefix) = p.
BraidWord coset_prefix(const PermutationS3& p) {
    BraidWord u;
    if (p == PermutationS3::identity()) return u;
    if (p == PermutationS3::t12()) {
        u.letters = {{BraidSym::Sigma1, 1}};
    } else if (p == PermutationS3::t23()) {
        u.letters = {{BraidSym::Sigma2, 1}};
    } else if (p == PermutationS3::t13()) {
        u.letters = {{BraidSym::Delta, 1}};
    } else if (p == compose(PermutationS3::t12(), PermutationS3::t13())) {
        u.letters = {{BraidSym::Sigma1, 1}, {BraidSym::Delta, 1}};
    } else {
        u.letters = {{BraidSym::Sigma2, 1}, {BraidSym::Delta, 1}};
    }
    return u;
}

NormalForm build_normal_form(const BraidWord& b) {
    const PermutationS3 p = permutation(b);
    const BraidWord u = coset_prefix(p);
    const BraidWord pure = concat_braid(inverse_braid(u), b);

    const FreeWord v = sanov_decode(psl2_image(pure));

    long long signed_deg = 0;
    for (const auto& blk : v.blocks()) signed_deg += blk.exp;
    const long long rem = exponent_sum(pure) - 2 * signed_deg;
    assert(rem % 6 == 0);
    const long long m = rem / 6;

    // b = u . v . Delta^{2m}; fold the prefix into Lemma-1' shape.
    const bool prefix_delta = u.letters.size() >= 1 && u.letters.back().sym == BraidSym::Delta;
    const FreeWord w = prefix_delta ? swap_generators(v) : v;
    const long long ell = prefix_delta ? 2 * m + 1 : 2 * m;
    std::optional<int> lead;
    if (!u.letters.empty() && u.letters.front().sym != BraidSym::Delta)
        lead = u.letters.front().sym == BraidSym::Sigma1 ? 1 : 2;

    if (!lead) {
        if (w.empty()) return DeltaPower{ell};
        const Block first = w.blocks().front();
        std::vector<Block> rest(w.blocks().begin() + 1, w.blocks().end());
        return Split{static_cast<int>(first.gen), 2 * first.exp, free_reduce(rest), ell};
    }
    const Gen jg = *lead == 1 ? Gen::A1 : Gen::A2;
    if (!w.empty() && w.blocks().front().gen == jg) {
        const Block first = w.blocks().front();
        std::vector<Block> rest(w.blocks().begin() + 1, w.blocks().end());
        return Split{*lead, 1 + 2 * first.exp, free_reduce(rest), ell};
    }
    return Split{*lead, 1, w, ell};
}

} // namespace

NormalForm normalize(const BraidWord& b) {
    const NormalForm nf = build_normal_form(b);
    if (!braids_equal(b, denormalize(nf)))
        throw NewtonDivergenceError("normalize: oracle certification failed");
    return nf;
}

FreeWord theta(const NormalForm& nf) {
    const Split* s = std::get_if<Split>(&nf);
    if (!s) throw NotApplicableError("theta: braid is a power of Delta");
    std::vector<Block> raw;
    const long long qk = q(s->k);
    if (qk != 0) raw.push_back({s->j == 1 ? Gen::A1 : Gen::A2, qk / 2});
    raw.insert(raw.end(), s->b1.blocks().begin(), s->b1.blocks().end());
    return free_reduce(std::move(raw));
}

BraidWord denormalize(const NormalForm& nf) {
    BraidWord w;
    if (const DeltaPower* dp = std::get_if<DeltaPower>(&nf)) {
        if (dp->m != 0) w.letters.push_back({BraidSym::Delta, dp->m});
        return w;
    }
    const Split& s = std::get<Split>(nf);
    w.letters.push_back({s.j == 1 ? BraidSym::Sigma1 : BraidSym::Sigma2, s.k});
    for (const auto& blk : s.b1.blocks())
        w.letters.push_back(
            {blk.gen == Gen::A1 ? BraidSym::Sigma1 : BraidSym::Sigma2, 2 * blk.exp});
    if (s.ell != 0) w.letters.push_back({BraidSym::Delta, s.ell});
    return w;
}

} // namespace braid3
