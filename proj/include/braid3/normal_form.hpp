#pragma once

#include <array>
#include <variant>

#include "braid3/oracles.hpp"
#include "braid3/words.hpp"

namespace braid3 {

/// Permutation of {0,1,2}; words compose left to right.
struct PermutationS3 {
    std::array<unsigned char, 3> image{0, 1, 2};

    bool operator==(const PermutationS3&) const = default;
    bool is_identity() const { return image == std::array<unsigned char, 3>{0, 1, 2}; }

    static PermutationS3 identity() { return {}; }
    static PermutationS3 t12() { return {{1, 0, 2}}; }
    static PermutationS3 t23() { return {{0, 2, 1}}; }
    static PermutationS3 t13() { return {{2, 1, 0}}; }
};

/// apply p first, then q.
PermutationS3 compose(const PermutationS3& p, const PermutationS3& q);

/// tau3: sigma1 -> (12), sigma2 -> (23), Delta -> (13).
PermutationS3 permutation(const BraidWord& w);

/// The even integer closest to k that is closest to zero.
long long q(long long k);

struct DeltaPower {
    long long m;
    bool operator==(const DeltaPower&) const = default;
};

/// b = sigma_j^k . b1 . Delta^ell with b1 a reduced word in a1 = sigma1^2,
/// a2 = sigma2^2 whose first block, if any, avoids generator j.
struct Split {
    int j;          // 1 or 2
    long long k;    // nonzero
    FreeWord b1;
    long long ell;
    bool operator==(const Split&) const = default;
};

using NormalForm = std::variant<DeltaPower, Split>;

/// Unique factorization of Lemma-1'-type; certified against the Burau oracle.
NormalForm normalize(const BraidWord& b);

/// theta(b) = sigma_j^q(k) b1, returned as a reduced word in a1, a2.
FreeWord theta(const NormalForm& nf);

/// Literal expansion back to a braid word equal to the input of normalize.
BraidWord denormalize(const NormalForm& nf);

} // namespace braid3
