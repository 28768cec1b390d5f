#pragma once

#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "braid3/words.hpp"

namespace braid3 {

using BigInt = boost::multiprecision::cpp_int;

/// 2x2 integer matrix, exact arithmetic. Braid images have determinant 1.
struct IntMat2 {
    BigInt a{1}, b{0}, c{0}, d{1};

    bool operator==(const IntMat2&) const = default;
    BigInt trace() const { return a + d; }
    BigInt det() const { return a * d - b * c; }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    bool is_minus_identity() const { return a == -1 && b == 0 && c == 0 && d == -1; }
};

IntMat2 operator*(const IntMat2& x, const IntMat2& y);
IntMat2 inverse(const IntMat2& m); // requires det = 1

/// Equality in PSL(2,Z): matrices identified up to global sign.
bool equal_up_to_sign(const IntMat2& x, const IntMat2& y);

// sigma1 -> [[1,1],[0,1]], sigma2 -> [[1,0],[-1,1]];
// hence a1 -> [[1,2],[0,1]], a2 -> [[1,0],[-2,1]].
IntMat2 psl2_image(const BraidWord& w);
IntMat2 psl2_image(const FreeWord& w);
IntMat2 psl2_image(const CyclicFreeWord& w);

/// Integer Laurent polynomial in t; no zero coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(long long c);
    static LaurentPoly monomial(long long exp, long long coeff);

    const std::map<long long, BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly&) const = default;

private:
    std::map<long long, BigInt> coeffs_;
    void prune();
};

struct LaurentMat2 {
    LaurentPoly a, b, c, d;
    bool operator==(const LaurentMat2&) const = default;
    LaurentPoly det() const { return a * d - b * c; }
};

LaurentMat2 operator*(const LaurentMat2& x, const LaurentMat2& y);

/// Reduced Burau matrix; sigma1 -> [[-t,1],[0,1]], sigma2 -> [[1,0],[t,-t]].
LaurentMat2 burau_image(const BraidWord& w);

/// Word problem for B3 via faithfulness of the reduced Burau representation.
bool braids_equal(const BraidWord& b1, const BraidWord& b2);

enum class NTClass { CentralPower, Periodic, Reducible, PseudoAnosov };

NTClass nt_class(const IntMat2& image);
NTClass nt_class(const BraidWord& w);
NTClass nt_class(const CyclicFreeWord& w);

/// Exact entropy of the conjugacy class: log of the spectral radius of the
/// PSL(2,Z) image when hyperbolic, zero otherwise.
double entropy_exact(const IntMat2& image);
double entropy_exact(const BraidWord& w);
double entropy_exact(const CyclicFreeWord& w);

} // namespace braid3
