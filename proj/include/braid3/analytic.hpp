#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "braid3/errors.hpp"
#include "braid3/words.hpp"

namespace braid3 {

using Complex = std::complex<double>;

// --- Coverings of the twice punctured plane ---------------------------------

/// f1(w) = (w + 1/w)/2, the Zhukovsky map.
Complex covering_f1(Complex w);
/// f2(z) = (e^{pi z} - 1)/(e^{pi z} + 1).
Complex covering_f2(Complex z);
/// The second covering factor, z -> e^{pi z}.
Complex covering_f2_exp(Complex z);

// --- Moebius maps ------------------------------------------------------------

class MoebiusMap {
public:
    MoebiusMap(Complex a, Complex b, Complex c, Complex d);
    Complex operator()(Complex z) const;
    MoebiusMap after(const MoebiusMap& inner) const; // this o inner
    Complex det() const { return a_ * d_ - b_ * c_; }

private:
    Complex a_, b_, c_, d_;
};

/// phi_{1,M}(z) = 1/(2z + i(2M+1)); self-map of the left half-plane.
MoebiusMap phi1(double M);
/// phi_{2,M}(z) = (z + i/(4M+2)) / (1 - z i/(4M+2)).
MoebiusMap phi2(double M);

// --- Elliptic integrals ------------------------------------------------------

/// Complete elliptic integral of the first kind, modulus convention,
/// via the arithmetic-geometric mean.
double ellip_K(double k);

struct QuadratureSpec {
    enum class Rule { Auto, GaussKronrod, TanhSinh };
    Rule rule = Rule::Auto;
    double abs_tol = 1e-12;
    std::vector<Complex> path; // optional waypoints 0 -> ... -> z
};

/// F_M(z) = int_0^z dzeta / sqrt((zeta^2+M^2)(zeta^2+(M+1)^2)) on the closed
/// left half-plane, branch positive on the positive real axis.
Complex F_M(Complex z, double M, const QuadratureSpec& spec = {});

// --- Slalom extremal lengths -------------------------------------------------

struct SlalomBounds {
    double lo = 0;        // (2/pi) ln(4M+1)
    double hi = 0;        // (2/pi) ln(4M+3)
    double proof_lo = 0;  // (1/pi) ln((4M+1)(4M+2)-1)
    double proof_hi = 0;  // (1/pi) ln((4M+2)(4M+3)-1)
};

SlalomBounds slalom_extremal_bounds(double M);

/// Exact extremal length of the elementary slalom class: arccosh(delta)/pi
/// for the inversive distance delta of the reduced ring domain.
double slalom_extremal_exact(double M);

/// Half-slalom classes have exactly half the extremal length.
double half_slalom_extremal(double M);

// --- Normalized building blocks ----------------------------------------------

enum class BlockKind { Form1Short, Form2Short, Form1Long, Form2Long };

struct BlockGeometry {
    BlockKind kind;
    double M = 0;
    double r = 0;            // normalization radius (long kinds)
    Complex rect_lo, rect_hi; // axis-parallel hull corners
    Complex anchor_minus, anchor_plus;
};

BlockGeometry make_block_geometry(BlockKind kind, double M);

/// The normalized representing map of the block on its rectangle.
Complex block_map(const BlockGeometry& g, Complex xi);
Complex block_map_deriv(const BlockGeometry& g, Complex xi);

// --- Audits -------------------------------------------------------------------

struct AuditLine {
    std::string name;
    double value = 0;   // worst sampled / computed left-hand side
    double bound = 0;
    bool pass = false;
    double margin = 0;  // bound - value
};

struct AuditReport {
    std::vector<AuditLine> lines;
    bool all_pass() const;
};

/// Sampling audit of the derivative constants of the block lemmas
/// (1.03, arctan 0.05, 2.75, 0.3343, 1.863 for M in [m_lo, m_hi], and the
/// short-block bounds 3/2 and 2 on their own ranges).
AuditReport audit_block_constants(int m_lo, int m_hi, int samples, std::uint64_t seed);

/// Vertical side lengths of the normalized rectangles against the displayed
/// per-degree bounds; long blocks use degrees in [d_lo, d_hi].
AuditReport audit_vsl_bounds(long long d_lo, long long d_hi);

/// Every displayed purely numeric inequality of the upper-bound chain,
/// re-verified in outward-rounded interval arithmetic.
AuditReport audit_upper_bound_arithmetic();

// --- Quasiconformal gluing -----------------------------------------------------

struct GluingAudit {
    std::string word;
    double grid_step = 0;
    double sup_mu = 0;
    double qc_dilatation = 1;
    double margin = 0; // 0.1712 - sup_mu
    std::size_t junctions = 0;
    std::size_t samples = 0;
};

/// Build the glued piecewise map for the syllable blocks of w and estimate
/// the Beltrami coefficient on the blend strips by Richardson-extrapolated
/// central differences.
GluingAudit glue_word(const FreeWord& w, double grid_step);

// --- Exceptional-case witnesses -------------------------------------------------

struct WitnessReport {
    double extremal_length = 0;
    bool stays_in_twice_punctured = false;
    bool boundary_ok = false;
    std::size_t samples = 0;
};

/// zeta -> -1 + e^zeta on (-X, 0) x (0, 2 pi n): represents a1^n with tr values.
WitnessReport witness_tr_power(long long n, double lambda_target, std::size_t samples);
/// zeta -> e^zeta on (1, 1+X) x (pi/2, pi/2 + pi d): alternating word, pb values.
WitnessReport witness_pb_alternating(long long degree, double lambda_target,
                                     std::size_t samples);

} // namespace braid3
