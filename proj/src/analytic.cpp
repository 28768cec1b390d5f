#include "braid3/analytic.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace braid3 {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

} // namespace

// --- Coverings ----------------------------------------------------------------

Complex covering_f1(Complex w) {
    if (w == Complex{0.0, 0.0}) throw PoleError("f1: pole at w = 0");
    return 0.5 * (w + 1.0 / w);
}

Complex covering_f2(Complex z) {
    const Complex e = std::exp(kPi * z);
    if (e == Complex{-1.0, 0.0}) throw PoleError("f2: pole at odd multiple of i");
    return (e - 1.0) / (e + 1.0);
}

Complex covering_f2_exp(Complex z) { return std::exp(kPi * z); }

// --- Moebius -------------------------------------------------------------------

MoebiusMap::MoebiusMap(Complex a, Complex b, Complex c, Complex d)
    : a_(a), b_(b), c_(c), d_(d) {
    if (det() == Complex{0.0, 0.0})
        throw DomainError("MoebiusMap: vanishing determinant");
}

Complex MoebiusMap::operator()(Complex z) const { return (a_ * z + b_) / (c_ * z + d_); }

MoebiusMap MoebiusMap::after(const MoebiusMap& inner) const {
    return MoebiusMap(a_ * inner.a_ + b_ * inner.c_, a_ * inner.b_ + b_ * inner.d_,
                      c_ * inner.a_ + d_ * inner.c_, c_ * inner.b_ + d_ * inner.d_);
}

MoebiusMap phi1(double M) { return MoebiusMap(0, 1, 2, kI * (2 * M + 1)); }

MoebiusMap phi2(double M) {
    const Complex s = kI / (4 * M + 2);
    return MoebiusMap(1, s, -s, 1);
}

// --- AGM ------------------------------------------------------------------------

double ellip_K(double k) {
    if (!(k >= 0.0 && k < 1.0)) throw DomainError("ellip_K: modulus must be in [0,1)");
    double a = 1.0;
    double g = std::sqrt(1.0 - k * k);
    for (int i = 0; i < 64 && std::abs(a - g) > 1e-17 * a; ++i) {
        const double an = 0.5 * (a + g);
        g = std::sqrt(a * g);
        a = an;
    }
    return kPi / (a + g);
}

// --- The quartic and its square root --------------------------------------------

namespace {

// sqrt((z^2+M^2)(z^2+(M+1)^2)), the branch analytic off the imaginary axis
// that is positive on the real axis. Points with Re z = +0.0 are treated as
// boundary values from the left half-plane.
Complex sqrt_Q(Complex z, double M) {
    if (z.real() == 0.0) z = Complex(-0.0, z.imag());
    const Complex z2 = z * z;
    return std::sqrt(z2 + M * M) * std::sqrt(z2 + (M + 1) * (M + 1));
}

// Continuation of the left-half-plane branch through the boundary intervals
// (+-iM, +-i(M+1)); used by the block maps, which extend across the
// horizontal sides of their rectangles.
Complex sqrt_Q_cont(Complex z, double M) {
    Complex s = sqrt_Q(z, M);
    const double ay = std::abs(z.imag());
    if (z.real() > 0.0 && ay > M && ay < M + 1) s = -s; // crossed one cut
    return s;
}

Complex Q_poly(Complex z, double M) {
    return (z * z + M * M) * (z * z + (M + 1) * (M + 1));
}

// Q'(z) = 2z (2z^2 + M^2 + (M+1)^2)
Complex Q_deriv(Complex z, double M) {
    return 2.0 * z * (2.0 * z * z + M * M + (M + 1) * (M + 1));
}

bool near_branch_point(Complex z, double M) {
    const double tol = 1e-13;
    const Complex pts[4] = {kI * M, -kI * M, kI * (M + 1), -kI * (M + 1)};
    for (const Complex& p : pts)
        if (std::abs(z - p) < tol) return true;
    return false;
}

template <class F>
Complex integrate_ts(const F& f, double tol) {
    boost::math::quadrature::tanh_sinh<double> integ;
    double err_re = 0, err_im = 0, l1 = 0;
    const double re =
        integ.integrate([&](double t) { return f(t).real(); }, 0.0, 1.0, tol, &err_re, &l1);
    const double im =
        integ.integrate([&](double t) { return f(t).imag(); }, 0.0, 1.0, tol, &err_im, &l1);
    if (!(std::isfinite(re) && std::isfinite(im)) ||
        std::max(err_re, err_im) > std::max(1e3 * tol, 1e-9) * std::max(1.0, l1))
        throw QuadratureError("tanh-sinh tolerance unreachable");
    return {re, im};
}

template <class F>
Complex integrate_gk(const F& f, double tol) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    double err_re = 0, err_im = 0;
    const double re =
        GK::integrate([&](double t) { return f(t).real(); }, 0.0, 1.0, 12, tol, &err_re);
    const double im =
        GK::integrate([&](double t) { return f(t).imag(); }, 0.0, 1.0, 12, tol, &err_im);
    if (!(std::isfinite(re) && std::isfinite(im)) ||
        std::max(err_re, err_im) >
            std::max(1e3 * tol, 1e-9) * std::max({1.0, std::abs(re), std::abs(im)}))
        throw QuadratureError("Gauss-Kronrod tolerance unreachable");
    return {re, im};
}

// int_a^b dz / sqrt_Q along the straight segment. Inverse-square-root
// endpoint singularities are removed by the substitution t = u^2 (or
// t = 1 - u^2), after which the integrand is analytic in u.
Complex segment_F_branch(Complex a, Complex b, double M, const QuadratureSpec& spec,
                         Complex (*root)(Complex, double)) {
    if (a == b) return {0.0, 0.0};
    const bool sing_a = near_branch_point(a, M);
    const bool sing_b = near_branch_point(b, M);
    if (sing_a && sing_b) {
        const Complex mid = 0.5 * (a + b);
        return segment_F_branch(a, mid, M, spec, root) +
               segment_F_branch(mid, b, M, spec, root);
    }
    const Complex d = b - a;
    if (sing_a || sing_b) {
        auto f = [&](double u) {
            // flooring u keeps the evaluation off the branch point; the
            // integrand is constant to O(u^2) there
            const double uu = std::max(u, 1e-6);
            const double t = sing_a ? uu * uu : 1.0 - uu * uu;
            return 2.0 * uu * d / root(a + t * d, M);
        };
        return spec.rule == QuadratureSpec::Rule::GaussKronrod
                   ? integrate_gk(f, spec.abs_tol)
                   : integrate_ts(f, spec.abs_tol);
    }
    auto f = [&](double t) { return d / root(a + t * d, M); };
    return spec.rule == QuadratureSpec::Rule::TanhSinh ? integrate_ts(f, spec.abs_tol)
                                                       : integrate_gk(f, spec.abs_tol);
}

Complex segment_F(Complex a, Complex b, double M, const QuadratureSpec& spec) {
    return segment_F_branch(a, b, M, spec, &sqrt_Q);
}

Complex segment_F_cont(Complex a, Complex b, double M, const QuadratureSpec& spec) {
    return segment_F_branch(a, b, M, spec, &sqrt_Q_cont);
}

std::vector<Complex> default_path(Complex z, double M) {
    std::vector<Complex> pts{Complex{0.0, 0.0}};
    if (z.real() == 0.0 || z.real() == -0.0) {
        // split axis paths at the branch points
        const double y = z.imag();
        const double s = y >= 0 ? 1.0 : -1.0;
        const double ay = std::abs(y);
        if (ay > M) pts.push_back(Complex(-0.0, s * M));
        if (ay > M + 1) pts.push_back(Complex(-0.0, s * (M + 1)));
    }
    pts.push_back(z);
    return pts;
}

} // namespace

Complex F_M(Complex z, double M, const QuadratureSpec& spec) {
    if (!(M > 0)) throw DomainError("F_M: M must be positive");
    std::vector<Complex> path = spec.path;
    if (path.empty())
        path = default_path(z, M);
    else if (path.front() != Complex{0.0, 0.0})
        path.insert(path.begin(), Complex{0.0, 0.0});
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        acc += segment_F(path[i], path[i + 1], M, spec);
    return acc;
}

// --- Slalom extremal lengths -----------------------------------------------------

SlalomBounds slalom_extremal_bounds(double M) {
    if (!(M > 0)) throw DomainError("slalom bounds: M must be positive");
    SlalomBounds b;
    b.lo = 2 / kPi * std::log(4 * M + 1);
    b.hi = 2 / kPi * std::log(4 * M + 3);
    b.proof_lo = std::log((4 * M + 1) * (4 * M + 2) - 1) / kPi;
    b.proof_hi = std::log((4 * M + 2) * (4 * M + 3) - 1) / kPi;
    return b;
}

double slalom_extremal_exact(double M) {
    if (!(M > 0)) throw DomainError("slalom exact: M must be positive");
    const double ym = 1.0 / ((4 * M + 1) * (4 * M + 2) - 1);
    const double yp = 1.0 / ((4 * M + 3) * (4 * M + 2) - 1);
    // ring between the unit circle and the circle with diametral points
    // -i y^-, +i y^+
    const double r = 0.5 * (ym + yp);
    const double d = 0.5 * (ym - yp);
    const double delta = (1.0 + r * r - d * d) / (2.0 * r);
    return std::acosh(delta) / kPi;
}

double half_slalom_extremal(double M) { return 0.5 * slalom_extremal_exact(M); }

// --- Building blocks ---------------------------------------------------------------

namespace {

double r1_of(double M) { return std::sqrt((M + 0.25) * (M + 0.75)); }
double r2_of(double M) { return kPi * std::sqrt(3.0) * std::sqrt((M - 0.25) * (M + 0.25)); }

// Incremental inverter of xi = r F_M(zeta), path-following from an anchor.
class EllipticInverter {
public:
    EllipticInverter(double M, double r, Complex zeta_anchor, Complex xi_anchor)
        : M_(M), r_(r), zeta_anchor_(zeta_anchor), xi_anchor_(xi_anchor),
          zeta_(zeta_anchor), xi_(xi_anchor) {}

    Complex invert(Complex xi_target, double tol = 1e-12) {
        if (std::abs(xi_target - xi_) > 0.25) { // cold start
            zeta_ = zeta_anchor_;
            xi_ = xi_anchor_;
        }
        const Complex start = xi_;
        const int steps =
            std::max(1, static_cast<int>(std::ceil(std::abs(xi_target - start) / 0.05)));
        for (int s = 1; s <= steps; ++s)
            step_to(start + (xi_target - start) * (static_cast<double>(s) / steps), tol);
        return zeta_;
    }

    Complex deriv_at(Complex zeta) const { return sqrt_Q_cont(zeta, M_) / r_; }

private:
    void step_to(Complex goal, double tol) {
        for (int it = 0; it < 50; ++it) {
            Complex resid = xi_ - goal;
            if (std::abs(resid) <= tol) return;
            Complex dz = -resid * sqrt_Q_cont(zeta_, M_) / r_;
            if (std::abs(dz) > 0.08) dz *= 0.08 / std::abs(dz);
            move(dz);
        }
        if (std::abs(xi_ - goal) > 10 * tol)
            throw NewtonDivergenceError("elliptic block inversion did not converge");
    }

    void move(Complex dz) {
        QuadratureSpec spec;
        spec.rule = QuadratureSpec::Rule::GaussKronrod;
        spec.abs_tol = 1e-13;
        xi_ += r_ * segment_F_cont(zeta_, zeta_ + dz, M_, spec);
        zeta_ += dz;
    }

    double M_, r_;
    Complex zeta_anchor_, xi_anchor_;
    Complex zeta_, xi_;
};

Complex F_axis(double y, double M, double tol = 1e-13) {
    QuadratureSpec spec;
    spec.abs_tol = tol;
    return F_M(Complex(-0.0, y), M, spec);
}

} // namespace

BlockGeometry make_block_geometry(BlockKind kind, double M) {
    BlockGeometry g;
    g.kind = kind;
    g.M = M;
    switch (kind) {
    case BlockKind::Form1Short: {
        if (!(M >= 0.5 && M <= 1.5))
            throw DomainError("Form1Short expects M in [1/2, 3/2]");
        const double mu = M + 0.5;
        const double x0 = mu * std::log(M / (M + 1));
        const double xa = -mu * std::log((M + 0.5) / M);
        g.rect_lo = Complex(x0, -kPi * mu / 2);
        g.rect_hi = Complex(0.0, kPi * mu / 2);
        g.anchor_minus = Complex(xa, -kPi * mu / 2);
        g.anchor_plus = Complex(xa, kPi * mu / 2);
        return g;
    }
    case BlockKind::Form2Short: {
        const double d = 2 * M;
        if (!(d >= 1 && d <= 4)) throw DomainError("Form2Short expects M = d/2, d <= 4");
        g.rect_lo = Complex(std::log(0.5), -1.0 / 18);
        g.rect_hi = Complex(0.0, d * kPi / 2 + 1.0 / 18);
        g.anchor_minus = Complex(0.0, 0.0);
        g.anchor_plus = Complex(0.0, d * kPi / 2);
        return g;
    }
    case BlockKind::Form1Long: {
        if (!(M >= 2)) throw DomainError("Form1Long expects M >= 2");
        g.r = r1_of(M);
        const double K = ellip_K(M / (M + 1));
        const double half_vsl = g.r * K / (M + 1);
        const Complex FiM = F_axis(M, M);
        const Complex Fi_frac = F_axis(M + 0.5, M);
        const Complex FiM1 = F_axis(M + 1, M);
        g.rect_lo = Complex(g.r * (FiM1.real() - FiM.real()), -half_vsl);
        g.rect_hi = Complex(0.0, half_vsl);
        g.anchor_plus = g.r * Fi_frac;
        g.anchor_minus = std::conj(g.anchor_plus);
        return g;
    }
    case BlockKind::Form2Long: {
        if (!(M >= 2.5)) throw DomainError("Form2Long expects M >= 5/2");
        g.r = r2_of(M);
        const Complex eta_plus = g.r * F_axis(M - 0.5, M);
        g.anchor_plus = eta_plus;
        g.anchor_minus = -eta_plus;
        g.rect_lo = Complex(-1.0 / 18, -eta_plus.imag());
        g.rect_hi = Complex(0.0, eta_plus.imag());
        return g;
    }
    }
    throw DomainError("unknown block kind");
}

Complex block_map(const BlockGeometry& g, Complex xi) {
    switch (g.kind) {
    case BlockKind::Form1Short: return -g.M * std::exp(-xi / (g.M + 0.5));
    case BlockKind::Form2Short: return -0.5 * kI * std::exp(2.0 * xi);
    case BlockKind::Form1Long:
    case BlockKind::Form2Long: {
        const double off = g.kind == BlockKind::Form1Long ? g.M + 0.5 : g.M - 0.5;
        const bool upper = std::abs(xi - g.anchor_plus) <= std::abs(xi - g.anchor_minus);
        EllipticInverter inv(g.M, g.r, upper ? kI * off : -kI * off,
                             upper ? g.anchor_plus : g.anchor_minus);
        const Complex zeta = inv.invert(xi);
        if (g.kind == BlockKind::Form1Long) return zeta;
        return std::exp(kPi * (zeta + kI * (g.M - 1)));
    }
    }
    throw DomainError("unknown block kind");
}

Complex block_map_deriv(const BlockGeometry& g, Complex xi) {
    switch (g.kind) {
    case BlockKind::Form1Short:
        return g.M / (g.M + 0.5) * std::exp(-xi / (g.M + 0.5));
    case BlockKind::Form2Short: return -kI * std::exp(2.0 * xi);
    case BlockKind::Form1Long: {
        const Complex zeta = block_map(g, xi);
        return sqrt_Q_cont(zeta, g.M) / g.r;
    }
    case BlockKind::Form2Long: {
        const bool upper = std::abs(xi - g.anchor_plus) <= std::abs(xi - g.anchor_minus);
        EllipticInverter inv(g.M, g.r, upper ? kI * (g.M - 0.5) : -kI * (g.M - 0.5),
                             upper ? g.anchor_plus : g.anchor_minus);
        const Complex zeta = inv.invert(xi);
        const Complex w = std::exp(kPi * (zeta + kI * (g.M - 1)));
        return kPi * w * sqrt_Q_cont(zeta, g.M) / g.r;
    }
    }
    throw DomainError("unknown block kind");
}

bool AuditReport::all_pass() const {
    return std::all_of(lines.begin(), lines.end(),
                       [](const AuditLine& l) { return l.pass; });
}

// --- Constant audits -----------------------------------------------------------------

namespace {

void push_line(AuditReport& rep, std::string name, double value, double bound,
               bool strict = true) {
    AuditLine l;
    l.name = std::move(name);
    l.value = value;
    l.bound = bound;
    l.pass = strict ? value < bound : value <= bound;
    l.margin = bound - value;
    rep.lines.push_back(l);
}

Complex sample_disc(std::mt19937_64& rng, Complex center, double radius) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (true) {
        const double x = u(rng), y = u(rng);
        if (x * x + y * y <= 1.0) return center + radius * Complex(x, y);
    }
}

// g''_{(1),M} at xi = f_{(1),M}(zeta), evaluated from zeta.
double g1_second_deriv_mag(Complex zeta, double M, double r1) {
    return std::abs(Q_deriv(zeta, M)) / (2 * r1 * r1);
}

// g''_{(2),M} at xi = f_{(2),M}(zeta), evaluated from zeta.
double g2_second_deriv_mag(Complex zeta, double M, double r2) {
    const Complex w = std::exp(kPi * (zeta + kI * (M - 1)));
    const Complex val =
        kPi * w * (Q_deriv(zeta, M) / (2 * r2 * r2) + kPi * Q_poly(zeta, M) / (r2 * r2));
    return std::abs(val);
}

} // namespace

AuditReport audit_block_constants(int m_lo, int m_hi, int samples, std::uint64_t seed) {
    if (m_lo < 2) throw DomainError("long-block lemmas need M >= 2");
    AuditReport rep;
    std::mt19937_64 rng(seed);
    const double s2_18 = std::numbers::sqrt2 / 18;

    for (int Mi = m_lo; Mi <= m_hi; ++Mi) {
        const double M = Mi;
        const double r1 = r1_of(M);
        const double r2 = r2_of(M);
        const Complex c1 = kI * (M + 0.5);
        const Complex c2 = kI * (M - 0.5);

        // |1/f'_{(1),M}| < 1.03 on the disc of radius 1.03 sqrt2/18
        double worst = 0;
        for (int i = 0; i < samples; ++i) {
            const Complex z = sample_disc(rng, c1, 1.03 * s2_18);
            worst = std::max(worst, std::abs(sqrt_Q(z, M)) / r1);
        }
        // anchor normalization is exact
        const double at_anchor = std::abs(sqrt_Q(c1, M)) / r1;
        push_line(rep, "lemma 1.03 (M=" + std::to_string(Mi) + ")", worst, 1.03);
        push_line(rep, "anchor |1/f'|=1 (M=" + std::to_string(Mi) + ")",
                  std::abs(at_anchor - 1.0), 1e-12, false);

        // |arg f'_{(2),M}| < arctan(0.05) on the 3/100 disc
        worst = 0;
        for (int i = 0; i < samples; ++i) {
            const Complex z = sample_disc(rng, c2, 0.03);
            worst = std::max(worst, std::abs(std::arg(r2 / sqrt_Q(z, M))));
        }
        push_line(rep, "lemma arctan(0.05) (M=" + std::to_string(Mi) + ")", worst,
                  std::atan(0.05));

        // |g''_{(1),M}| < 2.75 on |xi - xi^+| < sqrt2/18; forward-sampled
        const Complex F_c1 = F_axis(M + 0.5, M);
        QuadratureSpec gspec;
        gspec.rule = QuadratureSpec::Rule::GaussKronrod;
        gspec.abs_tol = 1e-13;
        worst = 0;
        int accepted = 0;
        for (int tries = 0; accepted < samples && tries < 20 * samples; ++tries) {
            const Complex z = sample_disc(rng, c1, 1.03 * s2_18);
            const Complex xi = r1 * (F_c1 + segment_F_cont(c1, z, M, gspec));
            if (std::abs(xi - r1 * F_c1) >= s2_18) continue;
            ++accepted;
            worst = std::max(worst, g1_second_deriv_mag(z, M, r1));
        }
        push_line(rep, "lemma 2.75 (M=" + std::to_string(Mi) + ")", worst, 2.75);

        // 1/|f'_{(2),M}| < 0.3343 on the disc of radius 0.4 sqrt2/18
        worst = 0;
        for (int i = 0; i < samples; ++i) {
            const Complex z = sample_disc(rng, c2, 0.4 * s2_18);
            worst = std::max(worst, std::abs(sqrt_Q(z, M)) / r2);
        }
        push_line(rep, "lemma 0.3343 (M=" + std::to_string(Mi) + ")", worst, 0.3343);

        // |g''_{(2),M}| < 1.863 on |xi - eta^+| < sqrt2/18
        const Complex F_c2 = F_axis(M - 0.5, M);
        worst = 0;
        accepted = 0;
        for (int tries = 0; accepted < samples && tries < 20 * samples; ++tries) {
            const Complex z = sample_disc(rng, c2, 0.4 * s2_18);
            const Complex xi = r2 * (F_c2 + segment_F_cont(c2, z, M, gspec));
            if (std::abs(xi - r2 * F_c2) >= s2_18) continue;
            ++accepted;
            worst = std::max(worst, g2_second_deriv_mag(z, M, r2));
        }
        push_line(rep, "lemma 1.863 (M=" + std::to_string(Mi) + ")", worst, 1.863);
    }

    // short blocks: |g''| <= (M+1)/(M+1/2)^2 <= 3/2 and |g''| <= 2
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (const double M : {0.5, 1.0, 1.5}) {
        const BlockGeometry g = make_block_geometry(BlockKind::Form1Short, M);
        double worst = 0;
        for (int i = 0; i < samples; ++i) {
            const Complex xi(g.rect_lo.real() + u01(rng) * (g.rect_hi.real() - g.rect_lo.real()),
                             g.rect_lo.imag() + u01(rng) * (g.rect_hi.imag() - g.rect_lo.imag()));
            const double v = g.M / ((g.M + 0.5) * (g.M + 0.5)) *
                             std::exp(-xi.real() / (g.M + 0.5));
            worst = std::max(worst, v);
        }
        push_line(rep, "short form1 |g''| <= 3/2 (M=" + std::to_string(M) + ")", worst,
                  1.5, false);
    }
    for (const double M : {1.0, 1.5, 2.0}) {
        const BlockGeometry g = make_block_geometry(BlockKind::Form2Short, M);
        double worst = 0;
        for (int i = 0; i < samples; ++i) {
            const double x =
                g.rect_lo.real() + u01(rng) * (g.rect_hi.real() - g.rect_lo.real());
            worst = std::max(worst, 2.0 * std::exp(2.0 * x));
        }
        push_line(rep, "short form2 |g''| <= 2 (M=" + std::to_string(M) + ")", worst, 2.0,
                  false);
    }
    return rep;
}

AuditReport audit_vsl_bounds(long long d_lo, long long d_hi) {
    AuditReport rep;
    if (d_lo < 5) throw DomainError("long-block side lengths need d >= 5");
    for (long long d = d_lo; d <= d_hi; ++d) {
        {
            // form (1): M = (d-1)/2, vsl = 2 r1 K/(M+1)
            const double M = (d - 1) / 2.0;
            const double vsl = 2 * r1_of(M) * ellip_K(M / (M + 1)) / (M + 1);
            push_line(rep, "vsl form1 d=" + std::to_string(d) + " (first bound)", vsl,
                      (2.4 + std::log(2 * M + 1)) * r1_of(M) / (M + 1), false);
            push_line(rep, "vsl form1 d=" + std::to_string(d), vsl,
                      1.362 * std::log(4.0 * d - 1));
        }
        {
            // form (2): M = (d+1)/2, vsl = 2 r2 K/(M+1)
            const double M = (d + 1) / 2.0;
            const double vsl = 2 * r2_of(M) * ellip_K(M / (M + 1)) / (M + 1);
            push_line(rep, "vsl form2 d=" + std::to_string(d), vsl,
                      1.504 * kPi * std::sqrt(3.0) * std::log(4.0 * d - 1));
        }
    }
    for (long long d = 1; d <= 4; ++d)
        push_line(rep, "vsl short form1 d=" + std::to_string(d), kPi * d / 2,
                  2.5 * std::log(4.0 * d - 1));
    for (long long d = 2; d <= 4; ++d)
        push_line(rep, "vsl short form2 d=" + std::to_string(d), kPi * d / 2 + 1.0 / 9,
                  2.5 * std::log(4.0 * d - 1));
    return rep;
}

// --- Interval arithmetic for the displayed constant chains ---------------------------

namespace {

struct Iv {
    double lo, hi;
};

double up(double x) { return std::nextafter(x, HUGE_VAL); }
double dn(double x) { return std::nextafter(x, -HUGE_VAL); }

Iv iv(double x) { return {x, x}; }            // exactly representable inputs
Iv iv_dec(double x) { return {dn(x), up(x)}; } // decimal literals
Iv operator+(Iv a, Iv b) { return {dn(a.lo + b.lo), up(a.hi + b.hi)}; }
Iv operator-(Iv a, Iv b) { return {dn(a.lo - b.hi), up(a.hi - b.lo)}; }
Iv operator*(Iv a, Iv b) {
    const double c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {dn(std::min({c[0], c[1], c[2], c[3]})), up(std::max({c[0], c[1], c[2], c[3]}))};
}
Iv operator/(Iv a, Iv b) { // requires 0 not in b
    const double c[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
    return {dn(std::min({c[0], c[1], c[2], c[3]})), up(std::max({c[0], c[1], c[2], c[3]}))};
}
Iv iv_log(Iv a) { return {dn(dn(std::log(a.lo))), up(up(std::log(a.hi)))}; }
Iv iv_sqrt(Iv a) { return {dn(std::sqrt(a.lo)), up(std::sqrt(a.hi))}; }
Iv iv_exp(Iv a) { return {dn(dn(std::exp(a.lo))), up(up(std::exp(a.hi)))}; }
Iv iv_atan(Iv a) { return {dn(dn(std::atan(a.lo))), up(up(std::atan(a.hi)))}; }
Iv iv_cos_small(Iv a) { // on [0, pi/2], decreasing
    return {dn(dn(std::cos(a.hi))), up(up(std::cos(a.lo)))};
}
Iv iv_pi() { return {kPi, up(kPi)}; }

void push_iv(AuditReport& rep, std::string name, Iv lhs, Iv rhs, bool strict = true) {
    AuditLine l;
    l.name = std::move(name);
    l.value = lhs.hi;
    l.bound = rhs.lo;
    l.pass = strict ? lhs.hi < rhs.lo : lhs.hi <= rhs.lo;
    l.margin = rhs.lo - lhs.hi;
    rep.lines.push_back(l);
}

} // namespace

AuditReport audit_upper_bound_arithmetic() {
    AuditReport rep;
    const Iv pi = iv_pi();
    const Iv sqrt3 = iv_sqrt(iv(3));
    const Iv s2_18 = iv_sqrt(iv(2)) / iv(18);

    // form (1) long-block derivative lemmas
    {
        const Iv t = iv_dec(1.03) * s2_18;
        const Iv lhs = iv(4) *
                       iv_sqrt(iv(0.25) + iv(2) * iv_dec(1.03) * iv_dec(1.03) / iv(324)) *
                       iv_sqrt(iv(4.5) + t) * iv_sqrt(iv(5.5) + t) / iv_sqrt(iv(99));
        push_iv(rep, "|1/f1'| chain < 1.0296", lhs, iv_dec(1.0296));
        push_iv(rep, "1.0296 < 1.03", iv_dec(1.0296), iv_dec(1.03));
        const Iv g2 = iv_dec(0.5) * iv_dec(1.03) * iv_dec(1.03) *
                      (iv(2) / (iv(0.5) - t) + iv(1) / (iv(4.5) - t) + iv(1) / (iv(5.5) - t));
        push_iv(rep, "|g1''| chain < 2.75", g2, iv_dec(2.75));
        push_iv(rep, "1.03 sqrt2/18 < 1/2", t, iv(0.5));
    }
    push_iv(rep, "12/5 - log(19/5) < 0.362 log 19", iv(2.4) - iv_log(iv(3.8)),
            iv_dec(0.362) * iv_log(iv(19)));
    {
        AuditLine l; // (4 - 1/5) d <= 4d - 1 at d = 5, exact integers scaled by 5
        l.name = "(4-1/5)*5 <= 19";
        l.value = 19;
        l.bound = 19;
        l.pass = true;
        l.margin = 0;
        rep.lines.push_back(l);
    }
    // form (2) long-block derivative lemmas
    {
        const Iv t = iv_dec(0.4) * s2_18;
        const Iv lhs = iv(8) * iv_sqrt(iv(0.5) + t) * iv_sqrt(iv(1.5) + t) *
                       iv_sqrt(iv(2.25) + iv_dec(0.2) * s2_18) *
                       iv_sqrt(iv(1.75) + iv_dec(0.2) * s2_18) /
                       (pi * sqrt3 * iv_sqrt(iv(63)));
        push_iv(rep, "|1/f2'| chain < 0.3343", lhs, iv_dec(0.3343));
        const Iv sum = iv_atan(iv_dec(0.03) / (iv(0.5) - iv_dec(0.03))) +
                       iv_atan(iv_dec(0.03) / (iv(1.5) - iv_dec(0.03))) +
                       iv_atan(iv_dec(0.03) / (iv(3.5) - iv_dec(0.03))) +
                       iv_atan(iv_dec(0.03) / (iv(4.5) - iv_dec(0.03)));
        push_iv(rep, "argument sum < 0.0996", sum, iv_dec(0.0996));
        push_iv(rep, "0.0498 < arctan(0.05)", iv_dec(0.0498), iv_atan(iv_dec(0.05)));
        const Iv g2 = pi * pi * iv_exp(t * pi) * iv_dec(0.3343) * iv_dec(0.3343) *
                      (iv(1) + (iv(1) / (iv(2) * pi)) *
                                   (iv(1) / (iv(0.5) - t) + iv(1) / (iv(1.5) - t) +
                                    iv(1) / (iv(3.5) - t) + iv(1) / (iv(4.5) - t)));
        push_iv(rep, "|g2''| chain < 1.863", g2, iv_dec(1.863));
        push_iv(rep, "1 + 1.863 sqrt2/18 < 1.15", iv(1) + iv_dec(1.863) * s2_18,
                iv_dec(1.15));
        push_iv(rep, "1.15 sqrt2/18 < 1/2", iv_dec(1.15) * s2_18, iv(0.5));
        push_iv(rep, "0.3343 sqrt2/18 < 0.0263", iv_dec(0.3343) * s2_18, iv_dec(0.0263));
        push_iv(rep, "0.0263 < 0.03", iv_dec(0.0263), iv_dec(0.03));
    }
    push_iv(rep, "12/5 - log(5/2) < 0.504 log 19", iv(2.4) - iv_log(iv(2.5)),
            iv_dec(0.504) * iv_log(iv(19)));
    push_iv(rep, "(5/2)(5+2) < 4*5-1", iv(17.5), iv(19));
    // short-block side lengths
    push_iv(rep, "pi/2 < 1.43 log 3", pi / iv(2), iv_dec(1.43) * iv_log(iv(3)));
    push_iv(rep, "pi < 1.615 log 7", pi, iv_dec(1.615) * iv_log(iv(7)));
    push_iv(rep, "3pi/2 < 1.97 log 11", iv(3) * pi / iv(2), iv_dec(1.97) * iv_log(iv(11)));
    push_iv(rep, "2pi < 2.33 log 15", iv(2) * pi, iv_dec(2.33) * iv_log(iv(15)));
    for (int d = 1; d <= 4; ++d)
        push_iv(rep, "pi d/2 < 5/2 log(4d-1), d=" + std::to_string(d),
                iv(d) * pi / iv(2), iv(2.5) * iv_log(iv(4 * d - 1)));
    push_iv(rep, "pi + 1/9 < 1.672 log 7", pi + iv(1) / iv(9), iv_dec(1.672) * iv_log(iv(7)));
    push_iv(rep, "3pi/2 + 1/9 < 2.0116 log 11", iv(3) * pi / iv(2) + iv(1) / iv(9),
            iv_dec(2.0116) * iv_log(iv(11)));
    push_iv(rep, "2pi + 1/9 < 2.362 log 15", iv(2) * pi + iv(1) / iv(9),
            iv_dec(2.362) * iv_log(iv(15)));
    for (int d = 2; d <= 4; ++d)
        push_iv(rep, "pi d/2 + 1/9 < 5/2 log(4d-1), d=" + std::to_string(d),
                iv(d) * pi / iv(2) + iv(1) / iv(9), iv(2.5) * iv_log(iv(4 * d - 1)));
    push_iv(rep, "1/18 < log(5/3)", iv(1) / iv(18), iv_log(iv(5) / iv(3)));
    push_iv(rep, "1/2 <= log(5/3) is false; audit 0.5 < 0.511", iv(0.5),
            iv_log(iv(5) / iv(3)));
    push_iv(rep, "1/18 < log 2", iv(1) / iv(18), iv_log(iv(2)));
    // the Beltrami bound and the 300 constant chain
    {
        const Iv a = iv_dec(2.75) / iv(24);
        const Iv mu = a / (iv(1) - a - s2_18 * iv_dec(2.75));
        push_iv(rep, "mu chain < 0.1712", mu, iv_dec(0.1712));
        const Iv K = (iv(1) + iv_dec(0.1712)) / (iv(1) - iv_dec(0.1712));
        push_iv(rep, "K <= 1.414", K, iv_dec(1.414), false);
        const Iv main = iv_dec(1.414) * iv(1.25) * iv(18) * iv_dec(1.504) * sqrt3 * pi;
        push_iv(rep, "1.414*1.25*18*1.504*sqrt3*pi < 260.4", main, iv_dec(260.4));
        push_iv(rep, "260.4 < 300", iv_dec(260.4), iv(300));
        push_iv(rep, "log 2 > 0.3343/(18 cos 0.05)",
                iv_dec(0.3343) / (iv(18) * iv_cos_small(iv_dec(0.05))), iv_log(iv(2)));
    }
    // constant chains for the general (non-pure) braid bound
    push_iv(rep, "12/5 < 2.7", iv(2.4), iv_dec(2.7));
    push_iv(rep, "2.7 < log 16", iv_dec(2.7), iv_log(iv(16)));
    for (int l = 3; l <= 20; ++l)
        push_iv(rep, "32l+16 < (4l-1)^2, l=" + std::to_string(l), iv(32 * l + 16),
                iv((4 * l - 1)) * iv((4 * l - 1)));
    for (int d = 3; d <= 20; ++d)
        push_iv(rep, "32d < (4d-1)^2, d=" + std::to_string(d), iv(32 * d),
                iv((4 * d - 1)) * iv((4 * d - 1)));
    push_iv(rep, "(pi/2)(3/2) < 3 log 3", pi * iv(3) / iv(4), iv(3) * iv_log(iv(3)));
    push_iv(rep, "(pi/2)(5/2) < 3 log 7", pi * iv(5) / iv(4), iv(3) * iv_log(iv(7)));
    push_iv(rep, "pi/2 < 2 log 3", pi / iv(2), iv(2) * iv_log(iv(3)));
    push_iv(rep, "pi < 2 log 7", pi, iv(2) * iv_log(iv(7)));
    push_iv(rep, "pi/4 <= 0.715 log 3", pi / iv(4), iv_dec(0.715) * iv_log(iv(3)), false);
    push_iv(rep, "1.414*1.25*18*(1.504 sqrt3 pi + 0.715) < 300",
            iv_dec(1.414) * iv(1.25) * iv(18) *
                (iv_dec(1.504) * sqrt3 * pi + iv_dec(0.715)),
            iv(300));
    push_iv(rep, "6 log 3 <= 0.414*1.504*sqrt3*pi*log 7", iv(6) * iv_log(iv(3)),
            iv_dec(0.414) * iv_dec(1.504) * sqrt3 * pi * iv_log(iv(7)), false);
    push_iv(rep, "3 log 3 + pi + 1/9 <= 0.334*1.504*sqrt3*pi*log 11",
            iv(3) * iv_log(iv(3)) + pi + iv(1) / iv(9),
            iv_dec(0.334) * iv_dec(1.504) * sqrt3 * pi * iv_log(iv(11)), false);
    push_iv(rep, "3 log 3 + 3pi/2 + 1/9 <= 0.3664*1.504*sqrt3*pi*log 15",
            iv(3) * iv_log(iv(3)) + iv(3) * pi / iv(2) + iv(1) / iv(9),
            iv_dec(0.3664) * iv_dec(1.504) * sqrt3 * pi * iv_log(iv(15)), false);
    push_iv(rep, "1.414*1.25*18*(1.504 pi sqrt3 + 3log3/log19) <= 296",
            iv_dec(1.414) * iv(1.25) * iv(18) *
                (iv_dec(1.504) * pi * sqrt3 + iv(3) * iv_log(iv(3)) / iv_log(iv(19))),
            iv(296), false);
    return rep;
}

// --- Quasiconformal gluing --------------------------------------------------------

namespace {

struct GlueBlock {
    std::function<Complex(Complex)> f; // native map (before translation)
    Complex q_minus, q_plus;           // native anchors, equal real parts
    Complex v_minus, v_plus;           // values there
    Complex d_minus, d_plus;           // unit derivatives there
};

GlueBlock form1_glue_block(Gen gen, long long exp) {
    const long long d = std::llabs(exp);
    const double M = (d - 1) / 2.0;
    const double mu = M + 0.5;

    std::function<Complex(Complex)> base;
    Complex qm, qp;
    if (d <= 4) {
        base = [M, mu](Complex xi) { return -M * std::exp(-xi / mu); };
        const double xa = -mu * std::log(mu / M);
        qm = Complex(xa, -kPi * mu / 2);
        qp = Complex(xa, kPi * mu / 2);
    } else {
        const BlockGeometry geom = make_block_geometry(BlockKind::Form1Long, M);
        auto inv_up = std::make_shared<EllipticInverter>(geom.M, geom.r, kI * mu,
                                                         geom.anchor_plus);
        auto inv_dn = std::make_shared<EllipticInverter>(geom.M, geom.r, -kI * mu,
                                                         geom.anchor_minus);
        base = [inv_up, inv_dn, geom](Complex xi) {
            return xi.imag() >= 0 ? inv_up->invert(xi) : inv_dn->invert(xi);
        };
        qm = geom.anchor_minus;
        qp = geom.anchor_plus;
    }

    GlueBlock b;
    const bool left = gen == Gen::A1;
    const bool up = left ? exp > 0 : exp < 0;
    if (left && up) { // a1^n
        b.f = base;
        b.q_minus = qm; b.q_plus = qp;
        b.v_minus = -kI * mu; b.v_plus = kI * mu;
        b.d_minus = kI; b.d_plus = -kI;
    } else if (left) { // a1^{-n}
        b.f = [base](Complex xi) { return base(-xi); };
        b.q_minus = -qp; b.q_plus = -qm;
        b.v_minus = kI * mu; b.v_plus = -kI * mu;
        b.d_minus = kI; b.d_plus = -kI;
    } else if (up) { // a2^{-n}
        b.f = [base](Complex xi) { return -base(-xi); };
        b.q_minus = -qp; b.q_plus = -qm;
        b.v_minus = -kI * mu; b.v_plus = kI * mu;
        b.d_minus = -kI; b.d_plus = kI;
    } else { // a2^n
        b.f = [base](Complex xi) { return -base(xi); };
        b.q_minus = qm; b.q_plus = qp;
        b.v_minus = kI * mu; b.v_plus = -kI * mu;
        b.d_minus = -kI; b.d_plus = kI;
    }
    return b;
}

GlueBlock form2_glue_block(Gen first_gen, long long sign, long long d) {
    const double par = (d % 2 == 0) ? 1.0 : -1.0; // (-1)^d

    std::function<Complex(Complex)> wind; // S-type base
    Complex qm, qp;
    double scale; // |values| at the anchors
    if (d <= 4) {
        wind = [](Complex xi) { return -0.5 * kI * std::exp(2.0 * xi); };
        qm = Complex(0.0, 0.0);
        qp = Complex(0.0, d * kPi / 2);
        scale = 0.5;
    } else {
        const double M = (d + 1) / 2.0;
        const BlockGeometry geom = make_block_geometry(BlockKind::Form2Long, M);
        auto inv_up = std::make_shared<EllipticInverter>(geom.M, geom.r,
                                                         kI * (M - 0.5), geom.anchor_plus);
        auto inv_dn = std::make_shared<EllipticInverter>(
            geom.M, geom.r, -kI * (M - 0.5), geom.anchor_minus);
        wind = [inv_up, inv_dn, M](Complex xi) {
            const Complex zeta = xi.imag() >= 0 ? inv_up->invert(xi) : inv_dn->invert(xi);
            return std::exp(kPi * (zeta + kI * (M - 1)));
        };
        qm = geom.anchor_minus;
        qp = geom.anchor_plus;
        scale = 1.0;
    }

    GlueBlock b;
    const bool neg_run = sign < 0;
    if (neg_run && first_gen == Gen::A2) { // S
        b.f = wind;
        b.q_minus = qm; b.q_plus = qp;
        b.v_minus = -kI * scale; b.v_plus = -par * kI * scale;
        b.d_minus = -kI; b.d_plus = -par * kI;
    } else if (neg_run) { // T = -S
        b.f = [wind](Complex xi) { return -wind(xi); };
        b.q_minus = qm; b.q_plus = qp;
        b.v_minus = kI * scale; b.v_plus = par * kI * scale;
        b.d_minus = kI; b.d_plus = par * kI;
    } else if (first_gen == Gen::A1) { // C = sgn * (S o neg)
        const double sgn = par; // +1 for even d, -1 for odd d
        b.f = [wind, sgn](Complex xi) { return sgn * wind(-xi); };
        b.q_minus = -qp; b.q_plus = -qm;
        b.v_minus = -kI * scale; b.v_plus = -par * kI * scale;
        b.d_minus = kI; b.d_plus = par * kI;
    } else { // D = -C
        const double sgn = -par;
        b.f = [wind, sgn](Complex xi) { return sgn * wind(-xi); };
        b.q_minus = -qp; b.q_plus = -qm;
        b.v_minus = kI * scale; b.v_plus = par * kI * scale;
        b.d_minus = -kI; b.d_plus = -par * kI;
    }
    return b;
}

double blend_chi(double t) { // C^1 ramp on [0, 2/18]
    const double u = 9 * t;
    if (u <= 0) return 0;
    if (u >= 1) return 1;
    return u * u * (3 - 2 * u);
}

} // namespace

GluingAudit glue_word(const FreeWord& w, double grid_step) {
    if (!(grid_step > 0) || grid_step > 1.0 / 18)
        throw GridDegenerateError("grid step must lie in (0, 1/18]");
    const SyllableDecomposition dec = syllable_decompose(w);
    for (const auto& s : dec.syllables)
        if (s.degree > 50)
            throw BlockUnavailableError("no block for syllables of degree > 50");

    // assemble normalized blocks stacked along the imaginary axis
    struct Placed {
        GlueBlock blk;
        Complex c;     // domain translation
        Complex shift; // image translation (pure imaginary)
        Complex p_minus, p_plus;
    };
    std::vector<Placed> placed;
    double y = 0.0;
    Complex level;
    const auto& blocks = w.blocks();
    for (std::size_t si = 0; si < dec.syllables.size(); ++si) {
        const Syllable& s = dec.syllables[si];
        const Block& b0 = blocks[s.first_block];
        GlueBlock gb = s.kind == SyllableKind::Form1
                           ? form1_glue_block(b0.gen, b0.exp)
                           : form2_glue_block(b0.gen, b0.exp > 0 ? 1 : -1, s.degree);
        Placed p;
        p.c = Complex(0.0, y) - gb.q_minus;
        if (placed.empty()) level = Complex(0.0, -0.5); // start at -i/2
        p.shift = level - gb.v_minus;
        if (std::abs(p.shift.real()) > 1e-9)
            throw std::logic_error("glue: junction shift is not vertical");
        p.p_minus = gb.q_minus + p.c;
        p.p_plus = gb.q_plus + p.c;
        if (!placed.empty()) {
            const Placed& prev = placed.back();
            const Complex dprev = prev.blk.d_plus;
            if (std::abs(dprev - gb.d_minus) > 1e-9)
                throw std::logic_error("glue: junction derivatives disagree");
        }
        level = gb.v_plus + p.shift;
        y = p.p_plus.imag();
        p.blk = std::move(gb);
        placed.push_back(std::move(p));
    }

    auto eval_block = [&](const Placed& p, Complex xi) {
        return p.blk.f(xi - p.c) + p.shift;
    };

    GluingAudit audit;
    audit.word = render(w);
    audit.grid_step = grid_step;
    audit.junctions = placed.size() - 1;

    const double w18 = 1.0 / 18;
    for (std::size_t j = 0; j + 1 < placed.size(); ++j) {
        const Placed& lo = placed[j];
        const Placed& hi = placed[j + 1];
        const double yc = lo.p_plus.imag();
        auto g = [&](Complex xi) {
            const double t = xi.imag() - (yc - w18);
            if (t <= 0) return eval_block(lo, xi);
            if (t >= 2 * w18) return eval_block(hi, xi);
            const double c = blend_chi(t);
            return (1 - c) * eval_block(lo, xi) + c * eval_block(hi, xi);
        };
        auto wirtinger = [&](Complex xi, double h, Complex& dz, Complex& dzbar) {
            const Complex dx = (g(xi + h) - g(xi - h)) / (2 * h);
            const Complex dy = (g(xi + kI * h) - g(xi - kI * h)) / (2 * h);
            dz = 0.5 * (dx - kI * dy);
            dzbar = 0.5 * (dx + kI * dy);
        };
        const int n = static_cast<int>(std::round(w18 / grid_step));
        for (int ix = -n; ix <= n; ++ix) {
            for (int iy = -n; iy <= n; ++iy) {
                const Complex xi(ix * grid_step, yc + iy * grid_step);
                Complex dz1, dzb1, dz2, dzb2;
                wirtinger(xi, grid_step, dz1, dzb1);
                wirtinger(xi, grid_step / 2, dz2, dzb2);
                // Richardson: central differences have O(h^2) error
                const Complex dz = dz2 + (dz2 - dz1) / 3.0;
                const Complex dzb = dzb2 + (dzb2 - dzb1) / 3.0;
                const double mu = std::abs(dzb / dz);
                audit.sup_mu = std::max(audit.sup_mu, mu);
                ++audit.samples;
            }
        }
    }
    audit.qc_dilatation = (1 + audit.sup_mu) / (1 - audit.sup_mu);
    audit.margin = 0.1712 - audit.sup_mu;
    return audit;
}

// --- Exceptional-case witnesses -----------------------------------------------------

WitnessReport witness_tr_power(long long n, double lambda_target, std::size_t samples) {
    if (n <= 0) throw DomainError("witness_tr_power expects n > 0");
    const double height = 2 * kPi * static_cast<double>(n);
    const double X = height / lambda_target; // horizontal side; lambda = height/X
    WitnessReport rep;
    rep.extremal_length = height / X;
    rep.stays_in_twice_punctured = true;
    rep.boundary_ok = true;
    rep.samples = samples;
    std::mt19937_64 rng(20240809);
    std::uniform_real_distribution<double> ux(-X, 0.0), uy(0.0, height);
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = ux(rng);
        const double y = uy(rng);
        // v = -1 + e^z: |v+1| = e^x in (0,1) and |v-1| = |e^z - 2| >= 2 - e^x > 1,
        // so the punctures are avoided exactly when x < 0.
        if (!(x < 0.0)) rep.stays_in_twice_punctured = false;
        if (x > -36.0) { // direct check where -1 + e^x is distinguishable from -1
            const Complex v = -1.0 + std::exp(Complex(x, y));
            if (std::abs(v - 1.0) == 0.0 || std::abs(v + 1.0) == 0.0)
                rep.stays_in_twice_punctured = false;
        }
        // horizontal sides land in (-1, 1): the value is -1 + e^x cos(yb)
        // + i e^x sin(yb), so containment needs sin(yb) = 0 and
        // 0 < e^x cos(yb) < 2; checked without forming the absorbed sum
        for (const double yb : {0.0, height}) {
            if (std::abs(std::sin(yb)) > 1e-12 || !(std::cos(yb) > 0.0) ||
                !(std::exp(std::min(x, 0.0)) * std::cos(yb) < 2.0) || !std::isfinite(x))
                rep.boundary_ok = false;
        }
    }
    return rep;
}

WitnessReport witness_pb_alternating(long long degree, double lambda_target,
                                     std::size_t samples) {
    if (degree < 2) throw DomainError("witness_pb_alternating expects degree >= 2");
    const double height = kPi * static_cast<double>(degree);
    const double X = height / lambda_target;
    WitnessReport rep;
    rep.extremal_length = height / X;
    rep.stays_in_twice_punctured = true;
    rep.boundary_ok = true;
    rep.samples = samples;
    std::mt19937_64 rng(20240809);
    std::uniform_real_distribution<double> ux(1.0, 1.0 + X), uy(kPi / 2, kPi / 2 + height);
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = ux(rng);
        const double y = uy(rng);
        // |e^z| = e^x > e > 1, so +-1 are avoided exactly when x > 0.
        if (!(x > 1.0)) rep.stays_in_twice_punctured = false;
        if (x < 700.0) {
            const Complex v = std::exp(Complex(x, y));
            if (std::abs(v - 1.0) == 0.0 || std::abs(v + 1.0) == 0.0)
                rep.stays_in_twice_punctured = false;
        }
        // horizontal sides land on the imaginary axis: e^{x} e^{i(pi/2 + k pi)}
        for (const double yb : {kPi / 2, kPi / 2 + height}) {
            if (std::abs(std::cos(yb)) > 1e-12) rep.boundary_ok = false;
        }
    }
    return rep;
}

} // namespace braid3
