#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "braid3/analytic.hpp"

using namespace braid3;

namespace {
constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};
}

TEST_CASE("covering identities hold pointwise") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> ur(-2.0, 2.0);
    int checked = 0;
    for (int t = 0; t < 1000; ++t) {
        const Complex z(ur(rng), ur(rng));
        if (std::abs(std::remainder(z.imag(), 1.0)) < 0.05 && std::abs(z.real()) < 0.05)
            continue; // stay away from the pole lattice
        const Complex w(ur(rng), ur(rng));
        CHECK(std::abs(covering_f2(z + 2.0 * kI) - covering_f2(z)) < 1e-12);
        CHECK(std::abs(covering_f2(z + kI) - 1.0 / covering_f2(z)) < 1e-12);
        if (std::abs(w) > 0.05) {
            CHECK(std::abs(covering_f1(1.0 / w) - covering_f1(w)) < 1e-12);
            ++checked;
        }
        // f = f1 o f2 has period i
        const Complex f0 = covering_f1(covering_f2(z));
        const Complex f1v = covering_f1(covering_f2(z + kI));
        CHECK(std::abs(f0 - f1v) < 1e-12 * std::max(1.0, std::abs(f0)));
    }
    CHECK(checked > 800);
    CHECK_THROWS_AS(covering_f1(Complex{0, 0}), PoleError);
}

TEST_CASE("covering f2_exp") {
    const Complex z(0.3, 0.7);
    CHECK(std::abs(covering_f2_exp(z) - std::exp(kPi * z)) == 0.0);
    // f2 = (f2_exp - 1)/(f2_exp + 1)
    CHECK(std::abs(covering_f2(z) -
                   (covering_f2_exp(z) - 1.0) / (covering_f2_exp(z) + 1.0)) < 1e-15);
}

TEST_CASE("ellip_K") {
    CHECK(ellip_K(0.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
    // AGM oracle value of K(2/3)
    CHECK(ellip_K(2.0 / 3) == doctest::Approx(1.8096674954865885).epsilon(1e-13));
    // the displayed two-sided estimate at M = 2
    CHECK(0.5 * std::log(5.0) < ellip_K(2.0 / 3));
    CHECK(ellip_K(2.0 / 3) < 0.5 * (2.4 + std::log(5.0)));
    CHECK_THROWS_AS(ellip_K(1.0), DomainError);
    CHECK_THROWS_AS(ellip_K(-0.1), DomainError);
}

TEST_CASE("F_M endpoint identities for M in {2,5,10}") {
    for (const double M : {2.0, 5.0, 10.0, 20.0}) {
        QuadratureSpec spec;
        spec.abs_tol = 1e-13;
        const Complex FiM = F_M(kI * M, M, spec);
        const double K = ellip_K(M / (M + 1));
        // (M+1)/i F_M(iM) = K(M/(M+1))
        CHECK(std::abs((M + 1) * FiM / kI - K) < 1e-8);
        const Complex FiM1 = F_M(kI * (M + 1), M, spec);
        const double side = std::abs(FiM1 - FiM);
        CHECK(side >= kPi / (2 * (M + 1)));
        CHECK(side <= kPi / (2 * M));
        // the side-length displacement is negative real
        CHECK(std::abs((FiM1 - FiM).imag()) < 1e-9);
        CHECK((FiM1 - FiM).real() < 0);
        // K also sits in the displayed interval (M >= 2)
        CHECK(0.5 * std::log(2 * M + 1) < K);
        CHECK(K < 0.5 * (2.4 + std::log(2 * M + 1)));
    }
}

TEST_CASE("F_M basic properties") {
    QuadratureSpec spec;
    CHECK(std::abs(F_M(Complex{0, 0}, 2.0, spec)) == 0.0);
    // odd symmetry on interior points and axis points
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ux(-3.0, -0.05), uy(-4.0, 4.0);
    for (int t = 0; t < 25; ++t) {
        const Complex z(ux(rng), uy(rng));
        const Complex a = F_M(z, 2.0, spec);
        const Complex b = F_M(-z, 2.0, spec);
        CHECK(std::abs(a + b) < 1e-10 * std::max(1.0, std::abs(a)));
    }
    const Complex on_axis = F_M(kI * 1.5, 2.0, spec);
    const Complex mirrored = F_M(-kI * 1.5, 2.0, spec);
    CHECK(std::abs(on_axis + mirrored) < 1e-10);
    CHECK_THROWS_AS(F_M(kI, 0.0, spec), DomainError);
}

TEST_CASE("slalom bounds and exact value") {
    {
        const SlalomBounds b = slalom_extremal_bounds(1.0);
        CHECK(b.lo == doctest::Approx(1.0245999974535523).epsilon(1e-13));
        CHECK(b.hi == doctest::Approx(1.2388048761393598).epsilon(1e-13));
    }
    {
        const SlalomBounds b = slalom_extremal_bounds(0.5);
        CHECK(b.lo == doctest::Approx(2 / kPi * std::log(3.0)));
        CHECK(b.hi == doctest::Approx(2 / kPi * std::log(5.0)));
    }
    CHECK_THROWS_AS(slalom_extremal_bounds(0.0), DomainError);
    CHECK_THROWS_AS(slalom_extremal_exact(-1.0), DomainError);

    // frozen oracle value at M = 1 (inversive distance route, delta ~ 17.000)
    CHECK(slalom_extremal_exact(1.0) == doctest::Approx(1.1221997046783603).epsilon(1e-13));

    double prev = 0;
    for (int Mi = 1; Mi <= 50; ++Mi) {
        const double v = slalom_extremal_exact(Mi);
        const SlalomBounds b = slalom_extremal_bounds(Mi);
        CHECK(b.lo <= v);
        CHECK(v <= b.hi);
        CHECK(b.proof_lo <= v);
        CHECK(v <= b.proof_hi);
        CHECK(v > prev); // strictly increasing
        prev = v;
    }
}

TEST_CASE("phi maps of the slalom reduction") {
    for (const double M : {1.0, 2.0, 7.5}) {
        const MoebiusMap p1 = phi1(M);
        CHECK(std::abs(p1(kI * M) - (-kI / (4 * M + 1))) < 1e-14);
        CHECK(std::abs(p1(-kI * (M + 1)) - kI) < 1e-14);
        CHECK(std::abs(p1(kI * (M + 1)) - (-kI / (4 * M + 3))) < 1e-14);
        CHECK(std::abs(p1(-kI * M) - (-kI)) < 1e-14);
        const MoebiusMap p2 = phi2(M);
        const double ym = 1.0 / ((4 * M + 1) * (4 * M + 2) - 1);
        const double yp = 1.0 / ((4 * M + 3) * (4 * M + 2) - 1);
        CHECK(std::abs(p2(-kI / (4 * M + 1)) - (-kI * ym)) < 1e-14);
        CHECK(std::abs(p2(-kI / (4 * M + 3)) - (kI * yp)) < 1e-14);
    }
    CHECK_THROWS_AS(MoebiusMap(1, 2, 2, 4), DomainError);
}

TEST_CASE("half slalom") {
    CHECK(half_slalom_extremal(1.0) == doctest::Approx(0.5610998523391801).epsilon(1e-13));
    for (const double M : {0.5, 1.0, 3.0, 12.5})
        CHECK(half_slalom_extremal(M) == 0.5 * slalom_extremal_exact(M));
    const double v = half_slalom_extremal(2.0);
    CHECK(std::log(9.0) / kPi <= v);
    CHECK(v <= std::log(11.0) / kPi);
}

TEST_CASE("short block maps") {
    {
        const BlockGeometry g = make_block_geometry(BlockKind::Form1Short, 1.0);
        // vertices on the imaginary axis map to +- iM
        CHECK(std::abs(block_map(g, kI * (kPi * 0.75)) - kI) < 1e-14);
        CHECK(std::abs(block_map(g, -kI * (kPi * 0.75)) + kI) < 1e-14);
        // anchors map to +- i(M + 1/2) with derivative -+ i
        CHECK(std::abs(block_map(g, g.anchor_plus) - kI * 1.5) < 1e-14);
        CHECK(std::abs(block_map_deriv(g, g.anchor_plus) + kI) < 1e-14);
        CHECK(std::abs(block_map_deriv(g, g.anchor_minus) - kI) < 1e-14);
    }
    {
        const BlockGeometry g = make_block_geometry(BlockKind::Form2Short, 1.5); // d = 3
        CHECK(std::abs(block_map(g, g.anchor_plus) - kI * 0.5) < 1e-14);
        CHECK(std::abs(block_map_deriv(g, g.anchor_plus) - kI) < 1e-14);
        CHECK(std::abs(block_map(g, g.anchor_minus) + kI * 0.5) < 1e-14);
        CHECK(std::abs(block_map_deriv(g, g.anchor_minus) + kI) < 1e-14);
    }
    CHECK_THROWS_AS(make_block_geometry(BlockKind::Form1Short, 2.0), DomainError);
    CHECK_THROWS_AS(make_block_geometry(BlockKind::Form1Long, 1.0), DomainError);
}

TEST_CASE("long block maps invert the elliptic integral") {
    {
        const BlockGeometry g = make_block_geometry(BlockKind::Form1Long, 2.0);
        const Complex at_plus = block_map(g, g.anchor_plus);
        CHECK(std::abs(at_plus - kI * 2.5) < 1e-10);
        const Complex d = block_map_deriv(g, g.anchor_plus);
        CHECK(std::abs(d + kI) < 1e-9);
        CHECK(std::abs(std::abs(d) - 1.0) < 1e-9);
        CHECK(std::abs(std::abs(block_map_deriv(g, g.anchor_minus)) - 1.0) < 1e-9);
        // walk a little into the rectangle and verify it lands in the left plane
        const Complex inside = block_map(g, g.anchor_plus - Complex(0.0, 0.05));
        CHECK(inside.real() < 1e-12);
    }
    {
        const BlockGeometry g = make_block_geometry(BlockKind::Form2Long, 3.0); // d = 5
        const Complex vplus = block_map(g, g.anchor_plus);
        CHECK(std::abs(vplus - kI) < 1e-9); // d odd: +i
        const Complex vminus = block_map(g, g.anchor_minus);
        CHECK(std::abs(vminus + kI) < 1e-9);
        const Complex d = block_map_deriv(g, g.anchor_plus);
        CHECK(std::abs(d - kI) < 1e-8);
        CHECK(std::abs(std::abs(block_map_deriv(g, g.anchor_minus)) - 1.0) < 1e-9);
    }
}

TEST_CASE("block constants audit at desk scale") {
    const AuditReport rep = audit_block_constants(2, 4, 800, 20240809);
    for (const auto& l : rep.lines) {
        INFO(l.name, " value=", l.value, " bound=", l.bound);
        CHECK(l.pass);
    }
}

TEST_CASE("vertical side length audit") {
    const AuditReport rep = audit_vsl_bounds(5, 12);
    for (const auto& l : rep.lines) {
        INFO(l.name, " value=", l.value, " bound=", l.bound);
        CHECK(l.pass);
    }
    CHECK_THROWS_AS(audit_vsl_bounds(3, 4), DomainError);
}

TEST_CASE("upper bound arithmetic audit") {
    const AuditReport rep = audit_upper_bound_arithmetic();
    CHECK(rep.lines.size() > 40);
    for (const auto& l : rep.lines) {
        INFO(l.name, " value=", l.value, " bound=", l.bound, " margin=", l.margin);
        CHECK(l.pass);
    }
}

TEST_CASE("exceptional witnesses") {
    {
        const WitnessReport w = witness_tr_power(2, 1e-3, 400);
        CHECK(w.extremal_length < 1e-3 + 1e-15);
        CHECK(w.stays_in_twice_punctured);
        CHECK(w.boundary_ok);
    }
    {
        const WitnessReport w = witness_pb_alternating(3, 1e-3, 400);
        CHECK(w.extremal_length < 1e-3 + 1e-15);
        CHECK(w.stays_in_twice_punctured);
        CHECK(w.boundary_ok);
    }
    CHECK_THROWS_AS(witness_tr_power(0, 1e-3, 10), DomainError);
    CHECK_THROWS_AS(witness_pb_alternating(1, 1e-3, 10), DomainError);
}
