#include "k3fm/mukai.hpp"
#include "k3fm/ns_lattice.hpp"

#include "../support/generators.hpp"

#include <doctest.h>

using namespace k3fm;

namespace {

LatticePtr refl() { return NSLattice::make(IntMatrix{{2, 0}, {0, -12}}); }

}  // namespace

TEST_CASE("intersect on the reflexive lattice") {
    auto lat = refl();
    const DivisorClass h(lat, {1, 0}), l(lat, {0, 1});
    CHECK(intersect(h, l) == 0);
    CHECK(intersect(DivisorClass::zero(lat), l) == 0);
    CHECK(intersect(l + Integer(2) * h, l + Integer(2) * h) == -4);
}

TEST_CASE("degree and chi_line") {
    auto lat = refl();
    const DivisorClass h(lat, {1, 0}), l(lat, {0, 1});
    CHECK(degree(l + Integer(2) * h, h) == 4);
    CHECK(degree(h, h) == 2);
    CHECK(degree(DivisorClass::zero(lat), h) == 0);
    CHECK(chi_line(l + Integer(2) * h) == 0);
    CHECK(chi_line(DivisorClass::zero(lat)) == 2);
    CHECK(chi_line(l) == -4);
}

TEST_CASE("lattice invariants are enforced") {
    CHECK_THROWS_AS(NSLattice::make(IntMatrix{{1, 0}, {0, -2}}), InvariantViolation);
    CHECK_THROWS_AS(NSLattice::make(IntMatrix{{2, 1}, {0, -2}}), InvariantViolation);
    auto a = refl();
    auto b = NSLattice::make(IntMatrix{{-4}});
    CHECK_THROWS_AS(intersect(DivisorClass::basis(a, 0), DivisorClass::basis(b, 0)), LatticeMismatch);
}

TEST_CASE("property: intersection is symmetric and bilinear") {
    testing::Gen g(11);
    for (int trial = 0; trial < 300; ++trial) {
        auto lat = g.even_lattice(1 + trial % 4);
        const auto x = g.divisor(lat), y = g.divisor(lat), z = g.divisor(lat);
        const Integer k = g.between(-4, 4);
        CHECK(intersect(x, y) == intersect(y, x));
        CHECK(intersect(x + y, z) == intersect(x, z) + intersect(y, z));
        CHECK(intersect(k * x, y) == k * intersect(x, y));
        CHECK(intersect(x, x) % 2 == 0);
        CHECK(2 * chi_line(x) == 4 + intersect(x, x));
    }
}

TEST_CASE("ch_to_mukai examples") {
    auto lat = refl();
    const DivisorClass l(lat, {0, 1});
    const MukaiVector v = ch_to_mukai(ChernCharacter(2, l, Rational(-5)));
    CHECK(v.r() == 2);
    CHECK(v.f() == l);
    CHECK(v.s() == -3);
    const MukaiVector o = ch_to_mukai(standard_ch::line_bundle(DivisorClass::zero(lat)));
    CHECK(o.r() == 1);
    CHECK(o.s() == 1);
    const MukaiVector p = ch_to_mukai(standard_ch::point(lat));
    CHECK(p.r() == 0);
    CHECK(p.s() == 1);
}

TEST_CASE("mukai_pairing examples") {
    auto lat = refl();
    const auto p = ch_to_mukai(standard_ch::point(lat));
    CHECK(mukai_pairing(p, p) == 0);
    const auto o = ch_to_mukai(standard_ch::line_bundle(DivisorClass::zero(lat)));
    CHECK(mukai_pairing(o, o) == -2);

    // (2, l, s) with l^2 = 4z - 8 is isotropic exactly when s = z - 2.
    for (int z = 0; z <= 8; ++z) {
        auto lz = NSLattice::make(IntMatrix{{4 * z - 8}});
        const DivisorClass l = DivisorClass::basis(lz, 0);
        const MukaiVector v(2, l, Rational(z - 2));
        CHECK(mukai_pairing(v, v) == 0);
    }
}

TEST_CASE("euler_chi examples") {
    auto lat = refl();
    const auto zero = DivisorClass::zero(lat);
    CHECK(euler_chi(standard_ch::line_bundle(zero), standard_ch::line_bundle(zero)) == 2);
    CHECK(euler_chi(standard_ch::point(lat), standard_ch::point(lat)) == 0);

    const DivisorClass h(lat, {1, 0}), l(lat, {0, 1});
    const DivisorClass a = -h, c = l + h;  // (a - c)^2 = -4
    CHECK(euler_chi(standard_ch::line_bundle(a), standard_ch::line_bundle(c)) == chi_line(a - c));
    CHECK(chi_line(a - c) == 0);
}

TEST_CASE("standard Chern characters") {
    auto lat = NSLattice::make(IntMatrix{{-4}});
    const DivisorClass l = DivisorClass::basis(lat, 0);
    const auto lb = standard_ch::line_bundle(l);
    CHECK(lb.r() == 1);
    CHECK(lb.f() == l);
    CHECK(lb.t() == -2);
    CHECK(standard_ch::ideal(lat, 0) == standard_ch::line_bundle(DivisorClass::zero(lat)));

    // Extension of L I_Z by O with l^2 = 4z - 8 is spherical-free: chi(E, E) = 0.
    for (int z = 0; z <= 6; ++z) {
        auto lz = NSLattice::make(IntMatrix{{4 * z - 8}});
        const DivisorClass lc = DivisorClass::basis(lz, 0);
        const auto e = standard_ch::extension(DivisorClass::zero(lz), lc, z);
        CHECK(e.r() == 2);
        CHECK(e.t() == Rational(4 * z - 8, 2) - z);
        CHECK(euler_chi(e, e) == 0);
    }
}

TEST_CASE("property: mukai and ch round trip, chi = -<,>") {
    testing::Gen g(12);
    for (int trial = 0; trial < 300; ++trial) {
        auto lat = g.even_lattice(1 + trial % 4);
        const ChernCharacter a(g.between(-4, 4), g.divisor(lat), Rational(g.between(-6, 6)));
        const ChernCharacter b(g.between(-4, 4), g.divisor(lat), Rational(g.between(-6, 6)));
        CHECK(mukai_to_ch(ch_to_mukai(a)) == a);
        CHECK(euler_chi(a, b) == -mukai_pairing(ch_to_mukai(a), ch_to_mukai(b)));
        CHECK(euler_chi(a, b) == euler_chi(b, a));
    }
}
