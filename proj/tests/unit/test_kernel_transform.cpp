#include "k3fm/fm_kernel.hpp"
#include "k3fm/fm_transform.hpp"

#include "../support/generators.hpp"

#include <doctest.h>

using namespace k3fm;

namespace {

LatticePtr refl() { return NSLattice::make(IntMatrix{{2, 0}, {0, -12}}); }

struct Refl {
    LatticePtr lat = refl();
    DivisorClass h{lat, {1, 0}};
    DivisorClass l{lat, {0, 1}};
    KernelSpec kernel() const {
        return KernelSpec(-h, Integer(3) * l + Integer(7) * h, l + h, Integer(2) * l + Integer(5) * h);
    }
};

RatMatrix ints(std::initializer_list<std::initializer_list<long long>> rows) {
    RatMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (auto v : row) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

ChVector vec(const LatticePtr& lat, long long r, std::vector<long long> f, long long t) {
    ChVector v = ChVector::zero(lat);
    v.r = r;
    for (std::size_t i = 0; i < f.size(); ++i) v.f[i] = f[i];
    v.t = t;
    return v;
}

}  // namespace

TEST_CASE("check_sufficient examples") {
    Refl R;
    auto rep = check_sufficient(R.kernel());
    CHECK(rep.determinants_match);
    CHECK(rep.ac_square_ok);
    CHECK(rep.numeric_conditions());

    const auto zero = DivisorClass::zero(R.lat);
    auto bad = check_sufficient(KernelSpec(zero, zero, zero, zero));
    CHECK(bad.determinants_match);
    CHECK_FALSE(bad.ac_square_ok);
    CHECK_FALSE(bad.numeric_conditions());
}

TEST_CASE("check_necessary_det examples") {
    auto lat = NSLattice::make(IntMatrix{{-4}});
    const DivisorClass l = DivisorClass::basis(lat, 0), zero = DivisorClass::zero(lat);
    CHECK(check_necessary_det(KernelSpec(zero, zero, l, -l)));
    CHECK(check_necessary_det(KernelSpec(zero, zero, zero, zero)));
    CHECK_FALSE(check_necessary_det(KernelSpec(zero, zero, l, l)));
}

TEST_CASE("normalize_twist examples") {
    Refl R;
    const auto n = normalize_twist(R.kernel());
    CHECK(n.a.is_zero());
    CHECK(n.b.is_zero());
    CHECK(n.c == R.l + Integer(2) * R.h);
    CHECK(n.d == -R.l - Integer(2) * R.h);

    auto lat = NSLattice::make(IntMatrix{{-4}});
    const auto k = no_cohomology_kernel(DivisorClass::basis(lat, 0));
    const auto k2 = normalize_twist(k);
    CHECK(k2.a == k.a);
    CHECK(k2.b == k.b);
    CHECK(k2.c == k.c);
    CHECK(k2.d == k.d);
}

TEST_CASE("check_phiO_identity examples") {
    auto lat = NSLattice::make(IntMatrix{{-4}});
    const DivisorClass l = DivisorClass::basis(lat, 0), zero = DivisorClass::zero(lat);
    CHECK(check_phiO_identity(no_cohomology_kernel(l)));
    CHECK_FALSE(check_phiO_identity(KernelSpec(zero, zero, l, l, {l})));
    CHECK_FALSE(check_phiO_identity(no_cohomology_kernel(l, false)));
    Refl R;
    CHECK_FALSE(check_phiO_identity(R.kernel()));
}

TEST_CASE("engine matrices match the sympy oracle") {
    {
        auto lat = NSLattice::make(IntMatrix{{-4}});
        const auto t = from_kernel(no_cohomology_kernel(DivisorClass::basis(lat, 0)));
        CHECK(t.action() == ints({{1, -4, 2}, {0, 3, -1}, {0, 8, -3}}));
        CHECK(determinant(t) == -1);
    }
    {
        Refl R;
        const auto t = from_kernel(R.kernel());
        CHECK(t.action() == ints({{-1, 0, -12, 2}, {0, -5, -60, 12}, {0, -2, -25, 5}, {0, 0, 24, -5}}));
        CHECK(determinant(t) == 1);
    }
    {
        auto lat = NSLattice::make(IntMatrix{{2, 2, 2}, {2, -2, 0}, {2, 0, -2}});
        KernelSpec k(DivisorClass(lat, {-1, 1, 0}), DivisorClass(lat, {1, -1, 0}), DivisorClass(lat, {-1, 0, 1}),
                     DivisorClass(lat, {1, 0, -1}));
        const auto t = from_kernel(k);
        CHECK(t.action() == ints({{-1, 0, -6, -6, 2},
                                  {0, -1, -6, -6, 2},
                                  {0, 0, 3, 2, -1},
                                  {0, 0, 2, 3, -1},
                                  {0, 0, 12, 12, -5}}));
        CHECK(determinant(t) == -1);
    }
    {
        auto lat = NSLattice::make(IntMatrix{{2, 1, 3}, {1, -2, 0}, {3, 0, -2}});
        KernelSpec k(DivisorClass(lat, {-1, 1, 0}), DivisorClass(lat, {1, -2, 1}), DivisorClass(lat, {-1, 0, 1}),
                     DivisorClass(lat, {1, -1, 0}));
        const auto t = from_kernel(k);
        CHECK(t.action() == ints({{-1, 0, -4, -8, 2},
                                  {0, -1, -4, -8, 2},
                                  {0, 1, 6, 11, -3},
                                  {0, -1, -3, -4, 1},
                                  {0, 0, 8, 16, -5}}));
        CHECK(determinant(t) == -1);
    }
}

TEST_CASE("from_kernel examples") {
    auto lat = NSLattice::make(IntMatrix{{-4}});
    const DivisorClass l = DivisorClass::basis(lat, 0);
    const auto t = from_kernel(no_cohomology_kernel(l));
    CHECK(apply(t, vec(lat, 1, {0}, 0)) == vec(lat, 1, {0}, 0));
    CHECK(apply(t, vec(lat, 0, {0}, 1)) == vec(lat, 2, {-1}, -3));
    CHECK(apply(t, ChVector::zero(lat)) == ChVector::zero(lat));
    CHECK_FALSE(t.flagged_non_equivalence());

    Refl R;
    const auto tr = from_kernel(R.kernel());
    CHECK(apply(tr, vec(R.lat, 1, {0, 0}, 0)) == vec(R.lat, -1, {0, 0}, 0));

    const auto zero = DivisorClass::zero(lat);
    CHECK(from_kernel(KernelSpec(zero, zero, zero, zero)).flagged_non_equivalence());
}

TEST_CASE("is_mukai_isometry examples") {
    auto lat = NSLattice::make(IntMatrix{{-4}});
    CHECK(is_mukai_isometry(from_kernel(no_cohomology_kernel(DivisorClass::basis(lat, 0)))));
    CHECK(is_mukai_isometry(CohTransform::identity(lat)));
    CHECK_FALSE(is_mukai_isometry(CohTransform(lat, lat, ints({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}))));
}

TEST_CASE("compose, inverse and shift") {
    Refl R;
    const auto t = from_kernel(R.kernel());
    auto inv = inverse(t);
    REQUIRE(inv.has_value());
    const auto id = compose(*inv, t);
    CHECK(id.action() == CohTransform::identity(R.lat).action());
    const auto s = t.shifted();
    CHECK(s.shift_parity() == 1 - t.shift_parity());
    const auto o = vec(R.lat, 1, {0, 0}, 0);
    CHECK(apply(s, o) == o);
    CHECK(shift_between(o, apply(t, o)) == 1);
    CHECK(shift_between(o, o) == 0);
    CHECK_FALSE(shift_between(o, vec(R.lat, 0, {0, 0}, 1)).has_value());
}

TEST_CASE("property: random valid kernels give isometries with det +-1 and compose") {
    testing::Gen g(21);
    for (int trial = 0; trial < 100; ++trial) {
        auto lat = testing::lattice_with_minus4(g, 1 + trial % 4);
        const auto k1 = testing::valid_kernel(g, lat);
        const auto k2 = testing::valid_kernel(g, lat);
        const auto t1 = from_kernel(k1), t2 = from_kernel(k2);
        CHECK(is_mukai_isometry(t1));
        const Rational d = determinant(t1);
        CHECK((d == 1 || d == -1));
        const auto c = compose(t2, t1);
        CHECK(is_mukai_isometry(c));
        for (int i = 0; i < 5; ++i) {
            const auto v = g.triple(lat);
            CHECK(apply(c, v) == apply(t2, apply(t1, v)));
            CHECK(apply(t1, v) == pushforward_ch(k1, v));
        }
    }
}

TEST_CASE("property: the engine is linear") {
    testing::Gen g(22);
    for (int trial = 0; trial < 100; ++trial) {
        auto lat = g.even_lattice(1 + trial % 4);
        KernelSpec k(g.divisor(lat), g.divisor(lat), g.divisor(lat), g.divisor(lat));
        const auto x = g.triple(lat), y = g.triple(lat);
        CHECK(pushforward_ch(k, x + y) == pushforward_ch(k, x) + pushforward_ch(k, y));
    }
}

TEST_CASE("crosscheck: general and no-cohomology blocks agree") {
    testing::Gen g(23);
    for (int trial = 0; trial < 20; ++trial) {
        auto lat = testing::lattice_with_minus4(g, 1 + trial % 3);
        FormulaParams p;
        p.kernel = KernelSpec(g.divisor(lat), g.divisor(lat), g.divisor(lat), g.divisor(lat));
        CHECK(crosscheck_specialized(from_kernel(*p.kernel), FormulaId::GeneralKernel, p, random_grid(lat, 200, trial))
                  .empty());
        FormulaParams q;
        q.l = DivisorClass::basis(lat, 0);
        auto rep = crosscheck_specialized(from_kernel(no_cohomology_kernel(*q.l)), FormulaId::NoCohomology, q,
                                          random_grid(lat, 200, 100 + trial));
        CHECK(rep.empty());
        CHECK(rep.points_checked == 200);
    }
}

TEST_CASE("crosscheck: nondegenerate reflexive diff is 2(f.h - t) l_hat") {
    Refl R;
    FormulaParams p;
    p.h = R.h;
    p.l = R.l;
    const auto grid = default_grid(R.lat);
    auto rep = crosscheck_specialized(from_kernel(R.kernel()), FormulaId::ReflexiveNondegenerate, p, grid);
    CHECK(rep.basis_names == std::vector<std::string>{"h_hat", "l_hat"});
    CHECK(rep.entries.size() == 3528);
    CHECK(rep.points_checked == 3773);
    for (const auto& e : rep.entries) {
        REQUIRE(e.diff_c1_in_basis.has_value());
        const Rational k = 2 * (R.lat->pair(e.input.f, R.h.rational_coords()) - e.input.t);
        CHECK((*e.diff_c1_in_basis)[0] == 0);
        CHECK((*e.diff_c1_in_basis)[1] == k);
        CHECK(e.diff.r == 0);
        CHECK(e.diff.t == 0);
    }
    // One frozen entry.
    const auto v = vec(R.lat, -3, {-3, -3}, -5);
    auto one = crosscheck_specialized(from_kernel(R.kernel()), FormulaId::ReflexiveNondegenerate, p,
                                      std::vector<ChVector>{v});
    REQUIRE(one.entries.size() == 1);
    CHECK(*one.entries[0].diff_c1_in_basis == std::vector<Rational>{0, -2});
}

TEST_CASE("crosscheck: degenerate reflexive blocks, frozen differences") {
    SUBCASE("type I: ch1 diff is (f.l)(l - h) - 2(f.h)(l + 2h)") {
        auto lat = NSLattice::make(IntMatrix{{2, 2, 2}, {2, -2, 0}, {2, 0, -2}});
        const DivisorClass h(lat, {1, 0, 0}), d1(lat, {0, 1, 0}), d2(lat, {0, 0, 1});
        const DivisorClass l = d1 + d2 - Integer(2) * h;
        KernelSpec k(d1 - h, h - d1, d2 - h, h - d2);
        FormulaParams p;
        p.h = h;
        p.l = l;
        p.d1 = d1;
        p.d2 = d2;
        const auto grid = random_grid(lat, 300, 5);
        auto rep = crosscheck_specialized(from_kernel(k), FormulaId::ReflexiveTypeI, p, grid);
        std::size_t nonzero = 0;
        for (const auto& v : grid) {
            const Integer fl = to_integer(lat->pair(v.f, l.rational_coords()), "f.l");
            const Integer fh = to_integer(lat->pair(v.f, h.rational_coords()), "f.h");
            const DivisorClass expected = fl * (l - h) - Integer(2) * fh * (l + Integer(2) * h);
            if (!expected.is_zero()) ++nonzero;
        }
        CHECK(rep.entries.size() == nonzero);
        for (const auto& e : rep.entries) {
            const Integer fl = to_integer(lat->pair(e.input.f, l.rational_coords()), "f.l");
            const Integer fh = to_integer(lat->pair(e.input.f, h.rational_coords()), "f.h");
            const DivisorClass expected = fl * (l - h) - Integer(2) * fh * (l + Integer(2) * h);
            CHECK(e.diff.f == expected.rational_coords());
            CHECK(e.diff.r == 0);
        }
    }
    SUBCASE("type II: ch1 diff is (f.h)(d2 - 3 d1)") {
        auto lat = NSLattice::make(IntMatrix{{2, 1, 3}, {1, -2, 0}, {3, 0, -2}});
        const DivisorClass h(lat, {1, 0, 0}), d1(lat, {0, 1, 0}), d2(lat, {0, 0, 1});
        const DivisorClass l = d1 + d2 - Integer(2) * h;
        KernelSpec k(d1 - h, d2 - Integer(2) * d1 + h, d2 - h, h - d1);
        FormulaParams p;
        p.h = h;
        p.l = l;
        p.d1 = d1;
        p.d2 = d2;
        const auto v = vec(lat, 0, {-3, -3, -3}, 0);
        auto rep = crosscheck_specialized(from_kernel(k), FormulaId::ReflexiveTypeII, p, std::vector<ChVector>{v});
        REQUIRE(rep.entries.size() == 1);
        CHECK(rep.entries[0].diff.f == std::vector<Rational>{0, 54, -18});
        for (const auto& e :
             crosscheck_specialized(from_kernel(k), FormulaId::ReflexiveTypeII, p, random_grid(lat, 300, 6)).entries) {
            const Integer fh = to_integer(lat->pair(e.input.f, h.rational_coords()), "f.h");
            CHECK(e.diff.f == (fh * (d2 - Integer(3) * d1)).rational_coords());
        }
    }
}

TEST_CASE("crosscheck: the picard rank one block is the engine conjugated by diag(1,-1,1)") {
    for (int n = 0; n <= 5; ++n) {
        const Integer lsq = 4 * (2 * n + 1);
        auto lat = NSLattice::make(IntMatrix{{lsq}});
        const Integer z = 2 * n + 3, c = -n - 1, x = z - 4 - 2 * c, alpha = 2 * c * (2 + c), y = c + 2;
        const IntMatrix m{{z, -lsq, 2}, {c, x, -1}, {alpha, y * lsq, z - 4}};
        const IntMatrix flip{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
        FormulaParams p;
        const auto grid = default_grid(lat);
        const CohTransform engine(lat, lat, to_rational(m), 0, "picard-rank-one");
        const CohTransform flipped(lat, lat, to_rational(flip * m * flip), 0, "picard-rank-one");
        CHECK_FALSE(crosscheck_specialized(engine, FormulaId::PicardRankOne, p, grid).empty());
        CHECK(crosscheck_specialized(flipped, FormulaId::PicardRankOne, p, grid).empty());
    }
}

TEST_CASE("formula ids round trip and reject unknown names") {
    for (auto id : {FormulaId::GeneralKernel, FormulaId::NoCohomology, FormulaId::ReflexiveNondegenerate,
                    FormulaId::ReflexiveTypeI, FormulaId::ReflexiveTypeII, FormulaId::PicardRankOne})
        CHECK(parse_formula_id(to_string(id)) == id);
    CHECK_THROWS_AS(parse_formula_id("nope"), InputError);
}
