#include "k3fm/reflexive.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace k3fm::reflexive {

namespace {

void expect(bool ok, const char* identity, const std::string& detail) {
    if (!ok) throw InvariantViolation(identity, detail);
}

std::string str(const Integer& v) { return v.str(); }

bool valid_pair(const DivisorClass& d1, const DivisorClass& d2, const DivisorClass& target) {
    return d1 + d2 == target && intersect(d1, d1) == -2 && intersect(d2, d2) == -2 && intersect(d1, d2) == 0;
}

Decomposition canonical(const DivisorClass& a, const DivisorClass& b) {
    return b < a ? Decomposition{b, a} : Decomposition{a, b};
}

bool canonical_less(const Decomposition& x, const Decomposition& y) {
    if (x.d1 == y.d1) return x.d2 < y.d2;
    return x.d1 < y.d1;
}

DivisorClass sum(const std::vector<DivisorClass>& xs, const LatticePtr& lattice) {
    DivisorClass acc = DivisorClass::zero(lattice);
    for (const auto& x : xs) acc += x;
    return acc;
}

Decomposition n2(const std::vector<DivisorClass>& c, std::string& rule) {
    const Integer p = intersect(c[0], c[1]);
    expect(p == 0, "c_1·c_2=0", "two components of l+2h must be disjoint, got c_1·c_2=" + str(p));
    rule = "n=2: d_1=c_1, d_2=c_2";
    return {c[0], c[1]};
}

Decomposition n3(const std::vector<DivisorClass>& c, std::string& rule) {
    // A repeated class c_1 = c_2 forces (2c_1 + c_3)^2 = -4, i.e. c_1.c_3 = 3/2.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            expect(!(c[i] == c[j]), "c_1·c_3=3/2", "a repeated component would need a half-integral intersection");
    Integer total = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            const Integer p = intersect(c[i], c[j]);
            expect(p >= 0, "c_i·c_j≥0", "distinct irreducible curves meet non-negatively");
            total += p;
        }
    expect(total == 1, "c_1·c_2+c_2·c_3+c_3·c_1=1", "pairwise intersections sum to " + str(total));
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
        if (intersect(c[i], c[j]) == 1) {
            rule = "n=3: d_1=c_k, d_2=c_i+c_j with c_i·c_j=1";
            return {c[k], c[i] + c[j]};
        }
    }
    throw InvariantViolation("c_1·c_2+c_2·c_3+c_3·c_1=1", "no meeting pair");
}

Decomposition n4(const std::vector<DivisorClass>& c, std::string& rule) {
    // Multiplicity pattern.
    std::vector<std::size_t> mult(4, 0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) mult[i] += c[i] == c[j];
    const std::size_t max_mult = *std::max_element(mult.begin(), mult.end());
    // (3c_1 + c_4)^2 = -4 would need c_1.c_4 = 8/3.
    expect(max_mult < 3, "3c_1·c_4=8", "a triple component would need a fractional intersection");

    Integer total = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            const Integer p = intersect(c[i], c[j]);
            if (!(c[i] == c[j])) {
                expect(p >= 0, "c_i·c_j≥0", "distinct irreducible curves meet non-negatively");
                expect(p <= 1, "(c_i+c_j)^2≤-2", "c_i·c_j=" + str(p) + " makes c_i+c_j non-negative");
            }
            total += p;
        }
    expect(total == 2, "Σ_{i<j}c_i·c_j=2", "pairwise intersections sum to " + str(total));

    if (max_mult == 2) {
        // Put the repeated class first: c_1 = c_2, then c_3, c_4.
        std::size_t a = 0, b = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                if (c[i] == c[j]) a = i, b = j;
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != a && i != b) rest.push_back(i);
        const auto& c1 = c[a];
        const auto& c3 = c[rest[0]];
        const auto& c4 = c[rest[1]];
        expect(!(c3 == c4), "4c_1·c_3=6", "two repeated components would need a fractional intersection");
        // Sum of products is -2 + 2 c1.c3 + 2 c1.c4 + c3.c4 = 2.
        const Integer p13 = intersect(c1, c3), p14 = intersect(c1, c4), p34 = intersect(c3, c4);
        expect(p13 == 1 && p14 == 1 && p34 == 0, "2c_1·c_3+2c_1·c_4+c_3·c_4=4",
               "repeated component forces c_1·c_3=c_1·c_4=1 and c_3·c_4=0");
        rule = "n=4 repeated: d_1=c_1+c_3, d_2=c_1+c_4";
        return {c1 + c3, c1 + c4};
    }

    // Distinct curves: exactly two meeting pairs.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (intersect(c[i], c[j]) == 1) edges.emplace_back(i, j);
    const auto [i1, j1] = edges[0];
    const auto [i2, j2] = edges[1];
    if (i1 != i2 && i1 != j2 && j1 != i2 && j1 != j2) {
        rule = "n=4 case (a): d_1=c_i+c_j, d_2=c_k+c_m";
        return {c[i1] + c[j1], c[i2] + c[j2]};
    }
    std::size_t isolated = 0;
    for (std::size_t k = 0; k < 4; ++k)
        if (k != i1 && k != j1 && k != i2 && k != j2) isolated = k;
    DivisorClass chain = DivisorClass::zero(c[0].lattice());
    for (std::size_t k = 0; k < 4; ++k)
        if (k != isolated) chain += c[k];
    rule = "n=4 case (b): d_1=c_isolated, d_2=sum of the chain";
    return {c[isolated], chain};
}

}  // namespace

ReflexiveSurface validate_reflexive(const SurfaceSpec& spec, const std::string& h_name, const std::string& l_name) {
    ReflexiveSurface rs{spec, spec.named(h_name), spec.named(l_name), false, {}, 0, false};
    const Integer h2 = intersect(rs.h, rs.h), l2 = intersect(rs.l, rs.l), hl = intersect(rs.h, rs.l);
    expect(h2 == 2, "H^2=2", "h^2 = " + str(h2));
    expect(l2 == -12, "L^2=-12", "l^2 = " + str(l2));
    expect(hl == 0, "H·L=0", "h.l = " + str(hl));

    const DivisorClass target = rs.l_plus_2h();
    rs.chi_l2h = chi_line(target);
    rs.curves = spec.curves();
    rs.degenerate = !rs.curves.empty() || spec.declares(AssumptionKind::Effective, target);

    if (!rs.curves.empty()) {
        const std::size_t n = rs.curves.size();
        expect(n >= 2 && n <= 4, "2≤n≤4", std::to_string(n) + " curves declared");
        for (const auto& c : rs.curves) {
            expect(intersect(c, c) == -2, "c_i^2=-2", "a declared curve has square " + str(intersect(c, c)));
            expect(degree(c, rs.h) >= 1, "deg(c_i)>0", "a declared curve has degree " + str(degree(c, rs.h)));
        }
        expect(sum(rs.curves, spec.lattice()) == target, "Σc_i=ℓ+2h", "declared curves do not sum to l+2h");
    }
    rs.derived_vanishing = !rs.degenerate && spec.declares(AssumptionKind::Ample, rs.h);
    return rs;
}

Hats hat_classes(const DivisorClass& h, const DivisorClass& l) {
    Hats out{5 * l + Integer(12) * h, 2 * l + Integer(5) * h};
    expect(intersect(out.h_hat, out.h_hat) == 2, "H^2=2", "h_hat^2 != 2");
    expect(intersect(out.l_hat, out.l_hat) == -12, "L^2=-12", "l_hat^2 != -12");
    expect(intersect(out.h_hat, out.l_hat) == 0, "H·L=0", "h_hat.l_hat != 0");
    return out;
}

Hats hat_classes(const ReflexiveSurface& rs) { return hat_classes(rs.h, rs.l); }

DecompositionReport decompose_curves(const std::vector<DivisorClass>& curves, const DivisorClass& target) {
    const std::size_t n = curves.size();
    expect(n >= 2 && n <= 4, "2≤n≤4", std::to_string(n) + " curves");
    for (const auto& c : curves) require_same_lattice(c.lattice(), target.lattice(), "decompose");
    expect(sum(curves, target.lattice()) == target, "Σc_i=ℓ+2h", "curves do not sum to the target class");

    DecompositionReport report{{target, target}, {}, {}};
    if (n == 2) report.chosen = n2(curves, report.rule);
    else if (n == 3) report.chosen = n3(curves, report.rule);
    else report.chosen = n4(curves, report.rule);

    expect(valid_pair(report.chosen.d1, report.chosen.d2, target), "d_1·d_2=0, d_1^2=-2=d_2^2",
           "case analysis produced an invalid pair");
    const Decomposition mine = canonical(report.chosen.d1, report.chosen.d2);
    for (auto& d : decompose_brute_force(curves, target))
        if (!(d == mine)) report.alternatives.push_back(std::move(d));
    return report;
}

DecompositionReport decompose_l2h(const ReflexiveSurface& rs) {
    expect(rs.degenerate && !rs.curves.empty(), "H^0(LH^2)≠0",
           "decomposition needs a degenerate surface with declared curves");
    return decompose_curves(rs.curves, rs.l_plus_2h());
}

std::vector<Decomposition> decompose_brute_force(const std::vector<DivisorClass>& curves,
                                                 const DivisorClass& target) {
    std::vector<Decomposition> out;
    const std::size_t n = curves.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        DivisorClass d1 = DivisorClass::zero(target.lattice());
        DivisorClass d2 = DivisorClass::zero(target.lattice());
        for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? d1 : d2) += curves[i];
        if (!valid_pair(d1, d2, target)) continue;
        Decomposition d = canonical(d1, d2);
        if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<Decomposition> decompose_brute_force(const ReflexiveSurface& rs) {
    return decompose_brute_force(rs.curves, rs.l_plus_2h());
}

bool is_declared_effective(const ReflexiveSurface& rs, const DivisorClass& x) {
    if (x.is_zero()) return true;
    std::vector<DivisorClass> gens = rs.curves;
    for (auto kind : {AssumptionKind::Effective, AssumptionKind::IrreducibleRational})
        for (auto& g : rs.spec.declared(kind)) gens.push_back(g);
    // Only positive-degree generators give a terminating search.
    std::erase_if(gens, [&](const DivisorClass& g) { return degree(g, rs.h) <= 0; });
    if (gens.empty() || degree(x, rs.h) <= 0) return false;

    std::set<std::vector<Integer>> seen;
    std::function<bool(const DivisorClass&)> reach = [&](const DivisorClass& rest) -> bool {
        if (rest.is_zero()) return true;
        if (degree(rest, rs.h) <= 0) return false;
        if (!seen.insert(rest.coords()).second) return false;
        for (const auto& g : gens)
            if (reach(rest - g)) return true;
        return false;
    };
    return reach(x);
}

const char* to_string(SurfaceType t) { return t == SurfaceType::TypeI ? "typeI" : "typeII"; }

Classification classify_type(const DivisorClass& h, const Decomposition& dec) {
    Decomposition ordered = dec;
    if (degree(ordered.d2, h) < degree(ordered.d1, h)) std::swap(ordered.d1, ordered.d2);
    const Integer g1 = degree(ordered.d1, h), g2 = degree(ordered.d2, h);
    expect(g1 > 0, "deg(d_1)>0", "deg(d_1) = " + str(g1));
    expect(g1 + g2 == 4, "deg(ℓ+2h)=4", "degrees " + str(g1) + " and " + str(g2));
    Classification out{g1 == 2 ? SurfaceType::TypeI : SurfaceType::TypeII, ordered, g1, g2, {}, {}, {}, {}};
    if (out.type == SurfaceType::TypeII) {
        DivisorClass e = h - ordered.d1;
        out.e_square = intersect(e, e);
        out.h_dot_e = intersect(h, e);
        out.d1_dot_e = intersect(ordered.d1, e);
        expect(*out.e_square == -2, "e^2=-2", "e^2 = " + str(*out.e_square));
        expect(*out.h_dot_e == 1, "h·e=1", "h.e = " + str(*out.h_dot_e));
        expect(*out.d1_dot_e == 3, "d_1·e=3", "d_1.e = " + str(*out.d1_dot_e));
        out.e = std::move(e);
    }
    return out;
}

Classification classify_type(const ReflexiveSurface& rs, const Decomposition& dec) {
    return classify_type(rs.h, dec);
}

const char* to_string(Variant v) {
    switch (v) {
        case Variant::Nondegenerate: return "nondegenerate";
        case Variant::TypeI: return "typeI";
        case Variant::TypeII: return "typeII";
    }
    return "?";
}

Variant parse_variant(const std::string& text) {
    if (text == "nondegenerate" || text == "reflexive-nondegenerate") return Variant::Nondegenerate;
    if (text == "typeI" || text == "reflexive-type-I") return Variant::TypeI;
    if (text == "typeII" || text == "reflexive-type-II") return Variant::TypeII;
    throw InputError("variant", "unknown variant '" + text + "' (expected nondegenerate, typeI or typeII)");
}

KernelSpec build_kernel(const ReflexiveSurface& rs, Variant variant, const std::optional<Decomposition>& dec) {
    std::vector<DivisorClass> vanishing = rs.spec.declared(AssumptionKind::NoCohomology);
    const auto& h = rs.h;
    const auto& l = rs.l;
    if (variant == Variant::Nondegenerate) {
        expect(!rs.degenerate, "H^0(LH^2)=0", "the surface is declared degenerate");
        if (rs.derived_vanishing) vanishing.push_back(rs.l_plus_2h());
        return KernelSpec(-h, 3 * l + Integer(7) * h, l + h, 2 * l + Integer(5) * h, std::move(vanishing),
                          "reflexive-nondegenerate");
    }
    expect(rs.degenerate, "H^0(LH^2)≠0", "the surface is not declared degenerate");
    const Decomposition d = dec ? *dec : decompose_l2h(rs).chosen;
    expect(valid_pair(d.d1, d.d2, rs.l_plus_2h()), "d_1·d_2=0, d_1^2=-2=d_2^2", "not a decomposition of l+2h");
    const Classification cls = classify_type(h, d);
    const auto& d1 = cls.ordered.d1;
    const auto& d2 = cls.ordered.d2;
    if (variant == Variant::TypeI) {
        expect(cls.type == SurfaceType::TypeI, "deg(d_1)=2",
               "type I kernel requested on a degree (1,3) decomposition");
        return KernelSpec(d1 - h, h - d1, d2 - h, h - d2, std::move(vanishing), "reflexive-type-I");
    }
    expect(cls.type == SurfaceType::TypeII, "deg(d_1)=1", "type II kernel requested on a degree (2,2) decomposition");
    return KernelSpec(d1 - h, d2 - 2 * d1 + h, d2 - h, h - d1, std::move(vanishing), "reflexive-type-II");
}

}  // namespace k3fm::reflexive
