#include "k3fm/fm_kernel.hpp"

#include <algorithm>

namespace k3fm {

KernelSpec::KernelSpec(DivisorClass a_, DivisorClass b_, DivisorClass c_, DivisorClass d_,
                       std::vector<DivisorClass> vanishing, std::string label_)
    : a(std::move(a_)),
      b(std::move(b_)),
      c(std::move(c_)),
      d(std::move(d_)),
      declared_vanishing(std::move(vanishing)),
      label(std::move(label_)) {
    require_same_lattice(a.lattice(), b.lattice(), "kernel");
    require_same_lattice(a.lattice(), c.lattice(), "kernel");
    require_same_lattice(a.lattice(), d.lattice(), "kernel");
    for (const auto& v : declared_vanishing) require_same_lattice(a.lattice(), v.lattice(), "kernel vanishing");
}

bool KernelSpec::vanishing_declared(const DivisorClass& x) const {
    return std::any_of(declared_vanishing.begin(), declared_vanishing.end(),
                       [&](const DivisorClass& v) { return v == x || v == -x; });
}

KernelSpec kernel_from_spec(const SurfaceSpec& spec, const std::string& a, const std::string& b, const std::string& c,
                            const std::string& d, std::string label) {
    return KernelSpec(spec.parse_class(a), spec.parse_class(b), spec.parse_class(c), spec.parse_class(d),
                      spec.declared(AssumptionKind::NoCohomology), std::move(label));
}

KernelSpec no_cohomology_kernel(const DivisorClass& l, bool vanishing_declared) {
    auto zero = DivisorClass::zero(l.lattice());
    std::vector<DivisorClass> vanishing;
    if (vanishing_declared) vanishing.push_back(l);
    return KernelSpec(zero, zero, l, -l, std::move(vanishing), "no-cohomology");
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Sufficient: return "sufficient";
        case Verdict::NumericallyConsistent: return "numerically-consistent";
        case Verdict::Fails: return "fails";
    }
    return "?";
}

ValidityReport check_sufficient(const KernelSpec& k) {
    const DivisorClass diff = k.a - k.c;
    const DivisorClass bd = k.b - k.d;
    ValidityReport r{
        .sum_ab = k.a + k.b,
        .sum_cd = k.c + k.d,
        .determinants_match = false,
        .ac_square = intersect(diff, diff),
        .ac_square_ok = false,
        .chi_ac = chi_line(diff),
        .vanishing_declared = k.vanishing_declared(diff),
        .chi_bd = chi_line(bd),
        .chi_bd_zero = false,
        .verdict = Verdict::Fails,
    };
    r.determinants_match = r.sum_ab == r.sum_cd;
    r.ac_square_ok = r.ac_square == -4;
    r.chi_bd_zero = r.chi_bd == 0;
    if (r.numeric_conditions()) r.verdict = r.vanishing_declared ? Verdict::Sufficient : Verdict::NumericallyConsistent;
    return r;
}

DeterminantCheck determinant_normalization(const KernelSpec& k) {
    DivisorClass lhs = (chi_line(k.c) - 1) * k.d;
    DivisorClass rhs = k.c - chi_line(k.a) * k.b;
    const bool holds = lhs == rhs;
    return {std::move(lhs), std::move(rhs), holds};
}

bool check_necessary_det(const KernelSpec& k) { return determinant_normalization(k).holds; }

KernelSpec normalize_twist(const KernelSpec& k) {
    auto zero = DivisorClass::zero(k.lattice());
    return KernelSpec(zero, zero, k.c - k.a, k.d - k.b, k.declared_vanishing, k.label);
}

bool check_phiO_identity(const KernelSpec& k) {
    return k.a.is_zero() && k.b.is_zero() && (k.c + k.d).is_zero() && intersect(k.c, k.c) == -4 &&
           k.vanishing_declared(k.c);
}

}  // namespace k3fm
