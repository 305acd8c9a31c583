#pragma once

// Reflexive K3 surfaces: classes h, l with h^2 = 2, l^2 = -12, h.l = 0.
// Degeneracy (effectivity of l+2h) cannot be read off the lattice, so it is
// taken from the surface's declarations, together with the rational curves
// that make up l+2h when it is effective.

#include "k3fm/fm_kernel.hpp"
#include "k3fm/surface_spec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3fm::reflexive {

struct ReflexiveSurface {
    SurfaceSpec spec;
    DivisorClass h, l;
    bool degenerate = false;
    std::vector<DivisorClass> curves;  ///< components of l+2h, with multiplicity
    Integer chi_l2h;                   ///< chi(l+2h), always 0
    /// For a non-degenerate surface with h declared ample, l+2h has no
    /// cohomology: chi = 0, h^0 = 0 by assumption, and h^2(l+2h) = h^0(-l-2h)
    /// = 0 because its degree is negative.
    bool derived_vanishing = false;

    DivisorClass l_plus_2h() const { return l + Integer(2) * h; }
};

/// Throws InvariantViolation naming "H^2=2", "L^2=-12" or "H·L=0", or a
/// curve condition ("c_i^2=-2", "deg(c_i)>0", "Σc_i=ℓ+2h", "2≤n≤4").
ReflexiveSurface validate_reflexive(const SurfaceSpec& spec, const std::string& h_name, const std::string& l_name);

struct Hats {
    DivisorClass l_hat;  ///< 5l + 12h
    DivisorClass h_hat;  ///< 2l + 5h
};

/// Throws InvariantViolation if the hats fail the reflexive relations (they
/// cannot when h, l satisfy them).
Hats hat_classes(const DivisorClass& h, const DivisorClass& l);
Hats hat_classes(const ReflexiveSurface& rs);

struct Decomposition {
    DivisorClass d1, d2;
    bool operator==(const Decomposition&) const = default;
};

struct DecompositionReport {
    Decomposition chosen;
    /// Which branch of the case analysis produced `chosen`.
    std::string rule;
    /// Other valid decompositions found by exhaustive search, lexicographic.
    std::vector<Decomposition> alternatives;
};

/// The case analysis on the rational components c_1..c_n of l+2h.
/// `target` is l+2h. Rejections throw InvariantViolation whose identity is
/// the relation the configuration would have to satisfy, e.g.
/// "c_1·c_3=3/2" for n=3 with a repeated class.
DecompositionReport decompose_curves(const std::vector<DivisorClass>& curves, const DivisorClass& target);

/// decompose_curves on a degenerate surface's declared curves.
DecompositionReport decompose_l2h(const ReflexiveSurface& rs);

/// Every split of the curve multiset into two parts whose sums satisfy
/// d1 + d2 = target, d1^2 = d2^2 = -2, d1.d2 = 0, as unordered pairs
/// (d1 < d2), sorted lexicographically.
std::vector<Decomposition> decompose_brute_force(const std::vector<DivisorClass>& curves, const DivisorClass& target);
std::vector<Decomposition> decompose_brute_force(const ReflexiveSurface& rs);

/// Whether x is a non-negative integer combination of the declared effective
/// classes, irreducible rational classes and curves. Degrees against h bound
/// the search.
bool is_declared_effective(const ReflexiveSurface& rs, const DivisorClass& x);

enum class SurfaceType { TypeI, TypeII };
const char* to_string(SurfaceType t);

struct Classification {
    SurfaceType type;
    Decomposition ordered;  ///< deg(d1) <= deg(d2)
    Integer deg_d1, deg_d2;
    /// Type II only: e = h - d1 with e^2 = -2, h.e = 1, d1.e = 3.
    std::optional<DivisorClass> e;
    std::optional<Integer> e_square, h_dot_e, d1_dot_e;
};

Classification classify_type(const DivisorClass& h, const Decomposition& dec);
Classification classify_type(const ReflexiveSurface& rs, const Decomposition& dec);

enum class Variant { Nondegenerate, TypeI, TypeII };
const char* to_string(Variant v);
/// Accepts "nondegenerate", "typeI", "typeII" (and the kernel labels).
Variant parse_variant(const std::string& text);

/// The kernel classes (A, B, C, D) for the variant. Degenerate variants need
/// the decomposition; asking for a variant that does not match the surface
/// throws InvariantViolation.
KernelSpec build_kernel(const ReflexiveSurface& rs, Variant variant,
                        const std::optional<Decomposition>& dec = std::nullopt);

}  // namespace k3fm::reflexive
