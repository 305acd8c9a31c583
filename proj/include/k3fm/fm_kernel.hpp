#pragma once

// Rank-2 kernels given as extensions
//   0 -> A [x] B -> E -> (C [x] D) I_Delta -> 0
// on X x X, described by the four line-bundle classes a, b, c, d.

#include "k3fm/ns_lattice.hpp"
#include "k3fm/surface_spec.hpp"

#include <string>
#include <vector>

namespace k3fm {

struct KernelSpec {
    DivisorClass a, b, c, d;
    /// Classes declared to have no cohomology. H^j(L) = 0 for all j iff the
    /// same holds for L^*, so a class covers its negative as well.
    std::vector<DivisorClass> declared_vanishing;
    /// Free-form tag describing where the kernel came from ("no-cohomology",
    /// "reflexive-nondegenerate", ...). Carried into transforms built from it.
    std::string label;

    KernelSpec(DivisorClass a, DivisorClass b, DivisorClass c, DivisorClass d,
               std::vector<DivisorClass> declared_vanishing = {}, std::string label = "kernel");

    const LatticePtr& lattice() const noexcept { return a.lattice(); }
    bool vanishing_declared(const DivisorClass& x) const;
};

/// Resolves four class expressions and collects the surface's no_cohomology
/// declarations.
KernelSpec kernel_from_spec(const SurfaceSpec& spec, const std::string& a, const std::string& b, const std::string& c,
                            const std::string& d, std::string label = "kernel");

/// The kernel (O, O, L, L^*) attached to a line bundle L with no cohomology.
KernelSpec no_cohomology_kernel(const DivisorClass& l, bool vanishing_declared = true);

enum class Verdict { Sufficient, NumericallyConsistent, Fails };
const char* to_string(Verdict v);

struct ValidityReport {
    DivisorClass sum_ab;     ///< a + b
    DivisorClass sum_cd;     ///< c + d
    bool determinants_match; ///< a + b = c + d
    Integer ac_square;       ///< (a - c)^2
    bool ac_square_ok;       ///< (a - c)^2 = -4, i.e. chi(A C^*) = 0
    Integer chi_ac;          ///< chi(A C^*)
    bool vanishing_declared; ///< a - c is covered by a no-cohomology declaration
    Integer chi_bd;          ///< chi(B D^*)
    bool chi_bd_zero;
    Verdict verdict;

    bool numeric_conditions() const { return determinants_match && ac_square_ok; }
};

ValidityReport check_sufficient(const KernelSpec& k);

struct DeterminantCheck {
    DivisorClass lhs;  ///< (chi(C) - 1) d
    DivisorClass rhs;  ///< c - chi(A) b
    bool holds;
};

/// The normalization det Phi(O) = O, as an identity between classes.
DeterminantCheck determinant_normalization(const KernelSpec& k);
bool check_necessary_det(const KernelSpec& k);

/// Twists by A^* [x] B^*: (0, 0, c - a, d - b).
KernelSpec normalize_twist(const KernelSpec& k);

/// True iff the kernel has the exact shape forced by Phi(O) = O:
/// a = b = 0, c = -d, c^2 = -4 and c declared without cohomology.
bool check_phiO_identity(const KernelSpec& k);

}  // namespace k3fm
