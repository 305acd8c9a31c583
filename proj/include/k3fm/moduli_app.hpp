#pragma once

// Numerical consequences of a rank-2 transform: the length of the zero
// scheme of a section of E_s, the slope chain for sub-line-bundles, the
// primitivity test for an ample generator, and the Mukai vectors of ideal
// sheaves of points after transforming.

#include "k3fm/fm_transform.hpp"
#include "k3fm/mukai.hpp"
#include "k3fm/surface_spec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3fm::moduli {

/// z = (lsq + 8) / 4 from l^2 = 4|Z(s)| - 8. Throws InputError("lsq") unless
/// lsq is divisible by 4 and at least -8.
Integer es_relation(const Integer& lsq);
/// The same relation without the integrality requirement.
Rational es_length(const Integer& lsq);

/// Exact proportionality test for two classes. When they are dependent,
/// `alpha`, `beta` is the primitive pair (alpha > 0, or beta > 0 when
/// alpha = 0) with alpha m = beta l.
struct Dependence {
    bool dependent = false;
    Integer alpha = 0, beta = 0;
};
Dependence proportionality(const DivisorClass& m, const DivisorClass& l);

/// The contradiction at the end of the slope lemma, replayed on concrete
/// numbers. Given alpha m = beta l, beta != 0 and 4z = l^2 + 8, the inequality
/// l.m - m^2 > z forces 8 beta^2 < -(alpha - 2 beta)^2 m^2, hence m^2 < 0.
struct LemmaReplay {
    bool applicable = false;    ///< dependent with beta != 0
    Rational z;                 ///< (l^2 + 8)/4
    bool premise = false;       ///< l.m - m^2 > z
    Rational lhs, rhs;          ///< 8 beta^2 and -(alpha - 2 beta)^2 m^2
    bool derived_holds = false; ///< lhs < rhs
    bool m_square_negative = false;
    bool l_square_nonnegative = false;
    /// premise => derived_holds, checked on these numbers.
    bool implication_holds = true;
};
LemmaReplay replay_lemma_contradiction(const DivisorClass& l, const DivisorClass& m);

struct StrataReport {
    DivisorClass l, m, h;
    Integer z;
    /// mu(M), mu(L)/2, mu(L M^*), mu(L), h^2, in chain order.
    std::vector<Rational> slopes;
    /// 0 < mu(M), mu(M) < mu(L)/2, mu(L)/2 < mu(LM^*), mu(LM^*) < mu(L), mu(L) <= h^2.
    std::vector<bool> verdicts;
    bool chain_holds = false;

    Integer lm_minus_m2;          ///< l.m - m^2
    bool lemma_inequality = false;///< l.m - m^2 > z
    std::optional<Integer> a;     ///< stratification bound, when supplied
    std::optional<bool> lemma_premise;      ///< a < mu(M) < mu(L) - a
    std::optional<bool> lemma_implication;  ///< premise => inequality

    Dependence dependence;
    LemmaReplay replay;
};

inline const std::vector<std::string>& chain_labels() {
    static const std::vector<std::string> labels{"0<μ(M)", "μ(M)<½μ(L)", "½μ(L)<μ(LM^*)", "μ(LM^*)<μ(L)",
                                                 "μ(L)≤h^2"};
    return labels;
}

/// Requires h to be declared ample in `spec`; throws InvariantViolation
/// ("h ample") otherwise.
StrataReport strata_chain(const SurfaceSpec& spec, const DivisorClass& l, const DivisorClass& m,
                          const DivisorClass& h, const Integer& z, const std::optional<Integer>& a = std::nullopt);

struct PrimitiveReport {
    Integer n;              ///< l = n h
    Integer h_square;
    Integer lm_minus_m2;    ///< with m = h: (n - 1) h^2
    Rational z;             ///< (n^2 h^2 + 8)/4, not necessarily integral
    bool inequality_holds;  ///< (n - 1) h^2 > z; never true
    bool dependent;         ///< l and m = h are proportional; always true
    /// The lemma requires the inequality and independence; either failure
    /// excludes a rank-2 transform with l = n h.
    bool excluded;
};

/// Throws InvariantViolation("ℓ=nh") unless l is an exact multiple n h with
/// n >= 2.
PrimitiveReport check_ample_primitive(const DivisorClass& l, const DivisorClass& h);

enum class Flavor { NoCohomology, Reflexive };
const char* to_string(Flavor f);
Flavor parse_flavor(const std::string& text);

struct HilbReport {
    long long n;
    Flavor flavor;
    ChVector input;             ///< ch(I_W) = (1, 0, -n)
    ChVector image;
    /// Mukai vector of the image, multiplied by `global_sign` so the rank is
    /// non-negative (and the c1 leading coordinate positive at rank 0).
    Rational r, s;
    std::vector<Rational> f;
    int global_sign = 1;
    /// The stated vector: (1+2n, n key, 1-3n) or (2n-1, n key, -n-1).
    Integer expected_r, expected_s, expected_coefficient;
    /// +1 or -1 on the key class when the normalized vector matches.
    std::optional<int> inner_sign;
    bool matches = false;
    Rational self_pairing;      ///< <v, v>; equals 2n - 2
};

/// Applies t to ch(I_W) and compares with the stated vector for the flavor,
/// with `key` the class multiplying n (l for the no-cohomology flavor, the
/// hat class for the reflexive one). Throws InputError("flavor") when the
/// transform was not built from a matching kernel.
HilbReport hilb_moduli_vector(const CohTransform& t, long long n, Flavor flavor, const DivisorClass& key);

}  // namespace k3fm::moduli
