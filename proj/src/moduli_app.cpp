#include "k3fm/moduli_app.hpp"

#include <algorithm>

namespace k3fm::moduli {

Integer es_relation(const Integer& lsq) {
    if (lsq % 4 != 0 || lsq < -8)
        throw InputError("lsq", "l^2 = " + lsq.str() + " is not of the form 4|Z| - 8 with |Z| >= 0");
    return (lsq + 8) / 4;
}

Rational es_length(const Integer& lsq) { return Rational(lsq + 8, 4); }

Dependence proportionality(const DivisorClass& m, const DivisorClass& l) {
    require_same_lattice(m.lattice(), l.lattice(), "proportionality");
    const auto& x = m.coords();
    const auto& y = l.coords();
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[i] * y[j] - x[j] * y[i] != 0) return {};
    Dependence d{true, 0, 1};
    if (l.is_zero()) return d;  // 0 * m = 1 * l
    if (m.is_zero()) return {true, 1, 0};
    std::size_t i = 0;
    while (y[i] == 0) ++i;
    Integer alpha = y[i], beta = x[i];
    const Integer g = gcd(alpha, beta);
    alpha /= g;
    beta /= g;
    if (alpha < 0) alpha = -alpha, beta = -beta;
    return {true, alpha, beta};
}

LemmaReplay replay_lemma_contradiction(const DivisorClass& l, const DivisorClass& m) {
    LemmaReplay r;
    const Integer l2 = intersect(l, l), m2 = intersect(m, m), lm = intersect(l, m);
    r.z = es_length(l2);
    r.premise = Rational(lm - m2) > r.z;
    r.m_square_negative = m2 < 0;
    r.l_square_nonnegative = l2 >= 0;
    const Dependence d = proportionality(m, l);
    r.applicable = d.dependent && d.beta != 0;
    if (!r.applicable) return r;
    const Integer diff = d.alpha - 2 * d.beta;
    r.lhs = Rational(8 * d.beta * d.beta);
    r.rhs = Rational(-diff * diff * m2);
    r.derived_holds = r.lhs < r.rhs;
    r.implication_holds = !r.premise || r.derived_holds;
    return r;
}

StrataReport strata_chain(const SurfaceSpec& spec, const DivisorClass& l, const DivisorClass& m,
                          const DivisorClass& h, const Integer& z, const std::optional<Integer>& a) {
    if (!spec.declares(AssumptionKind::Ample, h))
        throw InvariantViolation("h ample", "slopes are taken against a polarization; declare h ample first");
    StrataReport r{l, m, h, z, {}, {}, false, 0, false, a, {}, {}, {}, {}};
    const Rational mu_m(degree(m, h)), mu_l(degree(l, h)), mu_lm(degree(l - m, h));
    const Rational h2(intersect(h, h));
    r.slopes = {mu_m, mu_l / 2, mu_lm, mu_l, h2};
    r.verdicts = {0 < mu_m, mu_m < mu_l / 2, mu_l / 2 < mu_lm, mu_lm < mu_l, mu_l <= h2};
    r.chain_holds = std::all_of(r.verdicts.begin(), r.verdicts.end(), [](bool b) { return b; });

    r.lm_minus_m2 = intersect(l, m) - intersect(m, m);
    r.lemma_inequality = r.lm_minus_m2 > z;
    if (a) {
        r.lemma_premise = Rational(*a) < mu_m && mu_m < mu_l - Rational(*a);
        r.lemma_implication = !*r.lemma_premise || r.lemma_inequality;
    }
    r.dependence = proportionality(m, l);
    r.replay = replay_lemma_contradiction(l, m);
    return r;
}

PrimitiveReport check_ample_primitive(const DivisorClass& l, const DivisorClass& h) {
    require_same_lattice(l.lattice(), h.lattice(), "primitive check");
    if (h.is_zero()) throw InvariantViolation("ℓ=nh", "h is zero");
    std::size_t i = 0;
    while (h.coords()[i] == 0) ++i;
    const Rational ratio(l.coords()[i], h.coords()[i]);
    if (!is_integral(ratio) || !(to_integer(ratio, "multiple") * h == l))
        throw InvariantViolation("ℓ=nh", "l is not an integer multiple of h");
    PrimitiveReport r;
    r.n = to_integer(ratio, "multiple");
    if (r.n < 2) throw InvariantViolation("n≥2", "l = " + r.n.str() + " h is not a proper multiple");
    r.h_square = intersect(h, h);
    r.lm_minus_m2 = (r.n - 1) * r.h_square;
    r.z = es_length(intersect(l, l));
    r.inequality_holds = Rational(r.lm_minus_m2) > r.z;
    r.dependent = proportionality(h, l).dependent;
    r.excluded = !r.inequality_holds || r.dependent;
    return r;
}

const char* to_string(Flavor f) { return f == Flavor::NoCohomology ? "no-cohomology" : "reflexive"; }

Flavor parse_flavor(const std::string& text) {
    if (text == "no-cohomology") return Flavor::NoCohomology;
    if (text == "reflexive") return Flavor::Reflexive;
    throw InputError("flavor", "unknown flavor '" + text + "' (expected no-cohomology or reflexive)");
}

HilbReport hilb_moduli_vector(const CohTransform& t, long long n, Flavor flavor, const DivisorClass& key) {
    if (n < 0) throw InputError("n", "n must be non-negative");
    const std::string& origin = t.origin();
    const bool ok = flavor == Flavor::NoCohomology ? origin == "no-cohomology" : origin.rfind("reflexive", 0) == 0;
    if (!ok)
        throw InputError("flavor", std::string("a ") + to_string(flavor) + " vector needs a transform built from a " +
                                       to_string(flavor) + " kernel, got '" + origin + "'");
    require_same_lattice(key.lattice(), t.target(), "hilb-moduli key class");

    HilbReport r;
    r.n = n;
    r.flavor = flavor;
    r.input = standard_ch::ideal(t.source(), n).to_vector();
    r.image = apply(t, r.input);
    r.r = r.image.r;
    r.f = r.image.f;
    r.s = r.image.t + r.image.r;

    const Rational self = t.target()->pair(r.f, r.f) - 2 * r.r * r.s;
    r.self_pairing = self;

    bool negate = r.r < 0;
    if (r.r == 0)
        for (const auto& c : r.f)
            if (c != 0) {
                negate = c < 0;
                break;
            }
    if (negate) {
        r.global_sign = -1;
        r.r = -r.r;
        r.s = -r.s;
        for (auto& c : r.f) c = -c;
    }

    const Integer nn(n);
    if (flavor == Flavor::Reflexive) {
        r.expected_r = 1 + 2 * nn;
        r.expected_s = 1 - 3 * nn;
    } else {
        r.expected_r = 2 * nn - 1;
        r.expected_s = -nn - 1;
    }
    r.expected_coefficient = nn;
    // n = 0: (-1, 0, -1) for the second vector is (1, 0, 1) up to sign.
    if (r.expected_r < 0) {
        r.expected_r = -r.expected_r;
        r.expected_s = -r.expected_s;
    }

    const auto plus = (nn * key).rational_coords();
    const auto minus = (-nn * key).rational_coords();
    if (r.f == plus) r.inner_sign = 1;
    else if (r.f == minus) r.inner_sign = -1;
    r.matches = r.inner_sign && r.r == Rational(r.expected_r) && r.s == Rational(r.expected_s);
    return r;
}

}  // namespace k3fm::moduli
