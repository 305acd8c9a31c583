#include "k3fm/report.hpp"

#include <algorithm>
#include <sstream>

namespace k3fm::report {

Json to_json(const Integer& v) {
    if (auto small = to_int64(v)) return *small;
    return v.str();
}

Json to_json(const Rational& q) { return to_fraction_string(q); }

Json to_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(to_json(q));
    return out;
}

Json to_json(const DivisorClass& x) {
    Json out = Json::array();
    for (const auto& c : x.coords()) out.push_back(to_json(c));
    return out;
}

namespace {

template <typename M>
Json matrix_json(const M& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

Json optional_json(const auto& v) {
    if (!v) return nullptr;
    return to_json(*v);
}

}  // namespace

Json to_json(const IntMatrix& m) { return matrix_json(m); }
Json to_json(const RatMatrix& m) { return matrix_json(m); }

Json to_json(const ChVector& v) { return {{"r", to_json(v.r)}, {"f", to_json(v.f)}, {"t", to_json(v.t)}}; }

Json to_json(const SurfaceSpec& spec) {
    Json classes = Json::object();
    for (const auto& [name, c] : spec.classes()) classes[name] = to_json(c);
    Json assumptions = Json::array();
    for (const auto& a : spec.assumptions()) assumptions.push_back({{"kind", to_string(a.kind)}, {"class", a.class_name}});
    return {{"rank", spec.lattice()->rank()},
            {"gram", to_json(spec.lattice()->gram())},
            {"classes", classes},
            {"assumptions", assumptions},
            {"curves", spec.curve_names()}};
}

Json to_json(const KernelSpec& k) {
    Json vanishing = Json::array();
    for (const auto& v : k.declared_vanishing) vanishing.push_back(to_json(v));
    return {{"A", to_json(k.a)},
            {"B", to_json(k.b)},
            {"C", to_json(k.c)},
            {"D", to_json(k.d)},
            {"declared_vanishing", vanishing},
            {"label", k.label}};
}

Json to_json(const ValidityReport& r) {
    return {{"sum_ab", to_json(r.sum_ab)},
            {"sum_cd", to_json(r.sum_cd)},
            {"determinants_match", r.determinants_match},
            {"ac_square", to_json(r.ac_square)},
            {"ac_square_ok", r.ac_square_ok},
            {"chi_ac", to_json(r.chi_ac)},
            {"vanishing_declared", r.vanishing_declared},
            {"chi_bd", to_json(r.chi_bd)},
            {"chi_bd_zero", r.chi_bd_zero},
            {"verdict", to_string(r.verdict)}};
}

Json to_json(const DeterminantCheck& d) {
    return {{"lhs", to_json(d.lhs)}, {"rhs", to_json(d.rhs)}, {"holds", d.holds}};
}

Json to_json(const CohTransform& t) {
    return {{"origin", t.origin()},
            {"shift_parity", t.shift_parity()},
            {"matrix", to_json(t.action())},
            {"determinant", to_json(determinant(t))},
            {"flagged_non_equivalence", t.flagged_non_equivalence()}};
}

Json to_json(const DiffReport& r, std::size_t max_entries) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < r.entries.size() && i < max_entries; ++i) {
        const auto& e = r.entries[i];
        Json entry = {{"input", to_json(e.input)},
                      {"engine", to_json(e.engine)},
                      {"displayed", to_json(e.displayed)},
                      {"diff", to_json(e.diff)}};
        entry["diff_c1_in_basis"] = e.diff_c1_in_basis ? to_json(*e.diff_c1_in_basis) : Json(nullptr);
        entries.push_back(std::move(entry));
    }
    return {{"formula", to_string(r.formula)},
            {"points_checked", r.points_checked},
            {"mismatches", r.entries.size()},
            {"basis", r.basis_names},
            {"entries", entries},
            {"entries_truncated", r.entries.size() > max_entries}};
}

Json to_json(const pic1::Solution& s) {
    return {{"n", to_json(s.n)},     {"lsq", to_json(s.lsq)}, {"z", to_json(s.z)},
            {"c", to_json(s.c)},     {"x", to_json(s.x)},     {"alpha", to_json(s.alpha)},
            {"y", to_json(s.y)},     {"matrix", to_json(s.matrix)}, {"det", to_json(s.det)}};
}

Json to_json(const pic1::Selection& s) {
    return {{"selected", to_json(s.selected)},
            {"excluded", to_json(s.excluded)},
            {"excluded_slope_ratio", to_json(s.excluded_slope_ratio)},
            {"obstruction_holds", s.obstruction_holds}};
}

Json to_json(const pic1::OracleResult& r) {
    Json sols = Json::array();
    for (const auto& s : r.solutions) sols.push_back(to_json(s));
    return {{"bound", to_json(r.bound)}, {"conclusive", r.conclusive}, {"solutions", sols}};
}

Json to_json(const reflexive::ReflexiveSurface& rs) {
    Json curves = Json::array();
    for (const auto& c : rs.curves) curves.push_back(to_json(c));
    return {{"h", to_json(rs.h)},
            {"l", to_json(rs.l)},
            {"degenerate", rs.degenerate},
            {"curves", curves},
            {"chi_l_plus_2h", to_json(rs.chi_l2h)},
            {"derived_vanishing_l_plus_2h", rs.derived_vanishing}};
}

Json to_json(const reflexive::Hats& h) {
    return {{"l_hat", to_json(h.l_hat)},
            {"h_hat", to_json(h.h_hat)},
            {"h_hat_square", to_json(intersect(h.h_hat, h.h_hat))},
            {"l_hat_square", to_json(intersect(h.l_hat, h.l_hat))},
            {"h_hat_dot_l_hat", to_json(intersect(h.h_hat, h.l_hat))}};
}

Json to_json(const reflexive::Decomposition& d) { return {{"d1", to_json(d.d1)}, {"d2", to_json(d.d2)}}; }

Json to_json(const reflexive::DecompositionReport& r) {
    Json alts = Json::array();
    for (const auto& d : r.alternatives) alts.push_back(to_json(d));
    return {{"chosen", to_json(r.chosen)}, {"rule", r.rule}, {"alternatives", alts}};
}

Json to_json(const reflexive::Classification& c) {
    return {{"type", to_string(c.type)},
            {"ordered", to_json(c.ordered)},
            {"deg_d1", to_json(c.deg_d1)},
            {"deg_d2", to_json(c.deg_d2)},
            {"e", optional_json(c.e)},
            {"e_square", optional_json(c.e_square)},
            {"h_dot_e", optional_json(c.h_dot_e)},
            {"d1_dot_e", optional_json(c.d1_dot_e)}};
}

Json to_json(const moduli::StrataReport& r) {
    Json chain = Json::array();
    const auto& labels = moduli::chain_labels();
    for (std::size_t i = 0; i < r.verdicts.size(); ++i) chain.push_back({{"inequality", labels[i]}, {"holds", r.verdicts[i]}});
    Json lemma = {{"lm_minus_m2", to_json(r.lm_minus_m2)},
                  {"inequality", static_cast<bool>(r.lemma_inequality)},
                  {"a", optional_json(r.a)},
                  {"premise", r.lemma_premise ? Json(*r.lemma_premise) : Json(nullptr)},
                  {"implication", r.lemma_implication ? Json(*r.lemma_implication) : Json(nullptr)}};
    Json dep = {{"dependent", r.dependence.dependent},
                {"alpha", to_json(r.dependence.alpha)},
                {"beta", to_json(r.dependence.beta)}};
    const auto& rp = r.replay;
    Json replay = {{"applicable", rp.applicable},
                   {"z", to_json(rp.z)},
                   {"premise", rp.premise},
                   {"lhs", to_json(rp.lhs)},
                   {"rhs", to_json(rp.rhs)},
                   {"derived_holds", rp.derived_holds},
                   {"m_square_negative", rp.m_square_negative},
                   {"l_square_nonnegative", rp.l_square_nonnegative},
                   {"implication_holds", rp.implication_holds}};
    return {{"l", to_json(r.l)},
            {"m", to_json(r.m)},
            {"h", to_json(r.h)},
            {"z", to_json(r.z)},
            {"slopes", to_json(r.slopes)},
            {"chain", chain},
            {"chain_holds", r.chain_holds},
            {"lemma", lemma},
            {"dependence", dep},
            {"replay", replay}};
}

Json to_json(const moduli::PrimitiveReport& r) {
    return {{"n", to_json(r.n)},
            {"h_square", to_json(r.h_square)},
            {"lm_minus_m2", to_json(r.lm_minus_m2)},
            {"z", to_json(r.z)},
            {"inequality_holds", r.inequality_holds},
            {"dependent", r.dependent},
            {"excluded", r.excluded}};
}

Json to_json(const moduli::HilbReport& r) {
    return {{"n", r.n},
            {"flavor", to_string(r.flavor)},
            {"input", to_json(r.input)},
            {"image", to_json(r.image)},
            {"mukai", {{"r", to_json(r.r)}, {"f", to_json(r.f)}, {"s", to_json(r.s)}}},
            {"global_sign", r.global_sign},
            {"expected", {{"r", to_json(r.expected_r)}, {"coefficient", to_json(r.expected_coefficient)},
                          {"s", to_json(r.expected_s)}}},
            {"inner_sign", r.inner_sign ? Json(*r.inner_sign) : Json(nullptr)},
            {"matches", r.matches},
            {"self_pairing", to_json(r.self_pairing)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object() && !j.empty()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
        return;
    }
    // Arrays of scalars stay on one line; nested arrays are indexed.
    if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
        return;
    }
    out.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
}

}  // namespace

std::string format_text(const Json& j) {
    std::vector<std::pair<std::string, std::string>> lines;
    flatten(j, "", lines);
    std::size_t width = 0;
    for (const auto& [k, v] : lines) width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : lines) os << k << ':' << std::string(width - k.size() + 1, ' ') << v << '\n';
    return os.str();
}

}  // namespace k3fm::report
