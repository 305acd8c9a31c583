#include "k3fm/cli.hpp"

#include "k3fm/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace k3fm::cli {

namespace {

using report::Json;
using report::to_json;

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names{
        "surface-validate", "chi",        "kernel-check",       "transform-apply",    "transform-crosscheck",
        "pic1",             "reflexive",  "reflexive-validate", "reflexive-hats",     "reflexive-decompose",
        "reflexive-classify", "reflexive-kernel", "hilb-moduli", "strata",            "primitive-check"};
    return names;
}

struct Options {
    std::string format;
    std::string spec;
    std::string cls;
    std::string a = "0", b = "0", c = "0", d = "0";
    std::string builder;
    std::string ch;
    std::string L;
    std::string h = "h", l = "l", m;
    std::string variant;
    std::string formula;
    std::string grid = "default";
    std::string count = "10000";
    std::string seed = "1";
    std::string max_entries = "20";
    std::string lsq;
    bool oracle = false;
    std::string bound;
    std::string n;
    std::string flavor;
    std::string z;
    std::string stratum_bound;
};

/// Thrown when a computation succeeds but the mathematics says no.
struct Rejection {
    Json result;
    std::vector<std::string> violations;
};

Integer parse_integer(const std::string& text, const char* flag) {
    if (text.empty()) throw InputError("flag", std::string("missing value for ") + flag);
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size() || text.find_first_not_of("0123456789", i) != std::string::npos)
        throw InputError("flag", std::string(flag) + " expects an integer, got '" + text + "'");
    return Integer(text[0] == '+' ? text.substr(1) : text);
}

long long parse_small(const std::string& text, const char* flag) {
    auto v = to_int64(parse_integer(text, flag));
    if (!v) throw InputError("flag", std::string(flag) + " is out of range");
    return *v;
}

SurfaceSpec builtin_no_cohomology() {
    auto lattice = NSLattice::make(IntMatrix{{-4}});
    return SurfaceSpec(lattice, {{"l", DivisorClass(lattice, {1})}}, {{AssumptionKind::NoCohomology, "l"}});
}

SurfaceSpec builtin_reflexive() {
    auto lattice = NSLattice::make(IntMatrix{{2, 0}, {0, -12}});
    return SurfaceSpec(lattice, {{"h", DivisorClass(lattice, {1, 0})}, {"l", DivisorClass(lattice, {0, 1})}},
                       {{AssumptionKind::Ample, "h"}});
}

std::optional<SurfaceSpec> maybe_spec(const Options& o) {
    if (o.spec.empty()) return std::nullopt;
    return load_surface_spec(o.spec);
}

SurfaceSpec require_spec(const Options& o, const char* command) {
    if (o.spec.empty()) throw InputError("flag", std::string(command) + " needs --spec <file>");
    return load_surface_spec(o.spec);
}

std::string canonical_builder(const std::string& name) {
    static const std::map<std::string, std::string> aliases{
        {"no-cohomology", "no-cohomology"},
        {"thm2.5", "no-cohomology"},
        {"reflexive-nondegenerate", "reflexive-nondegenerate"},
        {"reflexive-type-I", "reflexive-type-I"},
        {"reflexive-type-II", "reflexive-type-II"},
        {"kernel", "kernel"},
        {"picard-rank-one", "picard-rank-one"},
    };
    auto it = aliases.find(name);
    if (it == aliases.end())
        throw InputError("builder", "unknown builder '" + name +
                                        "' (expected no-cohomology, reflexive-nondegenerate, reflexive-type-I, "
                                        "reflexive-type-II, kernel or picard-rank-one)");
    return it->second;
}

struct Built {
    std::string builder;
    SurfaceSpec spec;
    CohTransform transform;
    std::optional<KernelSpec> kernel;
    FormulaParams params;
    FormulaId natural_formula;
};

DivisorClass no_cohomology_class(const Options& o, const SurfaceSpec& spec) {
    if (!o.L.empty()) return spec.parse_class(o.L);
    auto declared = spec.declared(AssumptionKind::NoCohomology);
    if (declared.empty()) throw InputError("flag", "no --L given and the surface declares no no_cohomology class");
    return declared.front();
}

Built build(const Options& o) {
    if (o.builder.empty()) throw InputError("flag", "missing --builder");
    const std::string name = canonical_builder(o.builder);
    auto spec_opt = maybe_spec(o);

    if (name == "no-cohomology") {
        SurfaceSpec spec = spec_opt ? *spec_opt : builtin_no_cohomology();
        const DivisorClass l = no_cohomology_class(o, spec);
        KernelSpec k = no_cohomology_kernel(l, spec.declares(AssumptionKind::NoCohomology, l));
        FormulaParams p;
        p.l = l;
        CohTransform t = from_kernel(k);
        return {name, std::move(spec), std::move(t), std::move(k), std::move(p), FormulaId::NoCohomology};
    }
    if (name == "reflexive-nondegenerate" || name == "reflexive-type-I" || name == "reflexive-type-II") {
        SurfaceSpec spec = spec_opt ? *spec_opt : builtin_reflexive();
        auto rs = reflexive::validate_reflexive(spec, o.h, o.l);
        FormulaParams p;
        p.h = rs.h;
        p.l = rs.l;
        reflexive::Variant variant = reflexive::parse_variant(name);
        FormulaId id = FormulaId::ReflexiveNondegenerate;
        std::optional<reflexive::Decomposition> dec;
        if (variant != reflexive::Variant::Nondegenerate) {
            dec = reflexive::decompose_l2h(rs).chosen;
            auto cls = reflexive::classify_type(rs, *dec);
            p.d1 = cls.ordered.d1;
            p.d2 = cls.ordered.d2;
            id = variant == reflexive::Variant::TypeI ? FormulaId::ReflexiveTypeI : FormulaId::ReflexiveTypeII;
        }
        KernelSpec k = reflexive::build_kernel(rs, variant, dec);
        CohTransform t = from_kernel(k);
        return {name, std::move(spec), std::move(t), std::move(k), std::move(p), id};
    }
    if (name == "kernel") {
        SurfaceSpec spec = require_spec(o, "the kernel builder");
        KernelSpec k = kernel_from_spec(spec, o.a, o.b, o.c, o.d);
        FormulaParams p;
        p.kernel = k;
        CohTransform t = from_kernel(k);
        return {name, std::move(spec), std::move(t), std::move(k), std::move(p), FormulaId::GeneralKernel};
    }
    // picard-rank-one
    const Integer lsq = parse_integer(o.lsq, "--lsq");
    auto n = pic1::existence_test(lsq);
    if (!n) throw InvariantViolation("ℓ^2≡4 (mod 8)", "no rank-2 transform for l^2 = " + lsq.str());
    auto sel = pic1::select_physical(pic1::solve_constraints(*n));
    CohTransform t = pic1::to_transform(sel.selected);
    SurfaceSpec spec(t.source(), {{"l", DivisorClass(t.source(), {1})}}, {{AssumptionKind::Ample, "l"}});
    return {name, std::move(spec), std::move(t), std::nullopt, FormulaParams{}, FormulaId::PicardRankOne};
}

ChVector parse_ch(const std::string& text, const SurfaceSpec& spec) {
    if (text.empty()) throw InputError("flag", "missing --ch");
    std::vector<std::string> fields;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) fields.push_back(item);
    const auto& lattice = spec.lattice();
    const std::size_t rank = lattice->rank();
    ChVector v = ChVector::zero(lattice);
    try {
        if (fields.size() == rank + 2) {
            std::vector<Rational> flat;
            for (const auto& f : fields) flat.push_back(parse_rational(f));
            return ChVector::unflatten(lattice, flat);
        }
        if (fields.size() == 3) {
            v.r = parse_rational(fields[0]);
            v.f = spec.parse_class(fields[1]).rational_coords();
            v.t = parse_rational(fields[2]);
            return v;
        }
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError("ch", "cannot parse --ch '" + text + "': " + e.what());
    }
    throw InputError("ch", "--ch needs " + std::to_string(rank + 2) + " comma-separated values (r, c1 coordinates, ch2) "
                           "or r,<class expression>,ch2");
}

Json cmd_surface_validate(const Options& o) { return to_json(require_spec(o, "surface-validate")); }

Json cmd_chi(const Options& o) {
    SurfaceSpec spec = require_spec(o, "chi");
    if (o.cls.empty()) throw InputError("flag", "chi needs --class <expression>");
    DivisorClass x = spec.parse_class(o.cls);
    return {{"class", to_json(x)}, {"expression", o.cls}, {"square", to_json(intersect(x, x))}, {"chi", to_json(chi_line(x))}};
}

Json cmd_kernel_check(const Options& o) {
    std::optional<KernelSpec> k;
    if (!o.builder.empty()) {
        Built b = build(o);
        if (!b.kernel) throw InputError("builder", "builder '" + o.builder + "' has no kernel classes");
        k = *b.kernel;
    } else {
        SurfaceSpec spec = require_spec(o, "kernel-check");
        k = kernel_from_spec(spec, o.a, o.b, o.c, o.d);
    }
    const ValidityReport v = check_sufficient(*k);
    Json result = {{"kernel", to_json(*k)},
                   {"validity", to_json(v)},
                   {"determinant_normalization", to_json(determinant_normalization(*k))},
                   {"normalized_twist", to_json(normalize_twist(*k))},
                   {"phi_o_identity", check_phiO_identity(*k)}};
    if (v.verdict == Verdict::Fails) {
        std::vector<std::string> violations;
        if (!v.determinants_match) violations.push_back("AB=CD");
        if (!v.ac_square_ok) violations.push_back("(a-c)^2=-4");
        throw Rejection{result, violations};
    }
    return result;
}

Json cmd_transform_apply(const Options& o) {
    Built b = build(o);
    const ChVector input = parse_ch(o.ch, b.spec);
    const ChVector output = apply(b.transform, input);
    auto shift = shift_between(input, output);
    return {{"builder", b.builder},
            {"input", to_json(input)},
            {"output", to_json(output)},
            {"shift_relative_to_input", shift ? Json(*shift) : Json(nullptr)},
            {"flagged_non_equivalence", b.transform.flagged_non_equivalence()}};
}

Json cmd_transform_crosscheck(const Options& o) {
    Built b = build(o);
    const FormulaId id = o.formula.empty() ? b.natural_formula : parse_formula_id(o.formula);
    std::vector<ChVector> grid;
    if (o.grid == "default") grid = default_grid(b.spec.lattice());
    else if (o.grid == "random")
        grid = random_grid(b.spec.lattice(), static_cast<std::size_t>(parse_small(o.count, "--count")),
                           static_cast<std::uint64_t>(parse_small(o.seed, "--seed")));
    else throw InputError("flag", "--grid must be default or random");
    // Any kernel-based builder can be compared with the general block.
    FormulaParams params = b.params;
    if (!params.kernel && b.kernel) params.kernel = b.kernel;
    const DiffReport r = crosscheck_specialized(b.transform, id, params, grid);
    Json result = to_json(r, static_cast<std::size_t>(parse_small(o.max_entries, "--max-entries")));
    result["builder"] = b.builder;
    if (!r.empty()) throw Rejection{result, {"displayed formula agrees with the pushforward"}};
    return result;
}

Json cmd_pic1(const Options& o) {
    const Integer lsq = parse_integer(o.lsq, "--lsq");
    auto n = pic1::existence_test(lsq);
    if (!n) throw Rejection{{{"lsq", to_json(lsq)}, {"exists", false}, {"n", nullptr}}, {"ℓ^2≡4 (mod 8)"}};
    auto pair = pic1::solve_constraints(*n);
    auto sel = pic1::select_physical(pair);
    Json result = {{"lsq", to_json(lsq)},
                   {"exists", true},
                   {"n", to_json(*n)},
                   {"solutions", {to_json(pair.first), to_json(pair.second)}},
                   {"selection", to_json(sel)},
                   {"matrix", to_json(sel.selected.matrix)},
                   {"det", to_json(sel.selected.det)},
                   {"isometry", {{"selected", is_mukai_isometry(pic1::to_transform(sel.selected))},
                                 {"excluded", is_mukai_isometry(pic1::to_transform(sel.excluded))}}},
                   {"oracle", nullptr}};
    std::vector<std::string> violations;
    if (o.oracle) {
        const Integer bound = o.bound.empty() ? 4 * *n + 20 : parse_integer(o.bound, "--bound");
        auto oracle = pic1::brute_force_oracle(*n, bound);
        const bool agrees = oracle.solutions.size() == 2 && oracle.solutions[0] == pair.second &&
                            oracle.solutions[1] == pair.first;
        Json oj = to_json(oracle);
        oj["agrees"] = agrees;
        result["oracle"] = oj;
        if (!oracle.conclusive) violations.push_back("oracle bound >= 4n+8");
        else if (!agrees) violations.push_back("oracle agrees with the closed form");
    }
    if (!violations.empty()) throw Rejection{result, violations};
    return result;
}

reflexive::ReflexiveSurface reflexive_surface(const Options& o) {
    return reflexive::validate_reflexive(require_spec(o, "reflexive"), o.h, o.l);
}

Json cmd_reflexive(const std::string& sub, const Options& o) {
    auto rs = reflexive_surface(o);
    if (sub == "validate") return to_json(rs);
    if (sub == "hats") return to_json(reflexive::hat_classes(rs));
    if (sub == "decompose") {
        auto rep = reflexive::decompose_l2h(rs);
        auto brute = reflexive::decompose_brute_force(rs);
        Json all = Json::array();
        for (const auto& d : brute) all.push_back(to_json(d));
        const auto key = rep.chosen.d2 < rep.chosen.d1 ? reflexive::Decomposition{rep.chosen.d2, rep.chosen.d1}
                                                       : rep.chosen;
        const bool contained = std::find(brute.begin(), brute.end(), key) != brute.end();
        const bool cross = reflexive::is_declared_effective(rs, rep.chosen.d1 - rep.chosen.d2) ||
                           reflexive::is_declared_effective(rs, rep.chosen.d2 - rep.chosen.d1);
        Json result = to_json(rep);
        result["brute_force"] = all;
        result["contained_in_brute_force"] = contained;
        result["difference_declared_effective"] = cross;
        if (!contained) throw Rejection{result, {"case analysis result is among the exhaustive splits"}};
        return result;
    }
    if (sub == "classify") {
        auto rep = reflexive::decompose_l2h(rs);
        return {{"decomposition", to_json(rep.chosen)}, {"classification", to_json(reflexive::classify_type(rs, rep.chosen))}};
    }
    if (sub == "kernel") {
        reflexive::Variant variant;
        std::optional<reflexive::Decomposition> dec;
        if (!o.variant.empty()) variant = reflexive::parse_variant(o.variant);
        else if (!rs.degenerate) variant = reflexive::Variant::Nondegenerate;
        else {
            dec = reflexive::decompose_l2h(rs).chosen;
            variant = reflexive::classify_type(rs, *dec).type == reflexive::SurfaceType::TypeI
                          ? reflexive::Variant::TypeI
                          : reflexive::Variant::TypeII;
        }
        KernelSpec k = reflexive::build_kernel(rs, variant, dec);
        const ValidityReport v = check_sufficient(k);
        Json result = {{"variant", to_string(variant)}, {"kernel", to_json(k)}, {"validity", to_json(v)}};
        if (v.verdict == Verdict::Fails) throw Rejection{result, {"AB=CD", "(a-c)^2=-4"}};
        return result;
    }
    throw InputError("usage", "unknown reflexive subcommand '" + sub + "'");
}

Json cmd_hilb(const Options& o) {
    const long long n = parse_small(o.n, "--n");
    if (o.flavor.empty()) throw InputError("flag", "hilb-moduli needs --flavor no-cohomology|reflexive");
    const moduli::Flavor flavor = moduli::parse_flavor(o.flavor);
    Options with_builder = o;
    if (with_builder.builder.empty())
        with_builder.builder = flavor == moduli::Flavor::NoCohomology ? "no-cohomology" : "reflexive-nondegenerate";
    Built b = build(with_builder);
    const bool has_key = flavor == moduli::Flavor::NoCohomology ? b.params.l.has_value()
                                                                  : b.params.h.has_value() && b.params.l.has_value();
    if (!has_key)
        throw InputError("flavor", std::string("a ") + moduli::to_string(flavor) +
                                       " vector needs a transform built from a " + moduli::to_string(flavor) +
                                       " kernel, got '" + b.builder + "'");
    DivisorClass key = flavor == moduli::Flavor::NoCohomology ? *b.params.l
                                                              : reflexive::hat_classes(*b.params.h, *b.params.l).l_hat;
    auto r = moduli::hilb_moduli_vector(b.transform, n, flavor, key);
    Json result = to_json(r);
    result["builder"] = b.builder;
    result["key_class"] = to_json(key);
    if (!r.matches) throw Rejection{result, {"stated Mukai vector up to sign"}};
    return result;
}

Json cmd_strata(const Options& o) {
    SurfaceSpec spec = require_spec(o, "strata");
    if (o.m.empty()) throw InputError("flag", "strata needs --m <class>");
    auto r = moduli::strata_chain(spec, spec.parse_class(o.l), spec.parse_class(o.m), spec.parse_class(o.h),
                                  parse_integer(o.z, "--z"),
                                  o.stratum_bound.empty() ? std::nullopt
                                                          : std::optional<Integer>(parse_integer(o.stratum_bound, "--a")));
    Json result = to_json(r);
    std::vector<std::string> violations;
    if (r.lemma_implication && !*r.lemma_implication) violations.push_back("ℓ·m-m^2>z");
    if (!r.replay.implication_holds) violations.push_back("8β^2<-(α-2β)^2m^2");
    if (!violations.empty()) throw Rejection{result, violations};
    return result;
}

Json cmd_primitive(const Options& o) {
    SurfaceSpec spec = require_spec(o, "primitive-check");
    const DivisorClass h = spec.parse_class(o.h);
    if (!spec.declares(AssumptionKind::Ample, h))
        throw InvariantViolation("h ample", "primitive-check needs h declared ample");
    return to_json(moduli::check_ample_primitive(spec.parse_class(o.l), h));
}

Json envelope(const std::string& command) {
    return {{"command", command}, {"ok", true}, {"result", nullptr}, {"violations", Json::array()}};
}

void emit(std::ostream& out, const Json& j, const std::string& format) {
    out << (format == "text" ? report::format_text(j) : report::dump(j));
}

}  // namespace

std::string usage() {
    return "usage: k3fm <command> [options]\n"
           "\n"
           "commands:\n"
           "  surface-validate      --spec FILE\n"
           "  chi                   --spec FILE --class EXPR\n"
           "  kernel-check          --spec FILE --A EXPR --B EXPR --C EXPR --D EXPR | --builder NAME\n"
           "  transform-apply       --builder NAME --ch VALUES [--spec FILE]\n"
           "  transform-crosscheck  --builder NAME [--formula ID] [--grid default|random --count N --seed S]\n"
           "  pic1                  --lsq N [--oracle [--bound B]]\n"
           "  reflexive validate|hats|decompose|classify|kernel  --spec FILE [--h NAME --l NAME --variant V]\n"
           "  reflexive-decompose, reflexive-classify, reflexive-kernel (same as above)\n"
           "  hilb-moduli           --n N --flavor no-cohomology|reflexive [--builder NAME --spec FILE]\n"
           "  strata                --spec FILE --l EXPR --m EXPR --h EXPR --z N [--a N]\n"
           "  primitive-check       --spec FILE --l EXPR --h EXPR\n"
           "\n"
           "builders: no-cohomology (alias thm2.5), reflexive-nondegenerate,\n"
           "          reflexive-type-I, reflexive-type-II, kernel, picard-rank-one (--lsq N)\n"
           "formulas: general-kernel, no-cohomology, reflexive-nondegenerate, reflexive-type-I,\n"
           "          reflexive-type-II, picard-rank-one\n"
           "\n"
           "--format json|text selects the output (default json, or $K3FM_FORMAT).\n"
           "exit status: 0 success, 1 mathematical rejection, 2 input error.\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        (args.empty() ? err : out) << usage();
        return args.empty() ? 2 : 0;
    }
    const auto& names = commands();
    if (std::find(names.begin(), names.end(), args[0]) == names.end()) {
        err << "k3fm: unknown command '" << args[0] << "'\n\n" << usage();
        return 2;
    }

    Options o;
    if (const char* env = std::getenv("K3FM_FORMAT")) o.format = env;
    if (o.format.empty()) o.format = "json";

    CLI::App app{"k3fm"};
    app.set_help_flag();
    app.require_subcommand(1);
    app.add_option("--format", o.format);

    auto common = [&](CLI::App* s) {
        s->add_option("--format", o.format);
        s->add_option("--spec", o.spec);
        s->add_option("--class", o.cls);
        s->add_option("--A", o.a);
        s->add_option("--B", o.b);
        s->add_option("--C", o.c);
        s->add_option("--D", o.d);
        s->add_option("--builder", o.builder);
        s->add_option("--ch", o.ch)->allow_extra_args(false);
        s->add_option("--L", o.L);
        s->add_option("--h", o.h);
        s->add_option("--l", o.l);
        s->add_option("--m", o.m);
        s->add_option("--variant", o.variant);
        s->add_option("--formula", o.formula);
        s->add_option("--grid", o.grid);
        s->add_option("--count", o.count);
        s->add_option("--seed", o.seed);
        s->add_option("--max-entries", o.max_entries);
        s->add_option("--lsq", o.lsq);
        s->add_flag("--oracle", o.oracle);
        s->add_option("--bound", o.bound);
        s->add_option("--n", o.n);
        s->add_option("--flavor", o.flavor);
        s->add_option("--z", o.z);
        s->add_option("--a", o.stratum_bound);
    };
    std::string reflexive_sub;
    for (const auto& name : names) {
        auto* s = app.add_subcommand(name);
        if (name == "reflexive") {
            s->require_subcommand(1);
            for (const char* sub : {"validate", "hats", "decompose", "classify", "kernel"}) {
                auto* inner = s->add_subcommand(sub);
                common(inner);
                inner->callback([&reflexive_sub, sub] { reflexive_sub = sub; });
            }
        } else {
            common(s);
        }
    }

    const std::string command = args[0];
    Json env = envelope(command);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        err << "k3fm: " << e.what() << "\n\n" << usage();
        return 2;
    }
    if (o.format != "json" && o.format != "text") {
        err << "k3fm: --format must be json or text\n";
        return 2;
    }

    try {
        Json result;
        if (command == "surface-validate") result = cmd_surface_validate(o);
        else if (command == "chi") result = cmd_chi(o);
        else if (command == "kernel-check") result = cmd_kernel_check(o);
        else if (command == "transform-apply") result = cmd_transform_apply(o);
        else if (command == "transform-crosscheck") result = cmd_transform_crosscheck(o);
        else if (command == "pic1") result = cmd_pic1(o);
        else if (command == "reflexive") result = cmd_reflexive(reflexive_sub, o);
        else if (command.rfind("reflexive-", 0) == 0) result = cmd_reflexive(command.substr(10), o);
        else if (command == "hilb-moduli") result = cmd_hilb(o);
        else if (command == "strata") result = cmd_strata(o);
        else result = cmd_primitive(o);
        if (command == "reflexive") env["command"] = "reflexive " + reflexive_sub;
        env["result"] = std::move(result);
        emit(out, env, o.format);
        return 0;
    } catch (Rejection& r) {
        if (command == "reflexive") env["command"] = "reflexive " + reflexive_sub;
        env["ok"] = false;
        env["result"] = std::move(r.result);
        env["violations"] = r.violations;
        emit(out, env, o.format);
        return 1;
    } catch (const InvariantViolation& e) {
        env.erase("result");
        env.erase("violations");
        env["ok"] = false;
        env["error"] = {{"kind", "invariant"}, {"identity", e.identity()}, {"message", e.what()}};
        emit(out, env, o.format);
        return 1;
    } catch (const InputError& e) {
        env.erase("result");
        env.erase("violations");
        env["ok"] = false;
        env["error"] = {{"kind", e.kind()}, {"message", e.what()}};
        emit(out, env, o.format);
        return 2;
    } catch (const LatticeMismatch& e) {
        env.erase("result");
        env.erase("violations");
        env["ok"] = false;
        env["error"] = {{"kind", "lattice-mismatch"}, {"message", e.what()}};
        emit(out, env, o.format);
        return 2;
    }
}

}  // namespace k3fm::cli
