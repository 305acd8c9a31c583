#pragma once

// JSON views of the module results. Keys come out sorted (nlohmann's default
// object is a std::map), rationals are "p/q" strings and integers are JSON
// numbers, so equal inputs always serialize to identical bytes.

#include "k3fm/fm_kernel.hpp"
#include "k3fm/fm_transform.hpp"
#include "k3fm/moduli_app.hpp"
#include "k3fm/pic1.hpp"
#include "k3fm/reflexive.hpp"
#include "k3fm/surface_spec.hpp"

#include <json.hpp>

#include <string>

namespace k3fm::report {

using Json = nlohmann::json;

Json to_json(const Integer& v);
Json to_json(const Rational& q);
Json to_json(const std::vector<Rational>& v);
Json to_json(const DivisorClass& x);
Json to_json(const IntMatrix& m);
Json to_json(const RatMatrix& m);
Json to_json(const ChVector& v);
Json to_json(const SurfaceSpec& spec);
Json to_json(const KernelSpec& k);
Json to_json(const ValidityReport& r);
Json to_json(const DeterminantCheck& d);
Json to_json(const CohTransform& t);
Json to_json(const DiffReport& r, std::size_t max_entries);
Json to_json(const pic1::Solution& s);
Json to_json(const pic1::Selection& s);
Json to_json(const pic1::OracleResult& r);
Json to_json(const reflexive::ReflexiveSurface& rs);
Json to_json(const reflexive::Hats& h);
Json to_json(const reflexive::Decomposition& d);
Json to_json(const reflexive::DecompositionReport& r);
Json to_json(const reflexive::Classification& c);
Json to_json(const moduli::StrataReport& r);
Json to_json(const moduli::PrimitiveReport& r);
Json to_json(const moduli::HilbReport& r);

/// Pretty JSON with two-space indentation and a trailing newline.
std::string dump(const Json& j);

/// Flattened "path: value" lines with the values aligned in one column.
std::string format_text(const Json& j);

}  // namespace k3fm::report
