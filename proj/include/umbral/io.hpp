#pragma once

#include "umbral/bellpart.hpp"
#include "umbral/graphs.hpp"
#include "umbral/poly.hpp"
#include "umbral/rzcert.hpp"

#include <json.hpp>

#include <string>

namespace umbral {

using Json = nlohmann::ordered_json;

// Polynomials serialize as arrays of exact coefficient strings, constant
// term first: x^2 + 3x + 1/2 <-> ["1/2", "3", "1"].  Values are always
// strings so nothing is ever squeezed through a binary float.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);
std::string poly_to_csv(const Poly& p);

Json fact_poly_to_json(const FactPoly& f);

Json certificate_to_json(const RzCertificate& cert);
Json verdict_to_json(const SeqVerdict& v);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Accepts "path:n", "cycle:n", "complete:n", "star:n", inline JSON, or a
/// path to a JSON file.
Graph graph_from_text(const std::string& text);

/// Accepts "ones", "shift:m" (ones pushed up by m), "factorials" (j!),
/// "factorials-offset" ((j-1)!), "log" (coefficients of log(1+t)), or an
/// inline JSON array of rational strings.  Presets materialize `len` entries.
Seq seq_from_text(const std::string& text, std::size_t len);

} // namespace umbral
