#pragma once

#include "perdel/decomposition.hpp"
#include "perdel/form.hpp"
#include "perdel/graphs.hpp"
#include "perdel/moment.hpp"
#include "perdel/seccone.hpp"
#include "perdel/sheaf.hpp"

#include <json.hpp>

#include <string>

namespace perdel {

// Canonical JSON: object keys sorted (nlohmann's default map), rationals as "p/q" strings.
// Every *_from_json throws InputError on malformed input.

using Json = nlohmann::json;

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json vector_json(const std::vector<Rational>& v);
Json matrix_json(const Matrix& m);

Json form_to_json(const QuadraticForm& q);
QuadraticForm form_from_json(const Json& j);  // {"matrix": [[...]]} or a bare array of rows

Json cell_to_json(const Cell& c);
Cell cell_from_json(const Json& j);

Json decomposition_to_json(const PeriodicDecomposition& d);
PeriodicDecomposition decomposition_from_json(const Json& j);  // walls are recomputed

Json report_to_json(const StratumReport& r);
Json cone_to_json(const ConeCertificate& c);

Json graph_to_json(const DualGraph& g);
DualGraph graph_from_json(const Json& j);
Json torelli_to_json(const TorelliReport& r);

WeightedSupport support_from_json(const Json& j);

Json parse_json(const std::string& text);
std::string dump(const Json& j);  // two-space indent plus trailing newline

}  // namespace perdel
