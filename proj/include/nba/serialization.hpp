#pragma once

// JSON formats.
//
//   algebra     {"n":3,"kind":"power","points":2}
//               {"n":3,"kind":"subpower","points":2,"carrier":[[1,1],[2,2],[3,3]]}
//               {"n":3,"kind":"table","size":9,"constants":[0,1,2],"q":[...]}
//   truth table {"n":3,"k":2,"entries":[...]}  first argument slowest
//   multideal   {"degenerate":false,"components":[[elem,...],...]}
//   congruence  {"blocks":[[elem,...],...]}
//   partial fn  {"0":1,"3":2}  point -> value, undefined points omitted
//
// An element is a value vector when the algebra has labels and an index otherwise.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nba/algebra_core.hpp"
#include "nba/congruence.hpp"
#include "nba/ideals_congruences.hpp"
#include "nba/representation.hpp"
#include "nba/skew_structure.hpp"
#include "nba/synthesis.hpp"
#include "nba/term.hpp"

namespace nba {

using Json = nlohmann::ordered_json;

struct LoadedAlgebra {
  TableAlgebra table;
  std::optional<PowerAlgebra> power;  // set for power and subpower files
};

/// Throws ShapeError/DimensionError on malformed input.
LoadedAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const PowerAlgebra& alg);
Json algebra_to_json(const TableAlgebra& alg);
LoadedAlgebra load_algebra_file(const std::string& path);

Json element_to_json(const TableAlgebra& alg, Index x);
Index element_from_json(const TableAlgebra& alg, const Json& j);

TruthTable truth_table_from_json(const Json& j);
Json truth_table_to_json(const TruthTable& t);

Json multideal_to_json(const TableAlgebra& alg, const Multideal& m);
/// Candidate components, unvalidated.
std::vector<std::vector<Index>> multideal_candidate_from_json(const TableAlgebra& alg, const Json& j);

Json congruence_to_json(const TableAlgebra& alg, const Congruence& c);
Congruence congruence_from_json(const TableAlgebra& alg, const Json& j);

Json partial_fn_to_json(const PartialFn& f);
PartialFn partial_fn_from_json(const Json& j, std::size_t points);

const char* mode_name(CheckMode m);
Json axiom_report_to_json(const AxiomReport& r);
Json verdict_to_json(const Verdict& v);
Json rewrite_trace_to_json(const RewriteTrace& t);

/// Parses a file as JSON; throws std::runtime_error with the path on failure.
Json read_json_file(const std::string& path);

}  // namespace nba
