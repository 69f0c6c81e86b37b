#include "nba/serialization.hpp"

#include <fstream>
#include <sstream>

namespace nba {

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ShapeError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ShapeError(std::string("field \"") + key + "\" has the wrong type");
  }
}

Element element_of(const Json& j) {
  if (!j.is_array()) throw ShapeError("an element must be an array of values");
  Element e;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ShapeError("element values must be integers");
    const int x = v.get<int>();
    if (x < 1 || x > 32) throw ShapeError("element value " + std::to_string(x) + " out of range");
    e.values.push_back(static_cast<Value>(x));
  }
  return e;
}

Json element_json(const Element& e) {
  Json a = Json::array();
  for (Value v : e.values) a.push_back(static_cast<int>(v));
  return a;
}

Json elements_json(const TableAlgebra& alg, const std::vector<Index>& xs) {
  Json a = Json::array();
  for (Index x : xs) a.push_back(element_to_json(alg, x));
  return a;
}

}  // namespace

LoadedAlgebra algebra_from_json(const Json& j) {
  const Dim n(get<int>(j, "n"));
  const auto kind = get<std::string>(j, "kind");
  if (kind == "power") {
    const auto points = get<std::size_t>(j, "points");
    PowerAlgebra p(n, points);
    return {p.tabulate(), p};
  }
  if (kind == "subpower") {
    const auto points = get<std::size_t>(j, "points");
    std::vector<Element> carrier;
    for (const auto& e : get<Json>(j, "carrier")) carrier.push_back(element_of(e));
    PowerAlgebra p(n, points, std::move(carrier));
    return {p.tabulate(), p};
  }
  if (kind == "table") {
    const auto size = get<std::size_t>(j, "size");
    auto constants = get<std::vector<Index>>(j, "constants");
    auto q = get<std::vector<Index>>(j, "q");
    std::vector<Element> labels;
    if (j.contains("labels"))
      for (const auto& e : j.at("labels")) labels.push_back(element_of(e));
    return {TableAlgebra(n, size, std::move(constants), std::move(q), std::move(labels)), std::nullopt};
  }
  throw ShapeError("unknown algebra kind \"" + kind + "\"");
}

Json algebra_to_json(const PowerAlgebra& alg) {
  Json j;
  j["n"] = alg.dim().value();
  if (alg.is_full()) {
    j["kind"] = "power";
    j["points"] = alg.points();
    return j;
  }
  j["kind"] = "subpower";
  j["points"] = alg.points();
  Json c = Json::array();
  for (const auto& e : alg.elements()) c.push_back(element_json(e));
  j["carrier"] = c;
  return j;
}

Json algebra_to_json(const TableAlgebra& alg) {
  Json j;
  j["n"] = alg.dim().value();
  j["kind"] = "table";
  j["size"] = alg.size();
  j["constants"] = alg.constants();
  j["q"] = alg.q_table();
  if (alg.has_labels()) {
    Json l = Json::array();
    for (const auto& e : alg.labels()) l.push_back(element_json(e));
    j["labels"] = l;
  }
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

LoadedAlgebra load_algebra_file(const std::string& path) { return algebra_from_json(read_json_file(path)); }

Json element_to_json(const TableAlgebra& alg, Index x) {
  if (alg.has_labels()) return element_json(alg.label(x));
  return x;
}

Index element_from_json(const TableAlgebra& alg, const Json& j) {
  if (j.is_number_integer()) {
    const auto x = j.get<long long>();
    if (x < 0 || static_cast<std::size_t>(x) >= alg.size()) throw ShapeError("element index out of range");
    return static_cast<Index>(x);
  }
  if (!alg.has_labels()) throw ShapeError("this algebra has no element labels; use indices");
  const Element e = element_of(j);
  if (auto idx = alg.index_of(e)) return *idx;
  throw ShapeError("element " + to_string(e) + " is not in the carrier");
}

TruthTable truth_table_from_json(const Json& j) {
  TruthTable t;
  t.n = get<int>(j, "n");
  t.k = get<int>(j, "k");
  for (int v : get<std::vector<int>>(j, "entries")) {
    if (v < 0 || v > 255) throw ShapeError("truth table entry out of range");
    t.entries.push_back(static_cast<Value>(v));
  }
  t.validate();
  return t;
}

Json truth_table_to_json(const TruthTable& t) {
  Json j;
  j["n"] = t.n;
  j["k"] = t.k;
  Json e = Json::array();
  for (Value v : t.entries) e.push_back(static_cast<int>(v));
  j["entries"] = e;
  return j;
}

Json multideal_to_json(const TableAlgebra& alg, const Multideal& m) {
  Json j;
  j["degenerate"] = m.is_degenerate();
  Json comps = Json::array();
  for (const auto& c : m.components()) comps.push_back(elements_json(alg, c));
  j["components"] = comps;
  return j;
}

std::vector<std::vector<Index>> multideal_candidate_from_json(const TableAlgebra& alg, const Json& j) {
  const Json& comps = j.is_array() ? j : get<Json>(j, "components");
  if (!comps.is_array()) throw ShapeError("components must be an array");
  std::vector<std::vector<Index>> out;
  for (const auto& c : comps) {
    if (!c.is_array()) throw ShapeError("each component must be an array");
    std::vector<Index> xs;
    for (const auto& e : c) xs.push_back(element_from_json(alg, e));
    out.push_back(std::move(xs));
  }
  return out;
}

Json congruence_to_json(const TableAlgebra& alg, const Congruence& c) {
  Json j;
  Json blocks = Json::array();
  for (const auto& b : c.blocks()) blocks.push_back(elements_json(alg, b));
  j["blocks"] = blocks;
  return j;
}

Congruence congruence_from_json(const TableAlgebra& alg, const Json& j) {
  const Json& blocks = get<Json>(j, "blocks");
  std::vector<Index> labels(alg.size(), static_cast<Index>(alg.size()));
  Index b = 0;
  for (const auto& block : blocks) {
    for (const auto& e : block) {
      const Index x = element_from_json(alg, e);
      if (labels[x] != alg.size()) throw ShapeError("element listed in two blocks");
      labels[x] = b;
    }
    ++b;
  }
  for (Index l : labels)
    if (l == alg.size()) throw ShapeError("blocks do not cover the carrier");
  return Congruence::from_labels(labels);
}

Json partial_fn_to_json(const PartialFn& f) {
  Json j = Json::object();
  for (std::size_t p = 0; p < f.points(); ++p)
    if (f.defined(p)) j[std::to_string(p)] = static_cast<int>(f.values[p]);
  return j;
}

PartialFn partial_fn_from_json(const Json& j, std::size_t points) {
  if (!j.is_object()) throw ShapeError("a partial function is an object point -> value");
  PartialFn f;
  f.values.assign(points, 0);
  for (const auto& [key, val] : j.items()) {
    std::size_t p = 0;
    try {
      p = std::stoul(key);
    } catch (const std::exception&) {
      throw ShapeError("point \"" + key + "\" is not an integer");
    }
    if (p >= points) throw ShapeError("point " + key + " outside the point set");
    if (!val.is_number_integer() || (val.get<int>() != 1 && val.get<int>() != 2))
      throw ShapeError("partial function values must be 1 or 2");
    f.values[p] = static_cast<Value>(val.get<int>());
  }
  return f;
}

const char* mode_name(CheckMode m) { return m == CheckMode::exhaustive ? "exhaustive" : "sampled"; }

Json axiom_report_to_json(const AxiomReport& r) {
  Json j;
  j["suite"] = suite_name(r.suite);
  j["ok"] = r.ok();
  Json axioms = Json::array();
  for (const auto& a : r.axioms) {
    Json x;
    x["name"] = a.name;
    x["ok"] = a.ok;
    x["mode"] = mode_name(a.mode);
    x["checked"] = a.checked;
    axioms.push_back(x);
  }
  j["axioms"] = axioms;
  if (r.sampled()) j["seed"] = r.seed;
  if (const auto* f = r.first_failure()) {
    Json c;
    c["axiom"] = f->name;
    Json asg = Json::object();
    for (const auto& [name, idx] : f->counterexample) asg[name] = idx;
    c["assignment"] = asg;
    j["counterexample"] = c;
  }
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["verdict"] = v.valid ? "Valid" : "Counterexample";
  j["mode"] = v.mode == CheckMode::exhaustive ? "Exhaustive" : "Sampled";
  j["variables"] = v.variables;
  j["assignments_checked"] = v.assignments_checked;
  if (v.mode == CheckMode::sampled) {
    j["samples"] = v.samples;
    j["seed"] = v.seed;
  }
  if (v.counterexample) {
    Json c = Json::object();
    for (const auto& [name, val] : *v.counterexample) c[name] = "e" + std::to_string(val);
    j["counterexample"] = c;
  }
  return j;
}

Json rewrite_trace_to_json(const RewriteTrace& t) {
  Json a = Json::array();
  for (const auto& s : t) {
    Json x;
    x["rule"] = s.rule;
    x["position"] = position_string(s.position);
    a.push_back(x);
  }
  return a;
}

}  // namespace nba
