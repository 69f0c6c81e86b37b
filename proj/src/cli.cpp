#include "nba/cli.hpp"

#include <CLI11.hpp>

#include "nba/algebra_core.hpp"
#include "nba/ideals_congruences.hpp"
#include "nba/representation.hpp"
#include "nba/serialization.hpp"
#include "nba/skew_structure.hpp"
#include "nba/synthesis.hpp"
#include "nba/term.hpp"
#include "nba/translate.hpp"

namespace nba {

namespace {

struct Output {
  std::ostream& out;
  bool text = false;
};

void render_text(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar_array = [](const Json& a) {
    for (const auto& x : a)
      if (x.is_structured() && !(x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& y) {
                                   return !y.is_structured();
                                 })))
        return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [key, val] : j.items()) {
      if (val.is_structured() && !(val.is_array() && scalar_array(val))) {
        os << pad << key << ":\n";
        render_text(val, os, indent + 2);
      } else {
        os << pad << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (x.is_object()) {
        os << pad << "-\n";
        render_text(x, os, indent + 2);
      } else {
        os << pad << "- " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Output& o, const Json& j) {
  if (o.text)
    render_text(j, o.out, 0);
  else
    o.out << j.dump(2) << "\n";
}

Json index_matrix(const std::vector<Index>& flat, std::size_t size) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < size; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < size; ++b) row.push_back(flat[a * size + b]);
    rows.push_back(row);
  }
  return rows;
}

Json label_list(const TableAlgebra& alg) {
  Json l = Json::array();
  for (Index x = 0; x < alg.size(); ++x) l.push_back(element_to_json(alg, x));
  return l;
}

Value parse_value(const std::string& s, int n) {
  std::string digits = s;
  if (!digits.empty() && (digits[0] == 'e' || digits[0] == '0')) digits = digits.substr(1);
  int v = 0;
  try {
    std::size_t used = 0;
    v = std::stoi(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw ShapeError("cannot read value \"" + s + "\"; use e1.." + "e" + std::to_string(n));
  }
  if (v < 1 || v > n) throw ShapeError("value " + s + " outside e1..e" + std::to_string(n));
  return static_cast<Value>(v);
}

std::pair<std::string, std::string> split_binding(const std::string& b) {
  const auto eq = b.find('=');
  if (eq == std::string::npos || eq == 0) throw ShapeError("binding \"" + b + "\" is not of the form name=value");
  return {b.substr(0, eq), b.substr(eq + 1)};
}

Suite suite_from(const std::string& s) {
  if (s == "nba") return Suite::nba;
  if (s == "skewba") return Suite::skew_ba;
  if (s == "srca") return Suite::srca;
  if (s == "skewstar") return Suite::skew_star;
  if (s == "skewlattice") return Suite::skew_lattice;
  throw ShapeError("unknown suite " + s);
}

// ---------------------------------------------------------------------------

int cmd_check(const Output& o, const std::string& path, const std::string& suite_text, int i) {
  const auto alg = load_algebra_file(path).table;
  const Suite suite = suite_from(suite_text);
  Json j;
  bool ok = true;
  switch (suite) {
    case Suite::nba: {
      const auto r = check_axioms(alg, suite);
      ok = r.ok();
      j = axiom_report_to_json(r);
      break;
    }
    case Suite::skew_lattice:
    case Suite::skew_ba: {
      const auto sk = skew_reduct(alg, i);
      const auto r = check_axioms(sk, suite);
      const auto rh = check_axioms(sk, Suite::right_handed);
      ok = r.ok() && (suite == Suite::skew_lattice || rh.ok());
      j = axiom_report_to_json(r);
      j["reduct"] = "skew(" + std::to_string(i) + ")";
      if (suite == Suite::skew_ba) j["right_handed"] = axiom_report_to_json(rh);
      break;
    }
    case Suite::srca: {
      const auto r = check_axioms(right_church_reduct(alg, i), suite);
      ok = r.ok();
      j = axiom_report_to_json(r);
      j["reduct"] = "rchurch(" + std::to_string(i) + ")";
      break;
    }
    case Suite::skew_star: {
      const auto r = check_axioms(to_star(alg), suite);
      ok = r.ok();
      j = axiom_report_to_json(r);
      break;
    }
    default:
      break;
  }
  emit(o, j);
  return ok ? 0 : 1;
}

int cmd_eval(const Output& o, std::optional<int> n_opt, const std::string& term_text,
             const std::vector<std::string>& env_args, const std::string& algebra_path) {
  Json j;
  if (!algebra_path.empty()) {
    const auto alg = load_algebra_file(algebra_path).table;
    if (n_opt && *n_opt != alg.dim().value()) throw ShapeError("--n disagrees with the algebra file");
    const Term t = parse_term(term_text, alg.dim());
    Environment<TableAlgebra> env;
    for (const auto& b : env_args) {
      const auto [name, val] = split_binding(b);
      Json parsed;
      try {
        parsed = Json::parse(val);
      } catch (const nlohmann::json::exception&) {
        throw ShapeError("value of " + name + " is not JSON");
      }
      env[name] = element_from_json(alg, parsed);
    }
    j["term"] = print_term(t);
    j["value"] = element_to_json(alg, eval_term(t, env, alg));
  } else {
    if (!n_opt) throw ShapeError("eval needs --n or --algebra");
    const Dim n(*n_opt);
    const Term t = parse_term(term_text, n);
    const PowerAlgebra g = generator(n);
    Environment<PowerAlgebra> env;
    for (const auto& b : env_args) {
      const auto [name, val] = split_binding(b);
      env[name] = Element{parse_value(val, n.value())};
    }
    j["term"] = print_term(t);
    j["value"] = "e" + std::to_string(eval_term(t, env, g).values.at(0));
  }
  emit(o, j);
  return 0;
}

int cmd_equiv(const Output& o, int n, const std::string& lhs, const std::string& rhs,
              std::optional<std::uint64_t> samples, std::uint64_t seed) {
  const Dim d(n);
  CheckOptions opts;
  if (samples) {
    opts.mode = CheckMode::sampled;
    opts.samples = *samples;
  }
  opts.seed = seed;
  const Verdict v = check_identity(parse_term(lhs, d), parse_term(rhs, d), d, opts);
  Json j;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["n"] = n;
  const Json vj = verdict_to_json(v);
  for (const auto& [k, val] : vj.items()) j[k] = val;
  emit(o, j);
  return v.valid ? 0 : 1;
}

int cmd_translate(const Output& o, int n, const std::string& term_text, const std::string& to, int i) {
  const Dim d(n);
  const Term t = parse_term(term_text, d);
  Target target;
  if (to == "q")
    target = Target::q();
  else if (to == "skew")
    target = Target::skew(i);
  else if (to == "star")
    target = Target::star();
  else
    throw ShapeError("unknown target " + to);
  const Term r = translate_term(t, d, target);
  Json j;
  j["source"] = print_term(t);
  j["target"] = to == "skew" ? "skew(" + std::to_string(i) + ")" : to;
  j["term"] = print_term(r);
  try {
    const Verdict v = check_identity(t, r, d);
    j["verified"] = v.valid;
  } catch (const BudgetExceeded&) {
    j["verified"] = "not checked (budget)";
  }
  emit(o, j);
  return 0;
}

int cmd_synth(const Output& o, const std::string& path, bool simp) {
  const TruthTable table = truth_table_from_json(read_json_file(path));
  const Term t = synth(table);
  Json j;
  j["n"] = table.n;
  j["k"] = table.k;
  j["term"] = print_term(t);
  bool ok = verify_term(t, table);
  j["verified"] = ok;
  if (simp) {
    const auto [s, trace] = simplify(t, Dim(table.n));
    const bool sok = verify_term(s, table);
    ok = ok && sok;
    j["simplified"] = print_term(s);
    j["simplified_verified"] = sok;
    j["trace"] = rewrite_trace_to_json(trace);
  }
  emit(o, j);
  return ok ? 0 : 1;
}

int cmd_congruences(const Output& o, const std::string& path, std::size_t bound) {
  const auto alg = load_algebra_file(path).table;
  const auto cons = all_congruences(alg, bound);
  Json j;
  j["size"] = alg.size();
  j["congruence_count"] = cons.size();
  Json cl = Json::array();
  Json ml = Json::array();
  std::size_t proper = 0;
  for (const auto& c : cons) {
    Json cj = congruence_to_json(alg, c);
    const Multideal m = multideal_of(alg, c);
    cj["multideal"] = m.is_proper() ? "proper" : "degenerate";
    cl.push_back(cj);
    if (m.is_proper()) {
      ++proper;
      ml.push_back(multideal_to_json(alg, m));
    }
  }
  j["congruences"] = cl;
  j["proper_multideal_count"] = proper;
  j["multideals"] = ml;
  emit(o, j);
  return 0;
}

int cmd_multideals(const Output& o, const std::string& path, const std::string& validate_path) {
  const auto alg = load_algebra_file(path).table;
  Json j;
  if (!validate_path.empty()) {
    const auto cand = multideal_candidate_from_json(alg, read_json_file(validate_path));
    const auto v = validate_multideal(alg, cand);
    const char* names[] = {"Proper", "Degenerate", "Invalid"};
    j["verdict"] = names[static_cast<int>(v.kind)];
    if (!v.clause.empty()) j["clause"] = v.clause;
    if (!v.witness.empty()) j["witness"] = v.witness;
    emit(o, j);
    return v.kind == MultidealVerdict::Kind::invalid ? 1 : 0;
  }
  const auto ms = all_multideals(alg);
  j["count"] = ms.size();
  j["degenerate_excluded"] = true;
  Json l = Json::array();
  for (const auto& m : ms) l.push_back(multideal_to_json(alg, m));
  j["multideals"] = l;
  emit(o, j);
  return 0;
}

int cmd_ultras(const Output& o, const std::string& path, CenterParams cp) {
  const auto alg = load_algebra_file(path).table;
  const auto us = all_ultramultideals(alg, cp);
  Json j;
  j["count"] = us.size();
  Json l = Json::array();
  for (const auto& u : us) {
    Json uj = multideal_to_json(alg, u);
    Json h = Json::array();
    for (Value v : ultra_to_hom(alg, u)) h.push_back(static_cast<int>(v));
    uj["hom"] = h;
    uj["prime"] = is_prime(alg, u, cp);
    l.push_back(uj);
  }
  j["ultramultideals"] = l;
  emit(o, j);
  return 0;
}

int cmd_embed(const Output& o, const std::string& path) {
  const auto alg = load_algebra_file(path).table;
  const StoneEmbedding se = stone_embed(alg);
  Json j;
  j["points"] = se.points;
  j["injective"] = se.injective;
  j["preserves_q"] = se.preserves_q;
  j["surjective"] = se.surjective;
  Json m = Json::array();
  for (Index x = 0; x < alg.size(); ++x) {
    Json e;
    e["element"] = element_to_json(alg, x);
    Json img = Json::array();
    for (Value v : se.image[x].values) img.push_back(static_cast<int>(v));
    e["image"] = img;
    m.push_back(e);
  }
  j["map"] = m;
  emit(o, j);
  return se.injective && se.preserves_q ? 0 : 1;
}

int cmd_reduct(const Output& o, const std::string& path, const std::string& kind, int i,
               const std::vector<int>& d_list, std::optional<int> j_opt) {
  const auto alg = load_algebra_file(path).table;
  Json j;
  j["elements"] = label_list(alg);
  bool ok = true;
  if (kind == "skew") {
    const SkewAlgebra sk = skew_reduct(alg, i);
    j["kind"] = "skew";
    j["i"] = i;
    j["zero"] = sk.zero;
    j["meet"] = index_matrix(sk.meet, sk.size);
    j["join"] = index_matrix(sk.join, sk.size);
    j["minus"] = index_matrix(sk.minus, sk.size);
    const auto r1 = check_axioms(sk, Suite::skew_ba);
    const auto r2 = check_axioms(sk, Suite::right_handed);
    ok = r1.ok() && r2.ok();
    j["audit"] = Json::array({axiom_report_to_json(r1), axiom_report_to_json(r2)});
  } else if (kind == "rchurch") {
    const ChurchAlgebra ch = right_church_reduct(alg, i);
    j["kind"] = "rchurch";
    j["i"] = i;
    j["zero"] = ch.zero;
    j["t"] = ch.t;
    const auto r = check_axioms(ch, Suite::srca);
    ok = r.ok();
    j["audit"] = Json::array({axiom_report_to_json(r)});
  } else if (kind == "church") {
    IndexSet d;
    for (int k : d_list) d.insert(k);
    if (d.empty()) d = IndexSet::singleton(i);
    const int jj = j_opt ? *j_opt : designated_one(d, alg.dim().value());
    const ChurchAlgebra ch = church_reduct(alg, d, i, jj);
    j["kind"] = "church";
    j["d"] = d.members();
    j["i"] = i;
    j["j"] = jj;
    j["zero"] = ch.zero;
    j["one"] = *ch.one;
    j["t"] = ch.t;
  } else {
    throw ShapeError("unknown reduct kind " + kind);
  }
  emit(o, j);
  return ok ? 0 : 1;
}

int cmd_represent(const Output& o, std::size_t points, int n, int i) {
  const Dim d(n);
  const EmbeddingReport rep = verify_embedding(points, d, i);
  const PartialFnAlgebra pa = partial_fn_algebra(points);
  Json j;
  j["points"] = points;
  j["n"] = n;
  j["i"] = i;
  j["pairs_checked"] = rep.pairs_checked;
  j["injective"] = rep.injective;
  j["preserves_meet"] = rep.preserves_meet;
  j["preserves_join"] = rep.preserves_join;
  j["preserves_minus"] = rep.preserves_minus;
  if (rep.first_failure) j["first_failure"] = *rep.first_failure;
  Json m = Json::array();
  for (const auto& f : pa.elements) {
    Json e;
    e["f"] = partial_fn_to_json(f);
    Json img = Json::array();
    for (Value v : star_embed(f, d, i).values) img.push_back(static_cast<int>(v));
    e["star"] = img;
    m.push_back(e);
  }
  j["map"] = m;
  emit(o, j);
  return rep.ok() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boolean-like algebras of dimension n: identities, reducts, multideals, synthesis", "nba"};
  app.require_subcommand(1);
  bool text = false;
  app.add_flag("--text", text, "human-readable output instead of JSON");

  std::string algebra, suite = "nba", term, to = "q", table, validate, kind = "skew", lhs, rhs;
  int n = 0, i = 1, j_center = 2;
  std::optional<int> n_opt, j_opt;
  std::vector<std::string> env;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0xA11CE;
  bool simp = false;
  std::size_t bound = 64, points = 0;
  std::vector<int> d_list;

  auto* check = app.add_subcommand("check", "audit an algebra against an axiom suite");
  check->add_option("--algebra", algebra, "algebra file")->required();
  check->add_option("--suite", suite, "nba | skewba | srca | skewstar | skewlattice")
      ->check(CLI::IsMember({"nba", "skewba", "srca", "skewstar", "skewlattice"}));
  check->add_option("--i", i, "reduct index for skew and srca suites");

  auto* eval = app.add_subcommand("eval", "evaluate a term");
  eval->add_option("--n", n_opt, "dimension (evaluates in the generator)");
  eval->add_option("--term", term, "term text")->required();
  eval->add_option("--env", env, "bindings name=value (e3, or a JSON element with --algebra)");
  eval->add_option("--algebra", algebra, "evaluate in this algebra instead of the generator");

  auto* equiv = app.add_subcommand("equiv", "decide an identity over all nBAs");
  equiv->add_option("--n", n, "dimension")->required();
  equiv->add_option("lhs", lhs, "left-hand side")->required();
  equiv->add_option("rhs", rhs, "right-hand side")->required();
  equiv->add_option("--samples", samples, "sampled mode with this many assignments");
  equiv->add_option("--seed", seed, "seed for sampled mode");

  auto* translate = app.add_subcommand("translate", "translate a term between signatures");
  translate->add_option("--n", n, "dimension")->required();
  translate->add_option("--term", term, "term text")->required();
  translate->add_option("--to", to, "q | skew | star")->check(CLI::IsMember({"q", "skew", "star"}));
  translate->add_option("--i", i, "index of the skew signature");

  auto* synth_cmd = app.add_subcommand("synth", "compile a truth table into a q-term");
  synth_cmd->add_option("--table", table, "truth table file")->required();
  synth_cmd->add_flag("--simplify", simp, "apply the B0/B1/B4 rewrites");

  auto* cong = app.add_subcommand("congruences", "list congruences and proper multideals");
  cong->add_option("--algebra", algebra, "algebra file")->required();
  cong->add_option("--bound", bound, "largest carrier accepted");

  auto* multi = app.add_subcommand("multideals", "list or validate multideals");
  multi->add_option("--algebra", algebra, "algebra file")->required();
  multi->add_option("--validate", validate, "multideal file to classify");

  auto* ultras = app.add_subcommand("ultras", "list ultramultideals and their homomorphisms");
  ultras->add_option("--algebra", algebra, "algebra file")->required();
  ultras->add_option("--i", i, "Boolean center index i");
  ultras->add_option("--j", j_center, "Boolean center index j");

  auto* embed = app.add_subcommand("embed", "Stone embedding into a power of the generator");
  embed->add_option("--algebra", algebra, "algebra file")->required();

  auto* red = app.add_subcommand("reduct", "compute a reduct and audit it");
  red->add_option("--algebra", algebra, "algebra file")->required();
  red->add_option("--kind", kind, "church | rchurch | skew")->check(CLI::IsMember({"church", "rchurch", "skew"}));
  red->add_option("--i", i, "index i")->required();
  red->add_option("--d", d_list, "subscript set for church")->delimiter(',');
  red->add_option("--j", j_opt, "index j for church");

  auto* rep = app.add_subcommand("represent", "embed partial functions into an n-partition algebra");
  rep->add_option("--points", points, "size of X")->required();
  rep->add_option("--n", n, "dimension")->required();
  rep->add_option("--i", i, "index for undefined points")->required();

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--text", text, "human-readable output instead of JSON");

  std::vector<std::string> argv_store{"nba"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  const Output o{out, text};
  try {
    if (*check) return cmd_check(o, algebra, suite, i);
    if (*eval) return cmd_eval(o, n_opt, term, env, algebra);
    if (*equiv) return cmd_equiv(o, n, lhs, rhs, samples, seed);
    if (*translate) return cmd_translate(o, n, term, to, i);
    if (*synth_cmd) return cmd_synth(o, table, simp);
    if (*cong) return cmd_congruences(o, algebra, bound);
    if (*multi) return cmd_multideals(o, algebra, validate);
    if (*ultras) return cmd_ultras(o, algebra, CenterParams{i, j_center});
    if (*embed) return cmd_embed(o, algebra);
    if (*red) return cmd_reduct(o, algebra, kind, i, d_list, j_opt);
    if (*rep) return cmd_represent(o, points, n, i);
  } catch (const ParseError& e) {
    err << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace nba
