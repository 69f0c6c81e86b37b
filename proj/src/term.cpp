#include "nba/term.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

namespace nba {

Term Term::var(std::string name) {
  Term t;
  t.kind = Kind::var;
  t.name = std::move(name);
  return t;
}

Term Term::constant(int k, bool zero_spelling) {
  Term t;
  t.kind = Kind::constant;
  t.index = k;
  t.zero_spelling = zero_spelling;
  return t;
}

Term Term::q(Term scrutinee, std::vector<Term> branches) {
  Term t;
  t.kind = Kind::q;
  t.args.reserve(branches.size() + 1);
  t.args.push_back(std::move(scrutinee));
  for (auto& b : branches) t.args.push_back(std::move(b));
  return t;
}

Term Term::t(IndexSet d, Term x, Term y, Term z) {
  Term r;
  r.kind = Kind::t;
  r.subscript = d;
  r.args = {std::move(x), std::move(y), std::move(z)};
  return r;
}

Term Term::bin(BinKind op, IndexSet d, Term lhs, Term rhs) {
  Term r;
  r.kind = Kind::bin;
  r.op = op;
  r.subscript = d;
  r.args = {std::move(lhs), std::move(rhs)};
  return r;
}

std::size_t Term::node_count() const {
  std::size_t c = 1;
  for (const auto& a : args) c += a.node_count();
  return c;
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Term::Kind::var:
      return a.name == b.name;
    case Term::Kind::constant:
      return a.index == b.index;
    case Term::Kind::q:
      break;
    case Term::Kind::t:
      if (a.subscript != b.subscript) return false;
      break;
    case Term::Kind::bin:
      if (a.subscript != b.subscript || a.op != b.op) return false;
      break;
  }
  return a.args == b.args;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool is_constant_name(const std::string& s) {
  return s.size() >= 2 && s[0] == 'e' &&
         std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::optional<BinKind> bin_kind_from(const std::string& s) {
  if (s == "and") return BinKind::meet;
  if (s == "or") return BinKind::join;
  if (s == "sub") return BinKind::minus;
  if (s == "bw") return BinKind::barwedge;
  if (s == "bv") return BinKind::barvee;
  return std::nullopt;
}

class Parser {
 public:
  Parser(const std::string& text, int n) : s_(text), n_(n) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", pos_);
    if (pos_ - start > 6) throw ParseError("integer too long", start);
    return std::stoi(s_.substr(start, pos_ - start));
  }

  int subscript_in_range(int k, std::size_t at) {
    if (k < 1 || k > n_)
      throw SubscriptError("subscript " + std::to_string(k) + " at position " + std::to_string(at) +
                           " outside 1.." + std::to_string(n_));
    return k;
  }

  std::vector<Term> arguments() {
    expect('(');
    std::vector<Term> out;
    out.push_back(term());
    while (peek() == ',') {
      ++pos_;
      out.push_back(term());
    }
    expect(')');
    return out;
  }

  Term term() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '0') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected a constant index after '0'", pos_);
      return Term::constant(subscript_in_range(integer(), start), true);
    }
    if (c >= 'a' && c <= 'z') {
      std::string id;
      while (pos_ < s_.size() && (std::islower(static_cast<unsigned char>(s_[pos_])) ||
                                  std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        id += s_[pos_++];
      if (is_constant_name(id)) {
        if (id.size() > 7) throw ParseError("constant index too long", start);
        return Term::constant(subscript_in_range(std::stoi(id.substr(1)), start));
      }
      const char next = pos_ < s_.size() ? s_[pos_] : '\0';
      if (id == "q" && next == '(') {
        auto args = arguments();
        if (args.size() != static_cast<std::size_t>(n_) + 1)
          throw ArityError("q at position " + std::to_string(start) + " has " +
                           std::to_string(args.size() - 1) + " branches, expected " +
                           std::to_string(n_));
        Term x = std::move(args.front());
        args.erase(args.begin());
        return Term::q(std::move(x), std::move(args));
      }
      const auto bk = bin_kind_from(id);
      if ((id == "t" || bk) && next == '[') {
        ++pos_;
        IndexSet d;
        for (;;) {
          const std::size_t at = pos_;
          const int k = subscript_in_range(integer(), at);
          if (d.contains(k)) throw SubscriptError("repeated subscript at position " + std::to_string(at));
          d.insert(k);
          if (peek() == ',') {
            ++pos_;
            continue;
          }
          break;
        }
        expect(']');
        auto args = arguments();
        const std::size_t want = bk ? 2 : 3;
        if (args.size() != want)
          throw ArityError(id + " at position " + std::to_string(start) + " takes " +
                           std::to_string(want) + " arguments, got " + std::to_string(args.size()));
        if (bk) return Term::bin(*bk, d, std::move(args[0]), std::move(args[1]));
        return Term::t(d, std::move(args[0]), std::move(args[1]), std::move(args[2]));
      }
      return Term::var(std::move(id));
    }
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  const std::string& s_;
  int n_;
  std::size_t pos_ = 0;
};

void print_into(const Term& t, std::string& out) {
  switch (t.kind) {
    case Term::Kind::var:
      out += t.name;
      return;
    case Term::Kind::constant:
      out += t.zero_spelling ? '0' : 'e';
      out += std::to_string(t.index);
      return;
    case Term::Kind::q:
      out += "q";
      break;
    case Term::Kind::t:
    case Term::Kind::bin: {
      out += t.kind == Term::Kind::t ? "t" : bin_kind_name(t.op);
      out += '[';
      bool first = true;
      for (int k : t.subscript.members()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(k);
      }
      out += ']';
      break;
    }
  }
  out += '(';
  for (std::size_t a = 0; a < t.args.size(); ++a) {
    if (a) out += ',';
    print_into(t.args[a], out);
  }
  out += ')';
}

void collect_vars(const Term& t, std::vector<std::string>& out, std::set<std::string>& seen) {
  if (t.kind == Term::Kind::var) {
    if (seen.insert(t.name).second) out.push_back(t.name);
    return;
  }
  for (const auto& a : t.args) collect_vars(a, out, seen);
}

}  // namespace

Term parse_term(const std::string& text, Dim n) { return Parser(text, n.value()).parse(); }

std::string print_term(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

void validate_term(const Term& t, Dim n) {
  switch (t.kind) {
    case Term::Kind::var:
      if (t.name.empty()) throw ParseError("empty variable name", 0);
      return;
    case Term::Kind::constant:
      if (t.index < 1 || t.index > n.value())
        throw SubscriptError("constant e" + std::to_string(t.index) + " outside 1.." +
                             std::to_string(n.value()));
      return;
    case Term::Kind::q:
      if (t.args.size() != static_cast<std::size_t>(n.value()) + 1)
        throw ArityError("q node with " + std::to_string(t.args.size() - 1) + " branches");
      break;
    case Term::Kind::t:
      t.subscript.check(n.value());
      if (t.args.size() != 3) throw ArityError("t node needs 3 arguments");
      break;
    case Term::Kind::bin:
      t.subscript.check(n.value());
      if (t.args.size() != 2) throw ArityError("binary node needs 2 arguments");
      if (t.op == BinKind::join) designated_one(t.subscript, n.value());
      break;
  }
  for (const auto& a : t.args) validate_term(a, n);
}

std::vector<std::string> free_variables(const Term& t) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_vars(t, out, seen);
  return out;
}

std::vector<std::string> free_variables(const Term& lhs, const Term& rhs) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_vars(lhs, out, seen);
  collect_vars(rhs, out, seen);
  return out;
}

Term elaborate(const Term& t, Dim n) {
  const int nn = n.value();
  switch (t.kind) {
    case Term::Kind::var:
    case Term::Kind::constant:
      return t;
    case Term::Kind::q: {
      Term r = t;
      for (auto& a : r.args) a = elaborate(a, n);
      return r;
    }
    case Term::Kind::t: {
      t.subscript.check(nn);
      Term x = elaborate(t.args[0], n);
      Term y = elaborate(t.args[1], n);
      Term z = elaborate(t.args[2], n);
      std::vector<Term> branches;
      for (int k = 1; k <= nn; ++k) branches.push_back(t.subscript.contains(k) ? z : y);
      return Term::q(std::move(x), std::move(branches));
    }
    case Term::Kind::bin: {
      const IndexSet d = t.subscript;
      const Term& l = t.args[0];
      const Term& r = t.args[1];
      switch (t.op) {
        case BinKind::meet:
          return elaborate(Term::t(d, l, r, Term::constant(designated_zero(d, nn))), n);
        case BinKind::join:
          return elaborate(Term::t(d, l, Term::constant(designated_one(d, nn)), r), n);
        case BinKind::minus:
          return elaborate(Term::t(d, r, Term::constant(designated_zero(d, nn)), l), n);
        case BinKind::barwedge:
          return elaborate(Term::t(d, l, r, l), n);
        case BinKind::barvee:
          return elaborate(Term::t(d, l, l, r), n);
      }
    }
  }
  throw PreconditionError("malformed term");
}

// ---------------------------------------------------------------------------
// Compiled evaluation

CompiledTerm::CompiledTerm(const Term& t, Dim n, const std::vector<std::string>& slots) : n_(n.value()) {
  validate_term(t, n);
  const Term flat = elaborate(t, n);
  std::size_t depth = 0;
  auto emit = [&](auto&& self, const Term& u) -> void {
    switch (u.kind) {
      case Term::Kind::var: {
        auto it = std::find(slots.begin(), slots.end(), u.name);
        if (it == slots.end()) throw UnboundVariable(u.name);
        code_.push_back({Op::var, static_cast<std::uint16_t>(it - slots.begin())});
        max_stack_ = std::max(max_stack_, ++depth);
        return;
      }
      case Term::Kind::constant:
        code_.push_back({Op::constant, static_cast<std::uint16_t>(u.index)});
        max_stack_ = std::max(max_stack_, ++depth);
        return;
      case Term::Kind::q:
        for (const auto& a : u.args) self(self, a);
        code_.push_back({Op::q, 0});
        depth -= static_cast<std::size_t>(n_);
        return;
      default:
        throw PreconditionError("elaboration left a non-q node");
    }
  };
  emit(emit, flat);
}

Value CompiledTerm::eval(const Value* assignment) const {
  // Small fixed stacks cover every term in practice; fall back to the heap otherwise.
  Value local[256];
  local[0] = 0;
  std::vector<Value> heap;
  Value* stack = local;
  if (max_stack_ > 256) {
    heap.resize(max_stack_);
    stack = heap.data();
  }
  std::size_t sp = 0;
  for (const Instr& ins : code_) {
    switch (ins.op) {
      case Op::var:
        stack[sp++] = assignment[ins.arg];
        break;
      case Op::constant:
        stack[sp++] = static_cast<Value>(ins.arg);
        break;
      case Op::q: {
        const std::size_t base = sp - static_cast<std::size_t>(n_) - 1;
        stack[base] = stack[base + stack[base]];
        sp = base + 1;
        break;
      }
    }
  }
  return stack[0];
}

// ---------------------------------------------------------------------------
// Identity checking

Verdict check_identity(const Term& lhs, const Term& rhs, Dim n, const CheckOptions& opts) {
  const auto vars = free_variables(lhs, rhs);
  const CompiledTerm cl(lhs, n, vars);
  const CompiledTerm cr(rhs, n, vars);
  const auto nn = static_cast<std::uint64_t>(n.value());

  Verdict v;
  v.mode = opts.mode;
  v.variables = vars;
  std::vector<Value> a(vars.size(), 1);

  auto record = [&]() {
    Assignment asg;
    for (std::size_t k = 0; k < vars.size(); ++k) asg.emplace_back(vars[k], a[k]);
    v.valid = false;
    v.counterexample = std::move(asg);
  };

  if (opts.mode == CheckMode::exhaustive) {
    const auto total = saturating_pow(nn, vars.size());
    if (total > opts.budget)
      throw BudgetExceeded(std::to_string(nn) + "^" + std::to_string(vars.size()) +
                           " assignments exceed the exhaustive budget of " +
                           std::to_string(opts.budget) + "; use sampled mode");
    for (std::uint64_t c = 0; c < total; ++c) {
      ++v.assignments_checked;
      if (cl.eval(a.data()) != cr.eval(a.data())) {
        record();
        return v;
      }
      for (std::size_t pos = a.size(); pos-- > 0;) {
        if (a[pos] < nn) {
          ++a[pos];
          break;
        }
        a[pos] = 1;
      }
    }
    return v;
  }

  v.samples = opts.samples;
  v.seed = opts.seed;
  std::mt19937_64 rng(opts.seed);
  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    for (auto& x : a) x = static_cast<Value>(rng() % nn + 1);
    ++v.assignments_checked;
    if (cl.eval(a.data()) != cr.eval(a.data())) {
      record();
      return v;
    }
  }
  return v;
}

std::vector<Value> truth_values(const Term& t, Dim n, const std::vector<std::string>& vars) {
  const CompiledTerm ct(t, n, vars);
  const auto nn = static_cast<std::uint64_t>(n.value());
  const auto total = saturating_pow(nn, vars.size());
  if (total > 100'000'000ull) throw BudgetExceeded("truth table too large");
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<Value> a(vars.size(), 1);
  for (std::uint64_t c = 0; c < total; ++c) {
    out.push_back(ct.eval(a.data()));
    for (std::size_t pos = a.size(); pos-- > 0;) {
      if (a[pos] < nn) {
        ++a[pos];
        break;
      }
      a[pos] = 1;
    }
  }
  return out;
}

}  // namespace nba
