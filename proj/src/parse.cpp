#include "cfl/parse.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "cfl/errors.hpp"

namespace cfl {

namespace {

struct Sexp {
  bool is_list = false;
  std::string sym;
  std::vector<Sexp> items;
  int line = 0, col = 0;
};

struct Reader {
  const std::string& src;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Reader(const std::string& s) : src(s) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

  int peek() const { return pos < src.size() ? (unsigned char)src[pos] : -1; }

  int get() {
    int c = peek();
    if (c == -1) return -1;
    ++pos;
    if (c == '\n') { ++line; col = 1; } else { ++col; }
    return c;
  }

  void skip_ws() {
    while (true) {
      int c = peek();
      if (c == ';') {                       // comment to end of line
        while (c != -1 && c != '\n') c = get();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        get();
      } else {
        return;
      }
    }
  }

  static bool sym_char(int c) {
    return c != -1 && c != '(' && c != ')' && c != ';' && !isspace(c);
  }

  Sexp read() {
    skip_ws();
    Sexp out;
    out.line = line;
    out.col = col;
    int c = peek();
    if (c == -1) fail("unexpected end of input");
    if (c == '(') {
      get();
      out.is_list = true;
      while (true) {
        skip_ws();
        if (peek() == -1) fail("unclosed '('");
        if (peek() == ')') { get(); break; }
        out.items.push_back(read());
      }
      return out;
    }
    if (c == ')') fail("unexpected ')'");
    std::string s;
    while (sym_char(peek())) s += (char)get();
    out.sym = std::move(s);
    return out;
  }

  bool at_end() {
    skip_ws();
    return peek() == -1;
  }
};

[[noreturn]] void fail_at(const Sexp& s, const std::string& msg) {
  throw ParseError(msg, s.line, s.col);
}

const std::string& symbol(const Sexp& s, const char* what) {
  if (s.is_list) fail_at(s, std::string("expected ") + what + ", got a list");
  return s.sym;
}

// Variable scope: name -> sort stack (inner binders shadow outer).
using Scope = std::map<std::string, std::vector<std::string>>;

TermPtr parse_term(const Sexp& s, const SortedSignature& sig, const Scope& scope) {
  if (!s.is_list) {
    auto it = scope.find(s.sym);
    if (it != scope.end() && !it->second.empty())
      return Term::variable(s.sym, it->second.back());
    if (sig.has_constant(s.sym)) return Term::constant(s.sym);
    fail_at(s, "unknown constant or variable: " + s.sym);
  }
  if (s.items.empty()) fail_at(s, "empty term");
  const std::string& fn = symbol(s.items[0], "function symbol");
  if (!sig.has_function(fn)) fail_at(s.items[0], "unknown function: " + fn);
  std::vector<TermPtr> args;
  for (size_t i = 1; i < s.items.size(); ++i)
    args.push_back(parse_term(s.items[i], sig, scope));
  return Term::apply(fn, std::move(args));
}

FormulaPtr parse_formula(const Sexp& s, const SortedSignature& sig, Scope& scope);

FormulaPtr parse_binder(const Sexp& s, const SortedSignature& sig, Scope& scope) {
  if (s.items.size() != 3) fail_at(s, s.items[0].sym + " expects (var Sort) and a body");
  const Sexp& b = s.items[1];
  if (!b.is_list || b.items.size() != 2)
    fail_at(b, "binder must be (var Sort)");
  std::string var = symbol(b.items[0], "variable name");
  std::string sort = symbol(b.items[1], "sort name");
  if (is_reserved_word(var)) fail_at(b.items[0], "reserved word used as variable: " + var);
  if (!sig.has_sort(sort)) fail_at(b.items[1], "unknown sort: " + sort);
  scope[var].push_back(sort);
  FormulaPtr body = parse_formula(s.items[2], sig, scope);
  scope[var].pop_back();
  TermPtr v = Term::variable(var, sort);
  return s.items[0].sym == "forall" ? Formula::forall(v, body) : Formula::exists(v, body);
}

// Right-folds n-ary and/or/chains into the binary connective.
FormulaPtr fold_right(const Sexp& s, const SortedSignature& sig, Scope& scope,
                      FormulaPtr (*mk)(FormulaPtr, FormulaPtr)) {
  if (s.items.size() < 3) fail_at(s, s.items[0].sym + " expects at least two operands");
  FormulaPtr acc = parse_formula(s.items.back(), sig, scope);
  for (size_t i = s.items.size() - 2; i >= 1; --i)
    acc = mk(parse_formula(s.items[i], sig, scope), acc);
  return acc;
}

FormulaPtr parse_formula(const Sexp& s, const SortedSignature& sig, Scope& scope) {
  if (!s.is_list) {
    if (sig.has_relation(s.sym)) {
      if (!sig.relation(s.sym).empty())
        fail_at(s, "relation " + s.sym + " used without arguments");
      return Formula::atom(s.sym);
    }
    fail_at(s, "unknown proposition: " + s.sym);
  }
  if (s.items.empty()) fail_at(s, "empty formula");
  const std::string& head = symbol(s.items[0], "operator or relation");

  auto arity = [&](size_t n, const char* shape) {
    if (s.items.size() != n + 1) fail_at(s, std::string(head) + " expects " + shape);
  };
  auto term_at = [&](size_t i) { return parse_term(s.items[i], sig, scope); };
  auto sub_at = [&](size_t i) { return parse_formula(s.items[i], sig, scope); };

  if (head == "not") { arity(1, "one formula"); return Formula::lnot(sub_at(1)); }
  if (head == "and") return fold_right(s, sig, scope, &Formula::land);
  if (head == "or") return fold_right(s, sig, scope, &Formula::lor);
  if (head == "implies") { arity(2, "two formulas"); return Formula::implies(sub_at(1), sub_at(2)); }
  if (head == "iff") { arity(2, "two formulas"); return Formula::iff(sub_at(1), sub_at(2)); }
  if (head == "forall" || head == "exists") return parse_binder(s, sig, scope);
  if (head == "=") { arity(2, "two terms"); return Formula::equal(term_at(1), term_at(2)); }
  if (head == "cf") { arity(2, "two formulas"); return Formula::counterfactual(sub_at(1), sub_at(2)); }
  if (head == "K") { arity(3, "agent, time, formula"); return Formula::knows(term_at(1), term_at(2), sub_at(3)); }
  if (head == "B") { arity(3, "agent, time, formula"); return Formula::believes(term_at(1), term_at(2), sub_at(3)); }
  if (head == "D") { arity(3, "agent, time, formula"); return Formula::desires(term_at(1), term_at(2), sub_at(3)); }
  if (head == "intends") { arity(3, "agent, time, formula"); return Formula::intends(term_at(1), term_at(2), sub_at(3)); }
  if (head == "perceives") { arity(3, "agent, time, formula"); return Formula::perceives(term_at(1), term_at(2), sub_at(3)); }
  if (head == "common") { arity(2, "time, formula"); return Formula::common(term_at(1), sub_at(2)); }
  if (head == "says") {
    if (s.items.size() == 4) return Formula::says(term_at(1), term_at(2), sub_at(3));
    if (s.items.size() == 5) return Formula::says_to(term_at(1), term_at(2), term_at(3), sub_at(4));
    fail_at(s, "says expects agent [addressee] time formula");
  }
  if (head == "ought") {
    arity(4, "agent, time, condition, action literal");
    return Formula::ought(term_at(1), term_at(2), sub_at(3), sub_at(4));
  }
  if (sig.has_relation(head)) {
    std::vector<TermPtr> args;
    for (size_t i = 1; i < s.items.size(); ++i) args.push_back(term_at(i));
    return Formula::atom(head, std::move(args));
  }
  fail_at(s.items[0], "unknown operator or relation: " + head);
}

ModalContext parse_context(const Sexp& s, const SortedSignature& sig) {
  if (!s.is_list) fail_at(s, "context must be a list of (K|B|D agent time) entries");
  ModalContext ctx;
  Scope scope;
  for (const Sexp& e : s.items) {
    if (!e.is_list || e.items.size() != 3)
      fail_at(e, "context entry must be (K|B|D agent time)");
    const std::string& tag = symbol(e.items[0], "context operator");
    FormulaKind op;
    if (tag == "K") op = FormulaKind::Knows;
    else if (tag == "B") op = FormulaKind::Believes;
    else if (tag == "D") op = FormulaKind::Desires;
    else fail_at(e.items[0], "context operator must be K, B or D");
    ctx.entries.push_back({op, parse_term(e.items[1], sig, scope),
                           parse_term(e.items[2], sig, scope)});
  }
  return ctx;
}

void parse_decl(const Sexp& s, SortedSignature& sig) {
  const std::string& head = s.items[0].sym;
  auto name_at = [&](size_t i) {
    const std::string& n = symbol(s.items[i], "name");
    if (is_reserved_word(n)) fail_at(s.items[i], "reserved word: " + n);
    return n;
  };
  try {
    if (head == "sort") {
      if (s.items.size() == 2) sig.declare_sort(name_at(1));
      else if (s.items.size() == 3) sig.declare_sort(name_at(1), symbol(s.items[2], "parent sort"));
      else fail_at(s, "sort expects a name and an optional parent");
    } else if (head == "const") {
      if (s.items.size() != 3) fail_at(s, "const expects a name and a sort");
      sig.declare_constant(name_at(1), symbol(s.items[2], "sort"));
    } else if (head == "func") {
      if (s.items.size() != 4 || !s.items[2].is_list)
        fail_at(s, "func expects a name, (arg sorts) and a result sort");
      std::vector<std::string> args;
      for (const auto& a : s.items[2].items) args.push_back(symbol(a, "sort"));
      sig.declare_function(name_at(1), std::move(args), symbol(s.items[3], "sort"));
    } else if (head == "rel") {
      if (s.items.size() != 3 || !s.items[2].is_list)
        fail_at(s, "rel expects a name and (arg sorts)");
      std::vector<std::string> args;
      for (const auto& a : s.items[2].items) args.push_back(symbol(a, "sort"));
      sig.declare_relation(name_at(1), std::move(args));
    }
  } catch (const SortError& e) {
    fail_at(s, e.what());
  }
}

double parse_rational(const Sexp& s) {
  const std::string& v = symbol(s, "rational");
  size_t slash = v.find('/');
  try {
    if (slash == std::string::npos) return std::stod(v);
    double num = std::stod(v.substr(0, slash));
    double den = std::stod(v.substr(slash + 1));
    if (den == 0) fail_at(s, "zero denominator");
    return num / den;
  } catch (const std::invalid_argument&) {
    fail_at(s, "malformed rational: " + v);
  } catch (const std::out_of_range&) {
    fail_at(s, "rational out of range: " + v);
  }
}

DdeSpec parse_dde(const Sexp& s, const SortedSignature& sig) {
  DdeSpec dde;
  dde.present = true;
  Scope scope;
  for (size_t i = 1; i < s.items.size(); ++i) {
    const Sexp& e = s.items[i];
    if (!e.is_list || e.items.empty()) fail_at(e, "malformed dde entry");
    const std::string& key = symbol(e.items[0], "dde key");
    auto one_name = [&]() -> std::string {
      if (e.items.size() != 2) fail_at(e, key + " expects one constant");
      const std::string& n = symbol(e.items[1], "constant");
      if (!sig.has_constant(n)) fail_at(e.items[1], "unknown constant: " + n);
      return n;
    };
    if (key == "agent") dde.agent = one_name();
    else if (key == "moment") dde.moment = one_name();
    else if (key == "situation") dde.situation = one_name();
    else if (key == "action") dde.action_type = one_name();
    else if (key == "mu") {
      if (e.items.size() != 3) fail_at(e, "mu expects a fluent term and a rational");
      dde.mu.emplace_back(parse_term(e.items[1], sig, scope), parse_rational(e.items[2]));
    } else {
      fail_at(e.items[0], "unknown dde key: " + key);
    }
  }
  return dde;
}

}  // namespace

Problem parse_problem(const std::string& text) {
  Reader r(text);
  Sexp top = r.read();
  if (!r.at_end()) throw ParseError("trailing input after problem form", r.line, r.col);
  if (!top.is_list || top.items.empty() || top.items[0].sym != "problem")
    fail_at(top, "expected (problem name ...)");
  if (top.items.size() < 2) fail_at(top, "problem needs a name");

  Problem p;
  p.name = symbol(top.items[1], "problem name");

  const Sexp* assumptions = nullptr;
  const Sexp* queries = nullptr;
  for (size_t i = 2; i < top.items.size(); ++i) {
    const Sexp& item = top.items[i];
    if (!item.is_list || item.items.empty() || item.items[0].is_list)
      fail_at(item, "expected a declaration, assumptions, queries or dde block");
    const std::string& head = item.items[0].sym;
    if (head == "sort" || head == "const" || head == "func" || head == "rel") {
      parse_decl(item, p.signature);
    } else if (head == "assumptions") {
      if (assumptions) fail_at(item, "duplicate assumptions block");
      assumptions = &item;
    } else if (head == "queries") {
      if (queries) fail_at(item, "duplicate queries block");
      queries = &item;
    } else if (head == "dde") {
      if (p.dde.present) fail_at(item, "duplicate dde block");
      p.dde = parse_dde(item, p.signature);
    } else {
      fail_at(item.items[0], "unknown block: " + head);
    }
  }

  Scope scope;
  if (assumptions) {
    for (size_t i = 1; i < assumptions->items.size(); ++i) {
      FormulaPtr f = parse_formula(assumptions->items[i], p.signature, scope);
      try {
        check_sorted(p.signature, f);
      } catch (const SortError& e) {
        fail_at(assumptions->items[i], e.what());
      }
      p.assumptions.push_back(std::move(f));
    }
  }
  if (queries) {
    for (size_t i = 1; i < queries->items.size(); ++i) {
      const Sexp& q = queries->items[i];
      if (!q.is_list || q.items.empty()) fail_at(q, "malformed query");
      const std::string& head = symbol(q.items[0], "query kind");
      Query query;
      try {
        if (head == "entail") {
          if (q.items.size() != 2) fail_at(q, "entail expects one formula");
          query.kind = QueryKind::Entail;
          query.formulas = {parse_formula(q.items[1], p.signature, scope)};
        } else if (head == "cf") {
          if (q.items.size() != 3) fail_at(q, "cf expects two formulas");
          query.kind = QueryKind::Cf;
          query.formulas = {parse_formula(q.items[1], p.signature, scope),
                            parse_formula(q.items[2], p.signature, scope)};
        } else if (head == "cf-in") {
          if (q.items.size() != 4) fail_at(q, "cf-in expects a context and two formulas");
          query.kind = QueryKind::CfInContext;
          query.ctx = parse_context(q.items[1], p.signature);
          query.formulas = {parse_formula(q.items[2], p.signature, scope),
                            parse_formula(q.items[3], p.signature, scope)};
        } else {
          fail_at(q.items[0], "unknown query kind: " + head);
        }
        for (const auto& f : query.formulas) check_sorted(p.signature, f);
        for (const auto& e : query.ctx.entries) {
          check_sorted(p.signature, Formula::knows(e.agent, e.time, Formula::falsum()));
        }
      } catch (const SortError& e) {
        fail_at(q, e.what());
      }
      p.queries.push_back(std::move(query));
    }
  }
  return p;
}

Problem parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

FormulaPtr parse_formula_text(const std::string& text, const SortedSignature& sig) {
  Reader r(text);
  Sexp s = r.read();
  if (!r.at_end()) throw ParseError("trailing input after formula", r.line, r.col);
  Scope scope;
  FormulaPtr f = parse_formula(s, sig, scope);
  check_sorted(sig, f);
  return f;
}

}  // namespace cfl
