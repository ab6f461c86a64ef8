// S-expression printer and parser for terms, formulas and PR definitions.
// Grammar summary (README has the full table):
//   term    := vN | digits | k | s | p | pl | pr | succ | r | d | @name | id | fix | min
//            | (S t) | (t + t) | (t * t) | (app t t ...) | (t t ...) | (#name t ...) | (# DEF t ...)
//            | (lam vN ... t) | (update t t t)
//   formula := bot | top | (t = t) | (f & f) | (f | f) | (f -> f) | (AvN f) | (EvN f)
//            | (PN t ...) | (I N f t ...) | (rel NAME t ...)
//            | (f <-> f) | (not f) | (down t) | (t != t) | (t ~ t) | (t < t)

#include "fixkit/combinatory.hpp"
#include "fixkit/syntax.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace fixkit {

// ------------------------------------------------------------------ printer

namespace {

void print_pr(std::ostream& os, const PRDef& d) {
  if (!d.name.empty()) {
    if (auto lib = pr_lookup(d.name); lib && same_pr(*lib, d)) {
      os << d.name;
      return;
    }
  }
  switch (d.kind) {
    case PRDef::Kind::zero: os << "(zero " << d.arity << ")"; return;
    case PRDef::Kind::succ: os << "succ"; return;
    case PRDef::Kind::proj: os << "(proj " << d.arity << " " << d.index << ")"; return;
    case PRDef::Kind::comp:
      os << "(comp";
      for (const auto& p : d.parts) {
        os << " ";
        print_pr(os, *p);
      }
      os << ")";
      return;
    case PRDef::Kind::rec:
      os << "(rec ";
      print_pr(os, *d.parts[0]);
      os << " ";
      print_pr(os, *d.parts[1]);
      os << ")";
      return;
  }
}

void print(std::ostream& os, const Term& t) {
  switch (t->kind) {
    case TermKind::var: os << "v" << t->index; return;
    case TermKind::constant: os << sym_name(t->sym); return;
    case TermKind::numeral: os << t->value; return;
    case TermKind::prim: os << "@" << t->name; return;
    case TermKind::succ:
      os << "(S ";
      print(os, t->args[0]);
      os << ")";
      return;
    case TermKind::add:
    case TermKind::mul:
      os << "(";
      print(os, t->args[0]);
      os << (t->kind == TermKind::add ? " + " : " * ");
      print(os, t->args[1]);
      os << ")";
      return;
    case TermKind::app: {
      std::vector<const Term*> spine;
      const Term* h = &t;
      while ((*h)->kind == TermKind::app) {
        spine.push_back(&(*h)->args[1]);
        h = &(*h)->args[0];
      }
      os << "(app ";
      print(os, *h);
      for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
        os << " ";
        print(os, **it);
      }
      os << ")";
      return;
    }
    case TermKind::pr:
      if (auto lib = pr_lookup(t->def->name); lib && same_pr(*lib, *t->def)) {
        os << "(#" << t->def->name;
      } else {
        os << "(# ";
        print_pr(os, *t->def);
      }
      for (const auto& a : t->args) {
        os << " ";
        print(os, a);
      }
      os << ")";
      return;
  }
}

void print(std::ostream& os, const Formula& f);

void print_args(std::ostream& os, const std::vector<Term>& args) {
  for (const auto& a : args) {
    os << " ";
    print(os, a);
  }
}

void print(std::ostream& os, const Formula& f) {
  switch (f->kind) {
    case FKind::bot: os << "bot"; return;
    case FKind::eq:
      os << "(";
      print(os, f->lhs);
      os << " = ";
      print(os, f->rhs);
      os << ")";
      return;
    case FKind::rel:
      switch (f->rel.kind) {
        case RelSym::Kind::param: os << "(P" << f->rel.arity; break;
        case RelSym::Kind::fix:
          os << "(I " << f->rel.arity << " ";
          print(os, f->rel.body);
          break;
        case RelSym::Kind::defined: os << "(rel " << f->rel.tag; break;
      }
      print_args(os, f->args);
      os << ")";
      return;
    case FKind::conj:
    case FKind::disj:
    case FKind::imp:
      os << "(";
      print(os, f->a);
      os << (f->kind == FKind::conj ? " & " : f->kind == FKind::disj ? " | " : " -> ");
      print(os, f->b);
      os << ")";
      return;
    case FKind::all:
    case FKind::ex:
      os << "(" << (f->kind == FKind::all ? "A" : "E") << "v" << f->bound.index << " ";
      print(os, f->a);
      os << ")";
      return;
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print(os, t);
  return os.str();
}

std::string to_string(const Formula& f) {
  std::ostringstream os;
  print(os, f);
  return os.str();
}

std::string to_string(const PRDef& d) {
  std::ostringstream os;
  print_pr(os, d);
  return os.str();
}

// ------------------------------------------------------------------ reader

namespace {

struct SExpr {
  std::string atom;  // empty for lists
  std::vector<SExpr> items;
  bool is_atom() const { return !atom.empty(); }
  bool is(std::string_view s) const { return atom == s; }
};

class Reader {
 public:
  explicit Reader(std::string_view s) : src_(s) {}

  SExpr read_all() {
    SExpr e = read();
    skip();
    if (pos_ != src_.size()) fail("trailing input");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  SExpr read() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    if (src_[pos_] == ')') fail("unexpected ')'");
    if (src_[pos_] == '(') {
      ++pos_;
      SExpr list;
      for (;;) {
        skip();
        if (pos_ >= src_.size()) fail("unclosed '('");
        if (src_[pos_] == ')') {
          ++pos_;
          break;
        }
        list.items.push_back(read());
      }
      if (list.items.empty()) fail("empty list");
      return list;
    }
    std::size_t start = pos_;
    while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])) && src_[pos_] != '(' &&
           src_[pos_] != ')')
      ++pos_;
    return SExpr{std::string(src_.substr(start, pos_ - start)), {}};
  }
};

std::optional<std::uint32_t> digits(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<Var> as_var(const SExpr& e) {
  if (!e.is_atom() || e.atom.size() < 2 || e.atom[0] != 'v') return std::nullopt;
  auto d = digits(std::string_view(e.atom).substr(1));
  if (!d) return std::nullopt;
  return Var{*d};
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::ranges::all_of(s, [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

[[noreturn]] void bad(const std::string& what) { throw SyntaxError(what); }

PRRef read_pr(const SExpr& e) {
  if (e.is_atom()) {
    if (e.is("succ")) return pr_succ();
    if (auto d = pr_lookup(e.atom)) return d;
    bad("unknown PR function '" + e.atom + "'");
  }
  const auto& h = e.items[0];
  auto nat_at = [&](std::size_t i) {
    if (i >= e.items.size() || !e.items[i].is_atom()) bad("expected a number in PR definition");
    auto d = digits(e.items[i].atom);
    if (!d) bad("expected a number in PR definition");
    return *d;
  };
  if (h.is("zero")) {
    if (e.items.size() != 2) bad("(zero k) takes one argument");
    return pr_zero(nat_at(1));
  }
  if (h.is("proj")) {
    if (e.items.size() != 3) bad("(proj k i) takes two arguments");
    return pr_proj(nat_at(1), nat_at(2));
  }
  if (h.is("comp")) {
    if (e.items.size() < 3) bad("(comp f h ...) needs an inner function");
    std::vector<PRRef> hs;
    for (std::size_t i = 2; i < e.items.size(); ++i) hs.push_back(read_pr(e.items[i]));
    return pr_comp(read_pr(e.items[1]), std::move(hs));
  }
  if (h.is("rec")) {
    if (e.items.size() != 3) bad("(rec g h) takes two arguments");
    return pr_rec(read_pr(e.items[1]), read_pr(e.items[2]));
  }
  bad("unknown PR constructor");
}

Term read_term(const SExpr& e);

std::vector<Term> read_args(const std::vector<SExpr>& items, std::size_t from) {
  std::vector<Term> out;
  for (std::size_t i = from; i < items.size(); ++i) out.push_back(read_term(items[i]));
  return out;
}

Term fold_app(const std::vector<SExpr>& items, std::size_t from) {
  if (from >= items.size()) throw SyntaxError("application without head");
  Term t = read_term(items[from]);
  for (std::size_t i = from + 1; i < items.size(); ++i) t = app(t, read_term(items[i]));
  return t;
}

Term read_term(const SExpr& e) {
  if (e.is_atom()) {
    const auto& a = e.atom;
    if (auto x = as_var(e)) return var(*x);
    if (all_digits(a)) return num(Nat(a));
    if (a[0] == '@') return prim(a.substr(1));
    static const std::pair<const char*, Sym> consts[] = {{"k", Sym::k},   {"s", Sym::s},       {"p", Sym::p},
                                                          {"pl", Sym::pl}, {"pr", Sym::pr},     {"succ", Sym::succ},
                                                          {"r", Sym::r},   {"d", Sym::d}};
    for (const auto& [n, s] : consts)
      if (a == n) return constant(s);
    if (a == "id" || a == "fix" || a == "min") return builtin(a);
    bad("unknown term atom '" + a + "'");
  }
  const auto& it = e.items;
  if (it.size() == 3 && it[1].is_atom() && (it[1].is("+") || it[1].is("*"))) {
    Term l = read_term(it[0]), r = read_term(it[2]);
    return it[1].is("+") ? add(l, r) : mul(l, r);
  }
  const auto& h = it[0];
  if (h.is("S")) {
    if (it.size() != 2) bad("(S t) takes one argument");
    return succ(read_term(it[1]));
  }
  if (h.is("+") || h.is("*")) {
    if (it.size() != 3) bad("binary operator needs two arguments");
    Term l = read_term(it[1]), r = read_term(it[2]);
    return h.is("+") ? add(l, r) : mul(l, r);
  }
  if (h.is("app")) {
    if (it.size() < 2) bad("(app f ...) needs a head");
    return fold_app(it, 1);
  }
  if (h.is_atom() && h.atom[0] == '#') {
    std::size_t from = 1;
    PRRef d;
    if (h.is("#")) {
      if (it.size() < 2) bad("(# DEF args...) needs a definition");
      d = read_pr(it[1]);
      from = 2;
    } else {
      d = pr_lookup(h.atom.substr(1));
      if (!d) bad("unknown PR function '" + h.atom + "'");
    }
    return pr_app(d, read_args(it, from));
  }
  if (h.is("lam")) {
    if (it.size() < 3) bad("(lam vN ... body) needs a variable and a body");
    std::vector<Var> xs;
    for (std::size_t i = 1; i + 1 < it.size(); ++i) {
      auto x = as_var(it[i]);
      if (!x) bad("lam binder must be a variable");
      xs.push_back(*x);
    }
    return lambda_abstract(xs, read_term(it.back()));
  }
  if (h.is("update")) {
    if (it.size() != 4) bad("(update eta nu tau) takes three arguments");
    return update_term(read_term(it[1]), read_term(it[2]), read_term(it[3]));
  }
  if (it.size() == 1) return read_term(it[0]);
  return fold_app(it, 0);
}

Formula read_formula(const SExpr& e);

Formula binary_formula(const std::string& op, const SExpr& l, const SExpr& r) {
  if (op == "=") return eq(read_term(l), read_term(r));
  if (op == "!=") return neg(eq(read_term(l), read_term(r)));
  if (op == "~") return kleene_eq(read_term(l), read_term(r));
  if (op == "<") {
    Term a = read_term(l), b = read_term(r);
    VarSet avoid = free_vars(a);
    collect_vars(b, avoid);
    return less(a, b, fresh(avoid));
  }
  Formula a = read_formula(l), b = read_formula(r);
  if (op == "&") return conj(a, b);
  if (op == "|") return disj(a, b);
  if (op == "->") return imp(a, b);
  if (op == "<->") return iff(a, b);
  throw SyntaxError("unknown connective '" + op + "'");
}

bool is_infix(const SExpr& e) {
  static const char* ops[] = {"=", "!=", "~", "<", "&", "|", "->", "<->"};
  if (!e.is_atom()) return false;
  return std::ranges::any_of(ops, [&](const char* o) { return e.atom == o; });
}

std::optional<unsigned> param_arity(const SExpr& e) {
  if (!e.is_atom() || e.atom.size() < 2 || e.atom[0] != 'P') return std::nullopt;
  return digits(std::string_view(e.atom).substr(1));
}

Formula read_formula(const SExpr& e) {
  if (e.is_atom()) {
    if (e.is("bot")) return bot();
    if (e.is("top")) return top();
    if (auto n = param_arity(e); n && *n == 0) return rel(RelSym::param(0), {});
    bad("unknown formula atom '" + e.atom + "'");
  }
  const auto& it = e.items;
  if (it.size() == 3 && is_infix(it[1])) return binary_formula(it[1].atom, it[0], it[2]);
  const auto& h = it[0];
  if (!h.is_atom()) {
    if (it.size() == 1) return read_formula(h);
    bad("formula list must start with an operator");
  }
  const std::string& a = h.atom;
  if ((a[0] == 'A' || a[0] == 'E') && a.size() > 1) {
    SExpr v{a.substr(1), {}};
    if (auto x = as_var(v)) {
      if (it.size() != 2) bad("quantifier takes one body");
      Formula body = read_formula(it[1]);
      return a[0] == 'A' ? all(*x, body) : ex(*x, body);
    }
  }
  if (a == "forall" || a == "exists") {
    if (it.size() != 3) bad("(forall vN body)");
    auto x = as_var(it[1]);
    if (!x) bad("quantifier needs a variable");
    Formula body = read_formula(it[2]);
    return a == "forall" ? all(*x, body) : ex(*x, body);
  }
  if (a == "&" || a == "and" || a == "|" || a == "or") {
    if (it.size() < 2) bad("connective needs arguments");
    Formula f = read_formula(it[1]);
    for (std::size_t i = 2; i < it.size(); ++i) {
      Formula g = read_formula(it[i]);
      f = (a == "&" || a == "and") ? conj(f, g) : disj(f, g);
    }
    return f;
  }
  if (a == "->" || a == "imp") {
    if (it.size() < 3) bad("implication needs two arguments");
    Formula f = read_formula(it.back());
    for (std::size_t i = it.size() - 1; i-- > 1;) f = imp(read_formula(it[i]), f);
    return f;
  }
  if (a == "<->" || a == "iff") {
    if (it.size() != 3) bad("<-> takes two arguments");
    return iff(read_formula(it[1]), read_formula(it[2]));
  }
  if (a == "=" || a == "!=" || a == "~" || a == "<") {
    if (it.size() != 3) bad("binary predicate takes two arguments");
    return binary_formula(a, it[1], it[2]);
  }
  if (a == "not") {
    if (it.size() != 2) bad("not takes one argument");
    return neg(read_formula(it[1]));
  }
  if (a == "down") {
    if (it.size() != 2) bad("down takes one argument");
    return down(read_term(it[1]));
  }
  if (auto n = param_arity(h)) return rel(RelSym::param(*n), read_args(it, 1));
  if (a == "I") {
    if (it.size() < 3 || !it[1].is_atom()) bad("(I n body args...)");
    auto n = digits(it[1].atom);
    if (!n) bad("(I n body args...) needs a numeric arity");
    return rel(RelSym::fix(read_formula(it[2]), *n), read_args(it, 3));
  }
  if (a == "rel") {
    if (it.size() < 2 || !it[1].is_atom()) bad("(rel name args...)");
    auto args = read_args(it, 2);
    return rel(RelSym::defined(it[1].atom, static_cast<unsigned>(args.size())), std::move(args));
  }
  bad("unknown formula head '" + a + "'");
}

}  // namespace

Term parse_term(std::string_view text) { return read_term(Reader(text).read_all()); }
Formula parse_formula(std::string_view text) { return read_formula(Reader(text).read_all()); }
PRRef parse_prdef(std::string_view text) { return read_pr(Reader(text).read_all()); }

}  // namespace fixkit
