#include "fixkit/syntax.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace fixkit {

const char* sym_name(Sym s) {
  switch (s) {
    case Sym::zero: return "0";
    case Sym::k: return "k";
    case Sym::s: return "s";
    case Sym::pl: return "pl";
    case Sym::pr: return "pr";
    case Sym::p: return "p";
    case Sym::succ: return "succ";
    case Sym::r: return "r";
    case Sym::d: return "d";
  }
  return "?";
}

// ------------------------------------------------------------------ terms

namespace {
Term make(TermNode n) {
  n.var_mask = n.kind == TermKind::var ? std::uint64_t{1} << (n.index % 64) : 0;
  n.tree_size = 1;
  n.arith = n.kind == TermKind::succ || n.kind == TermKind::add || n.kind == TermKind::mul || n.kind == TermKind::pr;
  for (const auto& a : n.args) {
    n.var_mask |= a->var_mask;
    n.tree_size = std::min<std::uint64_t>(n.tree_size + a->tree_size, UINT64_MAX / 2);
    n.arith |= a->arith;
  }
  return std::make_shared<const TermNode>(std::move(n));
}

std::uint64_t bit(Var x) { return std::uint64_t{1} << (x.index % 64); }
Formula make(FormulaNode n) { return std::make_shared<const FormulaNode>(std::move(n)); }
}  // namespace

Term var(Var x) { return make({.kind = TermKind::var, .index = x.index}); }
Term var(std::uint32_t i) { return var(Var{i}); }

Term constant(Sym s) { return make({.kind = TermKind::constant, .sym = s}); }

Term num(const Nat& n) {
  if (n < 0) throw SyntaxError("negative numeral");
  if (n == 0) return constant(Sym::zero);
  return make({.kind = TermKind::numeral, .value = n});
}

Term numeral(unsigned n) {
  Term t = constant(Sym::zero);
  for (unsigned i = 0; i < n; ++i) t = succ(t);
  return t;
}

Term prim(std::string name) {
  if (name.empty()) throw SyntaxError("empty primitive name");
  return make({.kind = TermKind::prim, .name = std::move(name)});
}

Term succ(Term t) { return make({.kind = TermKind::succ, .args = {std::move(t)}}); }
Term add(Term a, Term b) { return make({.kind = TermKind::add, .args = {std::move(a), std::move(b)}}); }
Term mul(Term a, Term b) { return make({.kind = TermKind::mul, .args = {std::move(a), std::move(b)}}); }
Term app(Term f, Term a) { return make({.kind = TermKind::app, .args = {std::move(f), std::move(a)}}); }

Term app(Term f, std::initializer_list<Term> as) {
  for (const auto& a : as) f = app(f, a);
  return f;
}

Term pr_app(PRRef d, std::vector<Term> args) {
  if (!d) throw SyntaxError("null PR definition");
  if (args.size() != d->arity)
    throw SyntaxError("PR symbol of arity " + std::to_string(d->arity) + " applied to " +
                      std::to_string(args.size()) + " arguments");
  return make({.kind = TermKind::pr, .def = std::move(d), .args = std::move(args)});
}

bool same(const Term& a, const Term& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->args.size() != b->args.size()) return false;
  switch (a->kind) {
    case TermKind::var: return a->index == b->index;
    case TermKind::constant: return a->sym == b->sym;
    case TermKind::numeral: return a->value == b->value;
    case TermKind::prim: return a->name == b->name;
    case TermKind::pr:
      if (!same_pr(*a->def, *b->def)) return false;
      break;
    default: break;
  }
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!same(a->args[i], b->args[i])) return false;
  return true;
}

std::size_t size(const Term& t) { return t->tree_size; }

void collect_vars(const Term& t, VarSet& out) {
  if (t->var_mask == 0) return;
  if (t->kind == TermKind::var) {
    out.insert(Var{t->index});
    return;
  }
  for (const auto& a : t->args) collect_vars(a, out);
}

VarSet free_vars(const Term& t) {
  VarSet s;
  collect_vars(t, s);
  return s;
}

bool occurs(Var x, const Term& t) {
  if (!(t->var_mask & bit(x))) return false;
  if (t->kind == TermKind::var) return t->index == x.index;
  return std::ranges::any_of(t->args, [&](const Term& a) { return occurs(x, a); });
}

bool is_closed(const Term& t) { return t->var_mask == 0; }

// ---------------------------------------------------------------- formulas

RelSym RelSym::fix(const Formula& phi, unsigned n) {
  if (!is_operator_form(phi, n)) throw SyntaxError("fixpoint body is not an operator form in P" + std::to_string(n));
  return {Kind::fix, n, {}, alpha_normalize(phi)};
}

bool same(const RelSym& a, const RelSym& b) {
  if (a.kind != b.kind || a.arity != b.arity) return false;
  switch (a.kind) {
    case RelSym::Kind::param: return true;
    case RelSym::Kind::defined: return a.tag == b.tag;
    case RelSym::Kind::fix: return same(a.body, b.body);
  }
  return false;
}

Formula bot() { return make({.kind = FKind::bot}); }
Formula top() { return eq(constant(Sym::zero), constant(Sym::zero)); }
Formula eq(Term l, Term r) { return make({.kind = FKind::eq, .lhs = std::move(l), .rhs = std::move(r)}); }

Formula rel(RelSym R, std::vector<Term> args) {
  if (args.size() != R.arity)
    throw SyntaxError("relation of arity " + std::to_string(R.arity) + " applied to " + std::to_string(args.size()) +
                      " terms");
  return make({.kind = FKind::rel, .rel = std::move(R), .args = std::move(args)});
}

Formula conj(Formula a, Formula b) { return make({.kind = FKind::conj, .a = std::move(a), .b = std::move(b)}); }
Formula disj(Formula a, Formula b) { return make({.kind = FKind::disj, .a = std::move(a), .b = std::move(b)}); }
Formula imp(Formula a, Formula b) { return make({.kind = FKind::imp, .a = std::move(a), .b = std::move(b)}); }
Formula all(Var x, Formula body) { return make({.kind = FKind::all, .a = std::move(body), .bound = x}); }
Formula ex(Var x, Formula body) { return make({.kind = FKind::ex, .a = std::move(body), .bound = x}); }
Formula neg(Formula a) { return imp(std::move(a), bot()); }
Formula iff(Formula a, Formula b) { return conj(imp(a, b), imp(b, a)); }
Formula down(Term t) { return eq(t, t); }
Formula kleene_eq(Term a, Term b) { return imp(disj(down(a), down(b)), eq(a, b)); }
Formula less(Term a, Term b, Var z) { return ex(z, eq(add(std::move(a), succ(var(z))), std::move(b))); }

Formula conj_all(std::span<const Formula> fs) {
  if (fs.empty()) return top();
  Formula out = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) out = conj(out, fs[i]);
  return out;
}

bool same(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FKind::bot: return true;
    case FKind::eq: return same(a->lhs, b->lhs) && same(a->rhs, b->rhs);
    case FKind::rel:
      if (!same(a->rel, b->rel)) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!same(a->args[i], b->args[i])) return false;
      return true;
    case FKind::conj:
    case FKind::disj:
    case FKind::imp: return same(a->a, b->a) && same(a->b, b->b);
    case FKind::all:
    case FKind::ex: return a->bound == b->bound && same(a->a, b->a);
  }
  return false;
}

bool alpha_equal(const Formula& a, const Formula& b) { return same(alpha_normalize(a), alpha_normalize(b)); }

std::size_t size(const Formula& f) {
  switch (f->kind) {
    case FKind::bot: return 1;
    case FKind::eq: return 1 + size(f->lhs) + size(f->rhs);
    case FKind::rel: {
      std::size_t n = 1;
      for (const auto& t : f->args) n += size(t);
      return n;
    }
    case FKind::conj:
    case FKind::disj:
    case FKind::imp: return 1 + size(f->a) + size(f->b);
    case FKind::all:
    case FKind::ex: return 1 + size(f->a);
  }
  return 1;
}

namespace {

void free_vars_into(const Formula& f, VarSet& out) {
  switch (f->kind) {
    case FKind::bot: return;
    case FKind::eq:
      collect_vars(f->lhs, out);
      collect_vars(f->rhs, out);
      return;
    case FKind::rel:
      for (const auto& t : f->args) collect_vars(t, out);
      return;
    case FKind::conj:
    case FKind::disj:
    case FKind::imp:
      free_vars_into(f->a, out);
      free_vars_into(f->b, out);
      return;
    case FKind::all:
    case FKind::ex: {
      VarSet inner;
      free_vars_into(f->a, inner);
      inner.erase(f->bound);
      out.insert(inner.begin(), inner.end());
      return;
    }
  }
}

}  // namespace

VarSet free_vars(const Formula& f) {
  VarSet s;
  free_vars_into(f, s);
  return s;
}

void all_vars(const Formula& f, VarSet& out) {
  switch (f->kind) {
    case FKind::bot: return;
    case FKind::eq:
      collect_vars(f->lhs, out);
      collect_vars(f->rhs, out);
      return;
    case FKind::rel:
      for (const auto& t : f->args) collect_vars(t, out);
      return;
    case FKind::conj:
    case FKind::disj:
    case FKind::imp:
      all_vars(f->a, out);
      all_vars(f->b, out);
      return;
    case FKind::all:
    case FKind::ex:
      out.insert(f->bound);
      all_vars(f->a, out);
      return;
  }
}

Var fresh(const VarSet& avoid, std::uint32_t from) {
  Var x{from};
  while (avoid.contains(x)) ++x.index;
  return x;
}

// ------------------------------------------------------------ alpha form

namespace {

using Renaming = std::map<Var, Var>;

template <class M>
bool untouched(const Term& t, const M& m) {
  std::uint64_t keys = 0;
  for (const auto& kv : m) keys |= bit(kv.first);
  return (t->var_mask & keys) == 0;
}

Term rename_term(const Term& t, const Renaming& ren) {
  if (untouched(t, ren)) return t;
  if (t->kind == TermKind::var) {
    auto it = ren.find(Var{t->index});
    return it == ren.end() ? t : var(it->second);
  }
  if (t->args.empty()) return t;
  TermNode n = *t;
  bool changed = false;
  for (auto& a : n.args) {
    Term b = rename_term(a, ren);
    changed |= b != a;
    a = std::move(b);
  }
  return changed ? make(std::move(n)) : t;
}

Formula alpha_rec(const Formula& f, Renaming& ren, VarSet& used) {
  switch (f->kind) {
    case FKind::bot: return f;
    case FKind::eq: return eq(rename_term(f->lhs, ren), rename_term(f->rhs, ren));
    case FKind::rel: {
      std::vector<Term> args;
      for (const auto& t : f->args) args.push_back(rename_term(t, ren));
      return rel(f->rel, std::move(args));
    }
    case FKind::conj: return conj(alpha_rec(f->a, ren, used), alpha_rec(f->b, ren, used));
    case FKind::disj: return disj(alpha_rec(f->a, ren, used), alpha_rec(f->b, ren, used));
    case FKind::imp: return imp(alpha_rec(f->a, ren, used), alpha_rec(f->b, ren, used));
    case FKind::all:
    case FKind::ex: {
      Var x = fresh(used);
      std::optional<Var> saved;
      if (auto it = ren.find(f->bound); it != ren.end()) saved = it->second;
      ren[f->bound] = x;
      used.insert(x);
      Formula body = alpha_rec(f->a, ren, used);
      used.erase(x);
      if (saved)
        ren[f->bound] = *saved;
      else
        ren.erase(f->bound);
      return f->kind == FKind::all ? all(x, body) : ex(x, body);
    }
  }
  return f;
}

}  // namespace

Formula alpha_normalize(const Formula& f) {
  Renaming ren;
  VarSet used = free_vars(f);
  return alpha_rec(f, ren, used);
}

// ------------------------------------------------------------ substitution

namespace {

using TermMap = std::map<Var, Term>;

Term subst_map(const Term& t, const TermMap& m) {
  if (untouched(t, m)) return t;
  if (t->kind == TermKind::var) {
    auto it = m.find(Var{t->index});
    return it == m.end() ? t : it->second;
  }
  if (t->args.empty()) return t;
  TermNode n = *t;
  bool changed = false;
  for (auto& a : n.args) {
    Term b = subst_map(a, m);
    changed |= b != a;
    a = std::move(b);
  }
  return changed ? make(std::move(n)) : t;
}

Formula subst_rec(const Formula& f, const TermMap& m) {
  if (m.empty()) return f;
  switch (f->kind) {
    case FKind::bot: return f;
    case FKind::eq: return eq(subst_map(f->lhs, m), subst_map(f->rhs, m));
    case FKind::rel: {
      std::vector<Term> args;
      for (const auto& t : f->args) args.push_back(subst_map(t, m));
      return rel(f->rel, std::move(args));
    }
    case FKind::conj: return conj(subst_rec(f->a, m), subst_rec(f->b, m));
    case FKind::disj: return disj(subst_rec(f->a, m), subst_rec(f->b, m));
    case FKind::imp: return imp(subst_rec(f->a, m), subst_rec(f->b, m));
    case FKind::all:
    case FKind::ex: {
      VarSet body_fv = free_vars(f->a);
      TermMap inner;
      for (const auto& [x, t] : m)
        if (x != f->bound && body_fv.contains(x)) inner.emplace(x, t);
      if (inner.empty()) return f;
      VarSet range;
      for (const auto& [x, t] : inner) collect_vars(t, range);
      Var b = f->bound;
      if (range.contains(b)) {
        VarSet avoid = body_fv;
        avoid.insert(range.begin(), range.end());
        for (const auto& [x, t] : inner) avoid.insert(x);
        b = fresh(avoid);
        inner.emplace(f->bound, var(b));
      }
      Formula body = subst_rec(f->a, inner);
      return f->kind == FKind::all ? all(b, body) : ex(b, body);
    }
  }
  return f;
}

TermMap make_map(std::span<const Var> xs, std::span<const Term> ts) {
  if (xs.size() != ts.size()) throw SyntaxError("substitution: variable and term lists differ in length");
  TermMap m;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!m.emplace(xs[i], ts[i]).second) throw SyntaxError("substitution: repeated variable v" + std::to_string(xs[i].index));
  return m;
}

}  // namespace

Term subst(const Term& t, std::span<const Var> xs, std::span<const Term> ts) { return subst_map(t, make_map(xs, ts)); }

Formula subst_term(const Formula& f, std::span<const Var> xs, std::span<const Term> ts) {
  return subst_rec(f, make_map(xs, ts));
}

Formula subst_term(const Formula& f, Var x, const Term& t) {
  TermMap m;
  m.emplace(x, t);
  return subst_rec(f, m);
}

namespace {

struct RelSubst {
  const RelSym& R;
  std::span<const Var> xs;
  const Formula& body;
  VarSet body_fv;  // FV(body) minus xs

  Formula go(const Formula& f) const {
    switch (f->kind) {
      case FKind::bot:
      case FKind::eq: return f;
      case FKind::rel:
        if (!same(f->rel, R)) return f;
        return subst_term(body, xs, f->args);
      case FKind::conj: return conj(go(f->a), go(f->b));
      case FKind::disj: return disj(go(f->a), go(f->b));
      case FKind::imp: return imp(go(f->a), go(f->b));
      case FKind::all:
      case FKind::ex: {
        Var b = f->bound;
        Formula inner = f->a;
        if (body_fv.contains(b)) {
          VarSet avoid = free_vars(inner);
          avoid.insert(body_fv.begin(), body_fv.end());
          b = fresh(avoid);
          inner = subst_term(inner, f->bound, var(b));
        }
        Formula out = go(inner);
        return f->kind == FKind::all ? all(b, out) : ex(b, out);
      }
    }
    return f;
  }
};

}  // namespace

Formula subst_relation(const Formula& f, const RelSym& R, std::span<const Var> xs, const Formula& body) {
  if (xs.size() != R.arity)
    throw SyntaxError("relation substitution: " + std::to_string(xs.size()) + " binder variables for arity " +
                      std::to_string(R.arity));
  VarSet seen;
  for (Var x : xs)
    if (!seen.insert(x).second) throw SyntaxError("relation substitution: repeated binder variable");
  RelSubst rs{R, xs, body, free_vars(body)};
  for (Var x : xs) rs.body_fv.erase(x);
  return rs.go(f);
}

// -------------------------------------------------------------- positivity

namespace {

void count_occ(const Formula& f, const RelSym& R, bool positive, Occurrences& o) {
  switch (f->kind) {
    case FKind::bot:
    case FKind::eq: return;
    case FKind::rel:
      if (same(f->rel, R)) {
        ++o.total;
        if (positive) ++o.strictly_positive;
      }
      return;
    case FKind::conj:
    case FKind::disj:
      count_occ(f->a, R, positive, o);
      count_occ(f->b, R, positive, o);
      return;
    case FKind::imp:
      count_occ(f->a, R, false, o);
      count_occ(f->b, R, positive, o);
      return;
    case FKind::all:
    case FKind::ex: count_occ(f->a, R, positive, o); return;
  }
}

void collect_rels(const Formula& f, std::vector<RelSym>& out) {
  switch (f->kind) {
    case FKind::bot:
    case FKind::eq: return;
    case FKind::rel:
      if (std::ranges::none_of(out, [&](const RelSym& s) { return same(s, f->rel); })) out.push_back(f->rel);
      return;
    case FKind::conj:
    case FKind::disj:
    case FKind::imp:
      collect_rels(f->a, out);
      collect_rels(f->b, out);
      return;
    case FKind::all:
    case FKind::ex: collect_rels(f->a, out); return;
  }
}

}  // namespace

Occurrences strictly_positive_occurrences(const Formula& f, const RelSym& R) {
  Occurrences o;
  count_occ(f, R, true, o);
  return o;
}

std::vector<RelSym> relations(const Formula& f) {
  std::vector<RelSym> out;
  collect_rels(f, out);
  return out;
}

bool is_operator_form(const Formula& f, unsigned n) {
  VarSet expect;
  for (unsigned i = 0; i < n; ++i) expect.insert(Var{i});
  if (free_vars(f) != expect) return false;
  auto rs = relations(f);
  if (rs.size() != 1 || !same(rs[0], RelSym::param(n))) return false;
  auto o = strictly_positive_occurrences(f, rs[0]);
  return o.total >= 1 && o.total == o.strictly_positive;
}

bool is_sigma_eq(const Formula& f) { return f->kind == FKind::ex && f->a->kind == FKind::eq; }

bool is_almost_negative(const Formula& f) {
  switch (f->kind) {
    case FKind::bot:
    case FKind::eq:
    case FKind::rel: return true;
    case FKind::disj: return false;
    case FKind::conj:
    case FKind::imp: return is_almost_negative(f->a) && is_almost_negative(f->b);
    case FKind::all: return is_almost_negative(f->a);
    case FKind::ex: return f->a->kind == FKind::eq;
  }
  return false;
}

// --------------------------------------------------------------- languages

const char* language_name(LanguageTag l) {
  switch (l) {
    case LanguageTag::HA: return "HA";
    case LanguageTag::PRA: return "PRA";
    case LanguageTag::HAP: return "HAP";
    case LanguageTag::HAP_P: return "HAP_P";
    case LanguageTag::HAP_ID: return "HAP_ID";
  }
  return "?";
}

bool in_language(const Term& t, LanguageTag l) {
  bool arithmetic = l == LanguageTag::HA || l == LanguageTag::PRA;
  switch (t->kind) {
    case TermKind::var:
    case TermKind::numeral: return true;
    case TermKind::constant: return !arithmetic || t->sym == Sym::zero;
    case TermKind::prim:
    case TermKind::app:
      if (arithmetic) return false;
      break;
    case TermKind::pr:
      if (l != LanguageTag::PRA) return false;
      break;
    default: break;
  }
  return std::ranges::all_of(t->args, [&](const Term& a) { return in_language(a, l); });
}

bool in_language(const Formula& f, LanguageTag l) {
  switch (f->kind) {
    case FKind::bot: return true;
    case FKind::eq: return in_language(f->lhs, l) && in_language(f->rhs, l);
    case FKind::rel: {
      bool ok = false;
      switch (f->rel.kind) {
        case RelSym::Kind::param: ok = l == LanguageTag::HAP_P; break;
        case RelSym::Kind::fix: ok = l == LanguageTag::HAP_ID && in_language(f->rel.body, LanguageTag::HAP_P); break;
        case RelSym::Kind::defined: ok = false; break;
      }
      return ok && std::ranges::all_of(f->args, [&](const Term& a) { return in_language(a, l); });
    }
    case FKind::conj:
    case FKind::disj:
    case FKind::imp: return in_language(f->a, l) && in_language(f->b, l);
    case FKind::all:
    case FKind::ex: return in_language(f->a, l);
  }
  return false;
}

}  // namespace fixkit
