#include "fixkit/combinatory.hpp"

#include <array>
#include <unordered_map>

namespace fixkit {

namespace {

Term K() { return constant(Sym::k); }
Term S_() { return constant(Sym::s); }

const Term& add_term() {
  static const Term t = compile_pr(*pr_lookup("add"));
  return t;
}

const Term& mult_term() {
  static const Term t = compile_pr(*pr_lookup("mult"));
  return t;
}

// Replace S, + and × (and PR symbols) by applications of total combinators.
Term factor(const Term& t) {
  if (!t->arith) return t;
  switch (t->kind) {
    case TermKind::var:
    case TermKind::constant:
    case TermKind::numeral:
    case TermKind::prim: return t;
    case TermKind::succ: return app(constant(Sym::succ), factor(t->args[0]));
    case TermKind::add: return app(add_term(), {factor(t->args[0]), factor(t->args[1])});
    case TermKind::mul: return app(mult_term(), {factor(t->args[0]), factor(t->args[1])});
    case TermKind::app: return app(factor(t->args[0]), factor(t->args[1]));
    case TermKind::pr: {
      Term f = compile_pr(*t->def);
      for (const auto& a : t->args) f = app(f, factor(a));
      return f;
    }
  }
  return t;
}

unsigned sym_arity(Sym s) {
  switch (s) {
    case Sym::zero: return 0;
    case Sym::pl:
    case Sym::pr:
    case Sym::succ: return 1;
    case Sym::k:
    case Sym::p: return 2;
    case Sym::s:
    case Sym::r: return 3;
    case Sym::d: return 5;
  }
  return 0;
}

class Abstractor {
 public:
  Abstractor(Var x, bool closed_are_values) : x_(x), closed_are_values_(closed_are_values) {}

  // t is already factored. An application not mentioning x is kept under K
  // only if it is already a value; otherwise it takes the s rule so that its
  // evaluation waits for the argument.
  Term abstract(const Term& t) {
    if (t->kind == TermKind::var && t->index == x_.index) return app(S_(), {K(), K()});
    if (t->kind != TermKind::app) return app(K(), t);
    if (!occurs(x_, t) && (closed_are_values_ || value_form(t))) return app(K(), t);
    if (auto it = done_.find(t.get()); it != done_.end()) return it->second;
    Term out = app(S_(), {abstract(t->args[0]), abstract(t->args[1])});
    done_.emplace(t.get(), out);
    return out;
  }

 private:
  Var x_;
  bool closed_are_values_;
  // keyed by node; the terms outlive the abstractor
  std::unordered_map<const TermNode*, Term> done_;
  std::unordered_map<const TermNode*, bool> value_;

  // a term that evaluates to itself in one step: atoms and unsaturated
  // applications of combinators to such terms
  bool value_form(const Term& t) {
    if (auto it = value_.find(t.get()); it != value_.end()) return it->second;
    std::size_t n = 0;
    const TermNode* h = t.get();
    bool ok = true;
    while (ok && h->kind == TermKind::app) {
      ok = value_form(h->args[1]);
      h = h->args[0].get();
      ++n;
    }
    if (ok) {
      switch (h->kind) {
        case TermKind::var:
        case TermKind::numeral: ok = n == 0; break;
        case TermKind::constant: ok = n < sym_arity(h->sym); break;
        case TermKind::prim: {
          const PrimDef* p = find_prim(h->name);
          ok = p && n < p->arity;
          break;
        }
        default: ok = false;
      }
    }
    value_.emplace(t.get(), ok);
    return ok;
  }
};

Term abstract(Var x, const Term& t) { return Abstractor(x, false).abstract(t); }

}  // namespace

Term lambda_abstract(Var x, const Term& t) { return abstract(x, factor(t)); }

Term lambda_abstract_denoting(Var x, const Term& t) { return Abstractor(x, true).abstract(factor(t)); }

Term lambda_abstract(std::span<const Var> xs, const Term& t) {
  Term out = factor(t);
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) out = abstract(*it, out);
  return out;
}

namespace {

Term lam(std::initializer_list<std::uint32_t> xs, const Term& body) {
  std::vector<Var> vs;
  for (auto i : xs) vs.push_back(Var{i});
  return lambda_abstract(vs, body);
}

Term make_fix() {
  // A a f x = f (a a f) x ; fix = A A
  Term a = var(0), f = var(1), x = var(2);
  Term A = lam({0, 1, 2}, app(f, {app(a, {a, f}), x}));
  return app(A, A);
}

Term make_min() {
  // M m f x y = d (f x y) 0 (λw.y) (λw. m f x (S y)) 0 ; min f x = fix M f x 0
  Term m = var(0), f = var(1), x = var(2), y = var(3);
  Term found = lam({4}, y);
  Term next = lam({4}, app(m, {f, x, succ(y)}));
  Term body = app(constant(Sym::d), {app(f, {x, y}), constant(Sym::zero), found, next, constant(Sym::zero)});
  Term M = app(builtin("fix"), lam({0, 1, 2, 3}, body));
  return lam({1, 2}, app(M, {f, x, constant(Sym::zero)}));
}

}  // namespace

Term builtin(std::string_view name) {
  if (name == "id") {
    static const Term t = app(S_(), {K(), K()});
    return t;
  }
  if (name == "fix") {
    static const Term t = make_fix();
    return t;
  }
  if (name == "min") {
    static const Term t = make_min();
    return t;
  }
  if (name == "d") return constant(Sym::d);
  if (name == "k0") return app(K(), constant(Sym::zero));
  throw SyntaxError("unknown builtin '" + std::string(name) + "'");
}

Term compile_pr(const PRDef& d) {
  std::vector<Var> xs;
  for (unsigned i = 0; i < d.arity; ++i) xs.push_back(Var{i});
  auto x_terms = [&](unsigned n) {
    std::vector<Term> ts;
    for (unsigned i = 0; i < n; ++i) ts.push_back(var(i));
    return ts;
  };
  switch (d.kind) {
    case PRDef::Kind::zero: return lambda_abstract(xs, constant(Sym::zero));
    case PRDef::Kind::succ: return constant(Sym::succ);
    case PRDef::Kind::proj: return lambda_abstract(xs, var(d.index));
    case PRDef::Kind::comp: {
      Term body = compile_pr(*d.parts[0]);
      for (std::size_t j = 1; j < d.parts.size(); ++j) {
        Term h = compile_pr(*d.parts[j]);
        for (const auto& x : x_terms(d.arity)) h = app(h, x);
        body = app(body, h);
      }
      return lambda_abstract(xs, body);
    }
    case PRDef::Kind::rec: {
      unsigned k = d.arity - 1;
      Term base = compile_pr(*d.parts[1]);
      for (const auto& x : x_terms(k)) base = app(base, x);
      // step = λz acc. G x... z acc, with z = v(k+1), acc = v(k+2)
      Term G = compile_pr(*d.parts[0]);
      for (const auto& x : x_terms(k)) G = app(G, x);
      Var z{k + 1}, acc{k + 2};
      std::array<Var, 2> za{z, acc};
      Term step = lambda_abstract(za, app(G, {var(z), var(acc)}));
      Term body = app(constant(Sym::r), {base, step, var(k)});
      return lambda_abstract(xs, body);
    }
  }
  return constant(Sym::zero);
}

Term update_term(const Term& eta, const Term& nu, const Term& tau) {
  VarSet avoid = free_vars(eta);
  collect_vars(nu, avoid);
  collect_vars(tau, avoid);
  Var u = fresh(avoid);
  Var w = fresh(avoid, u.index + 1);
  Term body = app(constant(Sym::d), {var(u), nu, lambda_abstract(w, tau), eta, var(u)});
  return lambda_abstract(u, body);
}

namespace {

Term translate_term(const Term& t) {
  switch (t->kind) {
    case TermKind::var:
    case TermKind::constant:
    case TermKind::numeral:
    case TermKind::prim: return t;
    case TermKind::succ: return succ(translate_term(t->args[0]));
    case TermKind::add: return add(translate_term(t->args[0]), translate_term(t->args[1]));
    case TermKind::mul: return mul(translate_term(t->args[0]), translate_term(t->args[1]));
    case TermKind::app: return app(translate_term(t->args[0]), translate_term(t->args[1]));
    case TermKind::pr: {
      Term f = compile_pr(*t->def);
      for (const auto& a : t->args) f = app(f, translate_term(a));
      return f;
    }
  }
  return t;
}

}  // namespace

Formula translate_pra(const Formula& f) {
  if (!in_language(f, LanguageTag::PRA)) throw SyntaxError("translate_pra: formula is not in L_PRA");
  switch (f->kind) {
    case FKind::bot: return f;
    case FKind::eq: return eq(translate_term(f->lhs), translate_term(f->rhs));
    case FKind::rel: return f;
    case FKind::conj: return conj(translate_pra(f->a), translate_pra(f->b));
    case FKind::disj: return disj(translate_pra(f->a), translate_pra(f->b));
    case FKind::imp: return imp(translate_pra(f->a), translate_pra(f->b));
    case FKind::all: return all(f->bound, translate_pra(f->a));
    case FKind::ex: return ex(f->bound, translate_pra(f->a));
  }
  return f;
}

}  // namespace fixkit
