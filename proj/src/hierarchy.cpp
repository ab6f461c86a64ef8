#include "fixkit/hierarchy.hpp"

#include <algorithm>

namespace fixkit {

std::optional<unsigned> classify(const Formula& f) {
  switch (f->kind) {
    case FKind::bot:
    case FKind::eq:
    case FKind::rel: return 0u;
    case FKind::disj: return std::nullopt;
    case FKind::ex:
      if (f->a->kind == FKind::eq) return 0u;
      return std::nullopt;
    case FKind::conj: {
      auto a = classify(f->a), b = classify(f->b);
      if (!a || !b) return std::nullopt;
      return std::max(*a, *b);
    }
    case FKind::all: {
      auto a = classify(f->a);
      if (!a) return std::nullopt;
      return std::max(1u, *a);
    }
    case FKind::imp: {
      auto a = classify(f->a), b = classify(f->b);
      if (!a || !b) return std::nullopt;
      return std::max(*a + 1, *b);
    }
  }
  return std::nullopt;
}

bool in_level(const Formula& f, unsigned n) {
  auto c = classify(f);
  return c && *c <= n;
}

namespace {

void flatten(const Formula& f, std::vector<Formula>& out) {
  if (f->kind == FKind::conj) {
    flatten(f->a, out);
    flatten(f->b, out);
  } else {
    out.push_back(f);
  }
}

bool nf0(const Formula& f) {
  std::vector<Formula> cs;
  flatten(f, cs);
  if (!is_sigma_eq(cs[0])) return false;
  return std::all_of(cs.begin() + 1, cs.end(), [](const Formula& c) { return c->kind == FKind::rel; });
}

}  // namespace

bool is_nf(const Formula& f, unsigned n) {
  if (n == 0) return nf0(f);
  if (f->kind != FKind::all) return false;
  std::vector<Formula> cs;
  flatten(f->a, cs);
  return std::all_of(cs.begin(), cs.end(),
                     [&](const Formula& c) { return c->kind == FKind::imp && is_nf(c->a, n - 1) && nf0(c->b); });
}

Term tuple_proj(const Term& y, std::size_t i, std::size_t k) {
  Term t = y;
  for (std::size_t j = 0; j < i; ++j) t = app(constant(Sym::pr), t);
  if (i + 1 < k) t = app(constant(Sym::pl), t);
  return t;
}

Term tuple(std::span<const Term> ts) {
  Term t = ts.back();
  for (std::size_t i = ts.size() - 1; i-- > 0;) t = app(constant(Sym::p), {ts[i], t});
  return t;
}

Formula trivial_sigma() {
  Var x{0};
  return ex(x, eq(var(x), constant(Sym::zero)));
}

namespace {

Formula lift_once(const Formula& nf, unsigned level) {
  if (level == 0) {
    Var z = fresh(free_vars(nf));
    return all(z, imp(trivial_sigma(), nf));
  }
  std::vector<Formula> cs;
  flatten(nf->a, cs);
  for (auto& c : cs) c = imp(lift_once(c->a, level - 1), c->b);
  return all(nf->bound, conj_all(cs));
}

// binders renamed to distinct indices above every variable of f
Formula rename_apart(const Formula& f, std::uint32_t& next) {
  switch (f->kind) {
    case FKind::bot:
    case FKind::eq:
    case FKind::rel: return f;
    case FKind::conj: {
      Formula a = rename_apart(f->a, next);
      return conj(a, rename_apart(f->b, next));
    }
    case FKind::disj: {
      Formula a = rename_apart(f->a, next);
      return disj(a, rename_apart(f->b, next));
    }
    case FKind::imp: {
      Formula a = rename_apart(f->a, next);
      return imp(a, rename_apart(f->b, next));
    }
    case FKind::all:
    case FKind::ex: {
      Var y{next++};
      Formula body = rename_apart(subst_term(f->a, f->bound, var(y)), next);
      return f->kind == FKind::all ? all(y, body) : ex(y, body);
    }
  }
  return f;
}

std::uint32_t above(const Formula& f) {
  VarSet vs;
  all_vars(f, vs);
  return vs.empty() ? 0 : vs.rbegin()->index + 1;
}

Formula lambda0(const Formula& f) {
  std::vector<Formula> cs;
  flatten(f, cs);
  VarSet taken = free_vars(f);
  std::vector<Term> lhs, rhs;
  std::vector<Var> witnesses;
  std::vector<Formula> rels;
  for (const auto& c : cs) {
    switch (c->kind) {
      case FKind::bot:
        lhs.push_back(constant(Sym::zero));
        rhs.push_back(succ(constant(Sym::zero)));
        break;
      case FKind::eq:
        lhs.push_back(c->lhs);
        rhs.push_back(c->rhs);
        break;
      case FKind::rel: rels.push_back(c); break;
      case FKind::ex: {
        const Formula& e = c->a;
        if (!free_vars(e).contains(c->bound)) {
          lhs.push_back(e->lhs);
          rhs.push_back(e->rhs);
          break;
        }
        Var w = taken.contains(c->bound) ? fresh(taken) : c->bound;
        taken.insert(w);
        witnesses.push_back(w);
        Formula e2 = w == c->bound ? e : subst_term(e, c->bound, var(w));
        lhs.push_back(e2->lhs);
        rhs.push_back(e2->rhs);
        break;
      }
      default: throw HierarchyError("normalize: formula is not in Λ_0");
    }
  }
  Formula E = lhs.size() == 1 ? eq(lhs[0], rhs[0]) : eq(tuple(lhs), tuple(rhs));
  Formula sigma;
  if (witnesses.empty()) {
    sigma = ex(fresh(free_vars(E)), E);
  } else if (witnesses.size() == 1) {
    sigma = ex(witnesses[0], E);
  } else {
    Var z = fresh(taken);
    std::vector<Term> projs;
    for (std::size_t i = 0; i < witnesses.size(); ++i) projs.push_back(tuple_proj(var(z), i, witnesses.size()));
    sigma = ex(z, subst_term(E, witnesses, projs));
  }
  Formula out = sigma;
  for (const auto& r : rels) out = conj(out, r);
  return out;
}

struct Clause {
  std::vector<Formula> ants;
  Formula cons;
};

void extract(const Formula& f, std::vector<Formula>& ants, std::vector<Var>& vars, std::vector<Clause>& out) {
  if (classify(f) == 0u) {
    out.push_back({ants, f});
    return;
  }
  switch (f->kind) {
    case FKind::conj:
      extract(f->a, ants, vars, out);
      extract(f->b, ants, vars, out);
      return;
    case FKind::all:
      vars.push_back(f->bound);
      extract(f->a, ants, vars, out);
      return;
    case FKind::imp:
      ants.push_back(f->a);
      extract(f->b, ants, vars, out);
      ants.pop_back();
      return;
    default: throw HierarchyError("normalize: formula is not almost negative");
  }
}

Formula lambda_n(const Formula& f, unsigned n) {
  if (n == 0) return lambda0(f);
  std::uint32_t next = above(f);
  Formula g = rename_apart(f, next);
  std::vector<Formula> ants;
  std::vector<Var> vars;
  std::vector<Clause> clauses;
  extract(g, ants, vars, clauses);
  std::vector<Formula> parts;
  for (const auto& c : clauses) {
    Formula a = c.ants.empty() ? lift_nf(trivial_sigma(), 0, n - 1) : lambda_n(conj_all(c.ants), n - 1);
    parts.push_back(imp(a, lambda0(c.cons)));
  }
  Formula body = conj_all(parts);
  if (vars.size() == 1) return all(vars[0], body);
  VarSet avoid = free_vars(f);
  for (Var v : vars) avoid.insert(v);
  Var y = fresh(avoid);
  if (vars.empty()) return all(y, body);
  std::vector<Term> projs;
  for (std::size_t i = 0; i < vars.size(); ++i) projs.push_back(tuple_proj(var(y), i, vars.size()));
  return all(y, subst_term(body, vars, projs));
}

}  // namespace

Formula lift_nf(const Formula& nf, unsigned from, unsigned to) {
  Formula out = nf;
  for (unsigned l = from; l < to; ++l) out = lift_once(out, l);
  return out;
}

Formula normalize(const Formula& f, unsigned n) {
  auto c = classify(f);
  if (!c) throw HierarchyError("normalize: formula is not almost negative");
  if (*c > n) throw HierarchyError("normalize: formula has level " + std::to_string(*c) + " > " + std::to_string(n));
  return lambda_n(f, n);
}

}  // namespace fixkit
