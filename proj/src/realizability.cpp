#include "fixkit/realizability.hpp"

#include "fixkit/combinatory.hpp"

namespace fixkit {

RealizabilityConfig standard_config() {
  RealizabilityConfig cfg;
  cfg.clause = [](const RelSym& R) -> std::optional<RelSym> {
    switch (R.kind) {
      case RelSym::Kind::param: return RelSym::param(R.arity + 1);
      case RelSym::Kind::fix: return RelSym::fix(rea_operator(R.body, R.arity), R.arity + 1);
      case RelSym::Kind::defined: return RelSym::defined("r" + R.tag, R.arity + 1);
    }
    return std::nullopt;
  };
  return cfg;
}

RelSym realize_relation(const RelSym& R, const RealizabilityConfig& cfg) {
  auto out = cfg.clause ? cfg.clause(R) : std::nullopt;
  if (!out) throw RealizabilityError("realize: no clause for a relation of arity " + std::to_string(R.arity));
  if (out->arity != R.arity + 1) throw RealizabilityError("realize: clause image has the wrong arity");
  return *out;
}

namespace {

Term pl(Term t) { return app(constant(Sym::pl), std::move(t)); }
Term pr(Term t) { return app(constant(Sym::pr), std::move(t)); }

VarSet avoid_set(const Term& tau, const Formula& phi) {
  VarSet vs = free_vars(tau);
  all_vars(phi, vs);
  return vs;
}

}  // namespace

Formula realize(const Term& tau, const Formula& phi, const RealizabilityConfig& cfg) {
  switch (phi->kind) {
    case FKind::bot:
    case FKind::eq: return phi;
    case FKind::rel: {
      std::vector<Term> args = phi->args;
      args.push_back(tau);
      return rel(realize_relation(phi->rel, cfg), std::move(args));
    }
    case FKind::conj: return conj(realize(pl(tau), phi->a, cfg), realize(pr(tau), phi->b, cfg));
    case FKind::disj: {
      Formula left = eq(pl(tau), constant(Sym::zero));
      return conj(imp(left, realize(pr(tau), phi->a, cfg)), imp(neg(left), realize(pr(tau), phi->b, cfg)));
    }
    case FKind::imp: {
      Var y = fresh(avoid_set(tau, phi));
      Term ty = app(tau, var(y));
      return all(y, imp(realize(var(y), phi->a, cfg), conj(down(ty), realize(ty, phi->b, cfg))));
    }
    case FKind::all: {
      Var x = phi->bound;
      Formula body = phi->a;
      if (occurs(x, tau)) {
        x = fresh(avoid_set(tau, phi));
        body = subst_term(body, phi->bound, var(x));
      }
      Term tx = app(tau, var(x));
      return all(x, conj(down(tx), realize(tx, body, cfg)));
    }
    case FKind::ex: return realize(pr(tau), subst_term(phi->a, phi->bound, pl(tau)), cfg);
  }
  return phi;
}

Formula self_realize(const Formula& phi, const RealizabilityConfig& cfg) {
  Var x = fresh(free_vars(phi));
  return ex(x, realize(var(x), phi, cfg));
}

bool check_readist(const Formula& phi, const Term& tau, std::span<const Var> us, std::span<const Term> sigmas,
                   const RealizabilityConfig& cfg) {
  Formula lhs = subst_term(realize(tau, phi, cfg), us, sigmas);
  Formula rhs = realize(subst(tau, us, sigmas), subst_term(phi, us, sigmas), cfg);
  return alpha_equal(lhs, rhs);
}

Formula rea_operator(const Formula& Phi, unsigned n) {
  RealizabilityConfig cfg;
  cfg.clause = [n](const RelSym& R) -> std::optional<RelSym> {
    if (R.kind == RelSym::Kind::param && R.arity == n) return RelSym::param(n + 1);
    return std::nullopt;
  };
  return realize(var(n), Phi, cfg);
}

Term fixpoint_realizer(unsigned n) {
  Term id = builtin("id");
  Term body = app(constant(Sym::p), {id, id});
  std::vector<Var> ys;
  for (unsigned i = 0; i < n; ++i) ys.push_back(Var{i});
  return lambda_abstract(ys, body);
}

}  // namespace fixkit
