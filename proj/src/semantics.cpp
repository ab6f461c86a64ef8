// Three-valued bounded semantics. Quantifiers range over numerals; a ∀ is
// never reported true and an ∃ never false unless the bound variable is vacuous.

#include "fixkit/combinatory.hpp"

#include <set>

namespace fixkit {

const char* truth_name(Truth t) {
  switch (t) {
    case Truth::t: return "true";
    case Truth::f: return "false";
    case Truth::unknown: return "unknown";
  }
  return "?";
}

namespace {

class Evaluator {
 public:
  Evaluator(Env env, const Semantics& sem) : env_(std::move(env)), sem_(sem) {}

  Truth run(const Formula& f) {
    switch (f->kind) {
      case FKind::bot: return Truth::f;
      case FKind::eq: return equation(f->lhs, f->rhs);
      case FKind::rel: return relation(f);
      case FKind::conj: {
        Truth a = run(f->a);
        if (a == Truth::f) return Truth::f;
        Truth b = run(f->b);
        if (b == Truth::f) return Truth::f;
        return a == Truth::t && b == Truth::t ? Truth::t : Truth::unknown;
      }
      case FKind::disj: {
        Truth a = run(f->a);
        if (a == Truth::t) return Truth::t;
        Truth b = run(f->b);
        if (b == Truth::t) return Truth::t;
        return a == Truth::f && b == Truth::f ? Truth::f : Truth::unknown;
      }
      case FKind::imp: {
        Truth a = run(f->a);
        if (a == Truth::f) return Truth::t;
        Truth b = run(f->b);
        if (b == Truth::t) return Truth::t;
        return a == Truth::t && b == Truth::f ? Truth::f : Truth::unknown;
      }
      case FKind::all: return forall(f);
      case FKind::ex: return exists(f);
    }
    return Truth::unknown;
  }

 private:
  Env env_;
  const Semantics& sem_;

  Truth equation(const Term& l, const Term& r) {
    EvalResult a = eval(l, env_, sem_.fuel);
    if (a.status == EvalResult::Status::stuck) return Truth::f;
    EvalResult b = eval(r, env_, sem_.fuel);
    if (b.status == EvalResult::Status::stuck) return Truth::f;
    if (!a.ok() || !b.ok()) return Truth::unknown;
    if (a.value->nat && b.value->nat) return a.value->n == b.value->n ? Truth::t : Truth::f;
    return same(a.value, b.value) ? Truth::t : Truth::unknown;
  }

  Truth relation(const Formula& f) {
    std::string key;
    switch (f->rel.kind) {
      case RelSym::Kind::param: key = "P" + std::to_string(f->rel.arity); break;
      case RelSym::Kind::defined: key = f->rel.tag; break;
      case RelSym::Kind::fix: throw EvalError("eval_formula: no semantics for a fixpoint relation");
    }
    auto it = sem_.defined.find(key);
    if (it == sem_.defined.end()) throw EvalError("eval_formula: no semantics for relation " + key);
    std::vector<Nat> args;
    bool unknown = false;
    for (const auto& t : f->args) {
      EvalResult r = eval(t, env_, sem_.fuel);
      if (r.status == EvalResult::Status::stuck) return Truth::f;
      if (!r.is_nat()) {
        unknown = true;
        continue;
      }
      args.push_back(*r.nat());
    }
    if (unknown) return Truth::unknown;
    return it->second(args);
  }

  // binds x for the duration of a call
  template <class F>
  Truth with(Var x, Val v, F&& body) {
    auto it = env_.find(x);
    std::optional<Val> saved;
    if (it != env_.end()) saved = it->second;
    env_[x] = std::move(v);
    Truth out = body();
    if (saved)
      env_[x] = *saved;
    else
      env_.erase(x);
    return out;
  }

  Truth forall(const Formula& f) {
    if (!free_vars(f->a).contains(f->bound)) return run(f->a);
    for (std::uint32_t i = 0; i <= sem_.bound; ++i) {
      Truth t = with(f->bound, make_nat(i), [&] { return run(f->a); });
      if (t == Truth::f) return Truth::f;
    }
    return Truth::unknown;
  }

  void maximal_free_subterms(const Term& t, Var x, std::vector<Term>& out) {
    if (!occurs(x, t)) {
      if (t->kind != TermKind::constant && t->kind != TermKind::numeral) out.push_back(t);
      return;
    }
    for (const auto& a : t->args) maximal_free_subterms(a, x, out);
  }

  void collect_atoms(const Formula& f, Var x, std::vector<Term>& out) {
    switch (f->kind) {
      case FKind::eq:
        maximal_free_subterms(f->lhs, x, out);
        maximal_free_subterms(f->rhs, x, out);
        return;
      case FKind::rel:
        for (const auto& t : f->args) maximal_free_subterms(t, x, out);
        return;
      case FKind::conj:
      case FKind::disj:
      case FKind::imp:
        collect_atoms(f->a, x, out);
        collect_atoms(f->b, x, out);
        return;
      case FKind::all:
      case FKind::ex:
        if (f->bound != x) collect_atoms(f->a, x, out);
        return;
      case FKind::bot: return;
    }
  }

  std::vector<Nat> candidates(const Formula& f) {
    std::vector<Term> ts;
    collect_atoms(f->a, f->bound, ts);
    std::set<Nat> seen;
    std::vector<Nat> out;
    // x = t and t = x name their witness outright, whatever its size
    if (const Formula& m = f->a; m->kind == FKind::eq) {
      auto is_x = [&](const Term& t) { return t->kind == TermKind::var && t->index == f->bound.index; };
      const Term* other = is_x(m->lhs) ? &m->rhs : is_x(m->rhs) ? &m->lhs : nullptr;
      if (other && !occurs(f->bound, *other) &&
          std::ranges::all_of(free_vars(*other), [&](Var v) { return env_.contains(v); })) {
        EvalResult r = eval(*other, env_, sem_.fuel);
        if (r.is_nat() && r.value->n > sem_.bound && seen.insert(r.value->n).second) out.push_back(r.value->n);
      }
    }
    for (const auto& t : ts) {
      if (out.size() >= 32) break;
      VarSet fv = free_vars(t);
      if (std::ranges::any_of(fv, [&](Var v) { return !env_.contains(v); })) continue;
      EvalResult r = eval(t, env_, sem_.fuel);
      if (!r.is_nat() || r.value->n <= sem_.bound) continue;
      // codes of whole formulas are never useful witnesses and make every
      // projection of the candidate expensive
      if (msb(r.value->n) > 128) continue;
      if (seen.insert(r.value->n).second) out.push_back(r.value->n);
    }
    return out;
  }

  Truth exists(const Formula& f) {
    if (!free_vars(f->a).contains(f->bound)) return run(f->a);
    for (std::uint32_t i = 0; i <= sem_.bound; ++i) {
      Truth t = with(f->bound, make_nat(i), [&] { return run(f->a); });
      if (t == Truth::t) return Truth::t;
    }
    if (sem_.heuristic_witnesses) {
      for (const auto& n : candidates(f)) {
        Truth t = with(f->bound, make_nat(n), [&] { return run(f->a); });
        if (t == Truth::t) return Truth::t;
      }
    }
    return Truth::unknown;
  }
};

}  // namespace

Truth eval_formula(const Formula& f, const Env& env, const Semantics& sem) { return Evaluator(env, sem).run(f); }

Truth eval_formula(const Formula& f, const std::map<Var, Nat>& env, const Semantics& sem) {
  return eval_formula(f, nat_env(env), sem);
}

}  // namespace fixkit
