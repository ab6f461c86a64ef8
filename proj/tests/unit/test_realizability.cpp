#include "fixkit/combinatory.hpp"
#include "fixkit/extract.hpp"
#include "fixkit/realizability.hpp"
#include "support/corpus.hpp"
#include "support/gen.hpp"

#include <doctest.h>

using namespace fixkit;

namespace {

Formula F(const char* s) { return parse_formula(s); }
Term z() { return constant(Sym::zero); }

bool negative(const Formula& f) {
  switch (f->kind) {
    case FKind::disj:
    case FKind::ex: return false;
    case FKind::conj:
    case FKind::imp: return negative(f->a) && negative(f->b);
    case FKind::all: return negative(f->a);
    default: return true;
  }
}

bool subset(const VarSet& a, const VarSet& b) {
  return std::ranges::all_of(a, [&](Var v) { return b.contains(v); });
}

// the realizer with its package variable set to 0
Term closed_realizer(const ExtractionResult& ex) {
  std::array<Var, 1> h{ex.package};
  std::array<Term, 1> zero{z()};
  return subst(ex.realizer, h, zero);
}

}  // namespace

TEST_CASE("realizability clauses") {
  Term x = var(5);
  CHECK(same(realize(x, top()), top()));
  CHECK(same(realize(x, bot()), bot()));
  Formula p = realize(x, rel(RelSym::param(1), {var(0)}));
  CHECK(same(p, rel(RelSym::param(2), {var(0), x})));
  CHECK(negative(realize(x, F("((Ev0 (v0 = v1)) | (Av2 ((P1 v2) -> bot)))"))));
  RealizabilityConfig none;
  CHECK_THROWS_AS(realize(x, rel(RelSym::param(1), {var(0)}), none), RealizabilityError);
}

TEST_CASE("self realization") {
  CHECK(alpha_equal(self_realize(top()), ex(Var{0}, top())));
  CHECK(alpha_equal(self_realize(bot()), ex(Var{0}, bot())));
  gen::Rng r(61);
  for (int i = 0; i < 50; ++i) {
    Formula f = gen::any_formula(r, 4, 3);
    CHECK(free_vars(self_realize(f)) == free_vars(f));
  }
}

TEST_CASE("negativity and free variables") {
  gen::Rng r(62);
  for (int i = 0; i < 300; ++i) {
    Formula f = gen::any_formula(r, 4, 3);
    Var x = fresh(free_vars(f));
    Formula g = realize(var(x), f);
    CHECK(negative(g));
    VarSet upper = free_vars(f);
    CHECK(subset(upper, free_vars(g)));
    upper.insert(x);
    CHECK(subset(free_vars(g), upper));
  }
}

TEST_CASE("substitution distributes over realizability") {
  std::array<Var, 1> u{Var{0}};
  std::array<Term, 1> s{succ(z())};
  CHECK(check_readist(F("(Av1 (v1 = v0))"), var(2), u, s));
  std::array<Term, 1> same_var{var(0)};
  CHECK(check_readist(F("(Av1 (v1 = v0))"), var(2), u, same_var));

  gen::Rng r(63);
  auto pool = gen::first_vars(4);
  for (int i = 0; i < 300; ++i) {
    Formula f = gen::any_formula(r, 3, 3);
    Term tau = gen::coin(r) ? var(gen::pick(r, 5)) : gen::comb_term(r, 2, pool);
    std::array<Var, 2> us{Var{gen::pick(r, 2)}, Var{2 + gen::pick(r, 2)}};
    std::array<Term, 2> ts{gen::ha_term(r, 2, pool), gen::ha_term(r, 2, pool)};
    CHECK(check_readist(f, tau, us, ts));
  }
}

TEST_CASE("relation substitution commutes with realizability") {
  gen::Rng r(64);
  RelSym P1 = RelSym::param(1), P2 = RelSym::param(2);
  std::array<Var, 1> x1{Var{0}};
  std::array<Var, 2> x2{Var{0}, Var{1}};
  for (int i = 0; i < 200; ++i) {
    Formula f = gen::any_formula(r, 3, 2, 1);
    Formula theta = gen::lambda0(r, 1);
    Term tau = var(9);
    Formula lhs = realize(tau, subst_relation(f, P1, x1, theta));
    Formula rhs = subst_relation(realize(tau, f), P2, x2, realize(var(1), theta));
    CHECK(alpha_equal(lhs, rhs));
  }
}

TEST_CASE("realizers of operator forms") {
  Formula a = rea_operator(F("(P1 v0)"), 1);
  CHECK(same(a, rel(RelSym::param(2), {var(0), var(1)})));
  Formula b = rea_operator(F("((0 = 0) -> (P1 v0))"), 1);
  CHECK(strictly_positive_occurrences(b, RelSym::param(2)).strictly_positive == 1);

  gen::Rng r(65);
  for (int i = 0; i < 100; ++i) {
    unsigned n = 1 + gen::pick(r, 2);
    Formula Phi = gen::operator_form(r, n);
    REQUIRE(is_operator_form(Phi, n));
    Formula R = rea_operator(Phi, n);
    auto before = strictly_positive_occurrences(Phi, RelSym::param(n));
    auto after = strictly_positive_occurrences(R, RelSym::param(n + 1));
    CHECK(after.strictly_positive == before.strictly_positive);
    CHECK(after.total == after.strictly_positive);
    CHECK(is_almost_negative(R));
    CHECK(is_operator_form(R, n + 1));
  }
}

TEST_CASE("fixpoint realizer") {
  Term r0 = fixpoint_realizer(0);
  CHECK(is_closed(r0));
  EvalResult v0 = eval(r0);
  REQUIRE(v0.ok());
  CHECK(v0.value->head == Head::pair);
  EvalResult v2 = eval(app(fixpoint_realizer(2), {num(3), num(4)}));
  REQUIRE(v2.ok());
  CHECK(same(v2.value, v0.value));
  for (unsigned k = 0; k < 5; ++k) CHECK(eval(app(app(constant(Sym::pl), r0), num(k))).nat() == k);
}

TEST_CASE("trivial realizers") {
  Semantics sem;
  for (const char* s : {"(0 = 0)", "((0 = 0) & (Av0 (v0 = v0)))", "((S 0) = (S 0))"}) {
    Formula f = F(s);
    Term t = trivial_realizer(f);
    CHECK(eval(t).ok());
    Formula ob = realize(t, f);
    CHECK(eval_formula(ob, std::map<Var, Nat>{}, sem) != Truth::f);
  }
}

TEST_CASE("extraction from the corpus") {
  std::map<std::string, ExtractionResult> out;
  for (const auto& [name, d] : corpus::load()) {
    CAPTURE(name);
    ExtractionResult ex = extract(d);
    VarSet allowed = free_vars(d.conclusion());
    allowed.insert(ex.package);
    CHECK(subset(free_vars(ex.realizer), allowed));
    CHECK(ex.line_realizers.size() == d.lines.size());
    out.emplace(name, ex);
  }

  // 0 = 0: the obligation is the equation itself
  const auto& zero = out.at("zero_eq");
  CHECK(eval(closed_realizer(zero)).ok());
  CHECK(same(realize(closed_realizer(zero), top()), top()));

  // φ → φ: behaves as the identity
  Term idr = closed_realizer(out.at("lpt1"));
  for (unsigned k = 0; k < 5; ++k) CHECK(eval(app(idr, num(k))).nat() == k);

  // ∃v0 (v0 = S0): the witness is 1
  Term w = app(constant(Sym::pl), closed_realizer(out.at("exists_one")));
  CHECK(eval(w).nat() == 1);
  Term w2 = app(constant(Sym::pl), closed_realizer(out.at("fixpoint_detour")));
  CHECK(eval(w2).nat() == 1);

  // ∀v5 (0 + v5 = v5) by induction: a total function
  Term ind = closed_realizer(out.at("induction"));
  for (unsigned k = 0; k < 5; ++k) CHECK(eval(app(ind, num(k)), Fuel{1000000}).ok());

  // a failing derivation is refused
  Derivation bad = corpus::load().front().d;
  bad.lines.back().formula = corpus::mutate(bad.lines.back().formula);
  CHECK_THROWS_AS(extract(bad), KernelError);
}

TEST_CASE("extraction with hypotheses") {
  for (const auto& [name, d] : corpus::load()) {
    if (d.hypotheses.empty()) continue;
    ExtractionResult ex = extract(d);
    CHECK(free_vars(ex.realizer).contains(ex.package));
    // a package of trivial realizers satisfies the context
    std::vector<Term> parts;
    for (const auto& g : d.hypotheses) parts.push_back(trivial_realizer(g));
    Term pkg = tuple(parts);
    std::array<Var, 1> h{ex.package};
    std::array<Term, 1> t{pkg};
    Term r = subst(ex.realizer, h, t);
    CHECK(eval(r).ok());
    Semantics sem;
    CHECK(eval_formula(realize(r, d.conclusion()), std::map<Var, Nat>{}, sem) == Truth::t);
  }
}
