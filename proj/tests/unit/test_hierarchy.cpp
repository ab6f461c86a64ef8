#include "fixkit/combinatory.hpp"
#include "fixkit/hierarchy.hpp"
#include "support/gen.hpp"

#include <doctest.h>

using namespace fixkit;

namespace {

Formula F(const char* s) { return parse_formula(s); }

// membership in Λ_n straight from the inductive definition
bool member(const Formula& f, unsigned n) {
  switch (f->kind) {
    case FKind::bot:
    case FKind::eq:
    case FKind::rel: return true;
    case FKind::conj: return member(f->a, n) && member(f->b, n);
    case FKind::all: return n > 0 && member(f->a, n);
    case FKind::imp: return n > 0 && member(f->a, n - 1) && member(f->b, n);
    case FKind::ex: return is_sigma_eq(f);
    default: return false;
  }
}

std::optional<unsigned> brute_level(const Formula& f) {
  for (unsigned n = 0; n < 12; ++n)
    if (member(f, n)) return n;
  return std::nullopt;
}

bool consistent(Truth a, Truth b) { return a == Truth::unknown || b == Truth::unknown || a == b; }

}  // namespace

TEST_CASE("classify") {
  CHECK(classify(F("(Ev0 (v0 = 0))")) == 0u);
  CHECK(classify(F("((Ev0 (v0 = 0)) -> (Av1 (v1 = v1)))")) == 1u);
  Formula two = F("(((0 = 0) -> (0 = 0)) -> (0 = 0))");
  CHECK(classify(two) == 2u);
  CHECK(brute_level(two) == 2u);
  CHECK_FALSE(classify(F("((0 = 0) | (0 = 0))")));
  CHECK_FALSE(classify(F("(Ev0 ((v0 = 0) & (v0 = 0)))")));
}

TEST_CASE("classify agrees with the inductive definition") {
  gen::Rng r(41);
  for (int i = 0; i < 300; ++i) {
    Formula f = gen::coin(r) ? gen::lambda_n(r, 3, 2) : gen::any_formula(r, 3, 2, 1);
    auto c = classify(f);
    CHECK(c.has_value() == is_almost_negative(f));
    if (c) {
      CHECK(brute_level(f) == c);
      // telescoping
      for (unsigned m = *c; m < *c + 3; ++m) CHECK(member(f, m));
    }
  }
}

TEST_CASE("strictness of the levels") {
  // L_{n+1} = L_n → ⊥ climbs one level at a time
  Formula f = top();
  for (unsigned n = 0; n <= 4; ++n) {
    CHECK(classify(f) == n);
    if (n > 0) CHECK_FALSE(member(f, n - 1));
    f = imp(f, bot());
  }
}

TEST_CASE("normal forms") {
  CHECK(is_nf(F("(Ev0 (v0 = 0))"), 0));
  CHECK(is_nf(F("(Av0 ((Ev1 (v1 = v0)) -> (Ev1 (v1 = 0))))"), 1));
  CHECK_FALSE(is_nf(bot(), 0));
  CHECK_FALSE(is_nf(F("(0 = 0)"), 0));
  CHECK(is_nf(trivial_sigma(), 0));
  for (unsigned n = 0; n < 4; ++n) CHECK(is_nf(lift_nf(trivial_sigma(), 0, n), n));
}

TEST_CASE("normalize examples") {
  Formula s = F("(Ev0 (v0 = 0))");
  CHECK(alpha_equal(normalize(s, 0), s));
  CHECK_THROWS_AS(normalize(F("((0 = 0) -> (0 = 0))"), 0), HierarchyError);

  Semantics sem;
  sem.bound = 5;
  Formula c = F("((0 = 0) & (Ev0 (v0 = 0)))");
  Formula nc = normalize(c, 0);
  CHECK(is_nf(nc, 0));
  CHECK(eval_formula(nc, std::map<Var, Nat>{}, sem) == Truth::t);

  Formula curried = F("((v0 = 0) -> ((v1 = 0) -> (Ev2 (v2 = v0))))");
  Formula nf = normalize(curried, 1);
  CHECK(is_nf(nf, 1));
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b) {
      std::map<Var, Nat> env{{Var{0}, a}, {Var{1}, b}};
      CHECK(consistent(eval_formula(curried, env, sem), eval_formula(nf, env, sem)));
    }

  // ⊥ becomes a false Σ-equation
  Formula nb = normalize(bot(), 0);
  CHECK(is_nf(nb, 0));
  CHECK(eval_formula(nb, std::map<Var, Nat>{}, sem) != Truth::t);
}

TEST_CASE("normalize on random formulas") {
  gen::Rng r(42);
  Semantics sem;
  sem.bound = 4;
  sem.fuel = Fuel{20000};
  for (int i = 0; i < 150; ++i) {
    unsigned n = gen::pick(r, 3);
    Formula f = gen::lambda_n(r, n, 2, 3);
    Formula g = normalize(f, n);
    CHECK(is_nf(g, n));
    CHECK(free_vars(g) == free_vars(f));
    CHECK(alpha_equal(normalize(g, n), g));
    CHECK(classify(g) <= n);
    std::map<Var, Nat> env{{Var{0}, gen::pick(r, 4)}, {Var{1}, gen::pick(r, 4)}};
    CHECK(consistent(eval_formula(f, env, sem), eval_formula(g, env, sem)));
  }
}

TEST_CASE("tuples") {
  std::vector<Term> ts{num(4), num(5), num(6)};
  Term t = tuple(ts);
  for (std::size_t i = 0; i < ts.size(); ++i) CHECK(eval(tuple_proj(t, i, ts.size())).nat() == 4 + i);
  std::vector<Term> one{num(9)};
  CHECK(eval(tuple_proj(tuple(one), 0, 1)).nat() == 9);
}
