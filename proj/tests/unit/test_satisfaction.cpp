#include "fixkit/combinatory.hpp"
#include "fixkit/goedel.hpp"
#include "fixkit/hierarchy.hpp"
#include "fixkit/satisfaction.hpp"
#include "support/gen.hpp"

#include <doctest.h>

using namespace fixkit;

namespace {

Formula F(const char* s) { return parse_formula(s); }
Term code(const Formula& f) { return num(encode(f).value); }
Term code(const Term& t) { return num(encode(t).value); }

bool consistent(Truth a, Truth b) { return a == Truth::unknown || b == Truth::unknown || a == b; }

// Sat_0 reads witnesses off the environment, so it gets a wider range
Semantics wide() {
  Semantics s;
  s.bound = 40;
  s.fuel = Fuel{1000000};
  return s;
}

Truth sat0(const Formula& phi, std::span<const Nat> vals) {
  Formula s = instantiate_sat(build_sat(0).sat, env_of(vals), code(phi));
  return eval_formula(s, std::map<Var, Nat>{}, wide());
}

VarSet first(unsigned k) {
  VarSet s;
  for (unsigned i = 0; i < k; ++i) s.insert(Var{i});
  return s;
}

}  // namespace

TEST_CASE("val") {
  const Term val = build_val().val;
  Term id = builtin("id");
  CHECK(eval(app(val, {id, code(constant(Sym::zero))})).nat() == 0);
  CHECK(eval(app(val, {id, code(num(7))})).nat() == 7);
  Term e = update_term(id, code(var(0)), num(7));
  CHECK(eval(app(val, {e, code(var(0))})).nat() == 7);
  CHECK(eval(app(val, {e, code(add(succ(var(0)), mul(var(0), numeral(2))))})).nat() == 22);
  CHECK(eval(app(val, {e, code(app(constant(Sym::k), {var(0), num(3)}))})).nat() == 7);

  gen::Rng r(81);
  for (int i = 0; i < 20; ++i) {
    std::vector<Nat> vals{gen::pick(r, 20), gen::pick(r, 20)};
    Term env = env_of(vals);
    auto direct = eval(app(env, code(var(0)))).nat();
    REQUIRE(direct);
    CHECK(eval(app(val, {env, code(succ(var(0)))})).nat() == *direct + 1);
    // val·e·⌜τ⌝ is τ at the environment's values
    auto pool = gen::first_vars(2);
    Term t = gen::ha_term(r, 3, pool);
    std::array<Var, 2> xs{Var{0}, Var{1}};
    std::array<Term, 2> ts{num(vals[0]), num(vals[1])};
    CAPTURE(to_string(t));
    CHECK(eval(app(val, {env, code(t)}), Fuel{10000000}).nat() == eval(subst(t, xs, ts)).nat());
  }
}

TEST_CASE("satisfaction formulas: shape") {
  for (unsigned n = 0; n <= 3; ++n) {
    CAPTURE(n);
    SatFamily s = build_sat(n);
    CHECK(is_nf(s.sat_nf, n));
    CHECK(classify(s.sat) <= n);
    CHECK(free_vars(s.sat) == first(2));
    CHECK(free_vars(s.sat_nf) == first(2));
    CHECK(same(build_sat(n).sat, s.sat));
  }
  CHECK(classify(build_sat(0).sat) == 0u);
}

TEST_CASE("level 0 satisfaction") {
  std::array<Nat, 1> five{5};
  CHECK(sat0(F("(Ev1 (v1 = v0))"), five) == Truth::t);
  CHECK(sat0(F("(v0 = 5)"), five) == Truth::t);
  CHECK(sat0(F("(Ev1 ((S v1) = 0))"), five) != Truth::t);
  CHECK(sat0(F("(v0 = 4)"), five) != Truth::t);
}

TEST_CASE("level 0 adequacy on random formulas") {
  gen::Rng r(82);
  Semantics direct;
  for (int i = 0; i < 12; ++i) {
    Formula phi = gen::lambda0(r, 2);
    std::vector<Nat> vals{gen::pick(r, 4), gen::pick(r, 4)};
    std::map<Var, Nat> env{{Var{0}, vals[0]}, {Var{1}, vals[1]}};
    CAPTURE(to_string(phi));
    CHECK(consistent(eval_formula(phi, env, direct), sat0(phi, vals)));
  }
}

TEST_CASE("compositionality at level 0") {
  gen::Rng r(83);
  for (int i = 0; i < 6; ++i) {
    Formula a = gen::lambda0(r, 1, 1), b = gen::lambda0(r, 1, 1);
    std::vector<Nat> vals{gen::pick(r, 4)};
    Truth ta = sat0(a, vals), tb = sat0(b, vals), tab = sat0(conj(a, b), vals);
    if (ta != Truth::unknown && tb != Truth::unknown)
      CHECK(consistent(tab, (ta == Truth::t && tb == Truth::t) ? Truth::t : Truth::f));

    // only the free variables matter
    std::vector<Nat> more{vals[0], gen::pick(r, 9)};
    CHECK(consistent(ta, sat0(a, more)));

    // substitution of a numeral for v0 against updating the environment
    Nat x = gen::pick(r, 4);
    Formula ax = subst_term(a, Var{0}, num(x));
    std::vector<Nat> at{x};
    CHECK(consistent(sat0(ax, vals), sat0(a, at)));
  }
}

TEST_CASE("obligations are closed statements") {
  for (unsigned n = 0; n <= 1; ++n) {
    auto obs = sat_obligations(n);
    CHECK(obs.size() == 3);
    for (const auto& o : obs) {
      CAPTURE(o.name);
      CHECK(free_vars(o.statement).empty());
    }
  }
}

TEST_CASE("diagonalization contracts") {
  Formula psi = diagonalize(F("(Ev1 (v1 = v0))"), 0);
  CHECK(free_vars(psi).empty());
  CHECK(classify(psi) == 0u);

  Formula two = diagonalize(F("((Ev2 (v2 = v0)) & (Ev3 (v3 = v1)))"), 0);
  CHECK(free_vars(two) == first(1));

  CHECK_THROWS_AS(diagonalize(F("((0 = 0) -> (Ev1 (v1 = v0)))"), 0), SatisfactionError);
  CHECK_THROWS_AS(diagonalize(F("(Ev2 (v2 = v1))"), 0), SatisfactionError);

  gen::Rng r(84);
  for (int i = 0; i < 50; ++i) {
    unsigned k = gen::pick(r, 3);
    std::vector<Formula> cs{gen::lambda_n(r, 1, k + 1, 3)};
    for (unsigned j = 0; j <= k; ++j) cs.push_back(down(var(j)));
    Formula phi = conj_all(cs);
    Formula out = diagonalize(phi, 1);
    CHECK(free_vars(out) == first(k));
    CHECK(classify(out) <= 1u);
    if (is_nf(phi, 1)) CHECK(is_nf(out, 1));
  }
}

TEST_CASE("diagonal formulas at level 0") {
  Semantics sem;
  sem.fuel = Fuel{1000000};
  Formula psi = diagonalize(F("(Ev1 (v1 = v0))"), 0);
  CHECK(eval_formula(psi, std::map<Var, Nat>{}, sem) == Truth::t);
  Formula chi = diagonalize(F("(Ev1 ((S v1) = (v0 * 0)))"), 0);
  CHECK(eval_formula(chi, std::map<Var, Nat>{}, sem) != Truth::t);

  // ψ ↔ φ(⌜ψ⌝): the slot holds the code of ψ itself
  Formula phi = F("(Ev1 (v1 = v0))");
  Formula at = subst_term(phi, Var{0}, code(psi));
  CHECK(eval_formula(at, std::map<Var, Nat>{}, sem) == Truth::t);
}

TEST_CASE("interpretation of fixpoint predicates") {
  Formula hap = F("(Av0 ((app k v0 v1) = v0))");
  CHECK(same(interpret_F(hap), hap));

  RelSym I = RelSym::fix(F("((P1 v0) & (v0 = v0))"), 1);
  Formula image = interpret_F(rel(I, {var(0)}));
  CHECK(classify(image) == 0u);
  CHECK(free_vars(image) == first(1));
  CHECK(relations(image).empty());

  RelSym J = RelSym::fix(F("((P1 v0) | (v0 = 0))"), 1);
  CHECK(same(interpret_F(rel(J, {var(0)})), bot()));
}
