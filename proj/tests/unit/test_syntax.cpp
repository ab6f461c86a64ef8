#include "support/gen.hpp"

#include <doctest.h>

using namespace fixkit;

namespace {

Formula P1(Term t) { return rel(RelSym::param(1), {std::move(t)}); }
Term z() { return constant(Sym::zero); }

VarSet vars(std::initializer_list<unsigned> is) {
  VarSet s;
  for (unsigned i : is) s.insert(Var{i});
  return s;
}

unsigned count_rel(const Formula& f, const RelSym& R) { return strictly_positive_occurrences(f, R).total; }

}  // namespace

TEST_CASE("free variables") {
  CHECK(free_vars(all(Var{0}, eq(var(0), var(1)))) == vars({1}));
  CHECK(free_vars(constant(Sym::k)).empty());
  CHECK(free_vars(add(var(0), var(0))) == vars({0}));
}

TEST_CASE("text round trip") {
  for (const char* s : {"(Av0 (v0 = v1))", "((P1 v0) -> bot)", "(Ev2 ((app k v2 3) = (S 0)))", "((0 = 0) | ((v0 * v1) = (v1 + 0)))"}) {
    Formula f = parse_formula(s);
    CHECK(to_string(f) == s);
  }
  CHECK_THROWS_AS(parse_formula("(v0 = "), SyntaxError);
  // sugar expands to core connectives
  CHECK(parse_formula("((0 = 0) <-> bot)")->kind == FKind::conj);
}

TEST_CASE("sugar") {
  CHECK(same(down(var(3)), eq(var(3), var(3))));
  Formula i = iff(top(), bot());
  CHECK(i->kind == FKind::conj);
  CHECK(i->a->kind == FKind::imp);
  CHECK(same(neg(top()), imp(top(), bot())));
}

TEST_CASE("alpha normalization") {
  Formula f = all(Var{0}, all(Var{0}, eq(var(0), var(0))));
  Formula g = alpha_normalize(f);
  CHECK(g->bound.index != g->a->bound.index);
  CHECK(alpha_equal(f, g));

  Formula closed_qf = conj(top(), eq(succ(z()), numeral(1)));
  CHECK(same(alpha_normalize(closed_qf), closed_qf));

  gen::Rng r(11);
  for (int i = 0; i < 100; ++i) {
    Formula phi = gen::any_formula(r, 4, 2);
    Formula a = alpha_normalize(phi);
    CHECK(same(alpha_normalize(a), a));
    CHECK(free_vars(a) == free_vars(phi));
    CHECK(is_almost_negative(a) == is_almost_negative(phi));
    RelSym P = RelSym::param(1);
    CHECK(strictly_positive_occurrences(a, P) == strictly_positive_occurrences(phi, P));
  }
}

TEST_CASE("term substitution") {
  // capture is avoided
  Formula f = all(Var{1}, eq(var(1), var(0)));
  Formula g = subst_term(f, Var{0}, succ(var(1)));
  CHECK(alpha_equal(g, all(Var{2}, eq(var(2), succ(var(1))))));
  CHECK(free_vars(g) == vars({1}));

  CHECK(alpha_equal(subst_term(f, Var{0}, var(0)), f));

  std::array<Var, 2> xs{Var{0}, Var{1}};
  std::array<Term, 2> ts{z(), succ(z())};
  CHECK(same(subst_term(eq(var(0), var(1)), xs, ts), eq(z(), succ(z()))));
}

TEST_CASE("substitution laws on random formulas") {
  gen::Rng r(12);
  std::vector<Var> pool = gen::first_vars(4);
  for (int i = 0; i < 300; ++i) {
    Formula phi = gen::any_formula(r, 3, 3);
    Var u{gen::pick(r, 3)};
    Term tau = gen::ha_term(r, 2, pool);
    VarSet fv = free_vars(phi);
    Formula s = subst_term(phi, u, tau);
    if (fv.contains(u)) {
      VarSet want = fv;
      want.erase(u);
      for (Var v : free_vars(tau)) want.insert(v);
      CHECK(free_vars(s) == want);
    } else {
      CHECK(alpha_equal(s, phi));
    }

    // φ(u/σ)(u'/τ) = φ(u/σ(u'/τ)) when u' ∉ FV(φ)\{u}
    Var u2{3};
    if (u2 == u) continue;
    VarSet rest = fv;
    rest.erase(u);
    if (rest.contains(u2)) continue;
    Term sigma = gen::ha_term(r, 2, pool);
    Formula lhs = subst_term(subst_term(phi, u, sigma), u2, tau);
    std::array<Var, 1> us{u2};
    std::array<Term, 1> taus{tau};
    Formula rhs = subst_term(phi, u, subst(sigma, us, taus));
    CHECK(alpha_equal(lhs, rhs));
  }
}

TEST_CASE("relation substitution") {
  RelSym P = RelSym::param(1);
  Formula phi = conj(P1(var(0)), imp(top(), P1(succ(var(0)))));
  std::array<Var, 1> xs{Var{0}};
  Formula out = subst_relation(phi, P, xs, eq(var(0), z()));
  CHECK(alpha_equal(out, conj(eq(var(0), z()), imp(top(), eq(succ(var(0)), z())))));

  Formula none = ex(Var{1}, eq(var(1), var(0)));
  CHECK(alpha_equal(subst_relation(none, P, xs, bot()), none));

  // identity binder
  gen::Rng r(13);
  for (int i = 0; i < 100; ++i) {
    Formula f = gen::any_formula(r, 3, 2);
    CHECK(alpha_equal(subst_relation(f, P, xs, P1(var(0))), f));
  }

  // occurrence counting: count(Φ(R/ϑ), Q) = count(Φ,Q) + count(Φ,R)·count(ϑ,Q)
  RelSym Q = RelSym::param(2);
  for (int i = 0; i < 50; ++i) {
    Formula f = conj(gen::any_formula(r, 3, 1, 1), gen::any_formula(r, 2, 1, 2));
    Formula theta = conj(gen::any_formula(r, 2, 1, 2), gen::any_formula(r, 1, 1, 1));
    theta = subst_relation(theta, P, xs, top());
    Formula g = subst_relation(f, P, xs, theta);
    CHECK(count_rel(g, Q) == count_rel(f, Q) + count_rel(f, P) * count_rel(theta, Q));
  }
}

TEST_CASE("strictly positive occurrences") {
  RelSym P = RelSym::param(1);
  CHECK(strictly_positive_occurrences(P1(var(0)), P) == Occurrences{1, 1});
  CHECK(strictly_positive_occurrences(imp(P1(var(0)), top()), P) == Occurrences{1, 0});
  Formula f = all(Var{0}, imp(top(), conj(P1(var(0)), P1(succ(var(0))))));
  CHECK(strictly_positive_occurrences(f, P) == Occurrences{2, 2});
}

TEST_CASE("operator forms and almost negative formulas") {
  CHECK(is_operator_form(P1(var(0)), 1));
  CHECK_FALSE(is_operator_form(imp(P1(var(0)), top()), 1));
  CHECK_FALSE(is_operator_form(ex(Var{1}, eq(var(1), var(0))), 1));

  CHECK(is_almost_negative(ex(Var{0}, eq(var(0), succ(z())))));
  CHECK_FALSE(is_almost_negative(ex(Var{0}, conj(top(), top()))));
  CHECK_FALSE(is_almost_negative(disj(top(), top())));
}

TEST_CASE("languages") {
  Formula ha = eq(add(var(0), z()), var(0));
  CHECK(in_language(ha, LanguageTag::HA));
  Formula hap = eq(app(constant(Sym::k), {var(0), var(1)}), var(0));
  CHECK_FALSE(in_language(hap, LanguageTag::HA));
  CHECK(in_language(hap, LanguageTag::HAP));
}

TEST_CASE("direct PR evaluation") {
  auto add_d = pr_lookup("add");
  REQUIRE(add_d);
  std::array<Nat, 2> a{2, 3};
  CHECK(run_pr(*add_d, a) == 5);
  std::array<Nat, 3> b{7, 8, 9};
  CHECK(run_pr(*pr_proj(3, 1), b) == 8);
  std::array<Nat, 1> c{4};
  CHECK(run_pr(*pr_zero(1), c) == 0);
  CHECK(pr_lookup("no-such-function") == nullptr);
}
