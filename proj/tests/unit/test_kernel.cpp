#include "fixkit/kernel.hpp"
#include "support/corpus.hpp"
#include "support/gen.hpp"

#include <doctest.h>

using namespace fixkit;

namespace {

Formula F(const char* s) { return parse_formula(s); }
Term z() { return constant(Sym::zero); }

Derivation one_line(const Formula& f, Justification j, const std::string& theory = "HAP") {
  Derivation d;
  d.theory = theory;
  d.lines.push_back({f, std::move(j)});
  return d;
}

Justification lpt(unsigned id, std::vector<std::size_t> premises = {}) {
  return {Justification::Kind::lpt_axiom, id, std::move(premises)};
}

}  // namespace

TEST_CASE("LPT axioms") {
  auto m = match_lpt_axiom(F("((0 = 0) -> (0 = 0))"));
  REQUIRE(m);
  CHECK(m->id == 1);
  m = match_lpt_axiom(F("(v0 = v0)"));
  REQUIRE(m);
  CHECK(m->id == 23);
  CHECK_FALSE(match_lpt_axiom(F("((0 = 0) -> (0 = (S 0)))")));
  CHECK(match_lpt_axioms(F("((0 = 0) -> (0 = 0))")).size() >= 1);
}

TEST_CASE("HAP axioms") {
  auto spec = theory_spec("HAP");
  auto g = [&](const char* s) -> unsigned {
    auto m = match_hap_axiom(F(s), spec);
    return m ? m->id : 0;
  };
  CHECK(g("((app k v0 v1) = v0)") == 5);
  CHECK(g("((app pl (app p v0 v1)) = v0)") == 6);
  CHECK(g("(((S v0) = (S v1)) -> (v0 = v1))") == 2);
  CHECK(g("((app k v3 v7) = v3)") == 5);
  CHECK(g("((app k v3 v7) = v7)") == 0);

  // every clause matches itself and re-instantiates to the same formula
  for (unsigned grp = 1; grp <= 7; ++grp)
    for (unsigned c = 0; c < hap_clause_count(grp); ++c) {
      Formula ax = hap_axiom(grp, c);
      std::array<Var, 3> from{Var{0}, Var{1}, Var{2}};
      std::array<Term, 3> to{var(4), var(5), var(6)};
      Formula inst = subst_term(ax, from, to);
      auto m = match_hap_axiom(inst, spec);
      REQUIRE(m);
      CHECK(m->id == grp);
      CHECK(same(hap_axiom(m->id, m->clause), ax));
    }

  // induction only where the theory admits it
  Formula ind = induction_axiom(Var{0}, F("((v0 + 0) = v0)"));
  auto m = match_hap_axiom(ind, spec);
  REQUIRE(m);
  CHECK(m->id == 8);
  Formula hap_ind = induction_axiom(Var{0}, F("((app k v0 v0) = v0)"));
  CHECK(match_hap_axiom(hap_ind, spec));
  CHECK_FALSE(match_hap_axiom(hap_ind, theory_spec("HA")));
}

TEST_CASE("fixpoint axioms") {
  Formula body = F("((P1 v0) & (v0 = v0))");
  RelSym I = RelSym::fix(body, 1);
  auto m = match_fixpoint_axiom(fixpoint_axiom(I), theory_spec("IID1"));
  REQUIRE(m);
  CHECK(alpha_equal(m->body, I.body));

  RelSym J = RelSym::fix(F("((P1 v0) | (v0 = 0))"), 1);
  CHECK(match_fixpoint_axiom(fixpoint_axiom(J), theory_spec("IIDP1")));
  CHECK_FALSE(match_fixpoint_axiom(fixpoint_axiom(J), theory_spec("IIDP1(Lambda)")));

  // right hand side that is not the operator
  Formula ax = fixpoint_axiom(I);
  Formula other = all(ax->bound, iff(ax->a->a->a, conj(rel(I, {var(ax->bound)}), top())));
  CHECK_FALSE(match_fixpoint_axiom(other, theory_spec("IID1")));

  CHECK_FALSE(match_fixpoint_axiom(fixpoint_axiom(I), theory_spec("HA")));
}

TEST_CASE("checking") {
  CHECK(check(one_line(F("((0 = 0) -> (0 = 0))"), lpt(1))).ok);
  CheckResult bad = check(one_line(F("((0 = 0) -> (0 = (S 0)))"), lpt(1)));
  CHECK_FALSE(bad.ok);
  CHECK(bad.line == 0);
  // premises must come earlier
  CHECK_FALSE(check(one_line(F("(0 = 0)"), {Justification::Kind::rule, 2, {0, 0}})).ok);
  CHECK_THROWS_AS(theory_spec("ZF"), KernelError);
}

TEST_CASE("text format") {
  Derivation d = parse_derivation("theory: HA\n1. ((0 = 0) -> (0 = 0)) ; LPT1\n");
  CHECK(d.theory == "HA");
  REQUIRE(d.lines.size() == 1);
  CHECK(check(d).ok);
  Derivation back = parse_derivation(to_string(d));
  CHECK(to_string(back) == to_string(d));
  CHECK_FALSE(check(parse_derivation("1. (0 = 0) ; LPT2 7\n")).ok);
  CHECK_THROWS(parse_derivation("1. (0 = 0) ; NOPE\n"));
}

TEST_CASE("corpus checks, round trips and catches every mutation") {
  auto items = corpus::load();
  CHECK(items.size() >= 10);
  for (const auto& [name, d] : items) {
    CAPTURE(name);
    CheckResult r = check(d);
    CHECK_MESSAGE(r.ok, r.reason);
    CHECK(to_string(parse_derivation(to_string(d))) == to_string(d));
    // the longest files are sampled
    std::size_t stride = d.lines.size() > 100 ? 7 : 1;
    for (std::size_t i = 0; i < d.lines.size(); i += stride) {
      Derivation m = d;
      m.lines[i].formula = corpus::mutate(m.lines[i].formula);
      CheckResult mr = check(m);
      CAPTURE(i);
      CHECK_FALSE(mr.ok);
      // a mutated line can still be an axiom instance; then a later use fails
      CHECK(mr.line >= i);
    }
  }
}

TEST_CASE("check is deterministic") {
  for (const auto& [name, d] : corpus::load()) {
    CheckResult a = check(d), b = check(d);
    CHECK(a.ok == b.ok);
    CHECK(a.reason == b.reason);
  }
}

TEST_CASE("builder") {
  ProofBuilder b("HA");
  std::size_t t = b.truth();
  std::size_t c = b.conj_intro(t, t);
  CHECK(alpha_equal(b.formula(c), conj(top(), top())));
  std::size_t l = b.conj_left(c);
  CHECK(alpha_equal(b.formula(l), top()));
  std::size_t d2 = b.prove_down(add(numeral(2), mul(var(0), numeral(1))));
  CHECK(alpha_equal(b.formula(d2), down(add(numeral(2), mul(var(0), numeral(1))))));
  CHECK(check(b.derivation()).ok);
  CHECK_THROWS(b.mp(t, t));
}

TEST_CASE("deduction") {
  Formula psi = F("((S 0) = (S 0))");
  {
    ProofBuilder b("HA", {psi});
    b.hyp(0);
    Derivation out = deduction(b.derivation(), 0);
    CHECK(out.hypotheses.empty());
    CHECK(check(out).ok);
    CHECK(alpha_equal(out.conclusion(), imp(psi, psi)));
  }
  {
    // the hypothesis is never used
    ProofBuilder b("HA", {psi});
    b.truth();
    Derivation out = deduction(b.derivation(), 0);
    CHECK(check(out).ok);
    CHECK(alpha_equal(out.conclusion(), imp(psi, top())));
  }
  // generalization over a variable not free in the hypothesis
  {
    ProofBuilder b("HA", {F("(0 = 0)")});
    std::size_t a = b.axiom(down(var(1)));
    b.mp(b.hyp(0), b.weaken(a, F("(0 = 0)")));
    b.forall_intro(b.last(), Var{1});
    Derivation out = deduction(b.derivation(), 0);
    CHECK(check(out).ok);
  }
  // random corpus derivations with hypotheses added and discharged
  gen::Rng r(51);
  auto items = corpus::load();
  int tried = 0;
  for (int i = 0; i < 20; ++i) {
    const auto& [name, d] = items[gen::pick(r, items.size())];
    if (d.lines.size() > 200) continue;
    Derivation with = d;
    with.hypotheses.push_back(gen::lambda0(r, 0));
    std::size_t k = with.hypotheses.size() - 1;
    Derivation out = deduction(with, k);
    CAPTURE(name);
    CHECK(out.hypotheses.size() == d.hypotheses.size());
    CHECK(check(out).ok);
    CHECK(alpha_equal(out.conclusion(), imp(with.hypotheses[k], d.conclusion())));
    ++tried;
  }
  CHECK(tried > 10);
  // discharging the first of two hypotheses
  for (const auto& [name, d] : items) {
    if (d.hypotheses.size() < 2) continue;
    Derivation out = deduction(d, 0);
    CHECK(out.hypotheses.size() == d.hypotheses.size() - 1);
    CHECK(check(out).ok);
  }
}
