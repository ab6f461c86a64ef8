// Regenerates tests/corpus/*.lpt with the proof builder.
//   make_corpus <output-dir>

#include "fixkit/kernel.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

using namespace fixkit;

namespace {

Term z() { return constant(Sym::zero); }
Term one() { return succ(z()); }

Derivation one_plus_one() {
  ProofBuilder b("HA");
  std::array<Term, 2> t10{one(), z()};
  std::size_t a = b.hap(3, 1, t10);  // S0 + S0 = S(S0 + 0)
  std::size_t c = b.hap(3, 0, t10);  // S0 + 0 = S0
  b.eq_trans(a, b.cong_succ(c));
  return b.derivation();
}

Derivation lpt1() {
  ProofBuilder b("HA");
  b.axiom(imp(top(), top()));
  return b.derivation();
}

Derivation zero_eq() {
  ProofBuilder b("HA");
  b.truth();
  return b.derivation();
}

Derivation exists_one() {
  ProofBuilder b("HA");
  std::size_t d = b.prove_down(one());
  Formula goal = ex(Var{0}, eq(var(0), one()));
  b.mp(b.conj_intro(d, d), b.axiom(imp(conj(eq(one(), one()), down(one())), goal)));
  return b.derivation();
}

// ∀v5 (0 + v5 = v5) by induction
Derivation induction() {
  const Var x{5};
  Formula phi = eq(add(z(), var(x)), var(x));
  ProofBuilder h("HA", {phi});
  std::array<Term, 2> tx{z(), var(x)};
  std::size_t s = h.hap(3, 1, tx);                // 0 + S x = S(0 + x)
  h.eq_trans(s, h.cong_succ(h.hyp(0)));           // 0 + S x = S x
  ProofBuilder b(deduction(h.derivation(), 0));   // φ → φ(x/Sx)
  std::size_t step = b.forall_intro(b.last(), x);
  std::array<Term, 1> t0{z()};
  std::size_t base = b.hap(3, 0, t0);             // 0 + 0 = 0
  std::size_t ind = b.axiom(induction_axiom(x, phi));
  b.mp(step, b.mp(base, ind));
  return b.derivation();
}

// ∃v0 (v0 = S0) through I_Φ(S0) with Φ = (v0 = S0 ∧ P1(v0)) ∨ v0 = S0
Derivation fixpoint_detour() {
  Formula body = parse_formula("(((v0 = (S 0)) & (P1 v0)) | (v0 = (S 0)))");
  RelSym I = RelSym::fix(body, 1);
  ProofBuilder b("IID1");
  std::size_t ax = b.axiom(fixpoint_axiom(I));
  std::size_t d = b.prove_down(one());
  std::size_t at = b.inst(ax, one(), d);  // I(S0) ↔ Φ(I; S0)
  Formula unfolded = b.formula(at)->a->b;
  std::size_t right = b.mp(d, b.axiom(imp(eq(one(), one()), unfolded)));
  std::size_t fold = b.conj_right(at);
  std::size_t in_I = b.mp(right, fold);  // I(S0)
  std::size_t unfold = b.conj_left(at);
  std::size_t l = b.axiom(imp(unfolded->a, eq(one(), one())));
  std::size_t r = b.axiom(imp(eq(one(), one()), eq(one(), one())));
  std::size_t back = b.trans(unfold, b.dis(l, r));
  std::size_t e = b.mp(in_I, back);  // S0 = S0, read off I
  Formula goal = ex(Var{0}, eq(var(0), one()));
  b.mp(b.conj_intro(e, d), b.axiom(imp(conj(eq(one(), one()), down(one())), goal)));
  return b.derivation();
}

Derivation fix_lambda() {
  Formula body = parse_formula("((Ev1 ((v1 + v1) = v0)) & (P1 v0))");
  ProofBuilder b("IIDP1(Lambda)");
  std::size_t ax = b.axiom(fixpoint_axiom(RelSym::fix(body, 1)));
  b.inst(ax, z());
  return b.derivation();
}

Derivation k_instance() {
  ProofBuilder b("HAP");
  std::array<Term, 2> ts{one(), z()};
  b.hap(5, 0, ts);  // k S0 0 = S0
  return b.derivation();
}

Derivation pairing() {
  ProofBuilder b("HAP");
  std::array<Term, 2> ts{z(), one()};
  b.hap(6, 2, ts);  // p_l (p 0 S0) = 0
  return b.derivation();
}

Derivation from_hypotheses() {
  ProofBuilder b("HA", {eq(one(), one()), top()});
  b.conj_intro(b.hyp(1), b.hyp(0));
  return b.derivation();
}

Derivation conj_closed() {
  ProofBuilder b("HA");
  b.conj_intro(b.truth(), b.prove_down(one()));
  return b.derivation();
}

Derivation disjunction() {
  ProofBuilder b("HA");
  b.mp(b.truth(), b.axiom(imp(top(), disj(top(), bot()))));
  return b.derivation();
}

Derivation exists_gen() {
  ProofBuilder b("HA");
  std::size_t w = b.weaken(b.truth(), eq(var(1), var(0)));
  b.gen_ex(w, Var{1});
  return b.derivation();
}

Derivation forall_gen() {
  ProofBuilder b("HA");
  b.forall_intro(b.axiom(down(var(0))), Var{0});
  return b.derivation();
}

Derivation discharged() {
  ProofBuilder h("HA", {top()});
  std::size_t a = h.hyp(0);
  h.conj_intro(a, a);
  return deduction(h.derivation(), 0);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus <output-dir>\n";
    return 2;
  }
  std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  const std::vector<std::pair<std::string, std::function<Derivation()>>> items = {
      {"one_plus_one", one_plus_one},     {"lpt1", lpt1},
      {"zero_eq", zero_eq},               {"exists_one", exists_one},
      {"induction", induction},           {"fixpoint_detour", fixpoint_detour},
      {"fix_lambda", fix_lambda},         {"k_instance", k_instance},
      {"pairing", pairing},               {"from_hypotheses", from_hypotheses},
      {"conj_closed", conj_closed},       {"disjunction", disjunction},
      {"exists_gen", exists_gen},         {"forall_gen", forall_gen},
      {"discharged", discharged},
  };
  int status = 0;
  for (const auto& [name, make] : items) {
    try {
      Derivation d = make();
      std::ofstream(dir / (name + ".lpt")) << "# " << name << ": " << to_string(d.conclusion()) << '\n'
                                           << to_string(d);
      std::cout << name << ": " << d.lines.size() << " lines\n";
    } catch (const std::exception& e) {
      std::cerr << name << ": " << e.what() << '\n';
      status = 1;
    }
  }
  return status;
}
