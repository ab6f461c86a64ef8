#pragma once
// Hilbert-style derivations in the logic of partial terms, the axioms of HAP
// and the fixpoint schema, a line-by-line checker, a builder with derived
// steps, and the deduction theorem as a derivation transformer.
//
// Axiom and rule numbers follow the two-column numbering of LPT: rules are
// 2 (MP), 3 (trans), 5 (con), 7 (dis), 8 (curry), 9 (uncurry), 11 (∀-gen),
// 13 (∃-gen); every other number up to 23 is an axiom schema.

#include "fixkit/syntax.hpp"

#include <functional>
#include <optional>

namespace fixkit {

class KernelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Justification {
  enum class Kind : std::uint8_t { hypothesis, lpt_axiom, hap_axiom, fixpoint_axiom, rule };
  Kind kind = Kind::lpt_axiom;
  unsigned id = 0;                    // hypothesis index, LPT number or HAP group
  std::vector<std::size_t> premises;  // earlier line indices, rules only
};

struct Line {
  Formula formula;
  Justification just;
};

struct Derivation {
  std::string theory = "HAP";
  std::vector<Formula> hypotheses;
  std::vector<Line> lines;

  Formula conclusion() const;
};

struct TheorySpec {
  std::string name;
  std::function<bool(const Formula&)> language;
  std::function<bool(const Formula&)> induction;       // formulas admitted in HAP8
  std::function<bool(const Formula&)> fixpoint_class;  // operator bodies admitted; empty: none
};

// HA, HAP, IID1, IIDP1, IIDP1(Lambda); throws KernelError otherwise
TheorySpec theory_spec(std::string_view name);
std::vector<std::string> theory_names();

bool is_lpt_rule(unsigned id);

// Instantiation recovered from a matched axiom: the schema number, the clause
// within a group (0-based), and the instantiating terms where the schema has any.
struct AxiomMatch {
  unsigned id = 0;
  unsigned clause = 0;
  std::vector<Term> terms;
};

std::optional<AxiomMatch> match_lpt_axiom(const Formula& f);
std::vector<AxiomMatch> match_lpt_axioms(const Formula& f);  // every reading
std::optional<AxiomMatch> match_hap_axiom(const Formula& f, const TheorySpec& spec);
// the fixpoint symbol whose axiom f is
std::optional<RelSym> match_fixpoint_axiom(const Formula& f, const TheorySpec& spec);

// ∀x⃗ (I_Φ(x⃗) ↔ Φ(I_Φ; x⃗))
Formula fixpoint_axiom(const RelSym& I);
// φ(x/0) → (∀x (φ → φ(x/S(x))) → ∀x φ)
Formula induction_axiom(Var x, const Formula& phi);
// HAP group g, clause c, over the variables v0, v1, v2
Formula hap_axiom(unsigned group, unsigned clause);
unsigned hap_clause_count(unsigned group);

struct CheckResult {
  bool ok = true;
  std::size_t line = 0;  // 0-based index of the first failing line
  std::string reason;
};

// nullopt when line i is justified
std::optional<std::string> check_line(const Derivation& d, std::size_t i, const TheorySpec& spec);
CheckResult check(const Derivation& d, const TheorySpec& spec);
CheckResult check(const Derivation& d);  // under theory_spec(d.theory)

// Text format: optional `theory:` and `fixclass:` headers, `hyp:` lines,
// then `n. <formula> ; <JUST> [premise line numbers]` with JUST one of
// HYP k, LPTn, HAPn, FIX. Lines and hypotheses count from 1. `#` comments.
Derivation parse_derivation(std::string_view text);
Derivation read_derivation(const std::string& path);
std::string to_string(const Derivation& d);
std::string to_string(const Justification& j);

// Appends lines and checks each one as it goes, so a finished builder holds
// a derivation that checks. Derived steps expand into primitive lines.
class ProofBuilder {
 public:
  explicit ProofBuilder(const std::string& theory, std::vector<Formula> hypotheses = {});
  explicit ProofBuilder(Derivation d);

  const Derivation& derivation() const { return d_; }
  const Formula& formula(std::size_t i) const { return d_.lines.at(i).formula; }
  std::size_t last() const { return d_.lines.size() - 1; }

  std::size_t add(const Formula& f, Justification j);
  std::size_t hyp(std::size_t i);
  std::size_t axiom(const Formula& f);  // LPT, then HAP, then FIX
  std::size_t mp(std::size_t a, std::size_t ab);
  std::size_t trans(std::size_t ab, std::size_t bc);
  std::size_t con(std::size_t ab, std::size_t ac);
  std::size_t dis(std::size_t ac, std::size_t bc);
  std::size_t curry(std::size_t a);
  std::size_t uncurry(std::size_t a);
  std::size_t gen_all(std::size_t a, Var x);
  std::size_t gen_ex(std::size_t a, Var x);

  std::size_t truth();                                        // 0 = 0
  std::size_t weaken(std::size_t a, const Formula& phi);      // φ → A
  std::size_t conj_intro(std::size_t a, std::size_t b);
  std::size_t conj_left(std::size_t a);
  std::size_t conj_right(std::size_t a);
  std::size_t exchange(std::size_t a);                        // P→(Q→R) to Q→(P→R)
  std::size_t assoc_left(const Formula& p, const Formula& q, const Formula& r);   // P∧(Q∧R) → (P∧Q)∧R
  std::size_t assoc_right(const Formula& p, const Formula& q, const Formula& r);  // (P∧Q)∧R → P∧(Q∧R)
  std::size_t forall_intro(std::size_t a, Var x);
  std::size_t inst(std::size_t all_line, const Term& t, std::size_t down_line);
  std::size_t inst(std::size_t all_line, const Term& t);
  std::size_t instantiate(std::size_t a, std::span<const Var> xs, std::span<const Term> ts);
  std::size_t prove_down(const Term& t);  // terms built from variables, constants, S, + and ×
  std::size_t eq_symm(std::size_t a);
  std::size_t eq_trans(std::size_t a, std::size_t b);
  std::size_t cong_succ(std::size_t a);   // s = t gives S(s) = S(t)
  std::size_t hap(unsigned group, unsigned clause, std::span<const Term> ts);  // instance at the terms ts

 private:
  Derivation d_;
  TheorySpec spec_;
  std::optional<std::size_t> truth_;
  std::size_t rule(unsigned id, std::vector<std::size_t> premises, const Formula& f);
};

// Discharges hypothesis k (0-based): the result proves ψ_k → φ from the rest.
Derivation deduction(const Derivation& d, std::size_t k);

}  // namespace fixkit
