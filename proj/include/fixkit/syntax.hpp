#pragma once
// Terms and formulas of HA / PRA / HAP and their fixpoint extensions.
// Nodes are immutable and shared; every operation here is a pure function.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixkit {

using Nat = boost::multiprecision::cpp_int;

struct Var {
  std::uint32_t index = 0;
  friend auto operator<=>(const Var&, const Var&) = default;
};

using VarSet = std::set<Var>;

class SyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Combinatory constants. zero is the numeral 0.
enum class Sym : std::uint8_t { zero, k, s, pl, pr, p, succ, r, d };
const char* sym_name(Sym s);

// ---------------------------------------------------------------- PR defs

struct PRDef;
using PRRef = std::shared_ptr<const PRDef>;

struct PRDef {
  enum class Kind : std::uint8_t { zero, succ, proj, comp, rec };
  Kind kind;
  unsigned arity = 0;
  unsigned index = 0;          // proj only
  std::vector<PRRef> parts;    // comp: f, h_0..; rec: g, h
  std::string name;            // label for printing, may be empty
};

PRRef pr_zero(unsigned arity);
PRRef pr_succ();
PRRef pr_proj(unsigned arity, unsigned i);
PRRef pr_comp(PRRef f, std::vector<PRRef> hs);
// rec(g,h)(x..., 0) = h(x...), rec(g,h)(x..., y+1) = g(x..., y, rec(x..., y))
PRRef pr_rec(PRRef g, PRRef h);
PRRef pr_named(PRRef d, std::string name);
bool same_pr(const PRDef& a, const PRDef& b);

// direct evaluation; args.size() must equal d.arity
Nat run_pr(const PRDef& d, std::span<const Nat> args);

// Standard library of named definitions: add, mult, pred, monus, ...
PRRef pr_lookup(const std::string& name);
std::vector<std::string> pr_library_names();

// ------------------------------------------------------------------ terms

enum class TermKind : std::uint8_t { var, constant, numeral, prim, succ, add, mul, app, pr };

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  TermKind kind;
  std::uint32_t index = 0;  // var
  Sym sym = Sym::zero;      // constant
  Nat value;                // numeral (> 0; 0 is Sym::zero)
  std::string name;         // prim
  PRRef def;                // pr
  std::vector<Term> args;   // succ:1, add/mul/app:2, pr:arity

  // filled in on construction; terms share subterms, so walks prune with these
  std::uint64_t var_mask = 0;   // bit (index mod 64) of every variable below
  std::uint64_t tree_size = 1;  // saturates
  bool arith = false;           // S, +, × or a PR symbol below
};

Term var(Var x);
Term var(std::uint32_t i);
Term constant(Sym s);
Term num(const Nat& n);       // literal; num(0) is the 0 constant
Term numeral(unsigned n);     // S(S(...0))
Term prim(std::string name);  // delta constant @name
Term succ(Term t);
Term add(Term a, Term b);
Term mul(Term a, Term b);
Term app(Term f, Term a);
Term app(Term f, std::initializer_list<Term> as);
Term pr_app(PRRef d, std::vector<Term> args);

bool same(const Term& a, const Term& b);
bool is_closed(const Term& t);
std::size_t size(const Term& t);

// ---------------------------------------------------------------- formulas

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct RelSym {
  enum class Kind : std::uint8_t { param, fix, defined };
  Kind kind = Kind::param;
  unsigned arity = 0;
  std::string tag;  // defined only
  Formula body;     // fix only: alpha-normal operator form in P_arity

  static RelSym param(unsigned n) { return {Kind::param, n, {}, nullptr}; }
  static RelSym fix(const Formula& phi, unsigned n);
  static RelSym defined(std::string tag, unsigned n) { return {Kind::defined, n, std::move(tag), nullptr}; }
};
bool same(const RelSym& a, const RelSym& b);

enum class FKind : std::uint8_t { bot, eq, rel, conj, disj, imp, all, ex };

struct FormulaNode {
  FKind kind;
  Term lhs, rhs;             // eq
  RelSym rel;                // rel
  std::vector<Term> args;    // rel
  Formula a, b;              // binary connectives; a is the body of a quantifier
  Var bound;                 // all/ex
};

Formula bot();
Formula top();  // 0 = 0
Formula eq(Term l, Term r);
Formula rel(RelSym R, std::vector<Term> args);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula imp(Formula a, Formula b);
Formula all(Var x, Formula body);
Formula ex(Var x, Formula body);
Formula neg(Formula a);
Formula iff(Formula a, Formula b);
Formula down(Term t);                    // t = t
Formula kleene_eq(Term a, Term b);       // (a↓ ∨ b↓) → a = b
Formula less(Term a, Term b, Var z);     // ∃z (a + S z = b)
Formula conj_all(std::span<const Formula> fs);  // left nested, top() when empty

bool same(const Formula& a, const Formula& b);  // syntactic identity
bool alpha_equal(const Formula& a, const Formula& b);
std::size_t size(const Formula& f);

// -------------------------------------------------------------- analysis

VarSet free_vars(const Term& t);
VarSet free_vars(const Formula& f);
void collect_vars(const Term& t, VarSet& out);
void all_vars(const Formula& f, VarSet& out);  // free and bound
Var fresh(const VarSet& avoid, std::uint32_t from = 0);
bool occurs(Var x, const Term& t);

Formula alpha_normalize(const Formula& f);

Term subst(const Term& t, std::span<const Var> xs, std::span<const Term> ts);
Formula subst_term(const Formula& f, std::span<const Var> xs, std::span<const Term> ts);
Formula subst_term(const Formula& f, Var x, const Term& t);
Formula subst_relation(const Formula& f, const RelSym& R, std::span<const Var> xs, const Formula& body);

struct Occurrences {
  unsigned total = 0;
  unsigned strictly_positive = 0;
  friend bool operator==(const Occurrences&, const Occurrences&) = default;
};
Occurrences strictly_positive_occurrences(const Formula& f, const RelSym& R);
// every relation symbol occurring in f, in first occurrence order
std::vector<RelSym> relations(const Formula& f);

bool is_operator_form(const Formula& f, unsigned n);
bool is_almost_negative(const Formula& f);
bool is_sigma_eq(const Formula& f);  // ∃x (s = t)

enum class LanguageTag : std::uint8_t { HA, PRA, HAP, HAP_P, HAP_ID };
const char* language_name(LanguageTag l);
bool in_language(const Term& t, LanguageTag l);
bool in_language(const Formula& f, LanguageTag l);

// ------------------------------------------------------------ text format

std::string to_string(const Term& t);
std::string to_string(const Formula& f);
std::string to_string(const PRDef& d);

Term parse_term(std::string_view text);
Formula parse_formula(std::string_view text);
PRRef parse_prdef(std::string_view text);

}  // namespace fixkit
