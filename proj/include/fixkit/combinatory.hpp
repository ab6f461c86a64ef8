#pragma once
// The partial combinatory algebra: bracket abstraction, builtin combinators,
// PR compilation and a fuel-bounded call-by-value evaluator.

#include "fixkit/syntax.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string_view>

namespace fixkit {

struct Fuel {
  std::uint64_t steps = 100000;
};

// λx.τ by bracket abstraction; S, + and × are factored out first.
Term lambda_abstract(Var x, const Term& t);
Term lambda_abstract(std::span<const Var> xs, const Term& t);
// Keeps every subterm without x under K. The result need not denote unless
// those subterms do; extraction uses it on realizers of earlier lines.
Term lambda_abstract_denoting(Var x, const Term& t);

// id, fix, min, d, k0 (constant zero function)
Term builtin(std::string_view name);

Term compile_pr(const PRDef& d);
Formula translate_pra(const Formula& f);

// λu. d u ν (λw.τ) η u
Term update_term(const Term& eta, const Term& nu, const Term& tau);

// ---------------------------------------------------------------- values

struct Value;
using Val = std::shared_ptr<const Value>;

enum class Head : std::uint8_t { k, s, p, pl, pr, succ, r, d, prim, pair };

struct PrimDef;

struct Value {
  bool nat = false;
  Nat n;
  Head head = Head::k;
  const PrimDef* prim = nullptr;
  std::vector<Val> args;  // partial application, or the two components of a pair
};

Val make_nat(const Nat& n);
Term reify(const Val& v);
std::string to_string(const Val& v);
bool same(const Val& a, const Val& b);

// δ-constants: first-order functions on codes, run natively by the evaluator.
// fn returns nullopt when the application is stuck.
struct PrimDef {
  std::string name;
  unsigned arity;
  std::function<std::optional<Val>(std::span<const Val>)> fn;
};
const PrimDef* find_prim(std::string_view name);

Nat cantor_pair(const Nat& a, const Nat& b);
std::pair<Nat, Nat> cantor_unpair(const Nat& z);

struct EvalResult {
  enum class Status : std::uint8_t { value, stuck, fuel_exhausted };
  Status status = Status::stuck;
  Val value;
  std::uint64_t steps = 0;
  std::string reason;  // why stuck

  bool ok() const { return status == Status::value; }
  bool is_nat() const { return ok() && value->nat; }
  std::optional<Nat> nat() const {
    if (!is_nat()) return std::nullopt;
    return value->n;
  }
};

using Env = std::map<Var, Val>;
Env nat_env(const std::map<Var, Nat>& m);

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws EvalError for a free variable outside env.
EvalResult eval(const Term& t, Fuel fuel = {});
EvalResult eval(const Term& t, const Env& env, Fuel fuel = {});
EvalResult apply_value(const Val& f, std::span<const Val> args, Fuel fuel = {});

// ------------------------------------------------------ bounded semantics

enum class Truth : std::uint8_t { f, t, unknown };
const char* truth_name(Truth t);

struct Semantics {
  std::uint32_t bound = 6;
  Fuel fuel{};
  // extra candidate witnesses for ∃ beyond [0, bound]
  bool heuristic_witnesses = true;
  std::map<std::string, std::function<Truth(std::span<const Nat>)>> defined;
};

Truth eval_formula(const Formula& f, const Env& env, const Semantics& sem);
Truth eval_formula(const Formula& f, const std::map<Var, Nat>& env, const Semantics& sem);

}  // namespace fixkit
