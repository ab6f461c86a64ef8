// Call-by-value reduction for HAP terms on an explicit stack.
// Numbers are native bignums; p on two numbers is the Cantor pairing, on
// anything else it builds a structural pair.

#include "fixkit/combinatory.hpp"

#include <boost/multiprecision/integer.hpp>

#include <variant>

namespace fixkit {

Nat cantor_pair(const Nat& a, const Nat& b) {
  Nat s = a + b;
  return s * (s + 1) / 2 + b;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& z) {
  Nat disc = 8 * z + 1;
  Nat w = (boost::multiprecision::sqrt(disc) - 1) / 2;
  Nat t = w * (w + 1) / 2;
  Nat b = z - t;
  return {w - b, b};
}

Val make_nat(const Nat& n) {
  auto v = std::make_shared<Value>();
  v->nat = true;
  v->n = n;
  return v;
}

namespace {

Val make_partial(Head h, const PrimDef* p, std::vector<Val> args) {
  auto v = std::make_shared<Value>();
  v->head = h;
  v->prim = p;
  v->args = std::move(args);
  return v;
}

unsigned arity(const Value& v) {
  switch (v.head) {
    case Head::k: return 2;
    case Head::s: return 3;
    case Head::p: return 2;
    case Head::pl:
    case Head::pr:
    case Head::succ: return 1;
    case Head::r: return 3;
    case Head::d: return 5;
    case Head::prim: return v.prim->arity;
    case Head::pair: return 0;
  }
  return 0;
}

Term head_term(const Value& v) {
  switch (v.head) {
    case Head::k: return constant(Sym::k);
    case Head::s: return constant(Sym::s);
    case Head::p:
    case Head::pair: return constant(Sym::p);
    case Head::pl: return constant(Sym::pl);
    case Head::pr: return constant(Sym::pr);
    case Head::succ: return constant(Sym::succ);
    case Head::r: return constant(Sym::r);
    case Head::d: return constant(Sym::d);
    case Head::prim: return prim(v.prim->name);
  }
  return constant(Sym::k);
}

}  // namespace

Term reify(const Val& v) {
  if (v->nat) return num(v->n);
  Term t = head_term(*v);
  for (const auto& a : v->args) t = app(t, reify(a));
  return t;
}

std::string to_string(const Val& v) { return to_string(reify(v)); }

bool same(const Val& a, const Val& b) {
  if (a == b) return true;
  if (a->nat != b->nat) return false;
  if (a->nat) return a->n == b->n;
  if (a->head != b->head || a->prim != b->prim || a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!same(a->args[i], b->args[i])) return false;
  return true;
}

Env nat_env(const std::map<Var, Nat>& m) {
  Env e;
  for (const auto& [x, n] : m) e.emplace(x, make_nat(n));
  return e;
}

namespace {

struct EvalArg { Term arg; };
struct ApplyFn { Val f; };
struct ApplyTo { Val a; };
struct SuccK {};
struct BinL { TermKind op; Term rhs; };
struct BinR { TermKind op; Val lhs; };
struct SThen { Val y, z; };
struct RLoop { Val y; Nat n, i; };

using Frame = std::variant<EvalArg, ApplyFn, ApplyTo, SuccK, BinL, BinR, SThen, RLoop>;

struct Stuck {
  std::string reason;
};

class Machine {
 public:
  Machine(const Env& env, Fuel fuel) : env_(env), fuel_(fuel.steps) {}

  EvalResult run_term(const Term& t) {
    mode_ = Mode::eval;
    cur_ = t;
    return run();
  }

  EvalResult run_apply(const Val& f, std::span<const Val> args) {
    if (args.empty()) {
      mode_ = Mode::ret;
      ret_ = f;
      return run();
    }
    for (std::size_t i = args.size(); i-- > 1;) stack_.push_back(ApplyTo{args[i]});
    mode_ = Mode::apply;
    fn_ = f;
    arg_ = args[0];
    return run();
  }

 private:
  enum class Mode { eval, apply, ret };
  const Env& env_;
  std::uint64_t fuel_;
  std::uint64_t used_ = 0;
  std::vector<Frame> stack_;
  Mode mode_ = Mode::eval;
  Term cur_;
  Val fn_, arg_, ret_;

  void ret(Val v) {
    mode_ = Mode::ret;
    ret_ = std::move(v);
  }
  void apply(Val f, Val a) {
    mode_ = Mode::apply;
    fn_ = std::move(f);
    arg_ = std::move(a);
  }
  void eval(Term t) {
    mode_ = Mode::eval;
    cur_ = std::move(t);
  }
  bool tick() {
    if (used_ >= fuel_) return false;
    ++used_;
    return true;
  }

  EvalResult run() {
    try {
      for (;;) {
        switch (mode_) {
          case Mode::eval: step_eval(); break;
          case Mode::apply:
            if (!tick()) return {EvalResult::Status::fuel_exhausted, nullptr, used_, {}};
            step_apply();
            break;
          case Mode::ret:
            if (stack_.empty()) return {EvalResult::Status::value, ret_, used_, {}};
            step_ret();
            break;
        }
      }
    } catch (const Stuck& s) {
      return {EvalResult::Status::stuck, nullptr, used_, s.reason};
    }
  }

  void step_eval() {
    Term t = cur_;
    switch (t->kind) {
      case TermKind::var: {
        auto it = env_.find(Var{t->index});
        if (it == env_.end()) throw EvalError("eval: free variable v" + std::to_string(t->index) + " has no value");
        ret(it->second);
        return;
      }
      case TermKind::constant: {
        switch (t->sym) {
          case Sym::zero: ret(make_nat(0)); return;
          case Sym::k: ret(make_partial(Head::k, nullptr, {})); return;
          case Sym::s: ret(make_partial(Head::s, nullptr, {})); return;
          case Sym::p: ret(make_partial(Head::p, nullptr, {})); return;
          case Sym::pl: ret(make_partial(Head::pl, nullptr, {})); return;
          case Sym::pr: ret(make_partial(Head::pr, nullptr, {})); return;
          case Sym::succ: ret(make_partial(Head::succ, nullptr, {})); return;
          case Sym::r: ret(make_partial(Head::r, nullptr, {})); return;
          case Sym::d: ret(make_partial(Head::d, nullptr, {})); return;
        }
        return;
      }
      case TermKind::numeral: ret(make_nat(t->value)); return;
      case TermKind::prim: {
        const PrimDef* p = find_prim(t->name);
        if (!p) throw Stuck{"unknown primitive @" + t->name};
        ret(make_partial(Head::prim, p, {}));
        return;
      }
      case TermKind::succ:
        stack_.push_back(SuccK{});
        eval(t->args[0]);
        return;
      case TermKind::add:
      case TermKind::mul:
        stack_.push_back(BinL{t->kind, t->args[1]});
        eval(t->args[0]);
        return;
      case TermKind::app:
        stack_.push_back(EvalArg{t->args[1]});
        eval(t->args[0]);
        return;
      case TermKind::pr: {
        Term f = compile_pr(*t->def);
        for (const auto& a : t->args) f = app(f, a);
        eval(f);
        return;
      }
    }
  }

  void step_ret() {
    Frame fr = std::move(stack_.back());
    stack_.pop_back();
    Val v = ret_;
    std::visit(
        [&](auto& f) {
          using F = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<F, EvalArg>) {
            stack_.push_back(ApplyFn{v});
            eval(f.arg);
          } else if constexpr (std::is_same_v<F, ApplyFn>) {
            apply(f.f, v);
          } else if constexpr (std::is_same_v<F, ApplyTo>) {
            apply(v, f.a);
          } else if constexpr (std::is_same_v<F, SuccK>) {
            if (!v->nat) throw Stuck{"S applied to a non-number"};
            ret(make_nat(v->n + 1));
          } else if constexpr (std::is_same_v<F, BinL>) {
            stack_.push_back(BinR{f.op, v});
            eval(f.rhs);
          } else if constexpr (std::is_same_v<F, BinR>) {
            if (!v->nat || !f.lhs->nat) throw Stuck{"arithmetic on a non-number"};
            ret(make_nat(f.op == TermKind::add ? Nat(f.lhs->n + v->n) : Nat(f.lhs->n * v->n)));
          } else if constexpr (std::is_same_v<F, SThen>) {
            stack_.push_back(ApplyFn{v});
            apply(f.y, f.z);
          } else if constexpr (std::is_same_v<F, RLoop>) {
            if (f.i == f.n) {
              ret(v);
              return;
            }
            Val y = f.y;
            Nat i = f.i;
            stack_.push_back(RLoop{f.y, f.n, f.i + 1});
            stack_.push_back(ApplyTo{v});
            apply(y, make_nat(i));
          }
        },
        fr);
  }

  void step_apply() {
    const Val& f = fn_;
    if (f->nat) throw Stuck{"a number applied as a function"};
    if (f->head == Head::pair) throw Stuck{"a pair applied as a function"};
    std::vector<Val> args = f->args;
    args.push_back(arg_);
    if (args.size() < arity(*f)) {
      ret(make_partial(f->head, f->prim, std::move(args)));
      return;
    }
    switch (f->head) {
      case Head::k: ret(args[0]); return;
      case Head::s:
        stack_.push_back(SThen{args[1], args[2]});
        apply(args[0], args[2]);
        return;
      case Head::p:
        if (args[0]->nat && args[1]->nat)
          ret(make_nat(cantor_pair(args[0]->n, args[1]->n)));
        else
          ret(make_partial(Head::pair, nullptr, std::move(args)));
        return;
      case Head::pl:
      case Head::pr: {
        const Val& x = args[0];
        bool left = f->head == Head::pl;
        if (x->nat) {
          auto [a, b] = cantor_unpair(x->n);
          ret(make_nat(left ? a : b));
        } else if (x->head == Head::pair) {
          ret(x->args[left ? 0 : 1]);
        } else {
          throw Stuck{"projection of a function value"};
        }
        return;
      }
      case Head::succ:
        if (!args[0]->nat) throw Stuck{"succ applied to a non-number"};
        ret(make_nat(args[0]->n + 1));
        return;
      case Head::r:
        if (!args[2]->nat) throw Stuck{"recursor counter is not a number"};
        stack_.push_back(RLoop{args[1], args[2]->n, Nat(0)});
        ret(args[0]);
        return;
      case Head::d:
        if (!args[0]->nat || !args[1]->nat) throw Stuck{"d compares non-numbers"};
        apply(args[0]->n == args[1]->n ? args[2] : args[3], args[4]);
        return;
      case Head::prim: {
        auto out = f->prim->fn(args);
        if (!out) throw Stuck{"@" + f->prim->name + " undefined on its arguments"};
        ret(*out);
        return;
      }
      case Head::pair: return;
    }
  }
};

}  // namespace

EvalResult eval(const Term& t, Fuel fuel) {
  static const Env empty;
  return eval(t, empty, fuel);
}

EvalResult eval(const Term& t, const Env& env, Fuel fuel) { return Machine(env, fuel).run_term(t); }

EvalResult apply_value(const Val& f, std::span<const Val> args, Fuel fuel) {
  static const Env empty;
  return Machine(empty, fuel).run_apply(f, args);
}

}  // namespace fixkit
