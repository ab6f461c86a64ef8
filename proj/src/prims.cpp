#include "fixkit/codefns.hpp"
#include "fixkit/combinatory.hpp"
#include "fixkit/hierarchy.hpp"

#include <charconv>
#include <map>
#include <mutex>

namespace fixkit::codes {

namespace {

std::optional<Term> term_of(const Nat& c) {
  if (category_of(c) != Category::term) return std::nullopt;
  return decode_term(Code{c});
}

std::optional<Formula> formula_of(const Nat& c) {
  if (category_of(c) != Category::formula) return std::nullopt;
  return decode_formula(Code{c});
}

void bound_vars(const Formula& f, VarSet& out) {
  switch (f->kind) {
    case FKind::conj:
    case FKind::disj:
    case FKind::imp:
      bound_vars(f->a, out);
      bound_vars(f->b, out);
      return;
    case FKind::all:
    case FKind::ex:
      out.insert(f->bound);
      bound_vars(f->a, out);
      return;
    default: return;
  }
}

}  // namespace

bool is_seq(const Nat& s) { return category_of(s) == Category::sequence; }

Nat lh(const Nat& s) { return is_seq(s) ? Nat(decode_seq(Code{s}).size()) : Nat(0); }

Nat nth(const Nat& s, const Nat& i) {
  if (!is_seq(s)) return 0;
  auto xs = decode_seq(Code{s});
  if (i >= xs.size()) return 0;
  return xs[static_cast<std::size_t>(i)];
}

bool is_var(const Nat& x) { return decode_var(Code{x}).has_value(); }
bool is_term(const Nat& t) { return category_of(t) == Category::term; }
bool is_formula(const Nat& f) { return category_of(f) == Category::formula; }

bool fv(const Nat& F, const Nat& x) {
  auto v = decode_var(Code{x});
  if (!v) return false;
  if (auto t = term_of(F)) return occurs(*v, *t);
  if (auto f = formula_of(F)) return free_vars(*f).contains(*v);
  return false;
}

bool bv(const Nat& F, const Nat& x) {
  auto v = decode_var(Code{x});
  auto f = formula_of(F);
  if (!v || !f) return false;
  VarSet b;
  bound_vars(*f, b);
  return b.contains(*v);
}

Nat sub(const Nat& F, const Nat& x, const Nat& s) {
  auto v = decode_var(Code{x});
  auto t = term_of(s);
  if (!v || !t) return F;
  if (auto f = formula_of(F)) return encode(subst_term(*f, *v, *t)).value;
  if (auto u = term_of(F)) {
    std::array<Var, 1> xs{*v};
    std::array<Term, 1> ts{*t};
    return encode(subst(*u, xs, ts)).value;
  }
  return F;
}

Nat numc(const Nat& n) { return encode(num(n)).value; }

bool nf(const Nat& F, unsigned n) {
  auto f = formula_of(F);
  return f && is_nf(*f, n);
}

bool lam(const Nat& F, unsigned n) {
  auto f = formula_of(F);
  return f && in_level(*f, n);
}

Nat norm(const Nat& F, unsigned n) {
  auto f = formula_of(F);
  if (!f || !in_level(*f, n)) return F;
  return encode(normalize(*f, n)).value;
}

Nat conjs(const Nat& s) {
  if (!is_seq(s)) return 0;
  auto xs = decode_seq(Code{s});
  if (xs.empty()) return 0;
  std::vector<Formula> fs;
  for (const auto& x : xs) {
    auto f = formula_of(x);
    if (!f) return 0;
    fs.push_back(*f);
  }
  Formula out = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) out = conj(out, fs[i]);
  return encode(out).value;
}

Nat mkall(const Nat& v, const Nat& G) {
  auto x = decode_var(Code{v});
  auto g = formula_of(G);
  if (!x || !g) return 0;
  return encode(all(*x, *g)).value;
}

Nat mkimp(const Nat& g, const Nat& f) {
  auto a = formula_of(g);
  auto b = formula_of(f);
  if (!a || !b) return 0;
  return encode(imp(*a, *b)).value;
}

Nat mkconj(const Nat& a, const Nat& b) {
  auto f = formula_of(a);
  auto g = formula_of(b);
  if (!f || !g) return 0;
  return encode(conj(*f, *g)).value;
}

bool is_sigma(const Nat& F) {
  auto f = formula_of(F);
  return f && is_sigma_eq(*f);
}

Nat ex_var(const Nat& F) {
  auto f = formula_of(F);
  if (!f || !is_sigma_eq(*f)) return 0;
  return encode((*f)->bound).value;
}

Nat ex_lhs(const Nat& F) {
  auto f = formula_of(F);
  if (!f || !is_sigma_eq(*f)) return 0;
  return encode((*f)->a->lhs).value;
}

Nat ex_rhs(const Nat& F) {
  auto f = formula_of(F);
  if (!f || !is_sigma_eq(*f)) return 0;
  return encode((*f)->a->rhs).value;
}

TermTag term_tag(const Nat& c) {
  auto t = term_of(c);
  if (!t) return TermTag::other;
  switch ((*t)->kind) {
    case TermKind::var: return TermTag::var;
    case TermKind::constant:
    case TermKind::numeral:
    case TermKind::prim: return TermTag::atom;
    case TermKind::succ: return TermTag::succ;
    case TermKind::add: return TermTag::add;
    case TermKind::mul: return TermTag::mul;
    case TermKind::app: return TermTag::app;
    case TermKind::pr: return TermTag::other;
  }
  return TermTag::other;
}

Nat term_left(const Nat& c) {
  auto t = term_of(c);
  if (!t || (*t)->args.empty() || (*t)->kind == TermKind::pr) return 0;
  return encode((*t)->args[0]).value;
}

Nat term_right(const Nat& c) {
  auto t = term_of(c);
  if (!t || (*t)->args.size() != 2 || (*t)->kind == TermKind::pr) return 0;
  return encode((*t)->args[1]).value;
}

}  // namespace fixkit::codes

namespace fixkit {

namespace {

using Args = std::span<const Val>;

bool nats(Args a) {
  return std::ranges::all_of(a, [](const Val& v) { return v->nat; });
}

Val flag(bool yes) { return make_nat(yes ? 0 : 1); }

std::unique_ptr<PrimDef> unary(std::string name, std::function<Val(const Nat&)> f) {
  return std::make_unique<PrimDef>(PrimDef{std::move(name), 1, [f](Args a) -> std::optional<Val> {
                                             if (!nats(a)) return std::nullopt;
                                             return f(a[0]->n);
                                           }});
}

std::unique_ptr<PrimDef> binary(std::string name, std::function<Val(const Nat&, const Nat&)> f) {
  return std::make_unique<PrimDef>(PrimDef{std::move(name), 2, [f](Args a) -> std::optional<Val> {
                                             if (!nats(a)) return std::nullopt;
                                             return f(a[0]->n, a[1]->n);
                                           }});
}

std::optional<unsigned> level_suffix(std::string_view name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
  unsigned n = 0;
  auto rest = name.substr(prefix.size());
  auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc{} || p != rest.data() + rest.size() || n > 64) return std::nullopt;
  return n;
}

std::unique_ptr<PrimDef> make_prim(std::string_view name) {
  using namespace codes;
  std::string n(name);
  if (n == "seq") return unary(n, [](const Nat& s) { return flag(is_seq(s)); });
  if (n == "lh") return unary(n, [](const Nat& s) { return make_nat(lh(s)); });
  if (n == "nth") return binary(n, [](const Nat& s, const Nat& i) { return make_nat(nth(s, i)); });
  if (n == "var") return unary(n, [](const Nat& x) { return flag(is_var(x)); });
  if (n == "term") return unary(n, [](const Nat& x) { return flag(is_term(x)); });
  if (n == "fv") return binary(n, [](const Nat& F, const Nat& x) { return flag(fv(F, x)); });
  if (n == "bv") return binary(n, [](const Nat& F, const Nat& x) { return flag(bv(F, x)); });
  if (n == "numc") return unary(n, [](const Nat& x) { return make_nat(numc(x)); });
  if (n == "conjs") return unary(n, [](const Nat& s) { return make_nat(conjs(s)); });
  if (n == "mkall") return binary(n, [](const Nat& v, const Nat& G) { return make_nat(mkall(v, G)); });
  if (n == "mkimp") return binary(n, [](const Nat& g, const Nat& f) { return make_nat(mkimp(g, f)); });
  if (n == "mkconj") return binary(n, [](const Nat& a, const Nat& b) { return make_nat(mkconj(a, b)); });
  if (n == "issigma") return unary(n, [](const Nat& F) { return flag(is_sigma(F)); });
  if (n == "exvar") return unary(n, [](const Nat& F) { return make_nat(ex_var(F)); });
  if (n == "exlhs") return unary(n, [](const Nat& F) { return make_nat(ex_lhs(F)); });
  if (n == "exrhs") return unary(n, [](const Nat& F) { return make_nat(ex_rhs(F)); });
  if (n == "ttag")
    return unary(n, [](const Nat& c) { return make_nat(static_cast<unsigned>(term_tag(c))); });
  if (n == "tleft") return unary(n, [](const Nat& c) { return make_nat(term_left(c)); });
  if (n == "tright") return unary(n, [](const Nat& c) { return make_nat(term_right(c)); });
  if (n == "sub")
    return std::make_unique<PrimDef>(PrimDef{n, 3, [](Args a) -> std::optional<Val> {
                                               if (!nats(a)) return std::nullopt;
                                               return make_nat(sub(a[0]->n, a[1]->n, a[2]->n));
                                             }});
  if (n == "tconst")
    return std::make_unique<PrimDef>(PrimDef{n, 1, [](Args a) -> std::optional<Val> {
                                               if (!a[0]->nat || term_tag(a[0]->n) != TermTag::atom) return std::nullopt;
                                               EvalResult r = eval(decode_term(Code{a[0]->n}), Fuel{1});
                                               if (!r.ok()) return std::nullopt;
                                               return r.value;
                                             }});
  if (auto k = level_suffix(n, "nf")) return unary(n, [k = *k](const Nat& F) { return flag(nf(F, k)); });
  if (auto k = level_suffix(n, "lam")) return unary(n, [k = *k](const Nat& F) { return flag(lam(F, k)); });
  if (auto k = level_suffix(n, "norm")) return unary(n, [k = *k](const Nat& F) { return make_nat(norm(F, k)); });
  return nullptr;
}

// Code operations decode and re-encode whole formulas, and the same large
// codes come back on every witness tried by the bounded semantics.
std::unique_ptr<PrimDef> memoize(std::unique_ptr<PrimDef> p) {
  struct Memo {
    std::mutex mu;
    std::map<std::vector<Nat>, std::optional<Val>> table;
  };
  auto memo = std::make_shared<Memo>();
  p->fn = [memo, fn = std::move(p->fn)](Args a) -> std::optional<Val> {
    if (!nats(a)) return fn(a);
    std::vector<Nat> key;
    for (const auto& v : a) key.push_back(v->n);
    {
      std::lock_guard lock(memo->mu);
      if (auto it = memo->table.find(key); it != memo->table.end()) return it->second;
    }
    auto out = fn(a);
    std::lock_guard lock(memo->mu);
    if (memo->table.size() >= 4096) memo->table.clear();
    memo->table.emplace(std::move(key), out);
    return out;
  };
  return p;
}

}  // namespace

const PrimDef* find_prim(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<PrimDef>, std::less<>> table;
  std::lock_guard lock(mu);
  if (auto it = table.find(name); it != table.end()) return it->second.get();
  auto p = make_prim(name);
  if (!p) return nullptr;
  p = memoize(std::move(p));
  const PrimDef* out = p.get();
  table.emplace(std::string(name), std::move(p));
  return out;
}

}  // namespace fixkit
