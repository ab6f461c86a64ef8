#include "fixkit/kernel.hpp"

#include "fixkit/hierarchy.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace fixkit {

Formula Derivation::conclusion() const {
  if (lines.empty()) throw KernelError("derivation has no lines");
  return lines.back().formula;
}

// ------------------------------------------------------------------ theories

namespace {

bool terms_in(const Formula& f, LanguageTag l) {
  switch (f->kind) {
    case FKind::bot: return true;
    case FKind::eq: return in_language(f->lhs, l) && in_language(f->rhs, l);
    case FKind::rel:
      if (f->rel.kind == RelSym::Kind::fix && !terms_in(f->rel.body, l)) return false;
      return std::ranges::all_of(f->args, [&](const Term& t) { return in_language(t, l); });
    case FKind::conj:
    case FKind::disj:
    case FKind::imp: return terms_in(f->a, l) && terms_in(f->b, l);
    case FKind::all:
    case FKind::ex: return terms_in(f->a, l);
  }
  return false;
}

bool iid1_language(const Formula& f) { return in_language(f, LanguageTag::HAP_ID) && terms_in(f, LanguageTag::HA); }

}  // namespace

TheorySpec theory_spec(std::string_view name) {
  auto ha = [](const Formula& f) { return in_language(f, LanguageTag::HA); };
  auto hap = [](const Formula& f) { return in_language(f, LanguageTag::HAP); };
  auto hap_id = [](const Formula& f) { return in_language(f, LanguageTag::HAP_ID); };
  auto any = [](const Formula&) { return true; };
  if (name == "HA") return {"HA", ha, ha, {}};
  if (name == "HAP") return {"HAP", hap, hap, {}};
  if (name == "IID1")
    return {"IID1", iid1_language, iid1_language, [](const Formula& phi) { return terms_in(phi, LanguageTag::HA); }};
  if (name == "IIDP1") return {"IIDP1", hap_id, hap_id, any};
  if (name == "IIDP1(Lambda)")
    return {"IIDP1(Lambda)", hap_id, hap_id, [](const Formula& phi) { return is_almost_negative(phi); }};
  throw KernelError("unknown theory '" + std::string(name) + "'");
}

std::vector<std::string> theory_names() { return {"HA", "HAP", "IID1", "IIDP1", "IIDP1(Lambda)"}; }

bool is_lpt_rule(unsigned id) {
  switch (id) {
    case 2:
    case 3:
    case 5:
    case 7:
    case 8:
    case 9:
    case 11:
    case 13: return true;
    default: return false;
  }
}

// -------------------------------------------------------------- LPT axioms

namespace {

bool strip_alls(Formula& f, std::vector<Var>& vs) {
  while (f->kind == FKind::all) {
    vs.push_back(f->bound);
    f = f->a;
  }
  VarSet seen(vs.begin(), vs.end());
  return seen.size() == vs.size();
}

bool is_down(const Formula& f) { return f->kind == FKind::eq && same(f->lhs, f->rhs); }

bool is_atomic_constant(const Term& t) {
  return t->kind == TermKind::constant || t->kind == TermKind::numeral || t->kind == TermKind::prim;
}

bool is_function_application(const Term& t) {
  switch (t->kind) {
    case TermKind::succ:
    case TermKind::add:
    case TermKind::mul:
    case TermKind::app:
    case TermKind::pr: return true;
    default: return false;
  }
}

// t with its arguments replaced
Term rebuild(const Term& t, std::vector<Term> args) {
  switch (t->kind) {
    case TermKind::succ: return succ(args[0]);
    case TermKind::add: return add(args[0], args[1]);
    case TermKind::mul: return mul(args[0], args[1]);
    case TermKind::app: return app(args[0], args[1]);
    case TermKind::pr: return pr_app(t->def, std::move(args));
    default: return t;
  }
}

std::vector<Term> var_terms(std::span<const Var> vs) {
  std::vector<Term> out;
  for (Var v : vs) out.push_back(var(v));
  return out;
}

Formula eqs(std::span<const Var> xs, std::span<const Var> ys) {
  std::vector<Formula> es;
  for (std::size_t i = 0; i < xs.size(); ++i) es.push_back(eq(var(xs[i]), var(ys[i])));
  return conj_all(es);
}

std::optional<AxiomMatch> match_equality(const Formula& f) {
  std::vector<Var> vs;
  Formula body = f;
  if (!strip_alls(body, vs) || vs.empty()) return std::nullopt;
  auto x = [&](std::size_t i) { return var(vs[i]); };
  if (vs.size() == 1 && same(body, eq(x(0), x(0)))) return AxiomMatch{15, 0, {}};
  if (vs.size() == 2 && same(body, imp(eq(x(0), x(1)), eq(x(1), x(0))))) return AxiomMatch{16, 0, {}};
  if (vs.size() == 3 && same(body, imp(conj(eq(x(0), x(1)), eq(x(1), x(2))), eq(x(0), x(2)))))
    return AxiomMatch{17, 0, {}};
  if (vs.size() % 2 != 0 || body->kind != FKind::imp || body->a->kind != FKind::conj) return std::nullopt;
  std::size_t k = vs.size() / 2;
  std::span<const Var> xs(vs.data(), k), ys(vs.data() + k, k);
  // ∀x⃗y⃗ (x⃗ = y⃗ ∧ f(x⃗)↓ → f(x⃗) = f(y⃗))
  if (body->b->kind == FKind::eq && is_function_application(body->b->lhs)) {
    const Term& F = body->b->lhs;
    if (F->args.size() == k) {
      Term fx = rebuild(F, var_terms(xs)), fy = rebuild(F, var_terms(ys));
      if (same(body, imp(conj(eqs(xs, ys), down(fx)), eq(fx, fy)))) return AxiomMatch{18, 0, {}};
    }
  }
  // ∀x⃗y⃗ (R(x⃗) ∧ x⃗ = y⃗ → R(y⃗))
  if (body->b->kind == FKind::rel && body->b->rel.arity == k) {
    const RelSym& R = body->b->rel;
    if (same(body, imp(conj(rel(R, var_terms(xs)), eqs(xs, ys)), rel(R, var_terms(ys))))) return AxiomMatch{19, 0, {}};
  }
  return std::nullopt;
}

}  // namespace

std::vector<AxiomMatch> match_lpt_axioms(const Formula& f) {
  std::vector<AxiomMatch> out;
  if (f->kind == FKind::eq && is_down(f)) {
    if (f->lhs->kind == TermKind::var) out.push_back({23, 0, {f->lhs}});
    if (is_atomic_constant(f->lhs)) out.push_back({20, 0, {f->lhs}});
  }
  if (f->kind == FKind::all) {
    if (auto m = match_equality(f)) out.push_back(*m);
  }
  if (f->kind != FKind::imp) return out;
  const Formula& A = f->a;
  const Formula& B = f->b;
  if (alpha_equal(A, B)) out.push_back({1, 0, {}});
  if (A->kind == FKind::conj) {
    if (alpha_equal(A->a, B)) out.push_back({4, 0, {}});
    if (alpha_equal(A->b, B)) out.push_back({4, 1, {}});
  }
  if (B->kind == FKind::disj) {
    if (alpha_equal(A, B->a)) out.push_back({6, 0, {}});
    if (alpha_equal(A, B->b)) out.push_back({6, 1, {}});
  }
  if (A->kind == FKind::bot) out.push_back({10, 0, {}});
  // ∀xφ ∧ τ↓ → φ(x/τ)
  if (A->kind == FKind::conj && A->a->kind == FKind::all && is_down(A->b)) {
    const Term& tau = A->b->lhs;
    if (alpha_equal(B, subst_term(A->a->a, A->a->bound, tau))) out.push_back({12, 0, {tau}});
  }
  // φ(x/τ) ∧ τ↓ → ∃xφ
  if (B->kind == FKind::ex && A->kind == FKind::conj && is_down(A->b)) {
    const Term& tau = A->b->lhs;
    if (alpha_equal(A->a, subst_term(B->a, B->bound, tau))) out.push_back({14, 0, {tau}});
  }
  // f(τ⃗)↓ → τ_i↓
  if (is_down(A) && is_down(B) && is_function_application(A->lhs)) {
    for (const auto& t : A->lhs->args)
      if (same(t, B->lhs)) {
        out.push_back({21, 0, {t}});
        break;
      }
  }
  // R(τ⃗) → τ_i↓, with = among the relations
  if (A->kind == FKind::rel && is_down(B)) {
    for (const auto& t : A->args)
      if (same(t, B->lhs)) {
        out.push_back({22, 0, {t}});
        break;
      }
  }
  if (A->kind == FKind::eq) {
    if (is_down(B) && (same(B->lhs, A->lhs) || same(B->lhs, A->rhs))) out.push_back({22, 1, {B->lhs}});
    if (same(B, conj(down(A->lhs), down(A->rhs)))) out.push_back({22, 2, {A->lhs, A->rhs}});
  }
  return out;
}

std::optional<AxiomMatch> match_lpt_axiom(const Formula& f) {
  auto rs = match_lpt_axioms(f);
  if (rs.empty()) return std::nullopt;
  return rs.front();
}

// -------------------------------------------------------------- HAP axioms

namespace {

Term x0() { return var(0); }
Term x1() { return var(1); }
Term x2() { return var(2); }
Term c(Sym s) { return constant(s); }

}  // namespace

unsigned hap_clause_count(unsigned group) {
  static const unsigned counts[] = {0, 3, 2, 2, 2, 3, 5, 3};
  return group >= 1 && group <= 7 ? counts[group] : 0;
}

Formula hap_axiom(unsigned group, unsigned clause) {
  const Term zero = c(Sym::zero);
  switch (group * 10 + clause) {
    case 10: return down(succ(x0()));
    case 11: return down(add(x0(), x1()));
    case 12: return down(mul(x0(), x1()));
    case 20: return imp(eq(succ(x0()), succ(x1())), eq(x0(), x1()));
    case 21: return neg(eq(zero, succ(x0())));
    case 30: return eq(add(x0(), zero), x0());
    case 31: return eq(add(x0(), succ(x1())), succ(add(x0(), x1())));
    case 40: return eq(mul(x0(), zero), zero);
    // the textbook clause; see the decisions ledger
    case 41: return eq(mul(x0(), succ(x1())), add(mul(x0(), x1()), x0()));
    case 50: return eq(app(c(Sym::k), {x0(), x1()}), x0());
    case 51: return down(app(c(Sym::s), {x0(), x1()}));
    case 52: return kleene_eq(app(c(Sym::s), {x0(), x1(), x2()}), app(x0(), {x2(), app(x1(), x2())}));
    case 60: return down(app(c(Sym::pl), x0()));
    case 61: return down(app(c(Sym::pr), x0()));
    case 62: return eq(app(c(Sym::pl), app(c(Sym::p), {x0(), x1()})), x0());
    case 63: return eq(app(c(Sym::pr), app(c(Sym::p), {x0(), x1()})), x1());
    case 64: return eq(app(c(Sym::p), {app(c(Sym::pl), x0()), app(c(Sym::pr), x0())}), x0());
    case 70: return eq(app(c(Sym::succ), x0()), succ(x0()));
    case 71: return eq(app(c(Sym::r), {x0(), x1(), zero}), x0());
    case 72:
      return eq(app(c(Sym::r), {x0(), x1(), succ(x2())}), app(x1(), {x2(), app(c(Sym::r), {x0(), x1(), x2()})}));
  }
  throw KernelError("no HAP clause " + std::to_string(group) + "." + std::to_string(clause));
}

Formula induction_axiom(Var x, const Formula& phi) {
  Formula step = all(x, imp(phi, subst_term(phi, x, succ(var(x)))));
  return imp(subst_term(phi, x, constant(Sym::zero)), imp(step, all(x, phi)));
}

namespace {

// pattern variables v0..v2 bind to object variables only
using Binding = std::map<std::uint32_t, std::uint32_t>;

bool match_term(const Term& p, const Term& t, Binding& b) {
  if (p->kind == TermKind::var) {
    if (t->kind != TermKind::var) return false;
    auto [it, fresh_bind] = b.emplace(p->index, t->index);
    return fresh_bind || it->second == t->index;
  }
  if (p->kind != t->kind || p->args.size() != t->args.size()) return false;
  if (p->kind == TermKind::constant && p->sym != t->sym) return false;
  for (std::size_t i = 0; i < p->args.size(); ++i)
    if (!match_term(p->args[i], t->args[i], b)) return false;
  return true;
}

bool match_formula(const Formula& p, const Formula& f, Binding& b) {
  if (p->kind != f->kind) return false;
  switch (p->kind) {
    case FKind::bot: return true;
    case FKind::eq: return match_term(p->lhs, f->lhs, b) && match_term(p->rhs, f->rhs, b);
    case FKind::conj:
    case FKind::disj:
    case FKind::imp: return match_formula(p->a, f->a, b) && match_formula(p->b, f->b, b);
    default: return false;
  }
}

}  // namespace

std::optional<AxiomMatch> match_hap_axiom(const Formula& f, const TheorySpec& spec) {
  for (unsigned g = 1; g <= 7; ++g)
    for (unsigned k = 0; k < hap_clause_count(g); ++k) {
      Binding b;
      if (match_formula(hap_axiom(g, k), f, b)) {
        AxiomMatch m{g, k, {}};
        for (const auto& [from, to] : b) m.terms.push_back(var(to));
        return m;
      }
    }
  // φ(x/0) → (∀x (φ → φ(x/S(x))) → ∀x φ)
  if (f->kind == FKind::imp && f->b->kind == FKind::imp && f->b->b->kind == FKind::all) {
    const Formula& goal = f->b->b;
    if (alpha_equal(f, induction_axiom(goal->bound, goal->a))) {
      if (spec.induction && !spec.induction(goal->a)) return std::nullopt;
      return AxiomMatch{8, 0, {var(goal->bound)}};
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ fixpoint axioms

Formula fixpoint_axiom(const RelSym& I) {
  if (I.kind != RelSym::Kind::fix) throw KernelError("fixpoint_axiom: not a fixpoint symbol");
  std::vector<Var> xs;
  for (unsigned i = 0; i < I.arity; ++i) xs.push_back(Var{i});
  std::vector<Term> args = var_terms(xs);
  Formula lhs = rel(I, args);
  std::vector<Var> binder = xs;
  Formula rhs = subst_relation(I.body, RelSym::param(I.arity), binder, rel(I, args));
  Formula out = iff(lhs, rhs);
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) out = all(*it, out);
  return out;
}

std::optional<RelSym> match_fixpoint_axiom(const Formula& f, const TheorySpec& spec) {
  if (!spec.fixpoint_class) return std::nullopt;
  Formula body = f;
  while (body->kind == FKind::all) body = body->a;
  if (body->kind != FKind::conj || body->a->kind != FKind::imp || body->a->a->kind != FKind::rel) return std::nullopt;
  const RelSym& I = body->a->a->rel;
  if (I.kind != RelSym::Kind::fix) return std::nullopt;
  if (!alpha_equal(f, fixpoint_axiom(I))) return std::nullopt;
  if (!spec.fixpoint_class(I.body)) return std::nullopt;
  return I;
}

// ------------------------------------------------------------------- checker

namespace {

std::optional<std::string> check_rule(const Derivation& d, std::size_t i, const TheorySpec&) {
  const Line& line = d.lines[i];
  const auto& ps = line.just.premises;
  for (std::size_t p : ps)
    if (p >= i) return "premise " + std::to_string(p + 1) + " is not an earlier line";
  auto P = [&](std::size_t k) { return d.lines[ps[k]].formula; };
  const Formula& f = line.formula;
  auto need = [&](std::size_t n) -> std::optional<std::string> {
    if (ps.size() != n) return "rule LPT" + std::to_string(line.just.id) + " takes " + std::to_string(n) + " premises";
    return std::nullopt;
  };
  auto imp_of = [](const Formula& g) { return g->kind == FKind::imp; };
  auto hyp_free = [&](Var x) {
    return std::ranges::none_of(d.hypotheses, [&](const Formula& h) { return free_vars(h).contains(x); });
  };
  const std::string bad = "does not follow by LPT" + std::to_string(line.just.id);
  switch (line.just.id) {
    case 2: {
      if (auto e = need(2)) return e;
      for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 0}}) {
        Formula ab = P(b);
        if (imp_of(ab) && alpha_equal(ab->a, P(a)) && alpha_equal(ab->b, f)) return std::nullopt;
      }
      return bad;
    }
    case 3: {
      if (auto e = need(2)) return e;
      Formula ab = P(0), bc = P(1);
      if (imp_of(ab) && imp_of(bc) && imp_of(f) && alpha_equal(ab->b, bc->a) && alpha_equal(f->a, ab->a) &&
          alpha_equal(f->b, bc->b))
        return std::nullopt;
      return bad;
    }
    case 5: {
      if (auto e = need(2)) return e;
      Formula ab = P(0), ac = P(1);
      if (imp_of(ab) && imp_of(ac) && imp_of(f) && f->b->kind == FKind::conj && alpha_equal(f->a, ab->a) &&
          alpha_equal(f->a, ac->a) && alpha_equal(f->b->a, ab->b) && alpha_equal(f->b->b, ac->b))
        return std::nullopt;
      return bad;
    }
    case 7: {
      if (auto e = need(2)) return e;
      Formula ac = P(0), bc = P(1);
      if (imp_of(ac) && imp_of(bc) && imp_of(f) && f->a->kind == FKind::disj && alpha_equal(f->a->a, ac->a) &&
          alpha_equal(f->a->b, bc->a) && alpha_equal(f->b, ac->b) && alpha_equal(f->b, bc->b))
        return std::nullopt;
      return bad;
    }
    case 8: {
      if (auto e = need(1)) return e;
      Formula g = P(0);
      if (imp_of(g) && g->a->kind == FKind::conj && imp_of(f) && imp_of(f->b) && alpha_equal(f->a, g->a->a) &&
          alpha_equal(f->b->a, g->a->b) && alpha_equal(f->b->b, g->b))
        return std::nullopt;
      return bad;
    }
    case 9: {
      if (auto e = need(1)) return e;
      Formula g = P(0);
      if (imp_of(g) && imp_of(g->b) && imp_of(f) && f->a->kind == FKind::conj && alpha_equal(f->a->a, g->a) &&
          alpha_equal(f->a->b, g->b->a) && alpha_equal(f->b, g->b->b))
        return std::nullopt;
      return bad;
    }
    case 11: {
      if (auto e = need(1)) return e;
      Formula g = P(0);
      if (!imp_of(g) || !imp_of(f) || f->b->kind != FKind::all) return bad;
      Var x = f->b->bound;
      if (free_vars(g->a).contains(x)) return "generalised variable v" + std::to_string(x.index) + " is free in the antecedent";
      if (!hyp_free(x)) return "generalised variable v" + std::to_string(x.index) + " is free in a hypothesis";
      if (alpha_equal(f->a, g->a) && alpha_equal(f->b->a, g->b)) return std::nullopt;
      return bad;
    }
    case 13: {
      if (auto e = need(1)) return e;
      Formula g = P(0);
      if (!imp_of(g) || !imp_of(f) || f->a->kind != FKind::ex) return bad;
      Var x = f->a->bound;
      if (free_vars(g->b).contains(x)) return "generalised variable v" + std::to_string(x.index) + " is free in the consequent";
      if (!hyp_free(x)) return "generalised variable v" + std::to_string(x.index) + " is free in a hypothesis";
      if (alpha_equal(f->b, g->b) && alpha_equal(f->a->a, g->a)) return std::nullopt;
      return bad;
    }
  }
  return "LPT" + std::to_string(line.just.id) + " is not a rule";
}

}  // namespace

std::optional<std::string> check_line(const Derivation& d, std::size_t i, const TheorySpec& spec) {
  const Line& line = d.lines.at(i);
  const Formula& f = line.formula;
  if (spec.language && !spec.language(f)) return "formula is outside the language of " + spec.name;
  const auto& j = line.just;
  using K = Justification::Kind;
  switch (j.kind) {
    case K::hypothesis:
      if (j.id >= d.hypotheses.size()) return "no hypothesis " + std::to_string(j.id + 1);
      if (!alpha_equal(d.hypotheses[j.id], f)) return "formula differs from hypothesis " + std::to_string(j.id + 1);
      return std::nullopt;
    case K::lpt_axiom: {
      if (is_lpt_rule(j.id)) return "LPT" + std::to_string(j.id) + " is a rule, not an axiom";
      auto rs = match_lpt_axioms(f);
      if (rs.empty()) return "not an instance of any LPT axiom";
      if (std::ranges::any_of(rs, [&](const AxiomMatch& m) { return m.id == j.id; })) return std::nullopt;
      return "instance of LPT" + std::to_string(rs.front().id) + ", cited as LPT" + std::to_string(j.id);
    }
    case K::hap_axiom: {
      auto m = match_hap_axiom(f, spec);
      if (!m) return "not an instance of any HAP axiom of " + spec.name;
      if (m->id != j.id) return "instance of HAP" + std::to_string(m->id) + ", cited as HAP" + std::to_string(j.id);
      return std::nullopt;
    }
    case K::fixpoint_axiom:
      if (!match_fixpoint_axiom(f, spec)) return "not a fixpoint axiom of " + spec.name;
      return std::nullopt;
    case K::rule: return check_rule(d, i, spec);
  }
  return "unknown justification";
}

CheckResult check(const Derivation& d, const TheorySpec& spec) {
  if (d.lines.empty()) return {false, 0, "derivation has no lines"};
  for (std::size_t k = 0; k < d.hypotheses.size(); ++k)
    if (spec.language && !spec.language(d.hypotheses[k]))
      return {false, 0, "hypothesis " + std::to_string(k + 1) + " is outside the language of " + spec.name};
  for (std::size_t i = 0; i < d.lines.size(); ++i)
    if (auto e = check_line(d, i, spec)) return {false, i, *e};
  return {};
}

CheckResult check(const Derivation& d) { return check(d, theory_spec(d.theory)); }

// --------------------------------------------------------------- text format

std::string to_string(const Justification& j) {
  using K = Justification::Kind;
  std::string s;
  switch (j.kind) {
    case K::hypothesis: return "HYP " + std::to_string(j.id + 1);
    case K::lpt_axiom: return "LPT" + std::to_string(j.id);
    case K::hap_axiom: return "HAP" + std::to_string(j.id);
    case K::fixpoint_axiom: return "FIX";
    case K::rule:
      s = "LPT" + std::to_string(j.id);
      for (std::size_t p : j.premises) s += " " + std::to_string(p + 1);
      return s;
  }
  return s;
}

std::string to_string(const Derivation& d) {
  std::ostringstream os;
  os << "theory: " << d.theory << "\n";
  for (const auto& h : d.hypotheses) os << "hyp: " << to_string(h) << "\n";
  for (std::size_t i = 0; i < d.lines.size(); ++i)
    os << (i + 1) << ". " << to_string(d.lines[i].formula) << " ; " << to_string(d.lines[i].just) << "\n";
  return os.str();
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

unsigned to_unsigned(const std::string& s, std::size_t lineno) {
  if (s.empty() || !std::ranges::all_of(s, [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    throw KernelError("line " + std::to_string(lineno) + ": expected a number, got '" + s + "'");
  return static_cast<unsigned>(std::stoul(s));
}

Justification parse_just(const std::string& text, std::size_t lineno) {
  std::istringstream is(text);
  std::string head;
  is >> head;
  std::vector<unsigned> nums;
  for (std::string w; is >> w;) nums.push_back(to_unsigned(w, lineno));
  Justification j;
  using K = Justification::Kind;
  if (head == "HYP") {
    if (nums.size() != 1 || nums[0] == 0) throw KernelError("line " + std::to_string(lineno) + ": HYP takes one index");
    j.kind = K::hypothesis;
    j.id = nums[0] - 1;
  } else if (head == "FIX") {
    j.kind = K::fixpoint_axiom;
  } else if (head.starts_with("LPT")) {
    j.id = to_unsigned(head.substr(3), lineno);
    if (j.id < 1 || j.id > 23) throw KernelError("line " + std::to_string(lineno) + ": no axiom or rule " + head);
    j.kind = is_lpt_rule(j.id) ? K::rule : K::lpt_axiom;
    for (unsigned n : nums) {
      if (n == 0) throw KernelError("line " + std::to_string(lineno) + ": premises count from 1");
      j.premises.push_back(n - 1);
    }
  } else if (head.starts_with("HAP")) {
    j.kind = K::hap_axiom;
    j.id = to_unsigned(head.substr(3), lineno);
    if (j.id < 1 || j.id > 8) throw KernelError("line " + std::to_string(lineno) + ": no axiom group " + head);
  } else {
    throw KernelError("line " + std::to_string(lineno) + ": unknown justification '" + head + "'");
  }
  if (j.kind != K::rule && j.kind != K::hypothesis && !nums.empty())
    throw KernelError("line " + std::to_string(lineno) + ": axioms take no premises");
  return j;
}

}  // namespace

Derivation parse_derivation(std::string_view text) {
  Derivation d;
  std::string fixclass;
  std::istringstream is{std::string(text)};
  std::size_t lineno = 0;
  for (std::string raw; std::getline(is, raw);) {
    ++lineno;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    auto header = [&](std::string_view key) -> std::optional<std::string> {
      if (s.starts_with(key)) return trim(std::string_view(s).substr(key.size()));
      return std::nullopt;
    };
    try {
      if (auto v = header("theory:")) {
        d.theory = *v;
      } else if (auto v = header("fixclass:")) {
        fixclass = *v;
      } else if (auto v = header("hyp:")) {
        d.hypotheses.push_back(parse_formula(*v));
      } else {
        auto dot = s.find('.');
        auto semi = s.rfind(';');
        if (dot == std::string::npos || semi == std::string::npos || semi < dot)
          throw KernelError("line " + std::to_string(lineno) + ": expected 'n. <formula> ; <justification>'");
        unsigned n = to_unsigned(trim(std::string_view(s).substr(0, dot)), lineno);
        if (n != d.lines.size() + 1)
          throw KernelError("line " + std::to_string(lineno) + ": expected line number " +
                            std::to_string(d.lines.size() + 1));
        Formula f = parse_formula(trim(std::string_view(s).substr(dot + 1, semi - dot - 1)));
        d.lines.push_back({f, parse_just(trim(std::string_view(s).substr(semi + 1)), lineno)});
      }
    } catch (const SyntaxError& e) {
      throw KernelError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (fixclass == "lambda" && d.theory == "IIDP1") d.theory = "IIDP1(Lambda)";
  else if (!fixclass.empty() && fixclass != "all") throw KernelError("unknown fixclass '" + fixclass + "'");
  theory_spec(d.theory);
  return d;
}

Derivation read_derivation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw KernelError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_derivation(ss.str());
}

}  // namespace fixkit
