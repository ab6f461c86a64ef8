#include "fixkit/syntax.hpp"

#include <map>
#include <mutex>

namespace fixkit {

namespace {
PRRef make(PRDef d) { return std::make_shared<const PRDef>(std::move(d)); }
}  // namespace

PRRef pr_zero(unsigned arity) { return make({PRDef::Kind::zero, arity, 0, {}, {}}); }
PRRef pr_succ() { return make({PRDef::Kind::succ, 1, 0, {}, {}}); }

PRRef pr_proj(unsigned arity, unsigned i) {
  if (i >= arity) throw SyntaxError("projection index " + std::to_string(i) + " out of range for arity " + std::to_string(arity));
  return make({PRDef::Kind::proj, arity, i, {}, {}});
}

PRRef pr_comp(PRRef f, std::vector<PRRef> hs) {
  if (hs.empty()) throw SyntaxError("composition needs at least one inner function");
  if (f->arity != hs.size())
    throw SyntaxError("composition: outer arity " + std::to_string(f->arity) + " but " + std::to_string(hs.size()) +
                      " inner functions");
  unsigned k = hs[0]->arity;
  for (const auto& h : hs)
    if (h->arity != k) throw SyntaxError("composition: inner functions disagree on arity");
  std::vector<PRRef> parts{std::move(f)};
  parts.insert(parts.end(), hs.begin(), hs.end());
  return make({PRDef::Kind::comp, k, 0, std::move(parts), {}});
}

PRRef pr_rec(PRRef g, PRRef h) {
  if (g->arity != h->arity + 2)
    throw SyntaxError("recursion: step arity " + std::to_string(g->arity) + " must be base arity + 2");
  unsigned k = h->arity + 1;
  return make({PRDef::Kind::rec, k, 0, {std::move(g), std::move(h)}, {}});
}

PRRef pr_named(PRRef d, std::string name) {
  PRDef copy = *d;
  copy.name = std::move(name);
  return make(std::move(copy));
}

bool same_pr(const PRDef& a, const PRDef& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind || a.arity != b.arity || a.index != b.index || a.parts.size() != b.parts.size()) return false;
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    if (!same_pr(*a.parts[i], *b.parts[i])) return false;
  return true;
}

namespace {

std::map<std::string, PRRef> build_library() {
  std::map<std::string, PRRef> lib;
  auto put = [&](const std::string& n, PRRef d) { return lib[n] = pr_named(std::move(d), n); };
  auto S = pr_succ();
  auto add = put("add", pr_rec(pr_comp(S, {pr_proj(3, 2)}), pr_proj(1, 0)));
  auto mult = put("mult", pr_rec(pr_comp(add, {pr_proj(3, 2), pr_proj(3, 0)}), pr_zero(1)));
  auto pred = put("pred", pr_rec(pr_proj(2, 0), pr_zero(0)));
  put("monus", pr_rec(pr_comp(pred, {pr_proj(3, 2)}), pr_proj(1, 0)));
  // sg(0) = 0, sg(y+1) = 1
  auto sg = put("sg", pr_rec(pr_comp(S, {pr_zero(2)}), pr_zero(0)));
  put("sgbar", pr_rec(pr_zero(2), pr_comp(S, {pr_zero(0)})));
  // tri(n) = 0 + 1 + ... + n
  auto tri = put("tri", pr_rec(pr_comp(add, {pr_proj(2, 1), pr_comp(S, {pr_proj(2, 0)})}), pr_zero(0)));
  put("pair", pr_comp(add, {pr_comp(tri, {add}), pr_proj(2, 1)}));
  // bsqrt(x) = #{ y < x : (y+1)^2 <= x }, the integer square root by bounded counting
  auto sq1 = pr_comp(mult, {pr_comp(S, {pr_proj(3, 1)}), pr_comp(S, {pr_proj(3, 1)})});
  auto notgt = pr_comp(lib["sgbar"], {pr_comp(lib["monus"], {sq1, pr_proj(3, 0)})});
  auto step = pr_comp(add, {pr_proj(3, 2), notgt});
  auto count = pr_rec(step, pr_zero(1));
  put("bsqrt", pr_comp(count, {pr_proj(1, 0), pr_proj(1, 0)}));
  return lib;
}

const std::map<std::string, PRRef>& library() {
  static const std::map<std::string, PRRef> lib = build_library();
  return lib;
}

}  // namespace

Nat run_pr(const PRDef& d, std::span<const Nat> args) {
  if (args.size() != d.arity) throw SyntaxError("run_pr: arity mismatch");
  switch (d.kind) {
    case PRDef::Kind::zero: return 0;
    case PRDef::Kind::succ: return args[0] + 1;
    case PRDef::Kind::proj: return args[d.index];
    case PRDef::Kind::comp: {
      std::vector<Nat> inner;
      for (std::size_t i = 1; i < d.parts.size(); ++i) inner.push_back(run_pr(*d.parts[i], args));
      return run_pr(*d.parts[0], inner);
    }
    case PRDef::Kind::rec: {
      std::vector<Nat> xs(args.begin(), args.end() - 1);
      Nat acc = run_pr(*d.parts[1], xs);
      Nat n = args.back();
      std::vector<Nat> step = xs;
      step.push_back(0);
      step.push_back(0);
      for (Nat y = 0; y < n; ++y) {
        step[xs.size()] = y;
        step[xs.size() + 1] = acc;
        acc = run_pr(*d.parts[0], step);
      }
      return acc;
    }
  }
  return 0;
}

PRRef pr_lookup(const std::string& name) {
  auto it = library().find(name);
  return it == library().end() ? nullptr : it->second;
}

std::vector<std::string> pr_library_names() {
  std::vector<std::string> out;
  for (const auto& [n, d] : library()) out.push_back(n);
  return out;
}

}  // namespace fixkit
