#include "fixkit/codefns.hpp"
#include "fixkit/combinatory.hpp"
#include "fixkit/goedel.hpp"
#include "support/gen.hpp"

#include <doctest.h>

#include <unordered_set>

using namespace fixkit;

namespace {

Term z() { return constant(Sym::zero); }

std::string key(const Code& c) { return c.value.str(); }

// code of every immediate constituent
std::vector<Code> parts(const Formula& f) {
  switch (f->kind) {
    case FKind::eq: return {encode(f->lhs), encode(f->rhs)};
    case FKind::rel: {
      std::vector<Code> cs;
      for (const auto& t : f->args) cs.push_back(encode(t));
      return cs;
    }
    case FKind::conj:
    case FKind::disj:
    case FKind::imp: return {encode(f->a), encode(f->b)};
    case FKind::all:
    case FKind::ex: return {encode(f->a)};
    default: return {};
  }
}

Nat eval_prim(const char* name, std::initializer_list<Nat> args) {
  Term t = prim(name);
  for (const auto& a : args) t = app(t, num(a));
  auto r = eval(t, Fuel{1000});
  REQUIRE(r.is_nat());
  return *r.nat();
}

}  // namespace

TEST_CASE("codes of numerals and constituents") {
  CHECK(encode(z()).value > 0);
  CHECK(encode(succ(z())).value > encode(z()).value);
  CHECK(same(numeral(0), z()));
  CHECK(to_string(numeral(2)) == "(S (S 0))");
  for (unsigned n = 0; n <= 10; ++n) {
    Term t = numeral(n);
    unsigned depth = 0;
    while (t->kind == TermKind::succ) {
      t = t->args[0];
      ++depth;
    }
    CHECK(depth == n);
    CHECK(same(t, z()));
  }
}

TEST_CASE("decoding") {
  CHECK(alpha_equal(decode_formula(encode(top())), top()));
  try {
    decode_term(Code{0});
    FAIL("0 decoded");
  } catch (const DecodeError& e) {
    CHECK(e.kind == DecodeError::Kind::not_a_code);
  }
  try {
    decode_term(encode(top()));
    FAIL("formula decoded as a term");
  } catch (const DecodeError& e) {
    CHECK(e.kind == DecodeError::Kind::category_mismatch);
  }
  CHECK(decode_var(encode(Var{4})) == Var{4});
  CHECK_FALSE(decode_var(encode(z())));
}

TEST_CASE("round trip and monotonicity on random formulas") {
  gen::Rng r(21);
  for (int i = 0; i < 200; ++i) {
    Formula f = gen::any_formula(r, 4, 2);
    Code c = encode(f);
    CHECK(category_of(c.value) == Category::formula);
    Formula back = decode_formula(c);
    CHECK(same(back, alpha_normalize(f)));
    for (const Code& p : parts(alpha_normalize(f))) CHECK(c.value > p.value);
  }
}

TEST_CASE("injectivity per category") {
  gen::Rng r(22);
  std::unordered_set<std::string> seen_f, seen_t;
  std::unordered_set<std::string> text_f, text_t;
  auto vs = gen::first_vars(3);
  for (int i = 0; i < 10000; ++i) {
    Formula f = alpha_normalize(gen::any_formula(r, 3, 2));
    Term t = gen::ha_term(r, 3, vs);
    bool new_f = text_f.insert(to_string(f)).second;
    bool new_t = text_t.insert(to_string(t)).second;
    CHECK(seen_f.insert(key(encode(f))).second == new_f);
    CHECK(seen_t.insert(key(encode(t))).second == new_t);
  }
}

TEST_CASE("sequences") {
  std::vector<Nat> xs{3, 0, 17, 5};
  Code c = encode_seq(xs);
  CHECK(category_of(c.value) == Category::sequence);
  CHECK(decode_seq(c) == xs);
  CHECK(c.value > xs.size());
  for (const auto& x : xs) CHECK(c.value > x);
  CHECK(codes::lh(c.value) == 4);
  CHECK(codes::nth(c.value, 2) == 17);
  CHECK(codes::nth(c.value, 9) == 0);
}

TEST_CASE("PR definitions have codes") {
  for (const auto& name : pr_library_names()) {
    PRRef d = pr_lookup(name);
    Code c = encode(*d);
    CHECK(category_of(c.value) == Category::prdef);
    CHECK(same_pr(*decode_prdef(c), *d));
  }
}

TEST_CASE("syntax functions on codes") {
  Formula f = parse_formula("(Ev1 ((S v1) = v0))");
  Nat F = encode(f).value;
  Nat x0 = encode(Var{0}).value, x1 = encode(Var{1}).value;
  CHECK(codes::is_formula(F));
  CHECK_FALSE(codes::is_term(F));
  CHECK(codes::is_var(x0));
  CHECK(codes::fv(F, x0));
  CHECK_FALSE(codes::fv(F, x1));
  CHECK(codes::bv(F, x1));
  CHECK(codes::is_sigma(F));
  CHECK(codes::numc(3) == encode(num(3)).value);

  Nat G = codes::sub(F, x0, codes::numc(2));
  CHECK(alpha_equal(decode_formula(Code{G}), parse_formula("(Ev1 ((S v1) = 2))")));

  CHECK(codes::nf(F, 0));
  CHECK(alpha_equal(decode_formula(Code{codes::mkimp(F, F)}), imp(f, f)));
}

TEST_CASE("primitives agree with the functions they mirror") {
  gen::Rng r(23);
  for (int i = 0; i < 40; ++i) {
    Formula f = gen::lambda_n(r, 1, 2);
    Nat F = encode(f).value;
    Nat x = encode(Var{gen::pick(r, 3)}).value;
    Nat s = codes::numc(gen::pick(r, 5));
    CHECK(eval_prim("sub", {F, x, s}) == codes::sub(F, x, s));
    CHECK(eval_prim("fv", {F, x}) == (codes::fv(F, x) ? 0 : 1));
    CHECK(eval_prim("issigma", {F}) == (codes::is_sigma(F) ? 0 : 1));
    CHECK(eval_prim("nf0", {F}) == (codes::nf(F, 0) ? 0 : 1));
    CHECK(eval_prim("norm1", {F}) == codes::norm(F, 1));
  }
}
