#include "fixkit/goedel.hpp"

namespace fixkit {

const char* category_name(Category c) {
  switch (c) {
    case Category::term: return "term";
    case Category::formula: return "formula";
    case Category::sequence: return "sequence";
    case Category::prdef: return "prdef";
  }
  return "?";
}

namespace {

using Bits = std::vector<std::uint8_t>;

Bits bits_of(const Nat& n) {
  Bits out;
  if (n == 0) return out;
  boost::multiprecision::export_bits(n, std::back_inserter(out), 1);
  return out;
}

Nat nat_of(const Bits& b) {
  Nat n;
  if (b.empty()) return n;
  boost::multiprecision::import_bits(n, b.begin(), b.end(), 1);
  return n;
}

class Writer {
 public:
  Writer(Category c, unsigned tag) {
    bits_.push_back(1);
    fixed(static_cast<unsigned>(c), 3);
    fixed(tag, 4);
  }

  void fixed(unsigned v, unsigned width) {
    for (unsigned i = width; i-- > 0;) bits_.push_back((v >> i) & 1u);
  }

  void gamma(std::uint64_t n) {  // n >= 1
    unsigned len = 0;
    for (std::uint64_t m = n; m; m >>= 1) ++len;
    for (unsigned i = 1; i < len; ++i) bits_.push_back(0);
    for (unsigned i = len; i-- > 0;) bits_.push_back((n >> i) & 1u);
  }

  void nat(const Nat& n) { embed(bits_of(n)); }
  void nat(std::uint64_t n) { nat(Nat(n)); }
  void embed(const Bits& b) {
    gamma(b.size() + 1);
    bits_.insert(bits_.end(), b.begin(), b.end());
  }
  void text(const std::string& s) {
    nat(s.size());
    for (unsigned char c : s) fixed(c, 8);
  }

  Bits take() { return std::move(bits_); }

 private:
  Bits bits_;
};

Bits term_bits(const Term& t);
Bits formula_bits(const Formula& f);
Bits prdef_bits(const PRDef& d);

Bits prdef_bits(const PRDef& d) {
  Writer w(Category::prdef, static_cast<unsigned>(d.kind));
  switch (d.kind) {
    case PRDef::Kind::zero: w.nat(d.arity); break;
    case PRDef::Kind::succ: break;
    case PRDef::Kind::proj:
      w.nat(d.arity);
      w.nat(d.index);
      break;
    case PRDef::Kind::comp:
      w.nat(d.parts.size());
      for (const auto& p : d.parts) w.embed(prdef_bits(*p));
      break;
    case PRDef::Kind::rec:
      w.embed(prdef_bits(*d.parts[0]));
      w.embed(prdef_bits(*d.parts[1]));
      break;
  }
  return w.take();
}

Bits term_bits(const Term& t) {
  Writer w(Category::term, static_cast<unsigned>(t->kind));
  switch (t->kind) {
    case TermKind::var: w.nat(t->index); break;
    case TermKind::constant: w.nat(static_cast<unsigned>(t->sym)); break;
    case TermKind::numeral: w.nat(t->value); break;
    case TermKind::prim: w.text(t->name); break;
    case TermKind::succ:
    case TermKind::add:
    case TermKind::mul:
    case TermKind::app:
      for (const auto& a : t->args) w.embed(term_bits(a));
      break;
    case TermKind::pr:
      w.embed(prdef_bits(*t->def));
      w.nat(t->args.size());
      for (const auto& a : t->args) w.embed(term_bits(a));
      break;
  }
  return w.take();
}

Bits formula_bits(const Formula& f) {
  Writer w(Category::formula, static_cast<unsigned>(f->kind));
  switch (f->kind) {
    case FKind::bot: break;
    case FKind::eq:
      w.embed(term_bits(f->lhs));
      w.embed(term_bits(f->rhs));
      break;
    case FKind::rel:
      w.nat(static_cast<unsigned>(f->rel.kind));
      w.nat(f->rel.arity);
      if (f->rel.kind == RelSym::Kind::defined) w.text(f->rel.tag);
      if (f->rel.kind == RelSym::Kind::fix) w.embed(formula_bits(f->rel.body));
      for (const auto& a : f->args) w.embed(term_bits(a));
      break;
    case FKind::conj:
    case FKind::disj:
    case FKind::imp:
      w.embed(formula_bits(f->a));
      w.embed(formula_bits(f->b));
      break;
    case FKind::all:
    case FKind::ex:
      w.embed(term_bits(var(f->bound)));
      w.embed(formula_bits(f->a));
      break;
  }
  return w.take();
}

// ------------------------------------------------------------------ reader

struct Bad {};

class Reader {
 public:
  Reader(const Bits& b, std::size_t from, std::size_t to) : b_(b), pos_(from), end_(to) {}

  bool bit() {
    if (pos_ >= end_) throw Bad{};
    return b_[pos_++] != 0;
  }
  unsigned fixed(unsigned width) {
    unsigned v = 0;
    for (unsigned i = 0; i < width; ++i) v = (v << 1) | (bit() ? 1u : 0u);
    return v;
  }
  std::uint64_t gamma() {
    unsigned zeros = 0;
    while (!bit()) {
      if (++zeros > 62) throw Bad{};
    }
    std::uint64_t n = 1;
    for (unsigned i = 0; i < zeros; ++i) n = (n << 1) | (bit() ? 1u : 0u);
    return n;
  }
  // returns [from, to) of an embedded bit string
  std::pair<std::size_t, std::size_t> span() {
    std::uint64_t len = gamma() - 1;
    if (len > end_ - pos_) throw Bad{};
    std::size_t from = pos_;
    pos_ += len;
    return {from, pos_};
  }
  Nat nat() {
    auto [from, to] = span();
    if (from != to && b_[from] == 0) throw Bad{};  // no leading zeros
    Bits sub(b_.begin() + static_cast<std::ptrdiff_t>(from), b_.begin() + static_cast<std::ptrdiff_t>(to));
    return nat_of(sub);
  }
  std::uint64_t small(std::uint64_t limit) {
    Nat n = nat();
    if (n > limit) throw Bad{};
    return static_cast<std::uint64_t>(n);
  }
  std::string text() {
    auto len = small(1u << 20);
    std::string s;
    for (std::uint64_t i = 0; i < len; ++i) s.push_back(static_cast<char>(fixed(8)));
    return s;
  }
  void done() const {
    if (pos_ != end_) throw Bad{};
  }
  const Bits& bits() const { return b_; }

 private:
  const Bits& b_;
  std::size_t pos_, end_;
};

struct Header {
  Category cat;
  unsigned tag;
};

Header header(Reader& r) {
  if (!r.bit()) throw Bad{};
  unsigned c = r.fixed(3);
  if (c < 1 || c > 4) throw Bad{};
  return {static_cast<Category>(c), r.fixed(4)};
}

Term read_term(const Bits& b, std::size_t from, std::size_t to);
Formula read_formula(const Bits& b, std::size_t from, std::size_t to);
PRRef read_prdef(const Bits& b, std::size_t from, std::size_t to);

Term child_term(Reader& r) {
  auto [f, t] = r.span();
  return read_term(r.bits(), f, t);
}
Formula child_formula(Reader& r) {
  auto [f, t] = r.span();
  return read_formula(r.bits(), f, t);
}
PRRef child_prdef(Reader& r) {
  auto [f, t] = r.span();
  return read_prdef(r.bits(), f, t);
}

PRRef with_library_name(PRRef d) {
  for (const auto& n : pr_library_names()) {
    auto lib = pr_lookup(n);
    if (same_pr(*lib, *d)) return lib;
  }
  return d;
}

PRRef read_prdef(const Bits& b, std::size_t from, std::size_t to) {
  Reader r(b, from, to);
  Header h = header(r);
  if (h.cat != Category::prdef) throw Bad{};
  PRRef out;
  try {
    switch (static_cast<PRDef::Kind>(h.tag)) {
      case PRDef::Kind::zero: out = pr_zero(static_cast<unsigned>(r.small(1u << 16))); break;
      case PRDef::Kind::succ: out = pr_succ(); break;
      case PRDef::Kind::proj: {
        auto k = static_cast<unsigned>(r.small(1u << 16));
        out = pr_proj(k, static_cast<unsigned>(r.small(1u << 16)));
        break;
      }
      case PRDef::Kind::comp: {
        auto n = r.small(1u << 16);
        if (n < 2) throw Bad{};
        PRRef f = child_prdef(r);
        std::vector<PRRef> hs;
        for (std::uint64_t i = 1; i < n; ++i) hs.push_back(child_prdef(r));
        out = pr_comp(f, std::move(hs));
        break;
      }
      case PRDef::Kind::rec: {
        PRRef g = child_prdef(r);
        out = pr_rec(g, child_prdef(r));
        break;
      }
      default: throw Bad{};
    }
  } catch (const SyntaxError&) {
    throw Bad{};
  }
  r.done();
  return with_library_name(out);
}

Term read_term(const Bits& b, std::size_t from, std::size_t to) {
  Reader r(b, from, to);
  Header h = header(r);
  if (h.cat != Category::term || h.tag > static_cast<unsigned>(TermKind::pr)) throw Bad{};
  Term out;
  switch (static_cast<TermKind>(h.tag)) {
    case TermKind::var: out = var(static_cast<std::uint32_t>(r.small(0xffffffffu))); break;
    case TermKind::constant: out = constant(static_cast<Sym>(r.small(static_cast<unsigned>(Sym::d)))); break;
    case TermKind::numeral: {
      Nat n = r.nat();
      if (n == 0) throw Bad{};
      out = num(n);
      break;
    }
    case TermKind::prim: {
      std::string s = r.text();
      if (s.empty()) throw Bad{};
      out = prim(s);
      break;
    }
    case TermKind::succ: out = succ(child_term(r)); break;
    case TermKind::add: {
      Term a = child_term(r);
      out = add(a, child_term(r));
      break;
    }
    case TermKind::mul: {
      Term a = child_term(r);
      out = mul(a, child_term(r));
      break;
    }
    case TermKind::app: {
      Term a = child_term(r);
      out = app(a, child_term(r));
      break;
    }
    case TermKind::pr: {
      PRRef d = child_prdef(r);
      auto n = r.small(1u << 16);
      if (n != d->arity) throw Bad{};
      std::vector<Term> args;
      for (std::uint64_t i = 0; i < n; ++i) args.push_back(child_term(r));
      out = pr_app(d, std::move(args));
      break;
    }
  }
  r.done();
  return out;
}

Formula read_formula(const Bits& b, std::size_t from, std::size_t to) {
  Reader r(b, from, to);
  Header h = header(r);
  if (h.cat != Category::formula || h.tag > static_cast<unsigned>(FKind::ex)) throw Bad{};
  Formula out;
  switch (static_cast<FKind>(h.tag)) {
    case FKind::bot: out = bot(); break;
    case FKind::eq: {
      Term a = child_term(r);
      out = eq(a, child_term(r));
      break;
    }
    case FKind::rel: {
      auto kind = r.small(2);
      auto arity = static_cast<unsigned>(r.small(1u << 16));
      RelSym R;
      try {
        switch (static_cast<RelSym::Kind>(kind)) {
          case RelSym::Kind::param: R = RelSym::param(arity); break;
          case RelSym::Kind::defined: R = RelSym::defined(r.text(), arity); break;
          case RelSym::Kind::fix: {
            Formula body = child_formula(r);
            R = RelSym::fix(body, arity);
            if (!same(R.body, body)) throw Bad{};
            break;
          }
        }
      } catch (const SyntaxError&) {
        throw Bad{};
      }
      std::vector<Term> args;
      for (unsigned i = 0; i < arity; ++i) args.push_back(child_term(r));
      out = rel(R, std::move(args));
      break;
    }
    case FKind::conj:
    case FKind::disj:
    case FKind::imp: {
      Formula a = child_formula(r);
      Formula c = child_formula(r);
      out = h.tag == static_cast<unsigned>(FKind::conj)   ? conj(a, c)
            : h.tag == static_cast<unsigned>(FKind::disj) ? disj(a, c)
                                                          : imp(a, c);
      break;
    }
    case FKind::all:
    case FKind::ex: {
      Term x = child_term(r);
      if (x->kind != TermKind::var) throw Bad{};
      Formula body = child_formula(r);
      out = h.tag == static_cast<unsigned>(FKind::all) ? all(Var{x->index}, body) : ex(Var{x->index}, body);
      break;
    }
  }
  r.done();
  return out;
}

std::vector<Nat> read_seq(const Bits& b) {
  Reader r(b, 0, b.size());
  Header h = header(r);
  if (h.cat != Category::sequence || h.tag != 0) throw Bad{};
  std::uint64_t n = r.gamma() - 1;
  std::vector<Nat> out;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(r.nat());
  r.done();
  return out;
}

void check_any(const Bits& b) {
  Reader r(b, 0, b.size());
  Header h = header(r);
  switch (h.cat) {
    case Category::term: read_term(b, 0, b.size()); return;
    case Category::formula: read_formula(b, 0, b.size()); return;
    case Category::sequence: read_seq(b); return;
    case Category::prdef: read_prdef(b, 0, b.size()); return;
  }
}

[[noreturn]] void fail(const Nat& n, Category want) {
  Bits b = bits_of(n);
  std::optional<Category> got;
  try {
    check_any(b);
    Reader r(b, 0, b.size());
    got = header(r).cat;
  } catch (const Bad&) {
  }
  if (got && *got != want)
    throw DecodeError(DecodeError::Kind::category_mismatch, std::string("code of a ") + category_name(*got) +
                                                                ", expected a " + category_name(want));
  throw DecodeError(DecodeError::Kind::not_a_code, "not the code of a " + std::string(category_name(want)));
}

}  // namespace

Code encode(const Term& t) { return {nat_of(term_bits(t))}; }
Code encode(const Formula& f) { return {nat_of(formula_bits(alpha_normalize(f)))}; }
Code encode(Var x) { return encode(var(x)); }
Code encode(const PRDef& d) { return {nat_of(prdef_bits(d))}; }

Code encode_seq(std::span<const Nat> xs) {
  Writer w(Category::sequence, 0);
  w.gamma(xs.size() + 1);
  for (const auto& x : xs) w.nat(x);
  return {nat_of(w.take())};
}

std::optional<Category> category_of(const Nat& n) {
  if (n <= 0) return std::nullopt;
  Bits b = bits_of(n);
  try {
    check_any(b);
    Reader r(b, 0, b.size());
    return header(r).cat;
  } catch (const Bad&) {
    return std::nullopt;
  }
}

Term decode_term(const Code& c) {
  Bits b = bits_of(c.value);
  try {
    return read_term(b, 0, b.size());
  } catch (const Bad&) {
    fail(c.value, Category::term);
  }
}

Formula decode_formula(const Code& c) {
  Bits b = bits_of(c.value);
  try {
    return read_formula(b, 0, b.size());
  } catch (const Bad&) {
    fail(c.value, Category::formula);
  }
}

std::vector<Nat> decode_seq(const Code& c) {
  Bits b = bits_of(c.value);
  try {
    return read_seq(b);
  } catch (const Bad&) {
    fail(c.value, Category::sequence);
  }
}

PRRef decode_prdef(const Code& c) {
  Bits b = bits_of(c.value);
  try {
    return read_prdef(b, 0, b.size());
  } catch (const Bad&) {
    fail(c.value, Category::prdef);
  }
}

std::optional<Var> decode_var(const Code& c) {
  Bits b = bits_of(c.value);
  try {
    Term t = read_term(b, 0, b.size());
    if (t->kind == TermKind::var) return Var{t->index};
  } catch (const Bad&) {
  }
  return std::nullopt;
}

}  // namespace fixkit
