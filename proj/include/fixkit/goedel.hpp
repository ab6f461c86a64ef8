#pragma once
// Goedel codes. A code is the number whose binary expansion is
//   1 ccc tttt payload
// with a 3-bit category, a 4-bit constructor tag, and children embedded as
// (Elias gamma bit length, bits). Every embedded child is strictly shorter
// than its parent, so codes grow strictly with constituents.

#include "fixkit/syntax.hpp"

namespace fixkit {

struct Code {
  Nat value;
  friend auto operator<=>(const Code&, const Code&) = default;
};

enum class Category : std::uint8_t { term = 1, formula = 2, sequence = 3, prdef = 4 };
const char* category_name(Category c);

class DecodeError : public std::runtime_error {
 public:
  enum class Kind : std::uint8_t { not_a_code, category_mismatch };
  DecodeError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
  Kind kind;
};

Code encode(const Term& t);
Code encode(const Formula& f);  // alpha-normalizes first
Code encode(Var x);             // same as encode(var(x))
Code encode(const PRDef& d);
Code encode_seq(std::span<const Nat> xs);

// category of a well-formed code, nullopt otherwise
std::optional<Category> category_of(const Nat& n);

Term decode_term(const Code& c);
Formula decode_formula(const Code& c);
std::vector<Nat> decode_seq(const Code& c);
PRRef decode_prdef(const Code& c);
std::optional<Var> decode_var(const Code& c);  // nullopt if c is not a variable code

}  // namespace fixkit
