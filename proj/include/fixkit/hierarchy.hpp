#pragma once
// The almost negative hierarchy Λ_n, its normal forms Λnf_n and the
// normalizer λ_n.

#include "fixkit/syntax.hpp"

#include <optional>

namespace fixkit {

class HierarchyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// minimal n with f ∈ Λ_n; nullopt iff f is not almost negative
std::optional<unsigned> classify(const Formula& f);
bool in_level(const Formula& f, unsigned n);
bool is_nf(const Formula& f, unsigned n);

// throws HierarchyError unless f ∈ Λ_n
Formula normalize(const Formula& f, unsigned n);

// ∃x (x = 0), the padding formula, and its lift into Λnf_n
Formula trivial_sigma();
Formula lift_nf(const Formula& nf, unsigned from, unsigned to);

// p_l / p_r projection i out of k of a right nested tuple held in y
Term tuple_proj(const Term& y, std::size_t i, std::size_t k);
Term tuple(std::span<const Term> ts);

}  // namespace fixkit
