#pragma once
// End-to-end run for one theorem: re-check the derivation on the HAP side,
// extract a realizer, interpret the realizability statement into HAP and
// evaluate the realizer where the conclusion is decidable at desk scale.

#include "fixkit/combinatory.hpp"
#include "fixkit/kernel.hpp"

namespace fixkit {

class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage(std::move(stage)) {}
  std::string stage;
};

struct PipelineOptions {
  Semantics sem{};
  std::size_t print_limit = 4096;  // longer formulas are reported by size
};

struct PipelineReport {
  struct Section {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;
  };
  std::vector<Section> sections;  // embed, realize, interpret, evaluate, conclusion
  Formula statement;              // ∃x (x r φ)
  Formula interpreted;            // image of the extraction obligation under 𝓕
  Term realizer;                  // closed when the conclusion is

  const std::string* get(std::string_view section, std::string_view key) const;
};

// φ must be the conclusion of d (up to renaming of bound variables)
PipelineReport pipeline(const Formula& phi, const Derivation& d, const PipelineOptions& opt = {});
std::string to_string(const PipelineReport& r);

}  // namespace fixkit
