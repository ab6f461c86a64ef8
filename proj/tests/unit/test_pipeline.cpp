#include "fixkit/pipeline.hpp"
#include "support/corpus.hpp"

#include <doctest.h>

using namespace fixkit;

namespace {

Derivation load(const std::string& name) {
  return read_derivation(std::string(FIXKIT_CORPUS_DIR) + "/" + name + ".lpt");
}

std::string get(const PipelineReport& r, const char* section, const char* key) {
  const std::string* v = r.get(section, key);
  return v ? *v : "<missing>";
}

}  // namespace

TEST_CASE("one plus one") {
  Derivation d = load("one_plus_one");
  Formula phi = parse_formula("(((S 0) + (S 0)) = (S (S 0)))");
  PipelineReport r = pipeline(phi, d);
  std::vector<std::string> order;
  for (const auto& s : r.sections) order.push_back(s.name);
  CHECK(order == std::vector<std::string>{"embed", "realize", "interpret", "evaluate", "conclusion"});
  CHECK(get(r, "embed", "verdict") == "ok");
  CHECK(get(r, "interpret", "in_hap") == "yes");
  CHECK(get(r, "evaluate", "verdict") == "bounded-verified");
  CHECK(is_closed(r.realizer));
}

TEST_CASE("witness through a fixpoint detour") {
  Derivation d = load("fixpoint_detour");
  PipelineReport r = pipeline(d.conclusion(), d);
  CHECK(get(r, "embed", "source_theory") == "IID1");
  CHECK(get(r, "embed", "target_theory") == "IIDP1");
  CHECK(get(r, "evaluate", "witness") == "1");
  CHECK(get(r, "evaluate", "verdict") == "bounded-verified");
}

TEST_CASE("failures carry their stage") {
  Derivation d = load("one_plus_one");
  Derivation bad = d;
  bad.lines[0].formula = corpus::mutate(bad.lines[0].formula);
  try {
    pipeline(d.conclusion(), bad);
    FAIL("accepted a broken derivation");
  } catch (const PipelineError& e) {
    CHECK(e.stage == "embed");
  }
  CHECK_THROWS_AS(pipeline(parse_formula("(0 = 0)"), d), PipelineError);
  CHECK_THROWS_AS(pipeline(load("from_hypotheses").conclusion(), load("from_hypotheses")), PipelineError);
}

TEST_CASE("reports are deterministic") {
  Derivation d = load("exists_one");
  CHECK(to_string(pipeline(d.conclusion(), d)) == to_string(pipeline(d.conclusion(), d)));
}

TEST_CASE("every closed corpus theorem runs through") {
  for (const auto& [name, d] : corpus::load()) {
    if (!d.hypotheses.empty()) continue;
    CAPTURE(name);
    PipelineReport r = pipeline(d.conclusion(), d);
    std::string v = get(r, "evaluate", "verdict");
    CHECK(v != "bounded-refuted");
    CHECK(v != "<missing>");
  }
}
