// fixkit: command line front end to the library.
// Exit status: 0 success, 1 domain failure, 2 usage error.

#include "fixkit/combinatory.hpp"
#include "fixkit/extract.hpp"
#include "fixkit/goedel.hpp"
#include "fixkit/hierarchy.hpp"
#include "fixkit/kernel.hpp"
#include "fixkit/pipeline.hpp"
#include "fixkit/realizability.hpp"
#include "fixkit/satisfaction.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace fixkit;

namespace {

struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "-" reads standard input
std::string slurp(const std::string& arg) {
  if (arg != "-") return arg;
  return {std::istreambuf_iterator<char>(std::cin), {}};
}

std::string read_file(const std::string& path) {
  if (path == "-") return slurp(path);
  std::ifstream in(path);
  if (!in) throw DomainFailure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DomainFailure("cannot write " + path);
  out << text << '\n';
}

std::string show_eval(const EvalResult& r) {
  switch (r.status) {
    case EvalResult::Status::value: return to_string(r.value);
    case EvalResult::Status::stuck: throw DomainFailure("stuck: " + r.reason);
    case EvalResult::Status::fuel_exhausted: throw DomainFailure("fuel exhausted after " + std::to_string(r.steps) + " steps");
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixkit: partial terms, realizability and fixpoint interpretation"};
  app.require_subcommand(1);

  std::uint64_t fuel = 100000;
  std::uint32_t bound = 6;
  unsigned level = 0;
  app.add_option("--fuel", fuel, "evaluation step budget")->capture_default_str();
  app.add_option("--bound", bound, "quantifier range of the bounded semantics")->capture_default_str();

  std::string input, output;
  std::string var_name;
  bool raw = false, nf = false, obligations = false;
  std::string realizer_out, obligation_out, formula_text;

  auto text_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("input", input, "text, or - for stdin")->required();
    return c;
  };
  auto* parse_c = text_cmd("parse", "parse a formula or term and print it back");
  auto* classify_c = text_cmd("classify", "least n with the formula in Λ_n");
  auto* normalize_c = text_cmd("normalize", "the Λnf_n normal form");
  normalize_c->add_option("--level", level)->capture_default_str();
  auto* code_c = text_cmd("code", "Goedel code of a formula or term");
  auto* decode_c = text_cmd("decode", "decode a Goedel code");
  auto* eval_c = text_cmd("eval", "evaluate a closed term");
  auto* pr_c = text_cmd("compile-pr", "compile a PR definition or library name to a combinatory term");
  auto* realize_c = text_cmd("realize", "the formula v r φ");
  realize_c->add_option("--var", var_name, "realizer variable, e.g. v5");
  auto* extract_c = text_cmd("extract", "extract a realizer from a derivation file");
  extract_c->add_option("--realizer-out", realizer_out);
  extract_c->add_option("--obligation-out", obligation_out);
  auto* sat_c = app.add_subcommand("sat", "the satisfaction formula of a level");
  sat_c->add_option("--level", level)->capture_default_str();
  sat_c->add_flag("--raw", raw, "print Sat″ before normalization");
  sat_c->add_flag("--nf", nf, "print Sat′, the normal form");
  sat_c->add_flag("--obligations", obligations, "print the compositionality statements");
  auto* diag_c = text_cmd("diag", "diagonalize a formula in its last free variable");
  diag_c->add_option("--level", level)->capture_default_str();
  auto* interp_c = text_cmd("interpret", "replace fixpoint atoms by their HAP interpretation");
  auto* check_c = text_cmd("check", "check a derivation file");
  auto* pipe_c = text_cmd("pipeline", "run the conservativity chain on a derivation file");
  pipe_c->add_option("--formula", formula_text, "expected conclusion; defaults to the last line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Semantics sem;
  sem.bound = bound;
  sem.fuel = Fuel{fuel};
  auto& out = std::cout;

  try {
    if (parse_c->parsed()) {
      std::string s = slurp(input);
      try {
        out << to_string(parse_formula(s)) << '\n';
      } catch (const SyntaxError&) {
        out << to_string(parse_term(s)) << '\n';
      }
    } else if (classify_c->parsed()) {
      auto n = classify(parse_formula(slurp(input)));
      if (!n) throw DomainFailure("not almost negative");
      out << *n << '\n';
    } else if (normalize_c->parsed()) {
      out << to_string(normalize(parse_formula(slurp(input)), level)) << '\n';
    } else if (code_c->parsed()) {
      std::string s = slurp(input);
      Code c;
      try {
        c = encode(parse_formula(s));
      } catch (const SyntaxError&) {
        c = encode(parse_term(s));
      }
      out << c.value << '\n';
    } else if (decode_c->parsed()) {
      std::string s = slurp(input);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
      Nat n;
      try {
        n = Nat(s);
      } catch (const std::exception&) {
        throw DomainFailure("not a number: " + s);
      }
      auto cat = category_of(n);
      if (!cat) throw DomainFailure("not a code");
      switch (*cat) {
        case Category::term: out << to_string(decode_term(Code{n})) << '\n'; break;
        case Category::formula: out << to_string(decode_formula(Code{n})) << '\n'; break;
        case Category::prdef: out << to_string(*decode_prdef(Code{n})) << '\n'; break;
        case Category::sequence: {
          auto xs = decode_seq(Code{n});
          out << '<';
          for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
          out << ">\n";
          break;
        }
      }
    } else if (eval_c->parsed()) {
      out << show_eval(eval(parse_term(slurp(input)), sem.fuel)) << '\n';
    } else if (pr_c->parsed()) {
      std::string s = slurp(input);
      PRRef d = pr_lookup(s);
      if (!d) d = parse_prdef(s);
      out << to_string(compile_pr(*d)) << '\n';
    } else if (realize_c->parsed()) {
      Formula f = parse_formula(slurp(input));
      Var x = fresh(free_vars(f));
      if (!var_name.empty()) {
        Term t = parse_term(var_name);
        if (t->kind != TermKind::var) throw DomainFailure("--var needs a variable");
        x = Var{t->index};
      }
      out << to_string(realize(var(x), f)) << '\n';
    } else if (extract_c->parsed()) {
      auto r = extract(parse_derivation(read_file(input)));
      std::string tau = to_string(r.realizer), ob = to_string(r.obligation);
      if (!realizer_out.empty()) write_file(realizer_out, tau);
      if (!obligation_out.empty()) write_file(obligation_out, ob);
      out << "package: " << to_string(var(r.package)) << '\n' << "realizer: " << tau << '\n' << "obligation: " << ob << '\n';
    } else if (sat_c->parsed()) {
      if (obligations) {
        for (const auto& o : sat_obligations(level)) out << "# " << o.name << '\n' << to_string(o.statement) << '\n';
      } else {
        SatFamily s = build_sat(level);
        out << to_string(raw ? s.sat_raw : nf ? s.sat_nf : s.sat) << '\n';
      }
    } else if (diag_c->parsed()) {
      out << to_string(diagonalize(parse_formula(slurp(input)), level)) << '\n';
    } else if (interp_c->parsed()) {
      out << to_string(interpret_F(parse_formula(slurp(input)))) << '\n';
    } else if (check_c->parsed()) {
      Derivation d = parse_derivation(read_file(input));
      CheckResult r = check(d);
      if (!r.ok) throw DomainFailure("line " + std::to_string(r.line + 1) + ": " + r.reason);
      out << "ok " << d.lines.size() << " lines under " << d.theory << '\n';
    } else if (pipe_c->parsed()) {
      Derivation d = parse_derivation(read_file(input));
      Formula phi = formula_text.empty() ? d.conclusion() : parse_formula(formula_text);
      PipelineOptions opt;
      opt.sem = sem;
      out << to_string(pipeline(phi, d, opt));
    }
  } catch (const std::exception& e) {
    std::cerr << "fixkit: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
