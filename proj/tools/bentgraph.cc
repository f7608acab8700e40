// bentgraph: Boolean functions, their Walsh spectra and Cayley graphs.
//
// Exit codes: 0 success, 1 parse or usage error, 2 resource guard refused
// the request, 3 internal invariant violation.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bentgraph/cli/function_parser.h"
#include "bentgraph/cli/report.h"
#include "bentgraph/generators.h"
#include "bentgraph/transform.h"

namespace {

using namespace bentgraph;
using bentgraph::cli::Json;

constexpr int kExitUsage = 1;
constexpr int kExitGuard = 2;
constexpr int kExitInvariant = 3;

// Writes the whole payload to --out (through a temporary file and a rename)
// or to stdout.
void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  const std::filesystem::path target(out_path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw InvalidInput("cannot open " + tmp.string() + " for writing");
    file << payload;
    if (!file.flush()) throw InvalidInput("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, target);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// --limit name=value, repeatable.
ResourceLimits parse_limits(const std::vector<std::string>& entries) {
  ResourceLimits limits;
  const std::map<std::string, int*> fields = {
      {"walsh", &limits.max_walsh_arity},
      {"brute-force", &limits.max_brute_force_arity},
      {"vectorial-affine", &limits.max_vectorial_affine_bits},
      {"elimination", &limits.max_elimination_arity},
      {"srg", &limits.max_srg_arity},
  };
  for (const auto& entry : entries) {
    const auto eq = entry.find('=');
    const auto it = fields.find(entry.substr(0, eq));
    if (eq == std::string::npos || it == fields.end()) {
      throw InvalidInput("--limit expects NAME=VALUE with NAME one of walsh, brute-force, "
                         "vectorial-affine, elimination, srg; got '" + entry + "'");
    }
    try {
      *it->second = std::stoi(entry.substr(eq + 1));
    } catch (const std::exception&) {
      throw InvalidInput("--limit value in '" + entry + "' is not an integer");
    }
  }
  return limits;
}

std::optional<int> optional_arity(int n) { return n > 0 ? std::optional<int>(n) : std::nullopt; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bent functions, Walsh spectra and strongly regular Cayley graphs"};
  app.require_subcommand(1);
  app.footer(
      "Function specs: b:<2^n bits> | h:<hex digits, 4 entries each, MSB first> | "
      "a:n=<n>:<ANF over x1..xn>. Entry i of a table is f(x1..xn) with x1 the most "
      "significant bit of i.");

  std::string format = "json";
  std::string out_path;
  std::vector<std::string> limit_entries;
  int arity = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;

  auto common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", out_path, "Write output to FILE instead of stdout");
    sub->add_option("--limit", limit_entries, "Resource guard override NAME=VALUE");
  };

  std::string spec;
  auto* analyze = app.add_subcommand("analyze", "Spectrum, nonlinearity and srg check of one function");
  analyze->add_option("spec", spec, "Function spec")->required();
  analyze->add_option("--n", arity, "Expected arity");
  common(analyze, {"json", "csv"});

  auto* graph = app.add_subcommand("graph", "Cayley graph of a function as DOT");
  graph->add_option("spec", spec, "Function spec")->required();
  graph->add_option("--n", arity, "Expected arity");
  common(graph, {"dot"});

  auto* predict = app.add_subcommand("predict", "srg parameters of bent Cayley graphs for even n");
  predict->add_option("n,--n", arity, "Even arity")->required();
  common(predict, {"json"});

  std::vector<std::string> specs;
  auto* vectorial = app.add_subcommand("vectorial", "Symmetric-difference srg report of (f1..fm)");
  vectorial->add_option("specs", specs, "Component function specs f1 .. fm")->required();
  vectorial->add_option("--n", arity, "Expected arity");
  common(vectorial, {"json"});

  auto* enumerate = app.add_subcommand("enumerate", "All bent functions of arity 2 or 4");
  enumerate->add_option("n,--n", arity, "Arity (2 or 4)")->required();
  common(enumerate, {"json", "csv"});

  std::string kind;
  auto* generate = app.add_subcommand("generate", "Emit function specs from a generator");
  generate->add_option("kind", kind, "mm | nyberg | random")
      ->required()
      ->check(CLI::IsMember({"mm", "nyberg", "random"}));
  generate->add_option("--n", arity, "Arity")->required();
  generate->add_option("--seed", seed, "Generator seed")->each([&](const std::string&) { seed_given = true; });
  common(generate, {"json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const ResourceLimits limits = parse_limits(limit_entries);

    if (analyze->parsed()) {
      const auto f = cli::parse_function(spec, optional_arity(arity));
      emit(format == "csv" ? cli::spectrum_csv(f, limits) : dump(cli::analysis_report(spec, f, limits)),
           out_path);
    } else if (graph->parsed()) {
      const auto f = cli::parse_function(spec, optional_arity(arity));
      if (f.arity() > limits.max_elimination_arity + 4) {
        throw ResourceLimitExceeded("DOT export limited to n <= " +
                                    std::to_string(limits.max_elimination_arity + 4));
      }
      emit(cli::graph_dot(build_cayley(f)), out_path);
    } else if (predict->parsed()) {
      emit(dump(cli::predict_report(arity)), out_path);
    } else if (vectorial->parsed()) {
      std::vector<BooleanFunction> components;
      for (const auto& s : specs) components.push_back(cli::parse_function(s, optional_arity(arity)));
      const VectorialFunction F(std::move(components));
      emit(dump(cli::vectorial_report(specs, F, limits)), out_path);
    } else if (enumerate->parsed()) {
      const auto all = enumerate_bent(arity);
      emit(format == "csv" ? cli::enumerate_csv(all) : dump(cli::enumerate_report(arity, all)), out_path);
    } else if (generate->parsed()) {
      Json r;
      r["kind"] = kind;
      r["n"] = arity;
      if (kind == "nyberg") {
        const auto F = nyberg_vectorial_bent(arity);
        Json comps = Json::array();
        for (const auto& c : F.components()) comps.push_back("b:" + c.to_bit_string());
        r["components"] = std::move(comps);
      } else if (kind == "mm") {
        if (arity < 2 || arity % 2 != 0) throw InvalidInput("mm needs an even --n >= 2");
        const auto side = std::uint32_t{1} << (arity / 2);
        const auto pi = seed_given ? Permutation::random(side, seed) : Permutation::identity(side);
        const auto g = seed_given ? random_function(arity / 2, seed ^ 0x9e3779b97f4a7c15ULL)
                                  : BooleanFunction::zero(arity / 2);
        if (seed_given) r["seed"] = seed;
        r["function"] = "b:" + mm_bent(arity, pi, g).to_bit_string();
      } else {
        r["seed"] = seed;
        r["function"] = "b:" + random_function(arity, seed).to_bit_string();
      }
      emit(dump(r), out_path);
    }
  } catch (const ResourceLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InfeasibleParameters& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
