#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "conlap/energy.hpp"
#include "conlap/facet_io.hpp"
#include "conlap/incidence.hpp"
#include "conlap/linalg.hpp"
#include "conlap/ring.hpp"
#include "conlap/ring_parser.hpp"
#include "conlap_cli/gen.hpp"
#include "conlap_cli/report.hpp"
#include "conlap_cli/verify.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

int run_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& output) {
  const auto c = conlap::cli::generate_family(family, params);
  const std::string text = conlap::format_facets(c);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    conlap::write_facet_file(output, c);
  }
  return kPass;
}

int run_report(const std::string& input, bool json, const std::string& matrix, std::size_t max_n) {
  const auto c = conlap::read_facet_file(input);
  const auto r = conlap::cli::build_report(c, max_n);
  if (json) {
    std::cout << conlap::cli::report_to_json(r).dump(2) << "\n";
  } else {
    std::cout << conlap::cli::format_report(r);
  }
  if (matrix == "L") {
    std::cout << conlap::connection_matrix(c).to_text();
  } else if (matrix == "g") {
    std::cout << (c.empty() ? conlap::IntMatrix(0, 0) : conlap::green_matrix(c).matrix()).to_text();
  }
  return r.consistent() ? kPass : kFail;
}

int run_verify(const std::string& suite, const std::string& pool_spec, std::uint64_t seed,
               std::size_t max_n) {
  const auto pool = conlap::cli::make_pool(pool_spec, seed);
  conlap::cli::VerifyOptions opt;
  opt.seed = seed;
  opt.max_n = max_n;
  const auto log = conlap::cli::run_suite(suite, pool, opt);
  std::size_t failed = 0;
  for (const auto& r : log) {
    std::cout << conlap::cli::format_record(r) << "\n";
    if (!r.passed) ++failed;
  }
  std::cout << (failed == 0 ? "PASS" : "FAIL") << " " << suite << ": " << log.size() - failed << "/"
            << log.size() << " checks passed\n";
  return failed == 0 ? kPass : kFail;
}

int run_ring(const std::string& program) {
  const auto e = conlap::evaluate_ring_program(program, std::filesystem::current_path());
  std::cout << "expression  " << e.to_string() << "\n";
  std::cout << "energy      " << conlap::ring_energy(e) << "\n";
  try {
    std::cout << "by inverse  " << conlap::ring_energy_by_inversion(e) << "\n";
  } catch (const conlap::GuardExceeded& ex) {
    std::cout << "by inverse  skipped (" << ex.what() << ")\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connection Laplacians of finite simplicial complexes"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Write the facets of a named family");
  std::string family;
  std::vector<std::string> params;
  std::string output;
  gen->add_option("family", family, "simplex, cycle, complete, diamond, wheel, octahedron, path, random, matroid-of")
      ->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  auto* report = app.add_subcommand("report", "Invariants of a facet file");
  std::string input;
  bool json = false;
  std::string matrix;
  std::size_t max_n = conlap::cli::kDefaultMaxSimplices;
  report->add_option("input", input, "Facet file")->required();
  report->add_flag("--json", json, "Structured output");
  report->add_option("--matrix", matrix, "Also print L or g")->check(CLI::IsMember({"L", "g"}));
  report->add_option("--max-n", max_n, "Refuse complexes with more simplices");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::string pool = "small";
  std::uint64_t seed = 7;
  std::size_t verify_max_n = 300;
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(conlap::cli::suite_names()));
  verify->add_option("--pool", pool, "small, named or file:<path>");
  verify->add_option("--seed", seed, "Seed for the random pool");
  verify->add_option("--max-n", verify_max_n, "Skip complexes with more simplices");

  auto* ring = app.add_subcommand("ring", "Evaluate a ring expression");
  std::string program;
  ring->add_option("expression", program, "e.g. \"X = cycle(4); X * X + 1\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*gen) return run_gen(family, params, output);
    if (*report) return run_report(input, json, matrix, max_n);
    if (*verify) return run_verify(suite, pool, seed, verify_max_n);
    if (*ring) return run_ring(program);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
