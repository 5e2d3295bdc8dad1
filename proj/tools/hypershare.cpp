#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "hypershare/commands.hpp"

int main(int argc, char** argv) {
  using namespace hypershare;

  CLI::App app{"Synthesize, simulate and verify zero-error coin-sharing protocols on hypergraphs"};
  app.require_subcommand(1);

  std::string input;
  std::string output;

  auto* check = app.add_subcommand("check", "Report connectivity and cluster properties of a hypergraph");
  check->add_option("input", input, "Hypergraph file or fixture name")->required();

  std::string scheme_name = "auto";
  auto* synth = app.add_subcommand("synthesize", "Emit a communication strategy");
  synth->add_option("input", input, "Hypergraph/cluster file or fixture name")->required();
  synth->add_option("-s,--scheme", scheme_name, "auto|tree|topological|forehead|cluster")
      ->check(CLI::IsMember({"auto", "tree", "topological", "forehead", "cluster"}));
  synth->add_option("-o,--output", output, "Write the strategy here instead of standard output");

  std::string mode_name = "exhaustive";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  bool json = false;
  auto* sim = app.add_subcommand("simulate", "Verify zero-error decoding of a strategy");
  sim->add_option("strategy", input, "Strategy file, hypergraph file or fixture name")->required();
  sim->add_option("-m,--mode", mode_name, "exhaustive|sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  sim->add_option("--samples", samples, "Assignments drawn in sampled mode");
  sim->add_option("--seed", seed, "Generator seed in sampled mode");
  sim->add_flag("--json", json, "Emit the report as JSON");

  auto* ent = app.add_subcommand("entropy", "Exact entropies and lower-bound checks by enumeration");
  ent->add_option("strategy", input, "Strategy file, hypergraph file or fixture name")->required();

  std::string dir;
  auto* fix = app.add_subcommand("fixtures", "Write the canonical example inputs");
  fix->add_option("name", input, "Fixture name, or 'all' together with --dir")->required();
  fix->add_option("-o,--output", output, "Write to this file instead of standard output");
  fix->add_option("-d,--dir", dir, "Write <name>.txt files into this directory");

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) return cli::cmd_check(input, std::cout, std::cerr);
  if (synth->parsed()) {
    static const std::map<std::string, cli::SchemeChoice> schemes{{"auto", cli::SchemeChoice::Auto},
                                                                 {"tree", cli::SchemeChoice::Tree},
                                                                 {"topological", cli::SchemeChoice::Topological},
                                                                 {"forehead", cli::SchemeChoice::Forehead},
                                                                 {"cluster", cli::SchemeChoice::Cluster}};
    return cli::cmd_synthesize(input, schemes.at(scheme_name), output, std::cout, std::cerr);
  }
  if (sim->parsed()) {
    const auto mode = mode_name == "sampled" ? VerificationMode::sampled(samples, seed) : VerificationMode::exhaustive();
    return cli::cmd_simulate(input, mode, json, std::cout, std::cerr);
  }
  if (ent->parsed()) return cli::cmd_entropy(input, std::cout, std::cerr);
  if (fix->parsed()) return cli::cmd_fixtures(input, output, dir, std::cout, std::cerr);
  return 1;
}
