// expander-forge: build X^{p,q}, perturb it by a 1-factor, and report spectra.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "expander_forge/cli.hpp"

namespace {

struct Options {
  std::int64_t p = 0;
  std::vector<std::int64_t> qs;
  std::string perturb;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> seeds;
  std::size_t count = 0;
  std::string output;
  std::string csv;
};

void add_pq(CLI::App* cmd, Options& o, bool many_q) {
  cmd->add_option("-p", o.p, "odd prime p (degree p+1)")->required();
  if (many_q)
    cmd->add_option("-q", o.qs, "comma-separated odd primes q")->required()->delimiter(',');
  else
    cmd->add_option("-q", o.qs, "odd prime q")->required()->expected(1);
}

void add_perturb(CLI::App* cmd, Options& o, bool required = false) {
  auto* opt = cmd->add_option("--perturb", o.perturb, "add (plus) or remove (minus) a perfect matching")
                  ->check(CLI::IsMember({"plus", "minus"}));
  if (required) opt->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramanujan graphs X^{p,q}, 1-factor perturbations, and spectral certificates"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "construct X^{p,q} and write its edge list");
  add_pq(build, o, false);
  build->add_option("-o,--output", o.output, "edge-list file (default: stdout after the report)");

  auto* spectrum = app.add_subcommand("spectrum", "write the grouped spectrum as CSV");
  add_pq(spectrum, o, false);
  add_perturb(spectrum, o);
  spectrum->add_option("--seed", o.seed, "matching seed");
  spectrum->add_option("-o,--output", o.output, "CSV file (default: stdout)");

  auto* match = app.add_subcommand("match", "write the perfect matching used for a perturbation");
  add_pq(match, o, false);
  add_perturb(match, o, true);
  match->add_option("--seed", o.seed, "matching seed");
  match->add_option("-o,--output", o.output, "output file (default: stdout)");

  auto* table = app.add_subcommand("table", "print eigenvalue tables for several q");
  add_pq(table, o, true);
  add_perturb(table, o);
  auto* seeds_opt = table->add_option("--seeds", o.seeds, "comma-separated matching seeds (default 0,1,2,3)")->delimiter(',');
  table->add_option("--count", o.count, "sample this many distinct matchings instead of --seeds")
      ->excludes(seeds_opt);
  table->add_option("--seed", o.seed, "base seed for --count");
  table->add_option("--csv", o.csv, "also write the table as CSV");

  auto* certify = app.add_subcommand("certify", "report spectral gap and Ramanujan certificate as JSON");
  add_pq(certify, o, false);
  add_perturb(certify, o);
  certify->add_option("--seed", o.seed, "matching seed");
  certify->add_option("-o,--output", o.output, "JSON file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ef::cli::kExitInvalidInput;
  }

  ef::cli::JobSpec spec;
  spec.p = o.p;
  spec.qs = o.qs;
  spec.output = o.output;
  spec.csv = o.csv;
  if (!o.perturb.empty()) spec.perturb = ef::cli::parse_perturbation(o.perturb);

  if (*build) {
    spec.command = ef::cli::Command::Build;
  } else if (*spectrum) {
    spec.command = ef::cli::Command::Spectrum;
  } else if (*match) {
    spec.command = ef::cli::Command::Match;
  } else if (*certify) {
    spec.command = ef::cli::Command::Certify;
  } else {
    spec.command = ef::cli::Command::Table;
  }

  if (spec.command == ef::cli::Command::Table) {
    if (o.count > 0) {
      spec.count = o.count;
      spec.seeds = {o.seed};
    } else {
      spec.seeds = o.seeds;
    }
  } else {
    spec.seeds = {o.seed};
  }
  return ef::cli::run(spec, std::cout, std::cerr);
}
