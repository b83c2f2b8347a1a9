// Job descriptions and command implementations behind the expander-forge
// executable. Commands write to caller-supplied streams so they can be
// driven from tests.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "expander_forge/spectrum.hpp"

namespace ef::cli {

enum class Command { Build, Spectrum, Match, Certify, Table };

struct JobSpec {
  Command command = Command::Build;
  std::int64_t p = 0;
  /// One entry for every command except table.
  std::vector<std::int64_t> qs;
  std::optional<Perturbation> perturb;
  /// Matching seeds. build/spectrum/match/certify use the first one.
  std::vector<std::uint64_t> seeds;
  /// table only: when set, sample this many distinct matchings starting at
  /// seeds.front() instead of using the seed list verbatim.
  std::optional<std::size_t> count;
  /// Primary output file; empty means the output stream.
  std::string output;
  /// table only: optional CSV companion file.
  std::string csv;
};

/// Bad user input; maps to exit code 1.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A checked mathematical property failed; maps to exit code 2.
class ConsistencyFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitInternal = 2;

/// Throws InvalidInput. Perturbations are restricted to bipartite pairs,
/// i.e. p a non-square mod q.
void validate(const JobSpec& spec);

void cmd_build(const JobSpec& spec, std::ostream& out);
void cmd_spectrum(const JobSpec& spec, std::ostream& out);
void cmd_match(const JobSpec& spec, std::ostream& out);
void cmd_certify(const JobSpec& spec, std::ostream& out);
void cmd_table(const JobSpec& spec, std::ostream& out);

/// Validates, dispatches, and converts exceptions to exit codes, printing
/// the message to err.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

Perturbation parse_perturbation(const std::string& text);
std::string to_string(Perturbation p);

}  // namespace ef::cli
