#pragma once

// Command-line jobs: generate, verify, spectral, eval.
//
// Exit codes: 0 success, 1 an asserted relation failed (including poles and
// failing suites), 2 usage or configuration error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "laxforge/serialize.hpp"

namespace laxforge {

struct JobConfig {
  int m = 0;
  int n = 0;
  std::string rep = "vector";  // vector | trivial | path to a module file
  std::vector<std::string> suites;
  std::string kind = "untwisted";
  std::optional<std::string> s;  // rational
  std::optional<std::string> z;  // Laurent polynomial in s, or q^t
  int samples = 20;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  std::string format = "json";  // json | text
  std::optional<std::string> cache_dir;
  std::optional<std::string> sigma_path;  // verify against a stored sigma set
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int usage = 2;
}  // namespace exit_code

/// 64-bit FNV-1a, lowercase hex.
std::string fingerprint(const std::string& bytes);

/// Fingerprint of the canonical algebra and module documents.
std::string rep_fingerprint(const Representation& rep);

/// --cache-dir, else $LAXFORGE_CACHE, else <out>/.laxforge-cache.
std::string resolve_cache_dir(const JobConfig& cfg);

/// "vector", "trivial" or a module file checked against the defining relations.
RepresentationPtr load_representation(const JobConfig& cfg, const AlgebraPtr& alg);

/// z as a Laurent polynomial in s; also accepts "q", "q^t" and "-q^t".
LaurentPoly parse_z(const std::string& text);

/// Writes text to a temporary sibling and renames it into place.
void write_atomic(const std::string& path, const std::string& text);

// The commands throw laxforge::Error subclasses; run_command maps them to exit codes.
int cmd_generate(const JobConfig& cfg, std::ostream& out);
int cmd_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_spectral(const JobConfig& cfg, std::ostream& out);
int cmd_eval(const JobConfig& cfg, std::ostream& out);

int run_command(const std::string& command, const JobConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line (args[0] is the subcommand).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace laxforge
