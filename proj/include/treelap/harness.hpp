#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "treelap/canonical.hpp"
#include "treelap/tree.hpp"

namespace treelap {

inline constexpr const char* kArtifactVersion = "0.1.0";
inline constexpr int kVerifyDefaultMax = 12;
inline constexpr int kVerifyCap = 20;

struct CheckSet {
  bool conjecture = false;
  bool theorem5 = false;
  bool below2 = false;
  bool above2_diameter = false;
  bool theorem4 = false;
  bool theorem1 = false;
  bool energy = false;

  static CheckSet all();
  // Comma-separated names as above ("above2-diameter" with a hyphen),
  // or "all". Throws std::invalid_argument on unknown names.
  static CheckSet parse(const std::string& csv);
  std::string str() const;  // canonical comma-separated form
};

struct TreeRecord {
  std::string code;
  int n = 0;
  int diameter = 0;
  int leaf_count = 0;
  long gamma = 0;
  long m_below_avg = 0;
  long threshold = 0;
  bool conjecture_ok = true;
  long m_below_2 = 0;
  long m_above_2 = 0;
  bool equality = false;
  std::string le;                        // decimal string; empty if not computed
  std::vector<std::string> violations;   // names of failed checks
};

TreeRecord evaluate_tree(const Tree& t, const CheckSet& checks);

// One JSONL line, fixed key order, no trailing newline.
std::string record_to_json(const TreeRecord& r);

struct VerifyOptions {
  int n_min = 2;
  int n_max = kVerifyDefaultMax;
  CheckSet checks = CheckSet::all();
  int shards = 1;
  int shard_index = 0;
  std::string out_path;      // empty: records go to stdout
  std::uint64_t seed = 0;    // drives the spot-check sample
  int threads = 0;           // 0: hardware concurrency
  std::string cache_dir;     // empty: use TREESPEC_CACHE_DIR if set
};

struct RunManifest {
  int n_min = 0, n_max = 0;
  std::string checks;
  int shards = 1, shard_index = 0;
  std::uint64_t seed = 0;
  std::string version;
  long trees_checked = 0;
  long violations = 0;
  long equality_cases = 0;
  long gap_cases = 0;        // trees with an eigenvalue in (avg degree, 2)
  std::vector<std::string> violation_codes;
  long spot_checked = 0;
};

// FNV-1a, used to assign canonical codes to shards.
std::uint64_t code_hash(const std::string& code);

// Runs the sweep, writes records, prints a human summary to `log`.
// Throws std::runtime_error on I/O or internal-consistency failure.
RunManifest run_verify(const VerifyOptions& opts, std::ostream& log);

}  // namespace treelap
