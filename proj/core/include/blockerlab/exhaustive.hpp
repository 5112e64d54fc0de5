#pragma once

// Ground-truth engines: brute-force and direction-pruned enumeration of all
// blockers, the minimum blocking-set size, and the comparison of the
// enumerated blockers with the parametric families.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "blockerlab/blocker_families.hpp"
#include "blockerlab/geometry.hpp"

namespace blockerlab {

inline constexpr std::uint64_t kDefaultMinBlockingBudget = 50'000'000;

struct MinBlockingResult {
  int n = 0;
  std::optional<int> size;          // empty: budget exhausted, nothing claimed
  std::uint64_t candidates = 0;     // edge sets tested
  std::optional<EdgeSet> example;   // a blocking set of the reported size

  bool computed() const { return size.has_value(); }
};

/// Smallest s such that some s-edge subset of CK(n) blocks every SHP, found by
/// testing all subsets of size 1, 2, ... in lexicographic order. Gives up with
/// an empty result once more than `budget` candidates would be needed.
MinBlockingResult min_blocking_size(int n, std::uint64_t budget = kDefaultMinBlockingBudget);

struct EnumerationOptions {
  int workers = 0;  // 0: hardware concurrency
  /// When set, progress is written there every `checkpoint_interval`
  /// candidates and an existing compatible file is resumed from.
  std::optional<std::filesystem::path> checkpoint;
  std::uint64_t checkpoint_interval = 100'000;
};

inline constexpr int kMaxBruteForceOrder = 9;
inline constexpr int kMaxPrunedOrder = 13;

/// Every m-edge subset of CK(n), n odd, that blocks all SHPs, in lexicographic
/// order of sorted edge lists. No structure is assumed. n in {3, 5, 7, 9}.
std::vector<EdgeSet> enumerate_blockers_bruteforce(int n, const EnumerationOptions& opts = {});

/// Same output, searching only sets with one edge in each direction of a
/// boundary-consecutive window 2c+1, 2c+3, ..., 2c+2m-1. Odd n <= 13.
std::vector<EdgeSet> enumerate_blockers_pruned(int n, const EnumerationOptions& opts = {});

enum class OracleMethod { kAuto, kBruteForce, kPruned };

std::string oracle_name(OracleMethod m);

struct CharacterizationReport {
  int n = 0;
  OracleMethod method = OracleMethod::kAuto;  // the oracle actually used
  std::uint64_t count_oracle = 0;
  std::uint64_t count_parametric = 0;  // distinct edge sets
  std::uint64_t agreement = 0;
  std::vector<EdgeSet> missing_from_parametric;
  std::vector<EdgeSet> extra_in_parametric;
  std::uint64_t class_a_descriptors = 0;
  std::uint64_t class_b_descriptors = 0;
  std::uint64_t class_a_sets = 0;
  std::uint64_t class_b_sets = 0;
  std::uint64_t descriptor_collisions = 0;  // descriptors sharing an edge set

  bool theorem_holds() const { return missing_from_parametric.empty() && extra_in_parametric.empty(); }
  bool consistent() const {
    return count_oracle == agreement + missing_from_parametric.size() &&
           count_parametric == agreement + extra_in_parametric.size();
  }
};

/// Compares the oracle's blockers with the images of enumerate_descriptors(n).
/// kAuto uses brute force for n <= 9 and the pruned search above.
CharacterizationReport check_characterization(int n, OracleMethod method = OracleMethod::kAuto,
                                              const EnumerationOptions& opts = {});

}  // namespace blockerlab
