#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "kakeya/besicovitch.hpp"

namespace kakeya {

struct SearchOptions {
  static constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

  Field field;
  /// Pin b_0 = b_inf = 0. Every translation orbit has exactly one such
  /// representative, so the search space drops from q^(q+1) to q^(q-1).
  bool use_translation_normalization = true;
  /// Prune partial configurations whose excess exceeds this. nullopt means
  /// the excess of B_0; kUnbounded disables the initial bound.
  std::optional<std::int64_t> initial_bound;
  unsigned worker_count = 1;
  /// Cap on explored nodes. Split evenly across the top-level branches so the
  /// outcome does not depend on scheduling.
  std::optional<std::uint64_t> node_budget;
};

struct SearchOutcome {
  unsigned q = 0;
  /// Smallest excess found; nullopt if no configuration met the bound.
  std::optional<std::int64_t> min_excess;
  /// Normalized minimizers, strictly ascending in lexicographic order.
  std::vector<std::vector<unsigned>> witnesses;
  std::uint64_t nodes_explored = 0;
  std::uint64_t nodes_pruned = 0;
  bool exhausted = true;
  double wall_ms = 0.0;

  std::optional<std::int64_t> min_cardinality() const {
    if (!min_excess) return std::nullopt;
    const std::int64_t qq = q;
    return qq * (qq + 1) / 2 + *min_excess;
  }
};

struct ConjectureReport {
  bool conjecture1_holds = true;
  bool conjecture2_holds = true;
  std::vector<std::vector<unsigned>> counterexamples;
  std::string note;
};

/// Branch-and-bound minimization of the excess over all configurations.
/// Partial excess only grows as lines are added, so a partial configuration
/// whose excess is strictly above the best bound is cut; ties are kept and
/// every minimizer is reported.
SearchOutcome min_excess_search(const SearchOptions& options);

/// Checks the size conjecture (min excess >= (q-1)/2) and the covering-line
/// conjecture (every minimizer has a covering slope). Throws IncompleteSearch
/// for a non-exhausted outcome or one without a minimum.
ConjectureReport verify_conjectures(const Field& field, const SearchOutcome& outcome);

}  // namespace kakeya
