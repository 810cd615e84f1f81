#include "kakeya/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "kakeya/error.hpp"

namespace kakeya {

namespace {

struct BranchResult {
  std::int64_t best = 0;
  std::vector<std::vector<unsigned>> witnesses;
  std::uint64_t explored = 0;
  std::uint64_t pruned = 0;
  bool exhausted = true;
};

// Depth-first search over one top-level branch. Owns its multiplicity grid;
// nothing is shared with other branches.
class BranchSearcher {
 public:
  BranchSearcher(const FieldTable& field, const std::vector<unsigned>& pinned, const std::vector<unsigned>& free_slots,
                 std::int64_t bound, std::optional<std::uint64_t> budget, bool normalize_witnesses)
      : f_(field),
        q_(field.q()),
        free_(free_slots),
        grid_(static_cast<std::size_t>(q_) * q_, 0),
        cells_((free_slots.size() + pinned.size()) * q_),
        current_(q_ + 1, 0),
        budget_(budget),
        normalize_(normalize_witnesses) {
    result_.best = bound;
    for (std::size_t i = 0; i < pinned.size(); ++i) root_excess_ += place(pinned[i], 0, free_.size() + i);
  }

  BranchResult run(unsigned first_intercept) {
    if (free_.empty()) {
      leaf(root_excess_);
      return std::move(result_);
    }
    ++result_.explored;
    const std::int64_t e = root_excess_ + place(free_[0], first_intercept, 0);
    if (e > result_.best) {
      ++result_.pruned;
    } else {
      current_[free_[0]] = first_intercept;
      descend(1, e);
    }
    return std::move(result_);
  }

 private:
  // Adds line (slot, b) to the grid, remembering its cells at depth d.
  // Returns the increase in excess: a point moving from m to m+1 (m >= 1)
  // adds m-1.
  std::int64_t place(unsigned slot, unsigned b, std::size_t d) {
    std::uint32_t* cells = &cells_[d * q_];
    std::int64_t delta = 0;
    if (slot == q_) {
      for (unsigned y = 0; y < q_; ++y) cells[y] = b * q_ + y;
    } else {
      const auto& add = f_.add_table();
      const auto& mul = f_.mul_table();
      for (unsigned x = 0; x < q_; ++x) cells[x] = x * q_ + add[mul[slot * q_ + x] * q_ + b];
    }
    for (unsigned i = 0; i < q_; ++i) {
      const std::uint16_t m = grid_[cells[i]]++;
      if (m) delta += m - 1;
    }
    return delta;
  }

  void unplace(std::size_t d) {
    const std::uint32_t* cells = &cells_[d * q_];
    for (unsigned i = 0; i < q_; ++i) --grid_[cells[i]];
  }

  void descend(std::size_t d, std::int64_t excess) {
    if (d == free_.size()) {
      leaf(excess);
      unplace(d - 1);
      return;
    }
    const unsigned slot = free_[d];
    for (unsigned b = 0; b < q_; ++b) {
      if (budget_ && result_.explored >= *budget_) {
        result_.exhausted = false;
        break;
      }
      ++result_.explored;
      const std::int64_t e = excess + place(slot, b, d);
      if (e > result_.best) {
        ++result_.pruned;
        unplace(d);
        continue;
      }
      current_[slot] = b;
      descend(d + 1, e);
    }
    unplace(d - 1);
  }

  void leaf(std::int64_t excess) {
    if (excess > result_.best) return;
    if (excess < result_.best) {
      result_.best = excess;
      result_.witnesses.clear();
    }
    std::vector<unsigned> w = current_;
    if (normalize_) normalize_indices(f_, w);
    result_.witnesses.push_back(std::move(w));
  }

  const FieldTable& f_;
  unsigned q_;
  std::vector<unsigned> free_;
  std::vector<std::uint16_t> grid_;
  std::vector<std::uint32_t> cells_;
  std::vector<unsigned> current_;
  std::optional<std::uint64_t> budget_;
  bool normalize_;
  std::int64_t root_excess_ = 0;
  BranchResult result_;
};

}  // namespace

SearchOutcome min_excess_search(const SearchOptions& options) {
  if (!options.field) throw Error(ErrorKind::InvalidConfig, "search needs a field");
  if (options.worker_count < 1) throw Error(ErrorKind::InvalidConfig, "worker_count must be >= 1");
  if (options.initial_bound && *options.initial_bound < 0)
    throw Error(ErrorKind::InvalidConfig, "initial_bound must be >= 0");

  const auto start = std::chrono::steady_clock::now();
  const FieldTable& f = *options.field;
  const unsigned q = f.q();

  std::vector<unsigned> pinned;
  std::vector<unsigned> free_slots;
  if (options.use_translation_normalization) {
    pinned = {0, q};
    for (unsigned s = 1; s < q; ++s) free_slots.push_back(s);
  } else {
    for (unsigned s = 0; s <= q; ++s) free_slots.push_back(s);
  }

  const std::int64_t bound = options.initial_bound.value_or(incidence_report(b0_config(options.field)).excess);

  const unsigned branches = free_slots.empty() ? 1 : q;
  std::optional<std::uint64_t> branch_budget;
  if (options.node_budget) branch_budget = (*options.node_budget + branches - 1) / branches;

  std::vector<BranchResult> results(branches);
  std::atomic<unsigned> next{0};
  auto worker = [&] {
    for (unsigned b = next++; b < branches; b = next++) {
      BranchSearcher searcher(f, pinned, free_slots, bound, branch_budget, !options.use_translation_normalization);
      results[b] = searcher.run(b);
    }
  };
  const unsigned threads = std::min(options.worker_count, branches);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SearchOutcome out;
  out.q = q;
  for (const BranchResult& r : results) {
    out.nodes_explored += r.explored;
    out.nodes_pruned += r.pruned;
    out.exhausted = out.exhausted && r.exhausted;
    if (!r.witnesses.empty() && (!out.min_excess || r.best < *out.min_excess)) out.min_excess = r.best;
  }
  if (out.min_excess)
    for (BranchResult& r : results)
      if (!r.witnesses.empty() && r.best == *out.min_excess)
        for (auto& w : r.witnesses) out.witnesses.push_back(std::move(w));
  std::sort(out.witnesses.begin(), out.witnesses.end());
  out.witnesses.erase(std::unique(out.witnesses.begin(), out.witnesses.end()), out.witnesses.end());

  out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

ConjectureReport verify_conjectures(const Field& field, const SearchOutcome& outcome) {
  if (!outcome.exhausted) throw Error(ErrorKind::IncompleteSearch, "search hit its node budget");
  if (!outcome.min_excess)
    throw Error(ErrorKind::IncompleteSearch, "no configuration within the initial bound; minimum unknown");

  ConjectureReport report;
  const unsigned q = field->q();
  if (q % 2 == 0) {
    report.note = "conjectures are stated for odd q; reported trivially true";
    return report;
  }

  const std::int64_t target = (static_cast<std::int64_t>(q) - 1) / 2;
  if (*outcome.min_excess < target) {
    report.conjecture1_holds = false;
    report.counterexamples = outcome.witnesses;
  }
  for (const auto& w : outcome.witnesses) {
    std::vector<long long> raw(w.begin(), w.end());
    if (!conditional_check(LineConfig::from_indices(field, raw)).covering_slope) {
      report.conjecture2_holds = false;
      report.counterexamples.push_back(w);
    }
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  report.counterexamples.erase(std::unique(report.counterexamples.begin(), report.counterexamples.end()),
                               report.counterexamples.end());
  return report;
}

}  // namespace kakeya
