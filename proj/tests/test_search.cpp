#include <doctest.h>

#include "kakeya/error.hpp"
#include "kakeya/report.hpp"
#include "kakeya/search.hpp"
#include "oracles.hpp"

using namespace kakeya;

namespace {

SearchOutcome run(const Field& f, unsigned workers = 1, bool normalize = true,
                  std::optional<std::int64_t> bound = std::nullopt) {
  SearchOptions opts;
  opts.field = f;
  opts.worker_count = workers;
  opts.use_translation_normalization = normalize;
  opts.initial_bound = bound;
  return min_excess_search(opts);
}

std::set<std::vector<unsigned>> as_set(const SearchOutcome& o) { return {o.witnesses.begin(), o.witnesses.end()}; }

}  // namespace

TEST_SUITE("search") {

TEST_CASE("minimum excess at small q") {
  const std::vector<std::tuple<unsigned, unsigned, std::int64_t>> cases = {
      {2, 1, 0}, {3, 1, 1}, {2, 2, 0}, {5, 1, 2}, {2, 3, 0}, {7, 1, 3}};
  for (auto [p, k, expected] : cases) {
    const auto f = make_field(p, k);
    CAPTURE(f->q());
    const auto o = run(f);
    CHECK(o.exhausted);
    REQUIRE(o.min_excess.has_value());
    CHECK(*o.min_excess == expected);
    CHECK(*o.min_cardinality() == static_cast<std::int64_t>(f->q() * (f->q() + 1) / 2) + expected);
    CHECK_FALSE(o.witnesses.empty());
    // The normalized B0 is always among the minimizers here.
    CHECK(std::binary_search(o.witnesses.begin(), o.witnesses.end(), normalize(b0_config(f)).indices()));
  }
}

TEST_CASE("witnesses are normalized, sorted, minimal") {
  for (auto f : {make_field(3), make_field(2, 2), make_field(5)}) {
    const auto o = run(f);
    for (std::size_t i = 0; i < o.witnesses.size(); ++i) {
      const auto& w = o.witnesses[i];
      REQUIRE(w.size() == f->q() + 1);
      REQUIRE(w.front() == 0);
      REQUIRE(w.back() == 0);
      REQUIRE(oracle::excess(*f, w) == *o.min_excess);
      if (i) REQUIRE(o.witnesses[i - 1] < w);
    }
  }
}

TEST_CASE("matches plain enumeration at q = 2 and q = 3") {
  for (unsigned p : {2u, 3u}) {
    const auto f = make_field(p);
    const auto brute = oracle::brute_minimum(*f);
    const auto o = run(f);
    CHECK(*o.min_excess == brute.min_excess);
    CHECK(as_set(o) == brute.normalized_witnesses);
    const auto raw = run(f, 1, false, SearchOptions::kUnbounded);
    CHECK(*raw.min_excess == brute.min_excess);
    CHECK(as_set(raw) == brute.normalized_witnesses);
  }
}

TEST_CASE("normalization and the initial bound do not change the answer") {
  for (auto f : {make_field(3), make_field(2, 2), make_field(5)}) {
    const auto base = run(f);
    const auto unbounded = run(f, 1, true, SearchOptions::kUnbounded);
    const auto full = run(f, 1, false);
    CHECK(base.min_excess == unbounded.min_excess);
    CHECK(base.witnesses == unbounded.witnesses);
    CHECK(base.min_excess == full.min_excess);
    CHECK(base.witnesses == full.witnesses);
    CHECK(unbounded.nodes_explored >= base.nodes_explored);
  }
}

TEST_CASE("worker count does not change the outcome") {
  for (auto f : {make_field(5), make_field(7)}) {
    const std::string one = search_json(run(f, 1), false).dump();
    CHECK(search_json(run(f, 2), false).dump() == one);
    CHECK(search_json(run(f, 4), false).dump() == one);
    CHECK(search_json(run(f, 1), false).dump() == one);
  }
}

TEST_CASE("node budget yields a labelled partial result") {
  SearchOptions opts;
  opts.field = make_field(7);
  opts.node_budget = 50;
  const auto o = min_excess_search(opts);
  CHECK_FALSE(o.exhausted);
  CHECK(o.nodes_explored <= 50 + 7);
  try {
    verify_conjectures(opts.field, o);
    FAIL("expected IncompleteSearch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompleteSearch);
  }
  Report r{"search", search_json(o), ""};
  CHECK(emit(r, Format::Text).find("NON-EXHAUSTIVE") != std::string::npos);
}

TEST_CASE("bound below the minimum finds nothing") {
  const auto f = make_field(5);
  const auto o = run(f, 1, true, 1);
  CHECK(o.exhausted);
  CHECK_FALSE(o.min_excess.has_value());
  CHECK(o.witnesses.empty());
  CHECK_THROWS_AS(verify_conjectures(f, o), Error);
}

TEST_CASE("option validation") {
  SearchOptions opts;
  CHECK_THROWS_AS(min_excess_search(opts), Error);
  opts.field = make_field(3);
  opts.worker_count = 0;
  CHECK_THROWS_AS(min_excess_search(opts), Error);
  opts.worker_count = 1;
  opts.initial_bound = -1;
  CHECK_THROWS_AS(min_excess_search(opts), Error);
}

TEST_CASE("conjecture verdicts") {
  for (unsigned p : {3u, 5u}) {
    const auto f = make_field(p);
    const auto verdict = verify_conjectures(f, run(f));
    CHECK(verdict.conjecture1_holds);
    CHECK(verdict.conjecture2_holds);
    CHECK(verdict.counterexamples.empty());
  }

  const auto f4 = make_field(2, 2);
  const auto even = verify_conjectures(f4, run(f4));
  CHECK(even.conjecture1_holds);
  CHECK(even.conjecture2_holds);
  CHECK_FALSE(even.note.empty());

  // Injected data: a claimed minimum of 0 at q = 5.
  const auto f5 = make_field(5);
  SearchOutcome fake;
  fake.q = 5;
  fake.min_excess = 0;
  fake.witnesses = {{0, 4, 1, 1, 4, 0}};
  const auto bad = verify_conjectures(f5, fake);
  CHECK_FALSE(bad.conjecture1_holds);
  CHECK(bad.conjecture2_holds);
  CHECK(bad.counterexamples == fake.witnesses);

  // A witness without a covering slope trips the second conjecture.
  fake.min_excess = 2;
  fake.witnesses = {{0, 0, 0, 1, 1, 2}};
  const auto bad2 = verify_conjectures(f5, fake);
  CHECK(bad2.conjecture1_holds);
  CHECK_FALSE(bad2.conjecture2_holds);
  CHECK(bad2.counterexamples.size() == 1);
}

}
