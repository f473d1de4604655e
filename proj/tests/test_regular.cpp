#include <doctest.h>

#include <growth/errors.hpp>
#include <growth/regular.hpp>
#include <growth/young.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "oracle.hpp"

using growth::ExtendedState;
using growth::GridTrace;
using growth::GrowthTrace;
using growth::LineCount;
using growth::Site;
using growth::SiteSet;
using growth::YoungDiagram;

TEST_CASE("site sets: ordering, dedup, text round trip") {
  const SiteSet a = SiteSet::of({{3, 1}, {1, 3}, {3, 1}, {0, 0}});
  CHECK(a.size() == 3);
  CHECK(a.sites == std::vector<Site>{{0, 0}, {1, 3}, {3, 1}});

  const SiteSet parsed = growth::parse_sites("# corner\n0 0\n1 3\n3 1\n");
  CHECK(parsed.sites == a.sites);
  CHECK(growth::parse_sites(growth::format_sites(a)).sites == a.sites);
  CHECK(growth::parse_sites("").empty());
  CHECK_THROWS_AS(growth::parse_sites("1 x"), std::invalid_argument);
  CHECK_THROWS_AS(growth::parse_sites("1"), std::invalid_argument);
  CHECK_THROWS_AS(growth::parse_sites("-1 2"), std::invalid_argument);
}

TEST_CASE("extended state classes and counts") {
  const SiteSet a = SiteSet::of({{1, 3}, {1, 5}, {3, 1}, {3, 4}, {4, 3}});
  const ExtendedState st = ExtendedState::initial(a);
  CHECK(st.real_cols() == std::vector<int>{1, 3, 4});
  CHECK(st.real_rows() == std::vector<int>{1, 3, 4, 5});
  CHECK(st.col_classes() == 4);  // 3 real + generic
  CHECK(st.row_classes() == 5);
  CHECK(st.col_class_of(3) == 1);
  CHECK(st.col_class_of(2) == 3);   // generic
  CHECK(st.row_class_of(5) == 3);
  CHECK(st.row_class_of(99) == 4);  // generic
  CHECK(st.occupied_cells() == 5);
  for (Site s : a.sites) CHECK(st.site_occupied(s));
  CHECK_FALSE(st.site_occupied({0, 0}));
  CHECK_FALSE(st.fully_occupied());
  // row y = 3 holds (1,3) and (4,3): two real-column cells occupied.
  CHECK(st.row_count(st.row_class_of(3)) == LineCount{2, false});
  CHECK(st.col_count(st.col_class_of(1)) == LineCount{2, false});
  CHECK(st.col_count(st.col_class_of(2)) == LineCount{0, false});
}

TEST_CASE("empty zero-set spans in one step") {
  const GrowthTrace tr = growth::run(YoungDiagram(), SiteSet());
  CHECK(tr.spans);
  CHECK(tr.tau == 1);
  CHECK(tr.states.size() == 2);
  CHECK(tr.states.back().fully_occupied());
  CHECK(growth::run_tau(YoungDiagram(), SiteSet()) == 1);
}

TEST_CASE("empty start under a nonempty zero-set fixates immediately") {
  const GrowthTrace tr = growth::run(YoungDiagram::from_rows({2, 1}), SiteSet());
  CHECK_FALSE(tr.spans);
  CHECK(tr.verdict_time == 0);
  CHECK(tr.states.size() == 1);
  CHECK_FALSE(tr.tau.has_value());
  CHECK_FALSE(tr.tau_line.has_value());
  CHECK(tr.line_events.empty());
  CHECK(growth::run_tau(YoungDiagram::from_rows({2, 1}), SiteSet()) == -1);
}

TEST_CASE("single forbidden count: one seed spans in two steps") {
  // Z = {(0,0)}: a site with empty row and column never grows, everything
  // else does. One seed covers its row and column at t=1, the rest at t=2.
  const YoungDiagram z = YoungDiagram::from_rows({1});
  const SiteSet a = SiteSet::of({{0, 0}});
  const GrowthTrace tr = growth::run(z, a);
  CHECK(tr.spans);
  CHECK(tr.tau == 2);
  CHECK(tr.tau_line == 1);

  const ExtendedState& mid = tr.states[1];
  CHECK(mid.site_occupied({0, 0}));
  CHECK(mid.site_occupied({7, 0}));
  CHECK(mid.site_occupied({0, 9}));
  CHECK_FALSE(mid.site_occupied({7, 9}));
  CHECK(mid.row_covered(mid.row_class_of(0)));
  CHECK(mid.col_covered(mid.col_class_of(0)));
  CHECK_FALSE(mid.row_covered(mid.row_class_of(5)));
  CHECK(mid.row_count(mid.row_class_of(0)) == LineCount{0, true});
  CHECK(mid.row_count(mid.row_class_of(5)) == LineCount{1, false});

  // Four first-cover events: the seeded line pair, then the generic pair.
  REQUIRE(tr.line_events.size() == 4);
  CHECK(tr.line_events[0].step == 1);
  CHECK(tr.line_events[1].step == 1);
  CHECK(tr.line_events[2].step == 2);
  CHECK(tr.line_events[3].step == 2);
}

TEST_CASE("a single seed fixates when the zero-set needs two counts") {
  const GrowthTrace tr = growth::run(YoungDiagram::from_rows({2, 1}), SiteSet::of({{0, 0}}));
  CHECK_FALSE(tr.spans);
  CHECK(tr.verdict_time == 0);
  CHECK(tr.states[0].occupied_cells() == 1);
}

TEST_CASE("step limit trips an internal error") {
  CHECK_THROWS_AS(growth::run(YoungDiagram(), SiteSet(), 0), growth::internal_error);
  CHECK_THROWS_AS(growth::run_tau(YoungDiagram(), SiteSet(), 0), growth::internal_error);
}

namespace {

int oracle_side(const YoungDiagram& z, const SiteSet& a) {
  int side = z.width() + z.height() + 2 * a.size() + 2;
  for (Site s : a.sites) side = std::max({side, s.i + 1, s.j + 1});
  return side;
}

// Compare the class-compressed run against the plain truncated-grid oracle,
// site by site and step by step.
void check_against_oracle(const YoungDiagram& z, const SiteSet& a) {
  const int side = oracle_side(z, a);
  const GrowthTrace fast = growth::run(z, a);
  const GridTrace slow = growth::run_truncated_oracle(z, a, side);
  CHECK(fast.spans == slow.spans);
  if (fast.spans) CHECK(fast.tau == slow.tau);
  const size_t steps = std::min(fast.states.size(), slow.states.size());
  REQUIRE(steps >= 1);
  for (size_t t = 0; t < steps; ++t)
    for (int j = 0; j < side; ++j)
      for (int i = 0; i < side; ++i) {
        const bool want = slow.states[t][static_cast<size_t>(j) * side + i] != 0;
        if (fast.states[t].site_occupied({i, j}) != want) {
          CAPTURE(t);
          CAPTURE(i);
          CAPTURE(j);
          REQUIRE(fast.states[t].site_occupied({i, j}) == want);
        }
      }
}

}  // namespace

TEST_CASE("class compression matches the truncated-grid oracle") {
  check_against_oracle(YoungDiagram::from_rows({4, 3, 1}),
                       SiteSet::of({{1, 3}, {1, 5}, {3, 1}, {3, 4}, {4, 3}}));
  check_against_oracle(YoungDiagram::rectangle(2, 2), SiteSet::of({{0, 0}, {3, 3}}));
  check_against_oracle(YoungDiagram::staircase(1, 1, 3), SiteSet::of({{0, 1}, {2, 0}, {5, 5}}));

  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const YoungDiagram z = oracle::random_diagram(rng, 4, 4);
    const SiteSet a = oracle::random_sites(rng, 5, 1 + static_cast<int>(rng() % 4));
    check_against_oracle(z, a);
  }
}

TEST_CASE("growth is monotone and verdicts are coherent") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 60; ++t) {
    const YoungDiagram z = oracle::random_diagram(rng, 4, 4);
    const SiteSet a = oracle::random_sites(rng, 6, 1 + static_cast<int>(rng() % 5));
    const GrowthTrace tr = growth::run(z, a);

    for (size_t k = 1; k < tr.states.size(); ++k)
      CHECK(tr.states[k - 1].occupied_cells() < tr.states[k].occupied_cells());
    if (tr.spans) {
      CHECK(tr.tau == tr.verdict_time);
      CHECK(tr.states.back().fully_occupied());
      CHECK(static_cast<int>(tr.states.size()) == *tr.tau + 1);
      CHECK(growth::run_tau(z, a) == *tr.tau);
    } else {
      CHECK_FALSE(tr.states.back().fully_occupied());
      CHECK(growth::run_tau(z, a) == -1);
    }
    for (size_t k = 1; k < tr.line_events.size(); ++k)
      CHECK(tr.line_events[k - 1].step <= tr.line_events[k].step);
    if (!tr.line_events.empty()) CHECK(tr.line_events.front().step == *tr.tau_line);
    if (tr.spans) {
      REQUIRE(tr.tau_line.has_value());
      CHECK(*tr.tau_line <= *tr.tau);
    }
  }
}

TEST_CASE("structural audits accept honest traces") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const SiteSet a = oracle::random_sites(rng, 5, 1 + static_cast<int>(rng() % 4));
    const YoungDiagram any = oracle::random_diagram(rng, 4, 4);
    CHECK(growth::audit_crosspoint(growth::run(any, a)).empty());

    const int m = 1 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 3);
    CHECK(growth::audit_rect_line(growth::run(YoungDiagram::rectangle(m, n), a)).empty());

    const int big = 2 + static_cast<int>(rng() % 3);
    const YoungDiagram ell =
        YoungDiagram::from_rectangles({{big, 1}, {1, big}});
    CHECK(growth::audit_l_line(growth::run(ell, a)).empty());
  }
}
