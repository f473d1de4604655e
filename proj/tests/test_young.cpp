#include <doctest.h>

#include <growth/young.hpp>

#include <random>
#include <stdexcept>

#include "oracle.hpp"

using growth::LineCount;
using growth::Site;
using growth::YoungDiagram;

TEST_CASE("canonical construction and validation") {
  CHECK(YoungDiagram().empty());
  CHECK(YoungDiagram::from_rows({}).empty());
  CHECK(YoungDiagram::from_rows({3, 1, 0, 0}) == YoungDiagram::from_rows({3, 1}));
  CHECK_THROWS_AS(YoungDiagram::from_rows({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(YoungDiagram::from_rows({2, -1}), std::invalid_argument);
  CHECK_THROWS_AS(YoungDiagram::rectangle(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(YoungDiagram::staircase(1, 0, 2), std::invalid_argument);

  const YoungDiagram d = YoungDiagram::from_rows({4, 3, 1});
  CHECK(d.width() == 4);
  CHECK(d.height() == 3);
  CHECK(d.cell_count() == 8);
  CHECK(d.columns() == std::vector<int>{3, 2, 2, 1});
  CHECK(YoungDiagram::from_columns({3, 2, 2, 1}) == d);
  CHECK(d.row_length(0) == 4);
  CHECK(d.row_length(7) == 0);
  CHECK(d.column_length(1) == 2);
  CHECK(d.column_length(4) == 0);
}

TEST_CASE("membership and site enumeration") {
  const YoungDiagram d = YoungDiagram::from_rows({2, 1});
  CHECK(d.contains(0, 0));
  CHECK(d.contains(1, 0));
  CHECK(d.contains(0, 1));
  CHECK_FALSE(d.contains(1, 1));
  CHECK_FALSE(d.contains(2, 0));
  CHECK_THROWS_AS(d.contains(-1, 0), std::invalid_argument);
  // row-major, bottom row first
  CHECK(d.sites() == std::vector<Site>{{0, 0}, {1, 0}, {0, 1}});

  CHECK(d.contains_counts(LineCount{1, false}, LineCount{0, false}));
  CHECK_FALSE(d.contains_counts(LineCount{2, false}, LineCount{0, false}));
  CHECK_FALSE(d.contains_counts(LineCount{0, true}, LineCount{0, false}));
  CHECK_FALSE(d.contains_counts(LineCount{0, false}, LineCount{0, true}));
}

TEST_CASE("rectangles, unions, and intersections") {
  const YoungDiagram r = YoungDiagram::rectangle(3, 2);
  CHECK(r.rows() == std::vector<int>{3, 3});
  const YoungDiagram ell = YoungDiagram::from_rectangles({{4, 1}, {1, 3}});
  CHECK(ell.rows() == std::vector<int>{4, 1, 1});
  CHECK(ell == r.union_with(ell).intersect(ell));
  CHECK(r.union_with(ell).rows() == std::vector<int>{4, 3, 1});
  CHECK(r.intersect(ell).rows() == std::vector<int>{3, 1});
  CHECK(r.intersect(YoungDiagram()).empty());
  CHECK(ell.subset_of(r.union_with(ell)));
  CHECK_FALSE(r.subset_of(ell));
}

TEST_CASE("transpose is an involution and conjugates profiles") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const YoungDiagram d = oracle::random_diagram(rng, 9, 9);
    CHECK(d.transpose().transpose() == d);
    CHECK(d.transpose().rows() == d.columns());
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) CHECK(d.contains(i, j) == d.transpose().contains(j, i));
  }
}

TEST_CASE("staircase closed form") {
  // (i, j) lies in the (a, b, k) staircase exactly when i/b + j/a < k.
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int k = 1; k <= 3; ++k) {
        const YoungDiagram s = YoungDiagram::staircase(a, b, k);
        for (int i = 0; i < b * k + 2; ++i)
          for (int j = 0; j < a * k + 2; ++j)
            CHECK(s.contains(i, j) == (i / b + j / a < k));
      }
  CHECK(YoungDiagram::staircase(1, 1, 3).rows() == std::vector<int>{3, 2, 1});
}

TEST_CASE("reductions and diagonal shift are coordinate shifts") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const YoungDiagram d = oracle::random_diagram(rng, 8, 8);
    const int k = static_cast<int>(rng() % 4);
    const YoungDiagram left = d.reduce_left(k);
    const YoungDiagram down = d.reduce_down(k);
    const YoungDiagram diag = d.shift_diag(k);
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) {
        CHECK(left.contains(i, j) == d.contains(i + k, j));
        CHECK(down.contains(i, j) == d.contains(i, j + k));
        CHECK(diag.contains(i, j) == d.contains(i + k, j + k));
      }
  }
  CHECK_THROWS_AS(YoungDiagram::rectangle(2, 2).reduce_left(-1), std::invalid_argument);
}

TEST_CASE("largest inscribed square") {
  CHECK(YoungDiagram().largest_square() == 0);
  CHECK(YoungDiagram::from_rows({1}).largest_square() == 1);
  CHECK(YoungDiagram::from_rows({4, 3, 1}).largest_square() == 2);
  CHECK(YoungDiagram::rectangle(5, 3).largest_square() == 3);
  CHECK(YoungDiagram::staircase(1, 1, 4).largest_square() == 2);

  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const YoungDiagram d = oracle::random_diagram(rng, 10, 10);
    int best = 0;
    for (int s = 1; s <= 10; ++s)
      if (d.contains(s - 1, s - 1)) best = s;
    CHECK(d.largest_square() == best);
  }
}

TEST_CASE("infimal sum: pinned example") {
  // columns (2,2,1) combined with columns (3,1) gives columns (5,3,2,2,1).
  const YoungDiagram x = YoungDiagram::from_columns({2, 2, 1});
  const YoungDiagram y = YoungDiagram::from_columns({3, 1});
  CHECK(boxplus(x, y).columns() == std::vector<int>{5, 3, 2, 2, 1});
  CHECK(boxplus(x, y) == oracle::boxplus_oracle(x, y));
}

TEST_CASE("infimal sum: algebraic laws") {
  std::mt19937_64 rng(14);
  const YoungDiagram empty;
  for (int t = 0; t < 60; ++t) {
    const YoungDiagram x = oracle::random_diagram(rng, 6, 6);
    const YoungDiagram y = oracle::random_diagram(rng, 6, 6);
    const YoungDiagram z = oracle::random_diagram(rng, 6, 6);

    const YoungDiagram xy = boxplus(x, y);
    // Result is a valid diagram matching the independent cell-level oracle.
    CHECK(xy == oracle::boxplus_oracle(x, y));
    // Identity element.
    CHECK(boxplus(x, empty) == x);
    CHECK(boxplus(empty, x) == x);
    // Commutativity and associativity.
    CHECK(xy == boxplus(y, x));
    CHECK(boxplus(xy, z) == boxplus(x, boxplus(y, z)));
    // Intersection distributes over a common summand.
    CHECK(xy.intersect(boxplus(z, y)) == boxplus(x.intersect(z), y));
    // Monotonicity in either argument.
    CHECK(boxplus(x.intersect(z), y).subset_of(xy));
    // Both summands embed in the sum.
    CHECK(x.subset_of(xy));
    CHECK(y.subset_of(xy));
  }
}

TEST_CASE("infimal difference: residual laws and minimality") {
  std::mt19937_64 rng(15);
  const YoungDiagram empty;
  for (int t = 0; t < 120; ++t) {
    const YoungDiagram z = oracle::random_diagram(rng, 7, 7);
    const YoungDiagram y = oracle::random_diagram(rng, 7, 7);
    const YoungDiagram x = boxminus(z, y);

    CHECK(x.subset_of(z));
    CHECK(z.subset_of(boxplus(x, y)));
    CHECK(boxminus(z, empty) == z);
    CHECK(boxminus(empty, y).empty());
    // Minimality: dropping any outer corner of the residual breaks coverage.
    for (Site corner : oracle::removable_corners(x)) {
      const YoungDiagram smaller = oracle::remove_cell(x, corner);
      CHECK_FALSE(z.subset_of(boxplus(smaller, y)));
    }
  }
}

TEST_CASE("text round trip") {
  CHECK(growth::parse_diagram("empty").empty());
  CHECK(growth::format_diagram(YoungDiagram()) == "empty");
  CHECK(growth::parse_diagram(" 4  3 1 ") == YoungDiagram::from_rows({4, 3, 1}));
  CHECK(growth::format_diagram(YoungDiagram::from_rows({4, 3, 1})) == "4 3 1");
  CHECK_THROWS_AS(growth::parse_diagram("3 x"), std::invalid_argument);
  CHECK_THROWS_AS(growth::parse_diagram("1 2"), std::invalid_argument);
  CHECK_THROWS_AS(growth::parse_diagram("empty 3"), std::invalid_argument);
  std::mt19937_64 rng(16);
  for (int t = 0; t < 50; ++t) {
    const YoungDiagram d = oracle::random_diagram(rng, 9, 9);
    CHECK(growth::parse_diagram(growth::format_diagram(d)) == d);
  }
}
