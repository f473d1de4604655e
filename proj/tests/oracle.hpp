// Shared oracles and generators for the unit tests. Everything here is
// deliberately naive and independent of the library code paths it checks.
#pragma once

#include <growth/regular.hpp>
#include <growth/young.hpp>

#include <algorithm>
#include <cassert>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using growth::Site;
using growth::SiteSet;
using growth::YoungDiagram;

// Infimal sum from the complement-sumset definition: a cell lies outside
// X [+] Y exactly when it splits as a sum of a cell outside X and a cell
// outside Y. Computed cell-by-cell on a bounded window, so it never touches
// the min-plus convolution the library uses.
inline YoungDiagram boxplus_oracle(const YoungDiagram& x, const YoungDiagram& y,
                                   int side = 32) {
  assert(x.width() + y.width() < side && x.height() + y.height() < side);
  std::vector<int> heights(static_cast<size_t>(side), 0);
  for (int i = 0; i < side; ++i) {
    int h = side;
    for (int j = 0; j < side && h == side; ++j) {
      for (int i1 = 0; i1 <= i && h == side; ++i1) {
        for (int j1 = 0; j1 <= j; ++j1) {
          if (!x.contains(i1, j1) && !y.contains(i - i1, j - j1)) {
            h = j;  // first row where column i leaves the sum
            break;
          }
        }
      }
    }
    heights[static_cast<size_t>(i)] = h;
  }
  std::vector<int> cols;
  for (int h : heights) {
    if (h == 0) break;
    assert(h < side && "oracle window too small");
    cols.push_back(h);
  }
  return YoungDiagram::from_columns(std::move(cols));
}

// Sites whose removal leaves a Young diagram (the outer corners).
inline std::vector<Site> removable_corners(const YoungDiagram& d) {
  std::vector<Site> out;
  const auto& rows = d.rows();
  for (int j = 0; j < d.height(); ++j) {
    const bool last_row = j + 1 == d.height();
    if (last_row || rows[static_cast<size_t>(j)] > rows[static_cast<size_t>(j) + 1]) {
      out.push_back(Site{rows[static_cast<size_t>(j)] - 1, j});
    }
  }
  return out;
}

inline YoungDiagram remove_cell(const YoungDiagram& d, Site corner) {
  std::vector<int> rows = d.rows();
  assert(corner.j < d.height() && rows[static_cast<size_t>(corner.j)] - 1 == corner.i);
  rows[static_cast<size_t>(corner.j)] -= 1;
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return YoungDiagram::from_rows(std::move(rows));
}

// Random weakly decreasing profile. Uses raw engine outputs (never
// std::uniform_int_distribution) so sequences are identical everywhere.
inline YoungDiagram random_diagram(std::mt19937_64& rng, int max_w, int max_h) {
  const int h = static_cast<int>(rng() % static_cast<unsigned long long>(max_h + 1));
  std::vector<int> rows;
  for (int j = 0; j < h; ++j) {
    rows.push_back(1 + static_cast<int>(rng() % static_cast<unsigned long long>(max_w)));
  }
  std::sort(rows.begin(), rows.end(), std::greater<int>());
  return YoungDiagram::from_rows(std::move(rows));
}

inline SiteSet random_sites(std::mt19937_64& rng, int max_coord, int count) {
  std::set<std::pair<int, int>> seen;
  while (static_cast<int>(seen.size()) < count) {
    const int i = static_cast<int>(rng() % static_cast<unsigned long long>(max_coord + 1));
    const int j = static_cast<int>(rng() % static_cast<unsigned long long>(max_coord + 1));
    seen.insert({i, j});
  }
  std::vector<Site> sites;
  for (auto [i, j] : seen) sites.push_back(Site{i, j});
  return SiteSet::of(std::move(sites));
}

}  // namespace oracle
