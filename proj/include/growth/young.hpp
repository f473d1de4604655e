#pragma once

// Young diagrams on the first quadrant and the min-plus algebra used by the
// growth dynamics: union/intersection, the infimal sum (boxplus) and its
// residual (boxminus), staircases, reductions and the largest inscribed square.
//
// Convention: a diagram is stored as its weakly decreasing list of positive
// row lengths, row index 0 at the bottom. Site (i, j) means column i, row j.

#include <string>
#include <utility>
#include <vector>

namespace growth {

struct Site {
  int i = 0;  // column index (x)
  int j = 0;  // row index (y)
  friend bool operator==(const Site&, const Site&) = default;
  friend auto operator<=>(const Site&, const Site&) = default;
};

// Count of occupied sites on one line; `inf` marks a line with infinitely many.
struct LineCount {
  int n = 0;
  bool inf = false;
  friend bool operator==(const LineCount&, const LineCount&) = default;
};

class YoungDiagram {
 public:
  YoungDiagram() = default;

  // Validates: entries weakly decreasing, nonnegative; zeros trimmed.
  static YoungDiagram from_rows(std::vector<int> rows);
  static YoungDiagram from_columns(std::vector<int> cols);
  // Union of rectangles R_{a,b} (a columns wide, b rows tall), all a,b >= 1.
  static YoungDiagram from_rectangles(const std::vector<std::pair<int, int>>& rects);
  static YoungDiagram rectangle(int a, int b);
  // Staircase S_{a,b,k}: sites with floor(i/b) + floor(j/a) <= k-1.
  static YoungDiagram staircase(int a, int b, int k);

  const std::vector<int>& rows() const { return rows_; }
  std::vector<int> columns() const;  // conjugate profile
  int row_length(int j) const;       // 0 beyond the top
  int column_length(int i) const;
  int width() const { return rows_.empty() ? 0 : rows_[0]; }
  int height() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }
  long long cell_count() const;
  std::vector<Site> sites() const;  // row-major, bottom row first

  bool contains(int i, int j) const;
  bool contains(Site s) const { return contains(s.i, s.j); }
  // Membership test for a (row count, column count) pair; infinite counts
  // always fall outside a finite diagram.
  bool contains_counts(LineCount row_cnt, LineCount col_cnt) const;
  bool subset_of(const YoungDiagram& other) const;

  YoungDiagram union_with(const YoungDiagram& other) const;
  YoungDiagram intersect(const YoungDiagram& other) const;
  YoungDiagram transpose() const;

  // Reductions: drop k columns from the left / k rows from the bottom / both.
  YoungDiagram reduce_left(int k) const;
  YoungDiagram reduce_down(int k) const;
  YoungDiagram shift_diag(int k) const;

  // Side of the largest square R_{s,s} contained in the diagram.
  int largest_square() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;  // canonical: weakly decreasing, all positive
};

// Infimal sum X [+] Y = (X^c + Y^c)^c: min-plus convolution of column profiles.
YoungDiagram boxplus(const YoungDiagram& x, const YoungDiagram& y);
// Infimal difference Z [-] Y: the minimal X with Z inside X [+] Y.
YoungDiagram boxminus(const YoungDiagram& z, const YoungDiagram& y);

// Text format: weakly decreasing ints separated by whitespace, or "empty".
YoungDiagram parse_diagram(const std::string& text);
std::string format_diagram(const YoungDiagram& d);

}  // namespace growth
