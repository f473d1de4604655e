#pragma once

// Exact simulation of the regular growth dynamics T on the infinite plane.
//
// An empty site becomes occupied when its (row count, column count) pair falls
// outside the zero-set diagram Z. A finite initial set touches finitely many
// rows/columns; all remaining lines form one generic row class and one generic
// column class whose sites provably stay in lockstep, so the whole plane is
// tracked exactly by a (real cols + 1) x (real rows + 1) cell matrix.

#include <optional>
#include <string>
#include <vector>

#include "growth/young.hpp"

namespace growth {

struct SiteSet {
  std::vector<Site> sites;  // sorted (i, j), duplicates removed

  static SiteSet of(std::vector<Site> sites);
  bool empty() const { return sites.empty(); }
  int size() const { return static_cast<int>(sites.size()); }
};

// Lines are identified per class; index == number of real lines means the
// generic class (all untouched rows resp. columns).
struct LineId {
  bool is_row = true;
  int index = 0;
  friend bool operator==(const LineId&, const LineId&) = default;
};

struct LineEvent {
  int step = 0;
  LineId line;
};

class ExtendedState {
 public:
  static ExtendedState initial(const SiteSet& a);

  int col_classes() const { return nc_; }  // real columns + 1
  int row_classes() const { return nr_; }
  const std::vector<int>& real_cols() const { return col_coords_; }
  const std::vector<int>& real_rows() const { return row_coords_; }

  bool occ(int ci, int rj) const { return occ_[static_cast<size_t>(rj) * nc_ + ci] != 0; }
  LineCount row_count(int rj) const { return row_cnt_[rj]; }
  LineCount col_count(int ci) const { return col_cnt_[ci]; }

  // Class lookup for a concrete plane site.
  int col_class_of(int x) const;
  int row_class_of(int y) const;
  bool site_occupied(Site s) const { return occ(col_class_of(s.i), row_class_of(s.j)); }

  bool fully_occupied() const;
  bool row_covered(int rj) const;  // the full infinite line(s) of the class
  bool col_covered(int ci) const;
  int occupied_cells() const;

  ExtendedState step(const YoungDiagram& z) const;

  friend bool operator==(const ExtendedState&, const ExtendedState&) = default;

 private:
  std::vector<int> col_coords_, row_coords_;  // sorted distinct real coordinates
  int nc_ = 1, nr_ = 1;
  std::vector<uint8_t> occ_;  // nr_ x nc_, row-major
  std::vector<LineCount> row_cnt_, col_cnt_;
  void recount();
};

struct GrowthTrace {
  std::vector<ExtendedState> states;  // states[t] = T^t(A)
  bool spans = false;
  int verdict_time = 0;                // tau if spans, else index of last distinct state
  std::optional<int> tau;              // set iff spans
  std::optional<int> tau_line;         // first step with some fully covered line
  std::vector<LineEvent> line_events;  // first-cover events, ordered by step
};

// Runs until the plane is covered or the state repeats. max_steps guards
// against runaway loops (default: cell count + 2) and trips an internal error.
GrowthTrace run(const YoungDiagram& z, const SiteSet& a,
                std::optional<int> max_steps = std::nullopt);

// Lean variant for search loops: spanning time only, no stored trace;
// returns -1 when the dynamics fixates without spanning.
int run_tau(const YoungDiagram& z, const SiteSet& a,
            std::optional<int> max_steps = std::nullopt);

// Brute-force oracle: direct synchronous simulation on [0, side)^2. Valid when
// side >= |cols(A)| + |rows(A)| + width(Z) + height(Z) + 2 and A fits, because
// in-window counts then saturate past any membership threshold of Z.
struct GridTrace {
  int side = 0;
  std::vector<std::vector<uint8_t>> states;  // side*side, row-major (j*side+i)
  bool spans = false;
  int verdict_time = 0;
  std::optional<int> tau;
};

GridTrace run_truncated_oracle(const YoungDiagram& z, const SiteSet& a, int side,
                               std::optional<int> max_steps = std::nullopt);

// Structural audits (post-processing a trace); each returns violation messages.
// Crosspoint lemma: two occupied non-initial sites in general position force an
// occupied crosspoint. Valid for every zero set.
std::vector<std::string> audit_crosspoint(const GrowthTrace& trace);
// Rectangle zero-sets: a line covered at t+2 with none of its sites occupied
// at t+1 fires on transverse counts alone, which clears the threshold on every
// transverse line, so step t+2 must occupy the whole plane.
std::vector<std::string> audit_rect_line(const GrowthTrace& trace);
// Rectangle-union (L-shape) zero-sets: growth into step t+2 forces some line
// covered at t+2 that was not covered at t.
std::vector<std::string> audit_l_line(const GrowthTrace& trace);

// Text format: one "i j" pair per line, '#' starts a comment.
SiteSet parse_sites(const std::string& text);
std::string format_sites(const SiteSet& sites);

}  // namespace growth
