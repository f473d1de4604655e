#pragma once

// Enhanced growth dynamics: starting from the empty set, a site (i, j) becomes
// occupied when (row count + r_j, column count + c_i) falls outside the zero
// set. Row enhancements r and column enhancements c are weakly decreasing with
// finite support, so columns past the support form a generic class, ditto rows;
// the state is an (M0+1) x (N0+1) cell matrix sharing the regular module's
// infinite-count semantics.

#include <optional>
#include <string>
#include <vector>

#include "growth/young.hpp"

namespace growth {

struct EnhancementPair {
  std::vector<int> r;  // row enhancements, canonical: weakly decreasing, positive
  std::vector<int> c;  // column enhancements, same form

  // r becomes the row profile of R; c becomes the column profile of C.
  static EnhancementPair of(std::vector<int> r, std::vector<int> c);
  static EnhancementPair from_diagrams(const YoungDiagram& row_diag,
                                       const YoungDiagram& col_diag);
  YoungDiagram row_diagram() const;  // R, rows given by r
  YoungDiagram col_diagram() const;  // C, columns given by c
  int r_at(int j) const;
  int c_at(int i) const;

  friend bool operator==(const EnhancementPair&, const EnhancementPair&) = default;
};

class EnhancedState {
 public:
  static EnhancedState initial(const EnhancementPair& e);

  int col_classes() const { return nc_; }  // M0 + 1
  int row_classes() const { return nr_; }
  bool occ(int ci, int rj) const { return occ_[static_cast<size_t>(rj) * nc_ + ci] != 0; }
  LineCount row_count(int rj) const { return row_cnt_[rj]; }
  LineCount col_count(int ci) const { return col_cnt_[ci]; }
  bool fully_occupied() const;
  int occupied_cells() const;

  EnhancedState step(const YoungDiagram& z, const EnhancementPair& e) const;

  friend bool operator==(const EnhancedState&, const EnhancedState&) = default;

 private:
  int nc_ = 1, nr_ = 1;
  std::vector<uint8_t> occ_;
  std::vector<LineCount> row_cnt_, col_cnt_;
  void recount();
};

struct EnhancedTrace {
  std::vector<EnhancedState> states;
  bool spans = false;
  int verdict_time = 0;
  std::optional<int> tau;  // set iff spans
};

EnhancedTrace run_enhanced(const YoungDiagram& z, const EnhancementPair& e,
                           std::optional<int> max_steps = std::nullopt);

// Exact spanning test without simulation: (r, c) spans for Z iff Z is contained
// in R boxplus C.
bool spans_by_containment(const YoungDiagram& z, const EnhancementPair& e);

// For a spanning pair: checks tau_en <= M + N + 1 (M, N = numbers of nonzero
// enhancements) and the interval-block containment law behind it. Throws
// std::invalid_argument on a non-spanning pair.
bool partition_bound_check(const YoungDiagram& z, const EnhancementPair& e);

// Truncated-grid oracle from the empty set; same validity reasoning as the
// regular-module oracle.
std::vector<std::vector<uint8_t>> run_enhanced_truncated(const YoungDiagram& z,
                                                         const EnhancementPair& e, int side,
                                                         int steps);

// Structural audits: occupied set stays a Young diagram; concave corners of a
// spanning pair fill in one step; equal enhancements imply simultaneous
// occupation; spanning runs obey the interval-block containment law.
std::vector<std::string> audit_enhanced_structure(const EnhancedTrace& trace,
                                                  const YoungDiagram& z,
                                                  const EnhancementPair& e);

// Text format: lines "r: 4 2 1" and "c: 3 1" (either order optional/empty),
// also accepted inline with " / " separating the two fields.
EnhancementPair parse_enhancements(const std::string& text);
std::string format_enhancements(const EnhancementPair& e);

}  // namespace growth
