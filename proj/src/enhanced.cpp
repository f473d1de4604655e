#include "growth/enhanced.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "growth/errors.hpp"

namespace growth {

namespace {

std::vector<int> canonical_vector(std::vector<int> v, const char* what) {
  for (size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 0) throw std::invalid_argument(std::string(what) + " entries must be nonnegative");
    if (k > 0 && v[k] > v[k - 1])
      throw std::invalid_argument(std::string(what) + " entries must be weakly decreasing");
  }
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

EnhancementPair EnhancementPair::of(std::vector<int> r, std::vector<int> c) {
  EnhancementPair e;
  e.r = canonical_vector(std::move(r), "row enhancement");
  e.c = canonical_vector(std::move(c), "column enhancement");
  return e;
}

EnhancementPair EnhancementPair::from_diagrams(const YoungDiagram& row_diag,
                                               const YoungDiagram& col_diag) {
  return of(row_diag.rows(), col_diag.columns());
}

YoungDiagram EnhancementPair::row_diagram() const { return YoungDiagram::from_rows(r); }

YoungDiagram EnhancementPair::col_diagram() const { return YoungDiagram::from_columns(c); }

int EnhancementPair::r_at(int j) const {
  return j < static_cast<int>(r.size()) ? r[j] : 0;
}

int EnhancementPair::c_at(int i) const {
  return i < static_cast<int>(c.size()) ? c[i] : 0;
}

EnhancedState EnhancedState::initial(const EnhancementPair& e) {
  EnhancedState st;
  st.nc_ = static_cast<int>(e.c.size()) + 1;
  st.nr_ = static_cast<int>(e.r.size()) + 1;
  st.occ_.assign(static_cast<size_t>(st.nc_) * st.nr_, 0);
  st.recount();
  return st;
}

void EnhancedState::recount() {
  row_cnt_.assign(nr_, {});
  col_cnt_.assign(nc_, {});
  for (int rj = 0; rj < nr_; ++rj) {
    LineCount c;
    for (int ci = 0; ci < nc_ - 1; ++ci)
      if (occ(ci, rj)) ++c.n;
    c.inf = occ(nc_ - 1, rj);
    if (c.inf) c.n = 0;  // canonical form: an infinite count carries no finite part
    row_cnt_[rj] = c;
  }
  for (int ci = 0; ci < nc_; ++ci) {
    LineCount c;
    for (int rj = 0; rj < nr_ - 1; ++rj)
      if (occ(ci, rj)) ++c.n;
    c.inf = occ(ci, nr_ - 1);
    if (c.inf) c.n = 0;
    col_cnt_[ci] = c;
  }
}

bool EnhancedState::fully_occupied() const {
  return std::all_of(occ_.begin(), occ_.end(), [](uint8_t v) { return v != 0; });
}

int EnhancedState::occupied_cells() const {
  int k = 0;
  for (uint8_t v : occ_) k += v != 0;
  return k;
}

EnhancedState EnhancedState::step(const YoungDiagram& z, const EnhancementPair& e) const {
  EnhancedState next = *this;
  for (int rj = 0; rj < nr_; ++rj)
    for (int ci = 0; ci < nc_; ++ci) {
      if (occ(ci, rj)) continue;
      LineCount rc = row_cnt_[rj];
      LineCount cc = col_cnt_[ci];
      rc.n += e.r_at(rj);  // class rj has enhancement r[rj], 0 for the generic class
      cc.n += e.c_at(ci);
      if (!z.contains_counts(rc, cc)) next.occ_[static_cast<size_t>(rj) * nc_ + ci] = 1;
    }
  next.recount();
  return next;
}

EnhancedTrace run_enhanced(const YoungDiagram& z, const EnhancementPair& e,
                           std::optional<int> max_steps) {
  EnhancedTrace trace;
  trace.states.push_back(EnhancedState::initial(e));
  const int cells = trace.states[0].col_classes() * trace.states[0].row_classes();
  const int limit = max_steps.value_or(cells + 2);
  for (int t = 0;; ++t) {
    const EnhancedState& cur = trace.states.back();
    if (cur.fully_occupied()) {
      trace.spans = true;
      trace.tau = t;
      trace.verdict_time = t;
      break;
    }
    if (t >= limit)
      throw internal_error("enhanced run exceeded step limit " + std::to_string(limit));
    EnhancedState next = cur.step(z, e);
    if (next == cur) {
      trace.spans = false;
      trace.verdict_time = t;
      break;
    }
    trace.states.push_back(std::move(next));
  }
  return trace;
}

bool spans_by_containment(const YoungDiagram& z, const EnhancementPair& e) {
  return z.subset_of(boxplus(e.row_diagram(), e.col_diagram()));
}

namespace {

// Maximal intervals of equal values in (v extended by zeros): returns the class
// index ranges [begin, end) over the cell grid, generic class last.
struct Interval {
  int begin, end;  // cell-class indices; end == support+1 marks the generic tail
};

std::vector<Interval> value_intervals(const std::vector<int>& v) {
  std::vector<Interval> out;
  int n = static_cast<int>(v.size());
  int start = 0;
  for (int k = 1; k <= n; ++k)
    if (k == n || v[k] != v[start]) {
      out.push_back({start, k});
      start = k;
    }
  out.push_back({n, n + 1});  // zero tail = generic class
  return out;
}

}  // namespace

bool partition_bound_check(const YoungDiagram& z, const EnhancementPair& e) {
  EnhancedTrace trace = run_enhanced(z, e);
  if (!trace.spans) throw std::invalid_argument("partition bound check requires a spanning pair");
  const int m = static_cast<int>(e.r.size());
  const int n = static_cast<int>(e.c.size());
  if (*trace.tau > m + n + 1) return false;
  // Interval-block containment: blocks I_i x J_j with i + j < t occupied at t.
  const std::vector<Interval> col_blocks = value_intervals(e.c);
  const std::vector<Interval> row_blocks = value_intervals(e.r);
  for (int t = 0; t < static_cast<int>(trace.states.size()); ++t) {
    const EnhancedState& st = trace.states[t];
    for (int bi = 0; bi < static_cast<int>(col_blocks.size()); ++bi)
      for (int bj = 0; bj < static_cast<int>(row_blocks.size()); ++bj) {
        if (bi + bj >= t) continue;
        for (int ci = col_blocks[bi].begin; ci < col_blocks[bi].end; ++ci)
          for (int rj = row_blocks[bj].begin; rj < row_blocks[bj].end; ++rj)
            if (!st.occ(ci, rj)) return false;
      }
  }
  return true;
}

std::vector<std::vector<uint8_t>> run_enhanced_truncated(const YoungDiagram& z,
                                                         const EnhancementPair& e, int side,
                                                         int steps) {
  const int need = static_cast<int>(e.c.size() + e.r.size()) + z.width() + z.height() + 2;
  if (side < need)
    throw std::invalid_argument("enhanced oracle grid side below required " +
                                std::to_string(need));
  std::vector<std::vector<uint8_t>> states;
  std::vector<uint8_t> cur(static_cast<size_t>(side) * side, 0);
  states.push_back(cur);
  std::vector<int> row_cnt(side), col_cnt(side);
  for (int t = 0; t < steps; ++t) {
    std::fill(row_cnt.begin(), row_cnt.end(), 0);
    std::fill(col_cnt.begin(), col_cnt.end(), 0);
    for (int y = 0; y < side; ++y)
      for (int x = 0; x < side; ++x)
        if (cur[static_cast<size_t>(y) * side + x]) {
          ++row_cnt[y];
          ++col_cnt[x];
        }
    std::vector<uint8_t> next = cur;
    for (int y = 0; y < side; ++y)
      for (int x = 0; x < side; ++x) {
        size_t idx = static_cast<size_t>(y) * side + x;
        if (cur[idx]) continue;
        if (!z.contains_counts({row_cnt[y] + e.r_at(y), false}, {col_cnt[x] + e.c_at(x), false}))
          next[idx] = 1;
      }
    cur = std::move(next);
    states.push_back(cur);
  }
  return states;
}

std::vector<std::string> audit_enhanced_structure(const EnhancedTrace& trace,
                                                  const YoungDiagram& z,
                                                  const EnhancementPair& e) {
  std::vector<std::string> violations;
  const int nc = trace.states[0].col_classes();
  const int nr = trace.states[0].row_classes();
  for (size_t t = 0; t < trace.states.size(); ++t) {
    const EnhancedState& st = trace.states[t];
    // occupied set is downward closed (a Young diagram)
    for (int rj = 0; rj < nr; ++rj)
      for (int ci = 0; ci < nc; ++ci)
        if (st.occ(ci, rj)) {
          if ((ci > 0 && !st.occ(ci - 1, rj)) || (rj > 0 && !st.occ(ci, rj - 1)))
            violations.push_back("shape: not a Young diagram at t=" + std::to_string(t));
        }
    // equal enhancements occupy simultaneously
    for (int ci = 1; ci < nc - 1; ++ci)
      if (e.c[ci] == e.c[ci - 1])
        for (int rj = 0; rj < nr; ++rj)
          if (st.occ(ci, rj) != st.occ(ci - 1, rj))
            violations.push_back("simultaneity: columns " + std::to_string(ci - 1) + "," +
                                 std::to_string(ci) + " differ at t=" + std::to_string(t));
    for (int rj = 1; rj < nr - 1; ++rj)
      if (e.r[rj] == e.r[rj - 1])
        for (int ci = 0; ci < nc; ++ci)
          if (st.occ(ci, rj) != st.occ(ci, rj - 1))
            violations.push_back("simultaneity: rows " + std::to_string(rj - 1) + "," +
                                 std::to_string(rj) + " differ at t=" + std::to_string(t));
  }
  // concave corner growth for spanning pairs
  if (trace.spans) {
    for (size_t t = 0; t + 1 < trace.states.size(); ++t) {
      const EnhancedState& cur = trace.states[t];
      const EnhancedState& nxt = trace.states[t + 1];
      for (int rj = 0; rj < nr; ++rj)
        for (int ci = 0; ci < nc; ++ci) {
          if (cur.occ(ci, rj)) continue;
          bool left = ci == 0 || cur.occ(ci - 1, rj);
          bool below = rj == 0 || cur.occ(ci, rj - 1);
          if (left && below && !nxt.occ(ci, rj))
            violations.push_back("corner: concave corner (" + std::to_string(ci) + "," +
                                 std::to_string(rj) + ") not filled at t=" +
                                 std::to_string(t + 1));
        }
    }
    if (!partition_bound_check(z, e)) violations.push_back("partition bound check failed");
  }
  return violations;
}

EnhancementPair parse_enhancements(const std::string& text) {
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), '/', '\n');
  std::istringstream in(norm);
  std::string line;
  std::optional<std::vector<int>> r, c;
  while (std::getline(in, line)) {
    if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    std::vector<int> vals;
    if (!(toks.size() == 1 && toks[0] == "-")) {  // lone '-' marks an empty list
      for (const std::string& t : toks) {
        size_t pos = 0;
        int v = 0;
        try {
          v = std::stoi(t, &pos);
        } catch (const std::exception&) {
          throw std::invalid_argument("bad enhancement entry in: " + line);
        }
        if (pos != t.size()) throw std::invalid_argument("bad enhancement entry in: " + line);
        vals.push_back(v);
      }
    }
    if (tag == "r:") {
      if (r) throw std::invalid_argument("duplicate r: field");
      r = std::move(vals);
    } else if (tag == "c:") {
      if (c) throw std::invalid_argument("duplicate c: field");
      c = std::move(vals);
    } else {
      throw std::invalid_argument("expected 'r:' or 'c:', got '" + tag + "'");
    }
  }
  if (!r || !c) throw std::invalid_argument("enhancement text needs both r: and c: fields");
  return EnhancementPair::of(std::move(*r), std::move(*c));
}

std::string format_enhancements(const EnhancementPair& e) {
  auto field = [](const char* tag, const std::vector<int>& v) {
    std::string out = tag;
    for (int x : v) out += " " + std::to_string(x);
    return out;
  };
  return field("r:", e.r) + "\n" + field("c:", e.c) + "\n";
}

}  // namespace growth
