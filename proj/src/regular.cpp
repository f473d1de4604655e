#include "growth/regular.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "growth/errors.hpp"

namespace growth {

SiteSet SiteSet::of(std::vector<Site> sites) {
  for (const Site& s : sites)
    if (s.i < 0 || s.j < 0) throw std::invalid_argument("site coordinates must be nonnegative");
  std::sort(sites.begin(), sites.end());
  sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
  return SiteSet{std::move(sites)};
}

ExtendedState ExtendedState::initial(const SiteSet& a) {
  ExtendedState st;
  for (const Site& s : a.sites) {
    st.col_coords_.push_back(s.i);
    st.row_coords_.push_back(s.j);
  }
  auto dedup = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(st.col_coords_);
  dedup(st.row_coords_);
  st.nc_ = static_cast<int>(st.col_coords_.size()) + 1;
  st.nr_ = static_cast<int>(st.row_coords_.size()) + 1;
  st.occ_.assign(static_cast<size_t>(st.nc_) * st.nr_, 0);
  for (const Site& s : a.sites) {
    int ci = st.col_class_of(s.i);
    int rj = st.row_class_of(s.j);
    st.occ_[static_cast<size_t>(rj) * st.nc_ + ci] = 1;
  }
  st.recount();
  return st;
}

int ExtendedState::col_class_of(int x) const {
  auto it = std::lower_bound(col_coords_.begin(), col_coords_.end(), x);
  if (it != col_coords_.end() && *it == x) return static_cast<int>(it - col_coords_.begin());
  return nc_ - 1;  // generic class
}

int ExtendedState::row_class_of(int y) const {
  auto it = std::lower_bound(row_coords_.begin(), row_coords_.end(), y);
  if (it != row_coords_.end() && *it == y) return static_cast<int>(it - row_coords_.begin());
  return nr_ - 1;
}

void ExtendedState::recount() {
  // Count real cells on each line; the generic cell at the line's far end
  // stands for infinitely many sites, hence the inf flag.
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

bool ExtendedState::fully_occupied() const {
  return std::all_of(occ_.begin(), occ_.end(), [](uint8_t v) { return v != 0; });
}

bool ExtendedState::row_covered(int rj) const {
  for (int ci = 0; ci < nc_; ++ci)
    if (!occ(ci, rj)) return false;
  return true;
}

bool ExtendedState::col_covered(int ci) const {
  for (int rj = 0; rj < nr_; ++rj)
    if (!occ(ci, rj)) return false;
  return true;
}

int ExtendedState::occupied_cells() const {
  int k = 0;
  for (uint8_t v : occ_) k += v != 0;
  return k;
}

ExtendedState ExtendedState::step(const YoungDiagram& z) const {
  ExtendedState next = *this;
  for (int rj = 0; rj < nr_; ++rj)
    for (int ci = 0; ci < nc_; ++ci) {
      if (occ(ci, rj)) continue;
      if (!z.contains_counts(row_cnt_[rj], col_cnt_[ci]))
        next.occ_[static_cast<size_t>(rj) * nc_ + ci] = 1;
    }
  next.recount();
  return next;
}

namespace {

void record_line_events(GrowthTrace& trace) {
  const auto& states = trace.states;
  if (states.empty()) return;
  int nr = states[0].row_classes();
  int nc = states[0].col_classes();
  std::vector<uint8_t> seen_row(nr, 0), seen_col(nc, 0);
  for (int t = 0; t < static_cast<int>(states.size()); ++t) {
    for (int rj = 0; rj < nr; ++rj)
      if (!seen_row[rj] && states[t].row_covered(rj)) {
        seen_row[rj] = 1;
        trace.line_events.push_back({t, LineId{true, rj}});
        if (!trace.tau_line) trace.tau_line = t;
      }
    for (int ci = 0; ci < nc; ++ci)
      if (!seen_col[ci] && states[t].col_covered(ci)) {
        seen_col[ci] = 1;
        trace.line_events.push_back({t, LineId{false, ci}});
        if (!trace.tau_line) trace.tau_line = t;
      }
  }
}

}  // namespace

GrowthTrace run(const YoungDiagram& z, const SiteSet& a, std::optional<int> max_steps) {
  GrowthTrace trace;
  trace.states.push_back(ExtendedState::initial(a));
  const int cells = trace.states[0].col_classes() * trace.states[0].row_classes();
  const int limit = max_steps.value_or(cells + 2);
  for (int t = 0;; ++t) {
    const ExtendedState& cur = trace.states.back();
    if (cur.fully_occupied()) {
      trace.spans = true;
      trace.tau = t;
      trace.verdict_time = t;
      break;
    }
    if (t >= limit)
      throw internal_error("growth run exceeded step limit " + std::to_string(limit));
    ExtendedState next = cur.step(z);
    if (next == cur) {
      trace.spans = false;
      trace.verdict_time = t;
      break;
    }
    trace.states.push_back(std::move(next));
  }
  record_line_events(trace);
  return trace;
}

int run_tau(const YoungDiagram& z, const SiteSet& a, std::optional<int> max_steps) {
  ExtendedState cur = ExtendedState::initial(a);
  const int cells = cur.col_classes() * cur.row_classes();
  const int limit = max_steps.value_or(cells + 2);
  for (int t = 0;; ++t) {
    if (cur.fully_occupied()) return t;
    if (t >= limit)
      throw internal_error("growth run exceeded step limit " + std::to_string(limit));
    ExtendedState next = cur.step(z);
    if (next == cur) return -1;
    cur = std::move(next);
  }
}

GridTrace run_truncated_oracle(const YoungDiagram& z, const SiteSet& a, int side,
                               std::optional<int> max_steps) {
  std::vector<int> xs, ys;
  for (const Site& s : a.sites) {
    xs.push_back(s.i);
    ys.push_back(s.j);
  }
  auto distinct = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return static_cast<int>(v.size());
  };
  const int need = distinct(xs) + distinct(ys) + z.width() + z.height() + 2;
  if (side < need)
    throw std::invalid_argument("oracle grid side " + std::to_string(side) +
                                " below required " + std::to_string(need));
  for (const Site& s : a.sites)
    if (s.i >= side || s.j >= side)
      throw std::invalid_argument("initial site outside oracle grid");

  GridTrace trace;
  trace.side = side;
  std::vector<uint8_t> cur(static_cast<size_t>(side) * side, 0);
  for (const Site& s : a.sites) cur[static_cast<size_t>(s.j) * side + s.i] = 1;
  trace.states.push_back(cur);
  const int limit = max_steps.value_or(side * side + 2);
  std::vector<int> row_cnt(side), col_cnt(side);
  for (int t = 0;; ++t) {
    bool full = std::all_of(cur.begin(), cur.end(), [](uint8_t v) { return v != 0; });
    if (full) {
      trace.spans = true;
      trace.tau = t;
      trace.verdict_time = t;
      break;
    }
    if (t >= limit) throw internal_error("oracle run exceeded step limit");
    std::fill(row_cnt.begin(), row_cnt.end(), 0);
    std::fill(col_cnt.begin(), col_cnt.end(), 0);
    for (int y = 0; y < side; ++y)
      for (int x = 0; x < side; ++x)
        if (cur[static_cast<size_t>(y) * side + x]) {
          ++row_cnt[y];
          ++col_cnt[x];
        }
    std::vector<uint8_t> next = cur;
    bool changed = false;
    for (int y = 0; y < side; ++y)
      for (int x = 0; x < side; ++x) {
        size_t idx = static_cast<size_t>(y) * side + x;
        if (cur[idx]) continue;
        if (!z.contains_counts({row_cnt[y], false}, {col_cnt[x], false})) {
          next[idx] = 1;
          changed = true;
        }
      }
    if (!changed) {
      trace.spans = false;
      trace.verdict_time = t;
      break;
    }
    cur = std::move(next);
    trace.states.push_back(cur);
  }
  return trace;
}

std::vector<std::string> audit_crosspoint(const GrowthTrace& trace) {
  std::vector<std::string> violations;
  if (trace.states.empty()) return violations;
  const ExtendedState& init = trace.states[0];
  const int nc = init.col_classes(), nr = init.row_classes();
  struct Cell {
    int ci, rj;
  };
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);  // fixed seed: sampled pairs are reproducible
  for (size_t t = 1; t < trace.states.size(); ++t) {
    const ExtendedState& st = trace.states[t];
    std::vector<Cell> fresh;  // occupied now, not initially
    for (int rj = 0; rj < nr; ++rj)
      for (int ci = 0; ci < nc; ++ci)
        if (st.occ(ci, rj) && !init.occ(ci, rj)) fresh.push_back({ci, rj});
    auto check = [&](const Cell& a, const Cell& b) {
      if (a.ci == b.ci || a.rj == b.rj) return;  // neighbors (or same class handled trivially)
      if (!st.occ(a.ci, b.rj) && !st.occ(b.ci, a.rj))
        violations.push_back("crosspoint violated at t=" + std::to_string(t) + " cells (" +
                             std::to_string(a.ci) + "," + std::to_string(a.rj) + ") (" +
                             std::to_string(b.ci) + "," + std::to_string(b.rj) + ")");
    };
    const size_t n = fresh.size();
    if (n * n <= 40000) {
      for (size_t p = 0; p < n; ++p)
        for (size_t q = p + 1; q < n; ++q) check(fresh[p], fresh[q]);
    } else {
      std::uniform_int_distribution<size_t> pick(0, n - 1);
      for (int k = 0; k < 20000; ++k) check(fresh[pick(rng)], fresh[pick(rng)]);
    }
  }
  return violations;
}

std::vector<std::string> audit_rect_line(const GrowthTrace& trace) {
  std::vector<std::string> violations;
  const auto& states = trace.states;
  for (size_t t = 0; t + 2 < states.size(); ++t) {
    const ExtendedState& s1 = states[t + 1];
    const ExtendedState& s2 = states[t + 2];
    if (s2.fully_occupied()) continue;  // the forced conclusion already holds
    const int nc = s1.col_classes(), nr = s1.row_classes();
    // A line covered at t+2 with none of its sites occupied at t+1 fires on
    // transverse counts alone (its own count is zero), so every transverse
    // line clears the threshold at t+1 and t+2 occupies the whole plane.
    for (int rj = 0; rj < nr; ++rj) {
      if (!s2.row_covered(rj)) continue;
      bool any_at_t1 = false;
      for (int ci = 0; ci < nc; ++ci) any_at_t1 |= s1.occ(ci, rj);
      if (!any_at_t1)
        violations.push_back("rect-line: row class " + std::to_string(rj) +
                             " fresh-covered at t=" + std::to_string(t + 2) +
                             " yet the plane is not fully occupied there");
    }
    for (int ci = 0; ci < nc; ++ci) {
      if (!s2.col_covered(ci)) continue;
      bool any_at_t1 = false;
      for (int rj = 0; rj < nr; ++rj) any_at_t1 |= s1.occ(ci, rj);
      if (!any_at_t1)
        violations.push_back("rect-line: col class " + std::to_string(ci) +
                             " fresh-covered at t=" + std::to_string(t + 2) +
                             " yet the plane is not fully occupied there");
    }
  }
  return violations;
}

namespace {

int covered_line_count(const ExtendedState& st) {
  int covered = 0;
  for (int rj = 0; rj < st.row_classes(); ++rj) covered += st.row_covered(rj) ? 1 : 0;
  for (int ci = 0; ci < st.col_classes(); ++ci) covered += st.col_covered(ci) ? 1 : 0;
  return covered;
}

}  // namespace

std::vector<std::string> audit_l_line(const GrowthTrace& trace) {
  std::vector<std::string> violations;
  const auto& states = trace.states;
  for (size_t t = 0; t + 2 < states.size(); ++t) {
    if (states[t + 2] == states[t + 1]) continue;  // no growth into t+2
    // Some line covered at t+2 was not covered at t: one line per two steps.
    if (covered_line_count(states[t + 2]) <= covered_line_count(states[t]))
      violations.push_back("l-line: growth into t=" + std::to_string(t + 2) +
                           " without a newly covered line since t=" + std::to_string(t));
  }
  return violations;
}

SiteSet parse_sites(const std::string& text) {
  std::vector<Site> sites;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int i, j;
    if (!(ls >> i)) continue;  // blank or comment-only
    if (!(ls >> j)) throw std::invalid_argument("site line " + std::to_string(lineno) +
                                                ": expected two integers");
    std::string extra;
    if (ls >> extra) throw std::invalid_argument("site line " + std::to_string(lineno) +
                                                 ": trailing tokens");
    sites.push_back({i, j});
  }
  return SiteSet::of(std::move(sites));
}

std::string format_sites(const SiteSet& ss) {
  std::string out;
  for (const Site& s : ss.sites)
    out += std::to_string(s.i) + " " + std::to_string(s.j) + "\n";
  return out;
}

}  // namespace growth
