#include "growth/thin.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "growth/errors.hpp"

namespace growth {

namespace {

void check_block_vector(const std::vector<int>& v, const char* name) {
  for (size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 2) {
      throw std::invalid_argument(std::string("thin spec ") + name +
                                  " entries must be >= 2");
    }
    if (k > 0 && v[k] > v[k - 1]) {
      throw std::invalid_argument(std::string("thin spec ") + name +
                                  " entries must be weakly decreasing");
    }
  }
}

}  // namespace

ThinSetSpec ThinSetSpec::of(std::vector<int> rvec, std::vector<int> cvec, int w) {
  check_block_vector(rvec, "rvec");
  check_block_vector(cvec, "cvec");
  if (w < 0) throw std::invalid_argument("thin spec w must be >= 0");
  ThinSetSpec spec;
  spec.rvec = std::move(rvec);
  spec.cvec = std::move(cvec);
  spec.w = w;
  return spec;
}

int ThinSetSpec::total_sites() const {
  return std::accumulate(rvec.begin(), rvec.end(), 0) +
         std::accumulate(cvec.begin(), cvec.end(), 0) + w;
}

SiteSet standard_arrangement(const ThinSetSpec& spec) {
  const int sum_r = std::accumulate(spec.rvec.begin(), spec.rvec.end(), 0);
  const int sum_c = std::accumulate(spec.cvec.begin(), spec.cvec.end(), 0);
  const int n0 = static_cast<int>(spec.rvec.size());
  const int m0 = static_cast<int>(spec.cvec.size());
  const int width = m0 + spec.w + sum_r;
  const int height = n0 + spec.w + sum_c;

  std::vector<Site> sites;
  sites.reserve(static_cast<size_t>(spec.total_sites()));
  // Antidiagonal cursor chain: each block starts one column right of and one
  // row below the previous block's end, so blocks stay pairwise incomparable.
  int x = -1;
  int y = height;
  for (int k = 0; k < m0; ++k) {  // vertical blocks, largest first (top-left)
    for (int t = 0; t < spec.cvec[k]; ++t) sites.push_back({x + 1, y - 1 - t});
    x += 1;
    y -= spec.cvec[k];
  }
  for (int t = 0; t < spec.w; ++t) {  // isolated diagonal sites
    sites.push_back({x + 1, y - 1});
    x += 1;
    y -= 1;
  }
  for (int k = n0 - 1; k >= 0; --k) {  // horizontal blocks, smallest first
    for (int t = 0; t < spec.rvec[k]; ++t) sites.push_back({x + 1 + t, y - 1});
    x += spec.rvec[k];
    y -= 1;
  }
  if (spec.total_sites() > 0 && (x != width - 1 || y != 0)) {
    throw internal_error("standard arrangement cursor did not close the frame");
  }
  return SiteSet::of(std::move(sites));
}

bool is_thin(const SiteSet& a) {
  std::map<int, int> row_mult, col_mult;
  for (const Site& s : a.sites) {
    ++row_mult[s.j];
    ++col_mult[s.i];
  }
  for (const Site& s : a.sites) {
    if (row_mult[s.j] > 1 && col_mult[s.i] > 1) return false;
  }
  return true;
}

ThinSetSpec canonicalize(const SiteSet& a) {
  std::map<int, int> row_mult, col_mult;
  for (const Site& s : a.sites) {
    ++row_mult[s.j];
    ++col_mult[s.i];
  }
  std::vector<int> rvec, cvec;
  int w = 0;
  for (const Site& s : a.sites) {
    const int rm = row_mult[s.j];
    const int cm = col_mult[s.i];
    if (rm > 1 && cm > 1) throw std::invalid_argument("set is not thin");
    if (rm == 1 && cm == 1) ++w;
  }
  for (const auto& [j, m] : row_mult)
    if (m >= 2) rvec.push_back(m);
  for (const auto& [i, m] : col_mult)
    if (m >= 2) cvec.push_back(m);
  std::sort(rvec.rbegin(), rvec.rend());
  std::sort(cvec.rbegin(), cvec.rend());
  return ThinSetSpec::of(std::move(rvec), std::move(cvec), w);
}

namespace {

// All weakly decreasing vectors with entries in [2, max_entry] and length
// <= max_len, ordered by length then lexicographically.
std::vector<std::vector<int>> block_vectors(int max_entry, int max_len) {
  std::vector<std::vector<int>> out;
  out.push_back({});
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    const int hi = cur.empty() ? max_entry : cur.back();
    for (int e = 2; e <= hi; ++e) {
      cur.push_back(e);
      self(self, remaining - 1);
      cur.pop_back();
    }
  };
  for (int len = 1; len <= max_len; ++len) {
    // collect exactly this length by filtering: regenerate per length so the
    // output is grouped by length
    const size_t before = out.size();
    rec(rec, len);
    std::sort(out.begin() + static_cast<long>(before), out.end());
  }
  return out;
}

}  // namespace

std::vector<ThinSetSpec> enumerate_thin_specs(int max_entry, int max_len, int max_w) {
  if (max_entry < 0 || max_len < 0 || max_w < 0) {
    throw std::invalid_argument("thin spec caps must be nonnegative");
  }
  // max_entry < 2 or max_len == 0 admit only empty block vectors, so the
  // enumeration degenerates to the w-only specs (and to the empty spec alone
  // when max_w == 0).
  const auto vecs = block_vectors(max_entry, max_len);
  std::vector<ThinSetSpec> out;
  out.reserve(vecs.size() * vecs.size() * static_cast<size_t>(max_w + 1));
  for (int w = 0; w <= max_w; ++w) {
    for (const auto& r : vecs) {
      for (const auto& c : vecs) out.push_back(ThinSetSpec::of(r, c, w));
    }
  }
  return out;
}

namespace {

int simulated_tau(const YoungDiagram& z, const ThinSetSpec& spec) {
  GrowthTrace trace = run(z, standard_arrangement(spec));
  return trace.spans ? *trace.tau : -1;
}

std::optional<ThinSetSpec> find_spec_with_tau(const YoungDiagram& z, int target,
                                              int max_entry, int max_len, int max_w) {
  const auto vecs = block_vectors(max_entry, max_len);
  for (int w = 0; w <= max_w; ++w) {
    for (const auto& r : vecs) {
      for (const auto& c : vecs) {
        ThinSetSpec spec = ThinSetSpec::of(r, c, w);
        if (spec.total_sites() == 0) continue;
        if (simulated_tau(z, spec) == target) return spec;
      }
    }
  }
  return std::nullopt;
}

std::vector<int> descending_range(int from, int to_inclusive) {  // from, from-1, ..., to
  std::vector<int> v;
  for (int e = from; e >= to_inclusive; --e) v.push_back(e);
  return v;
}

int rectangle_target(int m, int n) {
  if (m != n) return 2 * std::min(m, n);
  return n == 1 ? 2 : 2 * n - 1;
}

}  // namespace

ThinSetSpec witness_rectangle(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("rectangle sides must be >= 1");
  if (m > n) return ThinSetSpec::of(descending_range(m - 1, 2), descending_range(n, 2), 2);
  if (m < n) return ThinSetSpec::of(descending_range(m, 2), descending_range(n - 1, 2), 2);
  if (n == 1) return ThinSetSpec::of({}, {}, 1);
  // Square case: the spanning time 2n-1 is attained but has no simple closed
  // form; search small specs, widening the caps once before giving up.
  const YoungDiagram z = YoungDiagram::rectangle(n, n);
  const int target = rectangle_target(n, n);
  if (auto spec = find_spec_with_tau(z, target, n + 1, n, 4)) return *spec;
  if (auto spec = find_spec_with_tau(z, target, n + 2, n + 1, 5)) return *spec;
  throw internal_error("no thin spec found attaining the square target time");
}

LWitness witness_L(int a, int b, int c, int d) {
  if (c < 1 || b < 1 || a <= c || d <= b) {
    throw std::invalid_argument("L parameters require a > c >= 1 and d > b >= 1");
  }
  if (b > c) {
    // Transpose symmetry: R_{a,b} u R_{c,d} flips to R_{d,c} u R_{b,a}.
    return witness_L(d, c, b, a);
  }
  LWitness out;
  if (d - b > c) {
    // Cutting the bottom b rows leaves a genuine rectangle R_{c, d-b}.
    out.zero_set = YoungDiagram::rectangle(c, d - b);
    out.spec = witness_rectangle(c, d - b);
    out.formula_tau = rectangle_target(c, d - b);
  } else {
    // Shift left so the arms meet in the square R_{b,b}.
    const int arm = a - c + b;
    out.zero_set = YoungDiagram::from_rectangles({{arm, b}, {b, d}});
    const int n = std::max(arm, d);
    out.spec = ThinSetSpec::of(descending_range(n - 1, 2), descending_range(b, 2), 2);
    out.formula_tau = (arm >= d) ? 2 * b + 1 : 2 * b;
  }
  GrowthTrace trace = run(out.zero_set, standard_arrangement(out.spec));
  if (!trace.spans) throw internal_error("L witness arrangement does not span");
  out.achieved_tau = *trace.tau;
  if (out.achieved_tau < 2 * std::min(b, c)) {
    throw internal_error("L witness fell below the guaranteed spanning time");
  }
  return out;
}

EnhancementPair thin_to_enhancements(const SiteSet& a) {
  if (!is_thin(a)) throw std::invalid_argument("set is not thin");
  int max_i = -1, max_j = -1;
  for (const Site& s : a.sites) {
    max_i = std::max(max_i, s.i);
    max_j = std::max(max_j, s.j);
  }
  std::vector<int> r(static_cast<size_t>(max_j + 1), 0);
  std::vector<int> c(static_cast<size_t>(max_i + 1), 0);
  for (const Site& s : a.sites) {
    ++r[static_cast<size_t>(s.j)];
    ++c[static_cast<size_t>(s.i)];
  }
  for (size_t k = 1; k < r.size(); ++k) {
    if (r[k] > r[k - 1]) {
      throw std::invalid_argument(
          "row counts are not weakly decreasing; arrange the set first");
    }
  }
  for (size_t k = 1; k < c.size(); ++k) {
    if (c[k] > c[k - 1]) {
      throw std::invalid_argument(
          "column counts are not weakly decreasing; arrange the set first");
    }
  }
  return EnhancementPair::of(std::move(r), std::move(c));
}

SiteSet enhancements_to_thin(const EnhancementPair& e, const YoungDiagram& z) {
  const YoungDiagram shifted = z.shift_diag(1);
  if (!spans_by_containment(shifted, e)) {
    throw std::invalid_argument("pair does not span for the shifted zero-set");
  }
  const int n0 = static_cast<int>(e.r.size());
  const int m0 = static_cast<int>(e.c.size());
  const int n = std::max({m0 + 1, n0 + 1, z.width(), z.height()});
  std::vector<int> rvec(e.r), cvec(e.c);
  for (int& v : rvec) ++v;
  for (int& v : cvec) ++v;
  const int w = (n - n0) + (n - m0);
  return standard_arrangement(ThinSetSpec::of(std::move(rvec), std::move(cvec), w));
}

std::vector<std::string> audit_union_shape(const GridTrace& trace, const SiteSet& a) {
  const int side = trace.side;
  std::vector<uint8_t> initial(static_cast<size_t>(side) * side, 0);
  for (const Site& s : a.sites) {
    if (s.i >= side || s.j >= side) {
      throw std::invalid_argument("initial set exceeds the trace window");
    }
    initial[static_cast<size_t>(s.j) * side + s.i] = 1;
  }
  std::vector<std::string> violations;
  for (size_t t = 0; t < trace.states.size(); ++t) {
    const auto& st = trace.states[t];
    auto occ = [&](int i, int j) { return st[static_cast<size_t>(j) * side + i] != 0; };
    for (int j = 0; j < side; ++j) {
      for (int i = 0; i < side; ++i) {
        if (!occ(i, j) || initial[static_cast<size_t>(j) * side + i]) continue;
        if ((i > 0 && !occ(i - 1, j)) || (j > 0 && !occ(i, j - 1))) {
          violations.push_back("step " + std::to_string(t) + ": site (" +
                               std::to_string(i) + ", " + std::to_string(j) +
                               ") breaks the initial-set/Young union shape");
        }
      }
    }
  }
  return violations;
}

namespace {

std::vector<int> parse_int_list(const std::string& body, const char* name) {
  std::vector<int> out;
  std::istringstream in(body);
  std::string tok;
  while (in >> tok) {
    if (tok == "-") continue;
    try {
      size_t pos = 0;
      const int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("bad ") + name + " entry '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

ThinSetSpec parse_thin_spec(const std::string& text) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), '\n', '/');
  std::vector<int> rvec, cvec;
  int w = 0;
  bool seen_r = false, seen_c = false, seen_w = false;
  std::istringstream fields(normalized);
  std::string field;
  while (std::getline(fields, field, '/')) {
    const size_t colon = field.find(':');
    std::string key = field.substr(0, colon == std::string::npos ? field.size() : colon);
    key.erase(std::remove_if(key.begin(), key.end(), [](unsigned char ch) {
                return std::isspace(ch) != 0;
              }),
              key.end());
    if (key.empty() && colon == std::string::npos) continue;  // blank segment
    if (colon == std::string::npos) {
      throw std::invalid_argument("thin spec field '" + field + "' is missing ':'");
    }
    const std::string body = field.substr(colon + 1);
    if (key == "r") {
      if (seen_r) throw std::invalid_argument("duplicate r field");
      seen_r = true;
      rvec = parse_int_list(body, "r");
    } else if (key == "c") {
      if (seen_c) throw std::invalid_argument("duplicate c field");
      seen_c = true;
      cvec = parse_int_list(body, "c");
    } else if (key == "w") {
      if (seen_w) throw std::invalid_argument("duplicate w field");
      seen_w = true;
      const auto vals = parse_int_list(body, "w");
      if (vals.size() != 1) throw std::invalid_argument("w takes exactly one integer");
      w = vals[0];
    } else {
      throw std::invalid_argument("unknown thin spec field '" + key + "'");
    }
  }
  return ThinSetSpec::of(std::move(rvec), std::move(cvec), w);
}

std::string format_thin_spec(const ThinSetSpec& spec) {
  auto list = [](const std::vector<int>& v) {
    if (v.empty()) return std::string("-");
    std::string s;
    for (size_t k = 0; k < v.size(); ++k) {
      if (k > 0) s += ' ';
      s += std::to_string(v[k]);
    }
    return s;
  };
  return "r: " + list(spec.rvec) + " / c: " + list(spec.cvec) +
         " / w: " + std::to_string(spec.w);
}

}  // namespace growth
