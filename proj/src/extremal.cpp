#include "growth/extremal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

#include "growth/errors.hpp"

namespace growth {

namespace {

// Deterministic max-reduction over an indexed candidate stream: returns the
// smallest index attaining the maximum tau, identically for any thread count.
// tau_of must be pure; exceptions are captured and rethrown after the region.
template <typename F>
std::pair<int, long long> best_candidate(long long n, const F& tau_of) {
  int best = -1;
  long long best_idx = n;
  bool failed = false;
  std::string message;
#ifdef _OPENMP
#pragma omp parallel
  {
    int local_best = -1;
    long long local_idx = n;
    bool local_failed = false;
    std::string local_message;
#pragma omp for schedule(dynamic, 16)
    for (long long k = 0; k < n; ++k) {
      if (local_failed) continue;
      try {
        const int tau = tau_of(k);
        if (tau > local_best || (tau == local_best && k < local_idx)) {
          local_best = tau;
          local_idx = k;
        }
      } catch (const std::exception& ex) {
        local_failed = true;
        local_message = ex.what();
      }
    }
#pragma omp critical(growth_best_candidate_merge)
    {
      if (local_failed && !failed) {
        failed = true;
        message = local_message;
      }
      if (local_best > best || (local_best == best && local_idx < best_idx)) {
        best = local_best;
        best_idx = local_idx;
      }
    }
  }
#else
  for (long long k = 0; k < n; ++k) {
    const int tau = tau_of(k);
    if (tau > best || (tau == best && k < best_idx)) {
      best = tau;
      best_idx = k;
    }
  }
#endif
  if (failed) throw internal_error(message);
  return {best, best_idx};
}

template <typename F>
std::pair<int, long long> best_candidate_serial(long long n, const F& tau_of) {
  int best = -1;
  long long best_idx = n;
  for (long long k = 0; k < n; ++k) {
    const int tau = tau_of(k);
    if (tau > best || (tau == best && k < best_idx)) {
      best = tau;
      best_idx = k;
    }
  }
  return {best, best_idx};
}

}  // namespace

int ceil_sqrt(long long s) {
  if (s < 0) throw std::invalid_argument("ceil_sqrt of a negative value");
  long long t = static_cast<long long>(std::sqrt(static_cast<double>(s)));
  while (t > 0 && (t - 1) * (t - 1) >= s) --t;
  while (t * t < s) ++t;
  return static_cast<int>(t);
}

int rectangle_mu_formula(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("rectangle sides must be >= 1");
  if (m != n) return 2 * std::min(m, n);
  return n == 1 ? 2 : 2 * n - 1;
}

std::vector<YoungDiagram> subdiagrams(const YoungDiagram& z) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    out.push_back(YoungDiagram::from_rows(cur));
    const int j = static_cast<int>(cur.size());
    if (j >= z.height()) return;
    const int hi = std::min(z.row_length(j), cur.empty() ? z.width() : cur.back());
    for (int len = 1; len <= hi; ++len) {
      cur.push_back(len);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

namespace {

// Count of sub-diagrams, saturating at cap + 1.
long long count_subdiagrams(const YoungDiagram& z, long long cap) {
  long long count = 0;
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    if (count > cap) return;
    ++count;
    const int j = static_cast<int>(cur.size());
    if (j >= z.height()) return;
    const int hi = std::min(z.row_length(j), cur.empty() ? z.width() : cur.back());
    for (int len = 1; len <= hi && count <= cap; ++len) {
      cur.push_back(len);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return count;
}

int tau_for_subdiagram(const YoungDiagram& z, const YoungDiagram& r_diag,
                       EnhancementPair* pair_out = nullptr) {
  const YoungDiagram c_diag = boxminus(z, r_diag);
  EnhancementPair e = EnhancementPair::from_diagrams(r_diag, c_diag);
  if (!spans_by_containment(z, e)) {
    throw internal_error("residual partner fails the containment span test");
  }
  EnhancedTrace trace = run_enhanced(z, e);
  if (!trace.spans) {
    throw internal_error("containment predicts spanning but the simulation fixates");
  }
  if (pair_out) *pair_out = std::move(e);
  return *trace.tau;
}

void check_mu_en_window(const YoungDiagram& z, int value) {
  const int s = z.largest_square();
  if (value < ceil_sqrt(s) || value > 4 * s + 1) {
    throw internal_error("mu_en value " + std::to_string(value) +
                         " violates the [ceil(sqrt(s)), 4s+1] window for s = " +
                         std::to_string(s));
  }
}

MuEnResult finish_mu_en(const YoungDiagram& z, const std::vector<YoungDiagram>& subs,
                        std::pair<int, long long> best) {
  if (best.first < 0) throw internal_error("mu_en enumeration produced no candidate");
  MuEnResult res;
  res.value = best.first;
  res.candidates = static_cast<long long>(subs.size());
  tau_for_subdiagram(z, subs[static_cast<size_t>(best.second)], &res.witness);
  check_mu_en_window(z, res.value);
  return res;
}

}  // namespace

MuEnResult mu_en_exact(const YoungDiagram& z) {
  const auto subs = subdiagrams(z);
  auto best = best_candidate(static_cast<long long>(subs.size()), [&](long long k) {
    return tau_for_subdiagram(z, subs[static_cast<size_t>(k)]);
  });
  return finish_mu_en(z, subs, best);
}

MuEnResult mu_en_exact_serial(const YoungDiagram& z) {
  const auto subs = subdiagrams(z);
  auto best = best_candidate_serial(static_cast<long long>(subs.size()), [&](long long k) {
    return tau_for_subdiagram(z, subs[static_cast<size_t>(k)]);
  });
  return finish_mu_en(z, subs, best);
}

MuEnResult mu_en_full_enumeration(const YoungDiagram& z) {
  const auto subs = subdiagrams(z);
  const long long n = static_cast<long long>(subs.size());
  MuEnResult res;
  res.value = -1;
  for (long long ri = 0; ri < n; ++ri) {
    for (long long ci = 0; ci < n; ++ci) {
      EnhancementPair e = EnhancementPair::from_diagrams(subs[static_cast<size_t>(ri)],
                                                         subs[static_cast<size_t>(ci)]);
      if (!spans_by_containment(z, e)) continue;
      ++res.candidates;
      EnhancedTrace trace = run_enhanced(z, e);
      if (!trace.spans) {
        throw internal_error("containment predicts spanning but the simulation fixates");
      }
      if (*trace.tau > res.value) {
        res.value = *trace.tau;
        res.witness = std::move(e);
      }
    }
  }
  if (res.value < 0) throw internal_error("no spanning pair found in full enumeration");
  return res;
}

namespace {

ThinSearchCaps resolve_caps(const YoungDiagram& z, ThinSearchCaps caps) {
  if (caps.max_entry == 0) caps.max_entry = std::max(z.width(), z.height()) + 1;
  if (caps.max_entry < 0 || caps.max_len < 0 || caps.max_w < 0) {
    throw std::invalid_argument("thin search caps must be nonnegative");
  }
  return caps;
}

MuThResult finish_mu_th(const std::vector<ThinSetSpec>& specs,
                        std::pair<int, long long> best) {
  MuThResult res;
  res.candidates = static_cast<long long>(specs.size());
  if (best.first >= 0) {
    res.found = true;
    res.value = best.first;
    res.witness = specs[static_cast<size_t>(best.second)];
  }
  return res;
}

}  // namespace

MuThResult mu_th_search(const YoungDiagram& z, ThinSearchCaps caps) {
  caps = resolve_caps(z, caps);
  const auto specs = enumerate_thin_specs(caps.max_entry, caps.max_len, caps.max_w);
  auto best = best_candidate(static_cast<long long>(specs.size()), [&](long long k) {
    return run_tau(z, standard_arrangement(specs[static_cast<size_t>(k)]));
  });
  return finish_mu_th(specs, best);
}

MuThResult mu_th_search_serial(const YoungDiagram& z, ThinSearchCaps caps) {
  caps = resolve_caps(z, caps);
  const auto specs = enumerate_thin_specs(caps.max_entry, caps.max_len, caps.max_w);
  auto best = best_candidate_serial(static_cast<long long>(specs.size()), [&](long long k) {
    return run_tau(z, standard_arrangement(specs[static_cast<size_t>(k)]));
  });
  return finish_mu_th(specs, best);
}

namespace {

SiteSet window_subset(long long mask, int window_w) {
  std::vector<Site> sites;
  for (int b = 0; mask >> b; ++b) {
    if ((mask >> b) & 1) sites.push_back({b % window_w, b / window_w});
  }
  return SiteSet::of(std::move(sites));
}

int checked_window_tau(const YoungDiagram& z, const SiteSet& a, int mu_cap) {
  const int tau = run_tau(z, a);
  if (tau > mu_cap) {
    throw internal_error("window candidate spans in " + std::to_string(tau) +
                         " steps, beyond the 2mn+5 bound " + std::to_string(mu_cap));
  }
  return tau;
}

}  // namespace

MuSearchResult mu_search(const YoungDiagram& z, int window_w, int window_h,
                         int max_sites) {
  if (window_w < 1 || window_h < 1) {
    throw std::invalid_argument("window sides must be >= 1");
  }
  const int cells = window_w * window_h;
  if (cells > 16) {
    throw std::invalid_argument(
        "window too large for exhaustive search; use the random-restart variant");
  }
  if (max_sites < 1) throw std::invalid_argument("max_sites must be >= 1");
  const int site_cap = std::min(max_sites, cells);
  const int mu_cap = 2 * z.width() * z.height() + 5;
  const long long total = 1LL << cells;
  auto best = best_candidate(total - 1, [&](long long k) {
    const long long mask = k + 1;
    if (std::popcount(static_cast<unsigned long long>(mask)) > site_cap) return -1;
    return checked_window_tau(z, window_subset(mask, window_w), mu_cap);
  });
  MuSearchResult res;
  res.candidates = total - 1;
  if (best.first >= 0) {
    res.found = true;
    res.value = best.first;
    res.witness = window_subset(best.second + 1, window_w);
  }
  return res;
}

MuSearchResult mu_search_random(const YoungDiagram& z, int window_w, int window_h,
                                int max_sites, long long samples, std::uint64_t seed) {
  if (window_w < 1 || window_h < 1) {
    throw std::invalid_argument("window sides must be >= 1");
  }
  if (max_sites < 1) throw std::invalid_argument("max_sites must be >= 1");
  if (samples < 0) throw std::invalid_argument("samples must be >= 0");
  const long long cells = static_cast<long long>(window_w) * window_h;
  const long long site_cap = std::min<long long>(max_sites, cells);
  const int mu_cap = 2 * z.width() * z.height() + 5;
  std::mt19937_64 rng(seed);
  MuSearchResult res;
  res.candidates = samples;
  for (long long t = 0; t < samples; ++t) {
    const long long count = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(site_cap));
    std::vector<Site> sites;
    sites.reserve(static_cast<size_t>(count));
    for (long long k = 0; k < count; ++k) {
      const long long cell = static_cast<long long>(rng() % static_cast<std::uint64_t>(cells));
      sites.push_back({static_cast<int>(cell % window_w), static_cast<int>(cell / window_w)});
    }
    const SiteSet a = SiteSet::of(std::move(sites));
    const int tau = checked_window_tau(z, a, mu_cap);
    if (tau >= 0 && (!res.found || tau > res.value)) {
      res.found = true;
      res.value = tau;
      res.witness = a;
    }
  }
  return res;
}

namespace {

RatslopeResult ratslopebound_impl(const YoungDiagram& z, int a, int b) {
  RatslopeResult res;
  res.a = a;
  res.b = b;
  const long long ab = static_cast<long long>(a) * b;
  long long k = 1;
  const auto sites = z.sites();
  for (const Site& s : sites) {
    const long long v = static_cast<long long>(a) * s.i + static_cast<long long>(b) * s.j;
    k = std::max(k, v / ab + 1);
  }
  res.k = static_cast<int>(k);
  int best = -1;
  Site best_site{};
  auto ceil_div = [](int x, int y) { return (x + y - 1) / y; };
  for (const Site& s : sites) {
    const long long v = static_cast<long long>(a) * s.i + static_cast<long long>(b) * s.j;
    if (v < (k - 1) * ab) continue;
    const int bound = std::min(ceil_div(s.i + 1, b), ceil_div(s.j + 1, a));
    if (bound > best || (bound == best && s < best_site)) {
      best = bound;
      best_site = s;
    }
  }
  if (best < 0) throw internal_error("ratslope found no witness on the top band");
  res.witness = best_site;
  res.bound = best;
  res.k1 = ceil_div(best_site.i + 1, b);
  res.k2 = ceil_div(best_site.j + 1, a);
  res.pair = EnhancementPair::from_diagrams(YoungDiagram::staircase(a, b, res.k1),
                                            YoungDiagram::staircase(a, b, res.k2));
  if (!spans_by_containment(z, res.pair)) {
    throw internal_error("ratslope staircase pair fails to span");
  }
  return res;
}

}  // namespace

RatslopeResult ratslope_bound(const YoungDiagram& z, int a, int b) {
  if (z.empty()) throw std::invalid_argument("ratslope requires a nonempty zero-set");
  if (a < 1 || b < 1) throw std::invalid_argument("slope parameters must be >= 1");
  return ratslopebound_impl(z, a, b);
}

RatslopeResult ratslope_best(const YoungDiagram& z, int max_ab) {
  if (z.empty()) throw std::invalid_argument("ratslope requires a nonempty zero-set");
  if (max_ab < 1) throw std::invalid_argument("max_ab must be >= 1");
  std::optional<RatslopeResult> best;
  for (int a = 1; a <= max_ab; ++a) {
    for (int b = 1; b <= max_ab; ++b) {
      RatslopeResult cur = ratslopebound_impl(z, a, b);
      if (!best || cur.bound > best->bound) best = std::move(cur);
    }
  }
  return *best;
}

namespace {

struct LineGroup {
  int count = 0;   // lines in the chosen equal-length group (length >= s)
  int length = 0;  // the group's common length
  int strictly_longer = 0;
};

LineGroup longest_equal_group(const std::vector<int>& lengths, int s) {
  LineGroup g;
  for (size_t k = 0; k < lengths.size();) {
    size_t e = k;
    while (e < lengths.size() && lengths[e] == lengths[k]) ++e;
    const int run = static_cast<int>(e - k);
    if (lengths[k] >= s && (run > g.count || (run == g.count && lengths[k] > g.length))) {
      g.count = run;
      g.length = lengths[k];
    }
    k = e;
  }
  for (int len : lengths) {
    if (len > g.length) ++g.strictly_longer;
  }
  return g;
}

// One-step inverse of the left reduction: the pair spans for target^{<-1};
// bumping every row enhancement by one and padding with 1s out to
// N = max(supports + 1, target dimensions) spans for target itself.
EnhancementPair lift_left(const EnhancementPair& e, const YoungDiagram& target) {
  const int n0 = static_cast<int>(e.r.size());
  const int m0 = static_cast<int>(e.c.size());
  const int n = std::max({n0 + 1, m0 + 1, target.width(), target.height()});
  std::vector<int> r(e.r);
  for (int& v : r) ++v;
  r.resize(static_cast<size_t>(n), 1);
  EnhancementPair lifted = EnhancementPair::of(std::move(r), e.c);
  if (!spans_by_containment(target, lifted)) {
    throw internal_error("left lift lost the spanning property");
  }
  return lifted;
}

EnhancementPair lift_down(const EnhancementPair& e, const YoungDiagram& target) {
  const int n0 = static_cast<int>(e.r.size());
  const int m0 = static_cast<int>(e.c.size());
  const int n = std::max({n0 + 1, m0 + 1, target.width(), target.height()});
  std::vector<int> c(e.c);
  for (int& v : c) ++v;
  c.resize(static_cast<size_t>(n), 1);
  EnhancementPair lifted = EnhancementPair::of(e.r, std::move(c));
  if (!spans_by_containment(target, lifted)) {
    throw internal_error("down lift lost the spanning property");
  }
  return lifted;
}

}  // namespace

GeneralLbWitness general_lb_witness(const YoungDiagram& z) {
  if (z.empty()) throw std::invalid_argument("witness construction requires a nonempty zero-set");
  const int s = z.largest_square();
  GeneralLbWitness out;
  out.target = ceil_sqrt(s);
  const LineGroup rows = longest_equal_group(z.rows(), s);
  const LineGroup cols = longest_equal_group(z.columns(), s);

  // Simulate a candidate and keep it only if it meets the target.
  auto accept = [&](GeneralLbWitness::Route route, EnhancementPair pair, int d_c,
                    int d_r) -> bool {
    EnhancedTrace trace = run_enhanced(z, pair);
    if (!trace.spans || *trace.tau < out.target) return false;
    out.route = route;
    out.d_c = d_c;
    out.d_r = d_r;
    out.achieved = *trace.tau;
    out.pair = std::move(pair);
    return true;
  };

  if (static_cast<long long>(rows.count) * rows.count <= s) {
    // Few equal long rows: at least sqrt(s) distinct row lengths, so the pair
    // (Z, empty) covers them at distinct steps.
    if (!accept(GeneralLbWitness::Route::rows,
                EnhancementPair::from_diagrams(z, YoungDiagram()), 0, 0)) {
      throw internal_error("row route fell short of ceil(sqrt(s))");
    }
    return out;
  }
  if (static_cast<long long>(cols.count) * cols.count <= s) {
    if (!accept(GeneralLbWitness::Route::columns,
                EnhancementPair::from_diagrams(YoungDiagram(), z), 0, 0)) {
      throw internal_error("column route fell short of ceil(sqrt(s))");
    }
    return out;
  }

  // Staircase route: strip the lines strictly longer than the chosen groups,
  // take a diagonal ratslope witness of the reduced diagram, and lift it back.
  {
    const int d_c = cols.strictly_longer;
    const int d_r = rows.strictly_longer;
    const YoungDiagram reduced = z.reduce_left(d_c).reduce_down(d_r);
    if (!reduced.empty()) {
      RatslopeResult rs = ratslopebound_impl(reduced, 1, 1);
      if (rs.bound >= out.target) {
        EnhancementPair pair = rs.pair;
        for (int k = d_r; k >= 1; --k) {
          pair = lift_down(pair, z.reduce_left(d_c).reduce_down(k - 1));
        }
        for (int k = d_c; k >= 1; --k) {
          pair = lift_left(pair, z.reduce_left(k - 1));
        }
        if (accept(GeneralLbWitness::Route::staircase, std::move(pair), d_c, d_r)) {
          return out;
        }
      }
    }
  }

  // Degenerate staircase parameters: when every direction has many equal long
  // lines, the reduction can erase the very group it was built around (e.g.
  // rows (6,1,1,1,1,1), where s = 1 and both groups are the five length-1
  // lines). Fall back to the pairs the other routes would build, plus the
  // unshifted diagonal witness, keeping whichever meets the target.
  if (accept(GeneralLbWitness::Route::rows,
             EnhancementPair::from_diagrams(z, YoungDiagram()), 0, 0)) {
    return out;
  }
  if (accept(GeneralLbWitness::Route::columns,
             EnhancementPair::from_diagrams(YoungDiagram(), z), 0, 0)) {
    return out;
  }
  if (accept(GeneralLbWitness::Route::staircase, ratslopebound_impl(z, 1, 1).pair, 0,
             0)) {
    return out;
  }
  throw internal_error("no witness construction met ceil(sqrt(s))");
}

void BoundsReport::validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw internal_error("bounds chain violation: " + what);
  };
  require(mu_en_lower <= mu_en_upper, "ceil(sqrt(s)) exceeds 4s+1");
  if (mu_th_lower) require(*mu_th_lower <= mu_th_upper, "mu_th lower exceeds 8s+2");
  if (mu_en) {
    require(mu_en_lower <= mu_en->value, "mu_en below ceil(sqrt(s))");
    require(mu_en->value <= mu_en_upper, "mu_en above 4s+1");
    if (ratslope) require(ratslope->bound <= mu_en->value, "ratslope bound above mu_en");
  }
  if (ratslope) require(ratslope->bound <= mu_en_upper, "ratslope bound above 4s+1");
  if (mu_th && mu_th->found) {
    require(mu_th->value <= mu_th_upper, "thin search result above 8s+2");
    if (mu_en) require(mu_th->value <= 2 * mu_en->value, "thin search result above 2*mu_en");
  }
  if (mu && mu->found) require(mu->value <= mu_upper_general, "window search result above 2mn+5");
}

BoundsReport bounds(const YoungDiagram& z, const BoundsOptions& opts) {
  BoundsReport rep;
  rep.zero_set = format_diagram(z);
  rep.m = z.width();
  rep.n = z.height();
  rep.s = z.largest_square();
  rep.cells = z.cell_count();
  rep.mu_upper_general = 2 * rep.m * rep.n + 5;
  rep.mu_en_upper = 4 * rep.s + 1;
  rep.mu_th_upper = 8 * rep.s + 2;
  rep.mu_en_lower = ceil_sqrt(rep.s);
  if (rep.s >= 1) rep.mu_th_lower = ceil_sqrt(rep.s - 1);
  if (!z.empty() && opts.max_ab >= 1) rep.ratslope = ratslope_best(z, opts.max_ab);
  if (opts.exact_mu_en &&
      count_subdiagrams(z, opts.mu_en_candidate_cap) <= opts.mu_en_candidate_cap) {
    rep.mu_en = mu_en_exact(z);
  }
  if (opts.mu_th_caps) rep.mu_th = mu_th_search(z, *opts.mu_th_caps);
  if (opts.mu_window) {
    rep.mu = mu_search(z, opts.mu_window->w, opts.mu_window->h, opts.mu_window->max_sites);
  }
  rep.validate();
  return rep;
}

bool AuditReport::pass() const {
  for (const AuditCheck& c : checks) {
    if (!c.pass()) return false;
  }
  return true;
}

namespace {

class CheckBuilder {
 public:
  explicit CheckBuilder(AuditReport& rep) : rep_(rep) {}

  void tally(const std::string& name) { ++get(name).cases; }
  void fail(const std::string& name, std::string msg) {
    get(name).failures.push_back(std::move(msg));
  }
  void note(const std::string& name, std::string msg) {
    get(name).notes.push_back(std::move(msg));
  }
  void collect(const std::string& name, const std::string& ctx,
               const std::vector<std::string>& violations) {
    tally(name);
    for (const auto& v : violations) fail(name, ctx + ": " + v);
  }

 private:
  AuditCheck& get(const std::string& name) {
    for (AuditCheck& c : rep_.checks) {
      if (c.name == name) return c;
    }
    rep_.checks.push_back(AuditCheck{name, 0, {}, {}});
    return rep_.checks.back();
  }
  AuditReport& rep_;
};

int oracle_side_for(const YoungDiagram& z, const SiteSet& a) {
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
  int side = distinct(xs) + distinct(ys) + z.width() + z.height() + 2;
  for (const Site& s : a.sites) side = std::max({side, s.i + 1, s.j + 1});
  return side;
}

void audit_all_family(CheckBuilder& cb, int m_cap, int n_cap) {
  const auto zets = subdiagrams(YoungDiagram::rectangle(m_cap, n_cap));
  const int max_ab = std::max(m_cap, n_cap);
  for (const YoungDiagram& z : zets) {
    const std::string zs = "Z = " + format_diagram(z);
    const int s = z.largest_square();
    const MuEnResult me = mu_en_exact(z);

    cb.tally("mu-en-window");
    if (me.value < ceil_sqrt(s) || me.value > 4 * s + 1) {
      cb.fail("mu-en-window", zs + ": mu_en " + std::to_string(me.value) +
                                  " outside [" + std::to_string(ceil_sqrt(s)) + ", " +
                                  std::to_string(4 * s + 1) + "]");
    }

    cb.tally("reduced-equals-full");
    const MuEnResult full = mu_en_full_enumeration(z);
    if (full.value != me.value) {
      cb.fail("reduced-equals-full", zs + ": reduced " + std::to_string(me.value) +
                                         " != full " + std::to_string(full.value));
    }

    cb.tally("shift-monotone");
    const int left = mu_en_exact(z.reduce_left(1)).value;
    const int down = mu_en_exact(z.reduce_down(1)).value;
    if (me.value < left || me.value < down) {
      cb.fail("shift-monotone", zs + ": mu_en " + std::to_string(me.value) +
                                    " below a reduction value (" + std::to_string(left) +
                                    ", " + std::to_string(down) + ")");
    }

    cb.tally("then2-bound");
    const int diag = mu_en_exact(z.shift_diag(1)).value;
    if (me.value > diag + 2) {
      cb.fail("then2-bound", zs + ": mu_en " + std::to_string(me.value) + " > " +
                                 std::to_string(diag) + " + 2");
    }

    if (!z.empty()) {
      cb.tally("ratslope-sound");
      const RatslopeResult rs = ratslope_best(z, max_ab);
      if (rs.bound > me.value) {
        cb.fail("ratslope-sound", zs + ": ratslope bound " + std::to_string(rs.bound) +
                                      " exceeds mu_en " + std::to_string(me.value));
      }
    }

    cb.tally("thin-search-bounds");
    const MuThResult th = mu_th_search(z);
    if (!th.found) {
      cb.fail("thin-search-bounds", zs + ": no spanning spec within default caps");
    } else if (th.value > 8 * s + 2 || th.value > 2 * me.value) {
      cb.fail("thin-search-bounds", zs + ": thin search value " + std::to_string(th.value) +
                                        " breaks 8s+2 = " + std::to_string(8 * s + 2) +
                                        " or 2*mu_en = " + std::to_string(2 * me.value));
    }

    {
      EnhancedTrace tr = run_enhanced(z, me.witness);
      cb.collect("structure-audits", zs + " (mu-en witness)",
                 audit_enhanced_structure(tr, z, me.witness));
    }

    // Thin bridge: every spanning pair for the diagonal shift lifts to a thin
    // set that is at least as slow under the regular dynamics.
    const YoungDiagram shifted = z.shift_diag(1);
    const auto subs = subdiagrams(shifted);
    for (const YoungDiagram& r : subs) {
      for (const YoungDiagram& c : subs) {
        EnhancementPair e = EnhancementPair::from_diagrams(r, c);
        if (!spans_by_containment(shifted, e)) continue;
        EnhancedTrace et = run_enhanced(shifted, e);
        cb.tally("thin-bridge");
        if (!et.spans) {
          cb.fail("thin-bridge", zs + ": containment spans but simulation fixates");
          continue;
        }
        const SiteSet a = enhancements_to_thin(e, z);
        const int tau = run_tau(z, a);
        if (tau < *et.tau) {
          cb.fail("thin-bridge", zs + ": thin tau " + std::to_string(tau) +
                                     " below enhanced tau " + std::to_string(*et.tau));
        }
        const std::string ctx = zs + " (bridge pair r=" + format_diagram(r) +
                                " | c=" + format_diagram(c) + ")";
        cb.collect("structure-audits", ctx + " enhanced",
                   audit_enhanced_structure(et, shifted, e));
        GridTrace gt = run_truncated_oracle(z, a, oracle_side_for(z, a));
        cb.collect("structure-audits", ctx + " union-shape", audit_union_shape(gt, a));
        GrowthTrace rt = run(z, a);
        cb.collect("structure-audits", ctx + " crosspoint", audit_crosspoint(rt));
      }
    }
  }
}

void audit_rectangles_family(CheckBuilder& cb, int m_cap, int n_cap) {
  for (int m = 1; m <= m_cap; ++m) {
    for (int n = 1; n <= n_cap; ++n) {
      const YoungDiagram z = YoungDiagram::rectangle(m, n);
      const std::string zs = "R_{" + std::to_string(m) + "," + std::to_string(n) + "}";
      const int expect = rectangle_mu_formula(m, n);

      cb.tally("witness-exact");
      const ThinSetSpec spec = witness_rectangle(m, n);
      GrowthTrace tr = run(z, standard_arrangement(spec));
      if (!tr.spans || *tr.tau != expect) {
        cb.fail("witness-exact",
                zs + ": witness " + format_thin_spec(spec) + " gives tau " +
                    (tr.spans ? std::to_string(*tr.tau) : std::string("(fixates)")) +
                    ", expected " + std::to_string(expect));
      }
      cb.collect("structure-audits", zs + " witness rect-line", audit_rect_line(tr));
      cb.collect("structure-audits", zs + " witness crosspoint", audit_crosspoint(tr));

      cb.tally("window-search-bound");
      const MuSearchResult ms = mu_search(z, 4, 4, 16);
      if (!ms.found) {
        cb.fail("window-search-bound", zs + ": no spanning set in the 4x4 window");
      } else if (ms.value > expect || ms.value > 2 * m * n + 5) {
        cb.fail("window-search-bound",
                zs + ": window best " + std::to_string(ms.value) + " exceeds formula " +
                    std::to_string(expect) + " or 2mn+5");
      } else {
        GrowthTrace wr = run(z, ms.witness);
        cb.collect("structure-audits", zs + " window-best rect-line", audit_rect_line(wr));
        cb.collect("structure-audits", zs + " window-best crosspoint", audit_crosspoint(wr));
      }
    }
  }
}

void audit_l_family(CheckBuilder& cb, int cap) {
  for (int a = 2; a <= cap; ++a) {
    for (int c = 1; c < a; ++c) {
      for (int d = 2; d <= cap; ++d) {
        for (int b = 1; b < d; ++b) {
          const YoungDiagram z = YoungDiagram::from_rectangles({{a, b}, {c, d}});
          const std::string zs = "L(a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                                 ",c=" + std::to_string(c) + ",d=" + std::to_string(d) + ")";
          const int lo = 2 * std::min(b, c);
          const int hi = 2 * (b + c);

          cb.tally("witness-lower-bound");
          try {
            const LWitness lw = witness_L(a, b, c, d);
            if (lw.achieved_tau < lo) {
              cb.fail("witness-lower-bound", zs + ": achieved " +
                                                 std::to_string(lw.achieved_tau) +
                                                 " below " + std::to_string(lo));
            }
            GrowthTrace tr = run(lw.zero_set, standard_arrangement(lw.spec));
            cb.collect("structure-audits", zs + " witness l-line", audit_l_line(tr));
            cb.collect("structure-audits", zs + " witness crosspoint", audit_crosspoint(tr));
          } catch (const std::exception& ex) {
            cb.fail("witness-lower-bound", zs + ": " + ex.what());
          }

          cb.tally("window-search-bound");
          const MuSearchResult ms = mu_search(z, 4, 4, 16);
          if (!ms.found) {
            cb.fail("window-search-bound", zs + ": no spanning set in the 4x4 window");
          } else if (ms.value > hi) {
            cb.fail("window-search-bound", zs + ": window best " + std::to_string(ms.value) +
                                               " exceeds 2(b+c) = " + std::to_string(hi));
          } else {
            GrowthTrace wr = run(z, ms.witness);
            cb.collect("structure-audits", zs + " window-best l-line", audit_l_line(wr));
            cb.collect("structure-audits", zs + " window-best crosspoint", audit_crosspoint(wr));
          }

          cb.tally("thin-search-bound");
          const MuThResult th = mu_th_search(z);
          if (!th.found) {
            cb.fail("thin-search-bound", zs + ": no spanning spec within default caps");
          } else if (th.value > hi) {
            cb.fail("thin-search-bound", zs + ": thin best " + std::to_string(th.value) +
                                             " exceeds 2(b+c) = " + std::to_string(hi));
          }
        }
      }
    }
  }
}

void audit_thresholds_family(CheckBuilder& cb, int cap) {
  for (int theta = 1; theta <= cap; ++theta) {
    const YoungDiagram z = YoungDiagram::staircase(1, 1, theta);
    const std::string zs = "threshold theta=" + std::to_string(theta);
    const int s = z.largest_square();
    const MuEnResult me = mu_en_exact(z);

    cb.tally("mu-en-window");
    if (me.value < ceil_sqrt(s) || me.value > 4 * s + 1) {
      cb.fail("mu-en-window", zs + ": mu_en " + std::to_string(me.value) + " outside [" +
                                  std::to_string(ceil_sqrt(s)) + ", " +
                                  std::to_string(4 * s + 1) + "]");
    }

    cb.tally("ratslope-sound");
    const RatslopeResult rs = ratslope_best(z, 4);
    if (rs.bound > me.value) {
      cb.fail("ratslope-sound", zs + ": ratslope bound " + std::to_string(rs.bound) +
                                    " exceeds mu_en " + std::to_string(me.value));
    }

    cb.tally("mu-window-report");
    cb.note("mu-window-report", zs + ": mu_en = " + std::to_string(me.value) +
                                    ", mu window " + std::to_string(theta + 1) +
                                    " <= mu <= " + std::to_string(2 * theta * theta + 5));

    EnhancedTrace tr = run_enhanced(z, me.witness);
    cb.collect("structure-audits", zs + " (mu-en witness)",
               audit_enhanced_structure(tr, z, me.witness));
  }
}

bool parse_two_ints(const std::string& text, char sep, int& x, int& y) {
  const size_t pos = text.find(sep);
  if (pos == std::string::npos) return false;
  try {
    size_t used = 0;
    x = std::stoi(text.substr(0, pos), &used);
    if (used != pos) return false;
    const std::string rest = text.substr(pos + 1);
    y = std::stoi(rest, &used);
    return used == rest.size();
  } catch (const std::exception&) {
    return false;
  }
}

bool parse_one_int(const std::string& text, int& x) {
  try {
    size_t used = 0;
    x = std::stoi(text, &used);
    return used == text.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

AuditReport audit_family(const std::string& family) {
  AuditReport rep;
  rep.family = family;
  CheckBuilder cb(rep);
  const auto bad = [&](const std::string& why) {
    return std::invalid_argument("audit family '" + family + "': " + why +
                                 "; known families: all-MxN (M+N <= 8), "
                                 "rectangles-MxN (M,N <= 6), l-shapes-K (2 <= K <= 5), "
                                 "thresholds-K (1 <= K <= 6)");
  };
  int x = 0, y = 0;
  if (family.rfind("all-", 0) == 0) {
    if (!parse_two_ints(family.substr(4), 'x', x, y)) throw bad("malformed size");
    if (x < 1 || y < 1 || x + y > 8) throw bad("size out of range");
    audit_all_family(cb, x, y);
  } else if (family.rfind("rectangles-", 0) == 0) {
    if (!parse_two_ints(family.substr(11), 'x', x, y)) throw bad("malformed size");
    if (x < 1 || y < 1 || x > 6 || y > 6) throw bad("size out of range");
    audit_rectangles_family(cb, x, y);
  } else if (family.rfind("l-shapes-", 0) == 0) {
    if (!parse_one_int(family.substr(9), x)) throw bad("malformed cap");
    if (x < 2 || x > 5) throw bad("cap out of range");
    audit_l_family(cb, x);
  } else if (family.rfind("thresholds-", 0) == 0) {
    if (!parse_one_int(family.substr(11), x)) throw bad("malformed cap");
    if (x < 1 || x > 6) throw bad("cap out of range");
    audit_thresholds_family(cb, x);
  } else {
    throw bad("unknown family");
  }
  return rep;
}

}  // namespace growth
