#pragma once

// Extremal quantities of a zero-set: exact mu_en by enumeration over
// sub-diagram/residual pairs (OpenMP kernel + serial reference), certified
// lower-bound searches for mu_th and mu, rational-slope lower bounds, the
// closed-form bound calculators and the batch audit families.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "growth/enhanced.hpp"
#include "growth/regular.hpp"
#include "growth/thin.hpp"
#include "growth/young.hpp"

namespace growth {

// Smallest t >= 0 with t*t >= s.
int ceil_sqrt(long long s);

// Exact spanning-time maximum for the rectangle zero-set R_{m,n}:
// 2*min(m,n) when m != n, 2n-1 when m == n >= 2, and 2 for the 1x1 square
// (every nonempty initial set spans R_{1,1} in exactly two steps).
int rectangle_mu_formula(int m, int n);

// Every Young diagram contained in z, generated depth-first in lexicographic
// order on row sequences (empty diagram first). Count is C(m+n, n)-bounded.
std::vector<YoungDiagram> subdiagrams(const YoungDiagram& z);

struct MuEnResult {
  int value = 0;
  EnhancementPair witness;
  long long candidates = 0;
};

// Exact mu_en(z): maximize tau_en over pairs (R, z [-] R) for all R inside z.
// The residual partner is minimal and spanning, and enlarging the partner never
// slows the dynamics, so this reduced enumeration attains the full maximum.
// Ties break toward the earliest candidate, so the parallel kernel and the
// serial reference return identical results for any thread count.
MuEnResult mu_en_exact(const YoungDiagram& z);
MuEnResult mu_en_exact_serial(const YoungDiagram& z);
// Independent cross-check: maximize over all pairs (R inside z, C inside z)
// that span. Must equal mu_en_exact's value.
MuEnResult mu_en_full_enumeration(const YoungDiagram& z);

struct ThinSearchCaps {
  int max_entry = 0;  // 0 = derive max(width, height) + 1 from the zero-set
  int max_len = 4;
  int max_w = 4;
};

struct MuThResult {
  bool found = false;  // false when no spec in the cap range spans
  int value = 0;
  ThinSetSpec witness;
  long long candidates = 0;
};

// Certified lower bound for mu_th: slowest spanning standard arrangement over
// all specs within the caps. Parallel kernel + serial reference, identical.
MuThResult mu_th_search(const YoungDiagram& z, ThinSearchCaps caps = {});
MuThResult mu_th_search_serial(const YoungDiagram& z, ThinSearchCaps caps = {});

struct MuSearchResult {
  bool found = false;
  int value = 0;
  SiteSet witness;
  long long candidates = 0;
};

// Certified lower bound for mu: exhaustive scan of the nonempty subsets of the
// window [0,w) x [0,h) with at most max_sites sites. Guard: w*h <= 16; larger
// windows must use the random-restart variant. Every spanning candidate is
// checked against the unconditional 2mn+5 bound (violation = internal error).
MuSearchResult mu_search(const YoungDiagram& z, int window_w, int window_h,
                         int max_sites);
MuSearchResult mu_search_random(const YoungDiagram& z, int window_w, int window_h,
                                int max_sites, long long samples, std::uint64_t seed);

struct RatslopeResult {
  int a = 1, b = 1;
  int k = 1;       // least k with a*i + b*j < k*a*b on the whole zero-set
  Site witness{};  // lex-smallest maximizer on the top slope band
  int bound = 0;   // certified lower bound for mu_en
  int k1 = 0, k2 = 0;
  EnhancementPair pair;  // (S_{a,b,k1}, S_{a,b,k2}), spans by the staircase identity
};

RatslopeResult ratslope_bound(const YoungDiagram& z, int a, int b);
RatslopeResult ratslope_best(const YoungDiagram& z, int max_ab);

// Witness pair with tau_en >= ceil(sqrt(s)), s the largest inscribed square:
// rows/columns route when one direction has at most sqrt(s) equal long lines,
// otherwise the shifted staircase route, lifted back shift by shift.
struct GeneralLbWitness {
  enum class Route { rows, columns, staircase };
  Route route = Route::rows;
  int target = 0;  // ceil(sqrt(s))
  int achieved = 0;
  int d_c = 0, d_r = 0;  // shifts used by the staircase route
  EnhancementPair pair;
};

GeneralLbWitness general_lb_witness(const YoungDiagram& z);

struct MuWindow {
  int w = 4, h = 4;
  int max_sites = 16;
};

struct BoundsOptions {
  int max_ab = 4;                            // ratslope scan range
  bool exact_mu_en = true;                   // compute mu_en when feasible
  long long mu_en_candidate_cap = 200000;    // skip exact beyond this many R's
  std::optional<ThinSearchCaps> mu_th_caps;  // run the thin search when set
  std::optional<MuWindow> mu_window;         // run the window search when set
};

struct BoundsReport {
  std::string zero_set;
  int m = 0, n = 0;  // bounding rectangle (width, height)
  int s = 0;         // largest inscribed square side
  long long cells = 0;
  int mu_upper_general = 0;  // 2mn+5
  int mu_en_upper = 0;       // 4s+1
  int mu_th_upper = 0;       // 8s+2
  int mu_en_lower = 0;       // ceil(sqrt(s))
  std::optional<int> mu_th_lower;  // ceil(sqrt(s-1)), only when s >= 1
  std::optional<RatslopeResult> ratslope;
  std::optional<MuEnResult> mu_en;
  std::optional<MuThResult> mu_th;
  std::optional<MuSearchResult> mu;

  // Chain consistency across everything present; throws internal_error.
  void validate() const;
};

BoundsReport bounds(const YoungDiagram& z, const BoundsOptions& opts = {});

struct AuditCheck {
  std::string name;
  long long cases = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;  // informational, never gate
  bool pass() const { return failures.empty(); }
};

struct AuditReport {
  std::string family;
  std::vector<AuditCheck> checks;
  bool pass() const;
};

// Families: "all-MxN" (every zero-set inside R_{M,N}; M+N <= 8),
// "rectangles-MxN" (all R_{m,n} with m <= M, n <= N <= 6, window search
// included), "l-shapes-K" (all R_{a,b} u R_{c,d} with a,d <= K <= 5),
// "thresholds-K" (S_{1,1,theta} for theta <= K <= 6, report-only mu window).
// Unknown family -> invalid_argument.
AuditReport audit_family(const std::string& family);

}  // namespace growth
