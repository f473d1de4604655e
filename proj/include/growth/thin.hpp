#pragma once

// Thin sets: initial sets whose every site is alone in its row or alone in its
// column. Up to line permutations any thin set is described by the multiset of
// row-block sizes (>= 2), the multiset of column-block sizes (>= 2) and the
// number of isolated sites; the standard arrangement lays those blocks along an
// antidiagonal chain, vertical blocks top-left, isolated sites in the middle,
// horizontal blocks bottom-right.

#include <optional>
#include <string>
#include <vector>

#include "growth/enhanced.hpp"
#include "growth/regular.hpp"
#include "growth/young.hpp"

namespace growth {

struct ThinSetSpec {
  std::vector<int> rvec;  // horizontal block sizes, weakly decreasing, entries >= 2
  std::vector<int> cvec;  // vertical block sizes, same form
  int w = 0;              // isolated sites

  static ThinSetSpec of(std::vector<int> rvec, std::vector<int> cvec, int w);
  int total_sites() const;
  friend bool operator==(const ThinSetSpec&, const ThinSetSpec&) = default;
};

// Canonical placement inside the frame R_{M0+w+sum(rvec), N0+w+sum(cvec)};
// row counts and column counts come out weakly decreasing and distinct blocks
// pairwise incomparable.
SiteSet standard_arrangement(const ThinSetSpec& spec);

// Deterministic enumeration of every spec with block entries <= max_entry, at
// most max_len blocks per direction and at most max_w isolated sites, ordered
// by w, then rvec, then cvec (vectors by length, then lexicographically).
std::vector<ThinSetSpec> enumerate_thin_specs(int max_entry, int max_len, int max_w);

bool is_thin(const SiteSet& a);

// Block-structure of a thin set (any arrangement). Throws on non-thin input.
ThinSetSpec canonicalize(const SiteSet& a);

// Witness spec for the rectangle zero-set R_{m,n}: closed-form constructions
// for m != n (spanning in exactly 2*min(m,n) steps); a bounded search for the
// m == n target (2n-1 for n >= 2; the degenerate 1x1 case spans in 2).
ThinSetSpec witness_rectangle(int m, int n);

// Witness for the L zero-set R_{a,b} u R_{c,d} (a > c >= 1, d > b >= 1),
// following the reduction route: either drop to the rectangle Z^{v b} or shift
// to Z^{<- (c-b)}. `zero_set` is the reduced/shifted diagram actually grown,
// `achieved_tau` its simulated spanning time (always >= 2*min(b,c));
// `formula_tau` is the informational closed-form value for the shift route.
struct LWitness {
  YoungDiagram zero_set;
  ThinSetSpec spec;
  int achieved_tau = 0;
  std::optional<int> formula_tau;
};

LWitness witness_L(int a, int b, int c, int d);

// Enhancement pair given by the row/column counts of a standard-arrangement
// thin set (counts must be weakly decreasing).
EnhancementPair thin_to_enhancements(const SiteSet& a);

// From a pair spanning for the diagonal shift Z^{v1<-1}, build a thin set whose
// spanning time for Z dominates tau_en(Z^{v1<-1}, e). Throws if e does not span
// for the shifted diagram.
SiteSet enhancements_to_thin(const EnhancementPair& e, const YoungDiagram& z);

// Shape law audit on a truncated-oracle trace started from A u (Young diagram):
// every iterate must again be A u (Young diagram).
std::vector<std::string> audit_union_shape(const GridTrace& trace, const SiteSet& a);

// Text format: "r: 4 2 / c: 2 2 / w: 3" (or the three fields on separate lines).
ThinSetSpec parse_thin_spec(const std::string& text);
std::string format_thin_spec(const ThinSetSpec& spec);

}  // namespace growth
