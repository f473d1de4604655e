// Integration gate: one pass/fail line per acceptance criterion, nonzero exit
// if any criterion fails. Criteria 1-5 run dedicated scenarios; 6-10 slice the
// batch audit families so each theorem-level guarantee is exercised exactly
// once.

#include <growth/enhanced.hpp>
#include <growth/errors.hpp>
#include <growth/extremal.hpp>
#include <growth/regular.hpp>
#include <growth/thin.hpp>
#include <growth/young.hpp>

#include <algorithm>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"

using growth::AuditReport;
using growth::EnhancedTrace;
using growth::EnhancementPair;
using growth::GrowthTrace;
using growth::Site;
using growth::SiteSet;
using growth::YoungDiagram;

namespace {

struct Criterion {
  std::string what;
  bool ok = true;
  std::string detail;

  void fail(const std::string& msg) {
    ok = false;
    if (detail.empty()) detail = msg;
  }
  void expect(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
  }
};

// Fold the named checks of an audit report into a criterion.
void fold_checks(Criterion& c, const AuditReport& rep,
                 const std::vector<std::string>& names) {
  for (const std::string& name : names) {
    bool seen = false;
    for (const auto& check : rep.checks) {
      if (check.name != name) continue;
      seen = true;
      c.expect(check.cases >= 1, rep.family + "/" + name + ": no cases ran");
      if (!check.failures.empty())
        c.fail(rep.family + "/" + name + ": " + check.failures.front());
    }
    if (!seen) c.fail(rep.family + " has no check named " + name);
  }
}

std::string site_str(Site s) {
  return "(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
}

}  // namespace

int main() {
  std::vector<Criterion> cs(10);

  // ---- 1. Figure-1 regression ------------------------------------------
  {
    Criterion& c = cs[0];
    c.what = "figure-1 regression (fixation at t=2, verdict does-not-span)";
    const YoungDiagram z = YoungDiagram::from_rows({4, 3, 1});
    const SiteSet a = SiteSet::of({{1, 3}, {1, 5}, {3, 1}, {3, 4}, {4, 3}});
    const GrowthTrace tr = growth::run(z, a);
    c.expect(!tr.spans, "trajectory unexpectedly spans");
    c.expect(tr.verdict_time == 2,
             "fixation at t=" + std::to_string(tr.verdict_time) + ", expected 2");
    c.expect(tr.states.size() == 3, "trace length != 3");
    if (tr.states.size() == 3) {
      std::set<std::pair<int, int>> a1, a2;
      for (Site s : a.sites) a1.insert({s.i, s.j});
      for (Site s : std::vector<Site>{{1, 1}, {3, 3}, {1, 4}, {3, 5}}) a1.insert({s.i, s.j});
      a2 = a1;
      for (int j = 0; j < 6; ++j) {
        a2.insert({1, j});
        a2.insert({3, j});
      }
      for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 6; ++i) {
          const bool w1 = a1.count({i, j}) > 0;
          const bool w2 = a2.count({i, j}) > 0;
          if (tr.states[1].site_occupied({i, j}) != w1)
            c.fail("t=1 mismatch at " + site_str({i, j}));
          if (tr.states[2].site_occupied({i, j}) != w2)
            c.fail("t=2 mismatch at " + site_str({i, j}));
        }
      const auto& last = tr.states[2];
      c.expect(last.col_covered(last.col_class_of(1)), "column 1 not covered at t=2");
      c.expect(last.col_covered(last.col_class_of(3)), "column 3 not covered at t=2");
      c.expect(!last.row_covered(last.row_class_of(3)), "row 3 wrongly covered at t=2");
      for (const std::string& v : growth::audit_crosspoint(tr))
        cs[9].fail("figure-1 crosspoint: " + v);
    }
  }

  // ---- 2. Figure-2 regression ------------------------------------------
  {
    Criterion& c = cs[1];
    c.what = "figure-2 regression (infimal sum of the depicted diagrams)";
    const YoungDiagram x = YoungDiagram::from_columns({2, 2, 1});
    const YoungDiagram y = YoungDiagram::from_columns({3, 1});
    const YoungDiagram got = boxplus(x, y);
    c.expect(got.columns() == std::vector<int>{5, 3, 2, 2, 1},
             "columns " + format_diagram(got.transpose()) + " != 5 3 2 2 1");
    c.expect(got == oracle::boxplus_oracle(x, y), "disagrees with the sumset oracle");
  }

  // ---- 3. Young-algebra property suite ---------------------------------
  {
    Criterion& c = cs[2];
    c.what = "young algebra laws on 1000 random triples vs sumset oracle";
    std::mt19937_64 rng(101);
    for (int t = 0; t < 1000 && c.ok; ++t) {
      const YoungDiagram x = oracle::random_diagram(rng, 8, 8);
      const YoungDiagram y = oracle::random_diagram(rng, 8, 8);
      const YoungDiagram z = oracle::random_diagram(rng, 8, 8);
      const YoungDiagram xy = boxplus(x, y);
      const std::string ctx = "triple " + std::to_string(t) + ": ";
      c.expect(xy == oracle::boxplus_oracle(x, y), ctx + "sum != oracle");
      c.expect(boxplus(x, YoungDiagram()) == x, ctx + "identity law");
      c.expect(xy == boxplus(y, x), ctx + "commutativity");
      c.expect(boxplus(xy, z) == boxplus(x, boxplus(y, z)), ctx + "associativity");
      c.expect(xy.intersect(boxplus(z, y)) == boxplus(x.intersect(z), y),
               ctx + "intersection law");
      c.expect(boxplus(x.intersect(z), y).subset_of(xy), ctx + "monotonicity");
      const YoungDiagram res = boxminus(z, y);
      c.expect(res.subset_of(z), ctx + "residual not inside z");
      c.expect(z.subset_of(boxplus(res, y)), ctx + "residual does not cover");
      for (Site corner : oracle::removable_corners(res))
        c.expect(!z.subset_of(boxplus(oracle::remove_cell(res, corner), y)),
                 ctx + "residual not minimal at " + site_str(corner));
    }
  }

  // ---- 4. Staircase identity -------------------------------------------
  {
    Criterion& c = cs[3];
    c.what = "staircase identity S+S=S for all a,b,k1,k2 <= 4";
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b)
        for (int k1 = 1; k1 <= 4; ++k1)
          for (int k2 = 1; k2 <= 4; ++k2) {
            const YoungDiagram got = boxplus(YoungDiagram::staircase(a, b, k1),
                                             YoungDiagram::staircase(a, b, k2));
            if (got != YoungDiagram::staircase(a, b, k1 + k2))
              c.fail("a=" + std::to_string(a) + " b=" + std::to_string(b) +
                     " k1=" + std::to_string(k1) + " k2=" + std::to_string(k2));
          }
  }

  // ---- 5. Enhanced-dynamics characterization ---------------------------
  {
    Criterion& c = cs[4];
    c.what = "enhanced spanning iff containment, 1000 random cases";
    std::mt19937_64 rng(102);
    int spanning = 0;
    for (int t = 0; t < 1000 && c.ok; ++t) {
      const YoungDiagram z = oracle::random_diagram(rng, 6, 6);
      const EnhancementPair e = EnhancementPair::from_diagrams(
          oracle::random_diagram(rng, 6, 6), oracle::random_diagram(rng, 6, 6));
      const std::string ctx = "case " + std::to_string(t) + ": ";
      const bool contained = growth::spans_by_containment(z, e);
      const EnhancedTrace tr = growth::run_enhanced(z, e);
      c.expect(tr.spans == contained, ctx + "containment disagrees with simulation");
      if (tr.spans) {
        ++spanning;
        const int m = static_cast<int>(e.r.size());
        const int n = static_cast<int>(e.c.size());
        c.expect(*tr.tau <= m + n + 1, ctx + "tau_en exceeds M+N+1");
        try {
          c.expect(growth::partition_bound_check(z, e), ctx + "block containment law");
        } catch (const std::exception& ex) {
          c.fail(ctx + ex.what());
        }
      }
      for (const std::string& v : growth::audit_enhanced_structure(tr, z, e))
        cs[9].fail(ctx + "enhanced structure: " + v);
    }
    c.expect(spanning >= 100, "sample too skewed: only " + std::to_string(spanning) +
                                  " spanning cases");
  }

  // ---- 6-10. Batch audit families --------------------------------------
  const AuditReport all3 = growth::audit_family("all-3x3");
  const AuditReport rect4 = growth::audit_family("rectangles-4x4");
  const AuditReport l4 = growth::audit_family("l-shapes-4");
  const AuditReport th4 = growth::audit_family("thresholds-4");

  cs[5].what = "exact mu_en audit over all 20 diagrams inside the 3x3 square";
  fold_checks(cs[5], all3,
              {"mu-en-window", "reduced-equals-full", "shift-monotone", "then2-bound",
               "ratslope-sound"});

  cs[6].what = "rectangle exactness: closed-form witnesses and window search";
  fold_checks(cs[6], rect4, {"witness-exact", "window-search-bound"});

  cs[7].what = "L-shape window: witness lower bounds and search upper bounds";
  fold_checks(cs[7], l4, {"witness-lower-bound", "window-search-bound", "thin-search-bound"});

  cs[8].what = "thin<->enhanced bridge and thin-search bounds inside 3x3";
  fold_checks(cs[8], all3, {"thin-bridge", "thin-search-bounds"});

  cs[9].what = "structural runtime assertions across all audited runs";
  for (const AuditReport* rep : {&all3, &rect4, &l4, &th4})
    fold_checks(cs[9], *rep, {"structure-audits"});

  int failures = 0;
  for (size_t k = 0; k < cs.size(); ++k) {
    const Criterion& c = cs[k];
    std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << (k + 1) << ": "
              << c.what;
    if (!c.ok) std::cout << " -- " << c.detail;
    std::cout << '\n';
    if (!c.ok) ++failures;
  }
  if (failures > 0) {
    std::cout << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all 10 criteria passed\n";
  return 0;
}
