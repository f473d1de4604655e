// growthtool: command-line front end for the growth library.
//
// Verbs: sim, tau-en, mu-en, mu-th, mu, bounds, ratslope, audit, render.
// All inputs are accepted inline or as file paths. Text reports are
// `key = value` lines plus line-oriented step records; --json additionally
// writes a structured report.
//
// Exit codes: 0 success (audit pass), 1 audit failure, 2 usage/input error,
// 3 internal inconsistency (a certified invariant failed at runtime).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "growth/enhanced.hpp"
#include "growth/errors.hpp"
#include "growth/extremal.hpp"
#include "growth/regular.hpp"
#include "growth/render.hpp"
#include "growth/thin.hpp"
#include "growth/young.hpp"

namespace {

using growth::EnhancementPair;
using growth::SiteSet;
using growth::YoungDiagram;
using ordered_json = nlohmann::ordered_json;

// Inline text or a path to a file holding the same format.
std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot read input file '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

// Site lists are line-oriented; inline input separates pairs with ';'.
std::string split_inline_sites(std::string text) {
  for (char& ch : text) {
    if (ch == ';' || ch == ',') ch = '\n';
  }
  return text;
}

std::string join_ints(const std::vector<int>& v) {
  if (v.empty()) return "-";
  std::ostringstream out;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) out << ' ';
    out << v[k];
  }
  return out.str();
}

std::string join_sites(const SiteSet& a) {
  if (a.empty()) return "-";
  std::ostringstream out;
  for (size_t k = 0; k < a.sites.size(); ++k) {
    if (k) out << "; ";
    out << a.sites[k].i << ' ' << a.sites[k].j;
  }
  return out.str();
}

int covered_lines(const growth::ExtendedState& st) {
  int covered = 0;
  for (int rj = 0; rj < st.row_classes(); ++rj) covered += st.row_covered(rj) ? 1 : 0;
  for (int ci = 0; ci < st.col_classes(); ++ci) covered += st.col_covered(ci) ? 1 : 0;
  return covered;
}

struct Output {
  std::ostringstream text;
  ordered_json js;

  void kv(const std::string& key, const std::string& value) {
    text << key << " = " << value << '\n';
    js[key] = value;
  }
  void kv(const std::string& key, long long value) {
    text << key << " = " << value << '\n';
    js[key] = value;
  }
  void raw(const std::string& line) { text << line << '\n'; }
};

struct GlobalOpts {
  std::string out_path;
  std::string json_path;
};

void emit(const GlobalOpts& g, Output& o) {
  const std::string text = o.text.str();
  if (g.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(g.out_path);
    if (!f) throw std::invalid_argument("cannot write output file '" + g.out_path + "'");
    f << text;
  }
  if (!g.json_path.empty()) {
    std::ofstream f(g.json_path);
    if (!f) throw std::invalid_argument("cannot write JSON file '" + g.json_path + "'");
    f << o.js.dump(2) << '\n';
  }
}

YoungDiagram parse_zeroset_arg(const std::string& arg) {
  return growth::parse_diagram(read_input(arg));
}

void parse_window_arg(const std::string& text, int& w, int& h) {
  const size_t pos = text.find('x');
  if (pos == std::string::npos) {
    throw std::invalid_argument("window must be WxH, e.g. 4x4");
  }
  try {
    size_t used = 0;
    w = std::stoi(text.substr(0, pos), &used);
    if (used != pos) throw std::invalid_argument("");
    const std::string rest = text.substr(pos + 1);
    h = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("window must be WxH, e.g. 4x4");
  }
}

growth::ThinSearchCaps parse_caps_arg(const std::string& text) {
  std::string t = text;
  for (char& ch : t) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(t);
  growth::ThinSearchCaps caps;
  if (!(in >> caps.max_entry >> caps.max_len >> caps.max_w)) {
    throw std::invalid_argument("caps must be three integers: max_entry max_len max_w");
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("caps must be exactly three integers");
  return caps;
}

// ---------------------------------------------------------------- verbs ----

struct SimArgs {
  std::string zeroset, init, thin, render = "none";
  int max_steps = 0;
  bool print_init = false;
};

void run_sim(const GlobalOpts& g, const SimArgs& a) {
  const YoungDiagram z = parse_zeroset_arg(a.zeroset);
  if (a.init.empty() == a.thin.empty()) {
    throw std::invalid_argument("provide exactly one of --init and --thin");
  }
  SiteSet init;
  if (!a.init.empty()) {
    init = growth::parse_sites(split_inline_sites(read_input(a.init)));
  } else {
    init = growth::standard_arrangement(growth::parse_thin_spec(read_input(a.thin)));
  }
  const std::optional<int> cap =
      a.max_steps > 0 ? std::optional<int>(a.max_steps) : std::nullopt;
  const growth::GrowthTrace tr = growth::run(z, init, cap);

  Output o;
  o.kv("zeroset", growth::format_diagram(z));
  o.kv("init_sites", static_cast<long long>(init.size()));
  if (a.print_init) o.kv("init", join_sites(init));
  ordered_json steps = ordered_json::array();
  for (size_t t = 0; t < tr.states.size(); ++t) {
    const auto& st = tr.states[t];
    std::string verdict = "pending";
    if (static_cast<int>(t) == tr.verdict_time) verdict = tr.spans ? "spans" : "fixates";
    std::ostringstream line;
    line << "step=" << t << " occupied=" << st.occupied_cells()
         << " lines_covered=" << covered_lines(st) << " verdict=" << verdict;
    o.raw(line.str());
    steps.push_back({{"step", t},
                     {"occupied", st.occupied_cells()},
                     {"lines_covered", covered_lines(st)},
                     {"verdict", verdict}});
  }
  o.js["steps"] = std::move(steps);
  o.kv("verdict", tr.spans ? "spans" : "does-not-span");
  if (tr.spans) {
    o.kv("tau", static_cast<long long>(*tr.tau));
  } else {
    o.kv("fixation_time", static_cast<long long>(tr.verdict_time));
  }
  if (tr.tau_line) o.kv("tau_line", static_cast<long long>(*tr.tau_line));
  if (a.render != "none") {
    const std::string doc = growth::render_trace(tr, growth::parse_render_mode(a.render));
    o.raw("");
    o.text << doc;
    o.js["render"] = doc;
  }
  emit(g, o);
}

struct TauEnArgs {
  std::string zeroset, enh, render = "none";
};

void run_tau_en(const GlobalOpts& g, const TauEnArgs& a) {
  const YoungDiagram z = parse_zeroset_arg(a.zeroset);
  const EnhancementPair e = growth::parse_enhancements(read_input(a.enh));
  const bool by_containment = growth::spans_by_containment(z, e);
  const growth::EnhancedTrace tr = growth::run_enhanced(z, e);

  Output o;
  o.kv("zeroset", growth::format_diagram(z));
  o.kv("r", join_ints(e.r));
  o.kv("c", join_ints(e.c));
  o.kv("containment", by_containment ? "spans" : "does-not-span");
  o.kv("simulation", tr.spans ? "spans" : "does-not-span");
  if (by_containment != tr.spans) {
    throw growth::internal_error("containment and simulation verdicts disagree");
  }
  if (tr.spans) {
    o.kv("tau_en", static_cast<long long>(*tr.tau));
    if (!growth::partition_bound_check(z, e)) {
      throw growth::internal_error("partition bound check failed on a spanning pair");
    }
    o.kv("partition_bound", "ok");
  } else {
    o.kv("fixation_time", static_cast<long long>(tr.verdict_time));
  }
  if (a.render != "none") {
    const std::string doc =
        growth::render_enhanced_trace(tr, e, growth::parse_render_mode(a.render));
    o.raw("");
    o.text << doc;
    o.js["render"] = doc;
  }
  emit(g, o);
}

struct MuEnArgs {
  std::string zeroset;
  bool serial = false;
  bool cross_validate = false;
};

void run_mu_en(const GlobalOpts& g, const MuEnArgs& a) {
  const YoungDiagram z = parse_zeroset_arg(a.zeroset);
  const growth::MuEnResult r =
      a.serial ? growth::mu_en_exact_serial(z) : growth::mu_en_exact(z);
  const int s = z.largest_square();

  Output o;
  o.kv("zeroset", growth::format_diagram(z));
  o.kv("s", static_cast<long long>(s));
  o.kv("candidates", r.candidates);
  o.kv("mu_en", static_cast<long long>(r.value));
  o.kv("witness_r", join_ints(r.witness.r));
  o.kv("witness_c", join_ints(r.witness.c));
  o.kv("mu_en_lower", static_cast<long long>(growth::ceil_sqrt(s)));
  o.kv("mu_en_upper", static_cast<long long>(4 * s + 1));
  if (a.cross_validate) {
    const growth::MuEnResult full = growth::mu_en_full_enumeration(z);
    if (full.value != r.value) {
      throw growth::internal_error("full pair enumeration disagrees with the reduced one");
    }
    o.kv("cross_check", "match (" + std::to_string(full.candidates) + " spanning pairs)");
  }
  emit(g, o);
}

struct MuThArgs {
  std::string zeroset, caps;
  bool serial = false;
};

void run_mu_th(const GlobalOpts& g, const MuThArgs& a) {
  const YoungDiagram z = parse_zeroset_arg(a.zeroset);
  growth::ThinSearchCaps caps;
  if (!a.caps.empty()) caps = parse_caps_arg(a.caps);
  const growth::MuThResult r =
      a.serial ? growth::mu_th_search_serial(z, caps) : growth::mu_th_search(z, caps);
  const int s = z.largest_square();
  const int entry_cap =
      caps.max_entry == 0 ? std::max(z.width(), z.height()) + 1 : caps.max_entry;

  Output o;
  o.kv("zeroset", growth::format_diagram(z));
  o.kv("caps", std::to_string(entry_cap) + " " + std::to_string(caps.max_len) + " " +
                   std::to_string(caps.max_w));
  o.kv("candidates", r.candidates);
  o.kv("found", r.found ? "yes" : "no");
  if (r.found) {
    o.kv("mu_th_lb", static_cast<long long>(r.value));
    o.kv("witness", growth::format_thin_spec(r.witness));
    o.kv("witness_sites", static_cast<long long>(r.witness.total_sites()));
  }
  o.kv("mu_th_upper", static_cast<long long>(8 * s + 2));
  emit(g, o);
}

struct MuArgs {
  std::string zeroset, window = "4x4";
  int max_sites = 16;
  bool random = false;
  long long samples = 20000;
  std::uint64_t seed = 1;
};

void run_mu(const GlobalOpts& g, const MuArgs& a) {
  const YoungDiagram z = parse_zeroset_arg(a.zeroset);
  int w = 0, h = 0;
  parse_window_arg(a.window, w, h);
  const growth::MuSearchResult r =
      a.random ? growth::mu_search_random(z, w, h, a.max_sites, a.samples, a.seed)
               : growth::mu_search(z, w, h, a.max_sites);

  Output o;
  o.kv("zeroset", growth::format_diagram(z));
  o.kv("window", a.window);
  o.kv("max_sites", static_cast<long long>(a.max_sites));
  o.kv("mode", a.random ? "random" : "exhaustive");
  if (a.random) o.kv("seed", static_cast<long long>(a.seed));
  o.kv("candidates", r.candidates);
  o.kv("found", r.found ? "yes" : "no");
  if (r.found) {
    o.kv("mu_lb", static_cast<long long>(r.value));
    o.kv("witness", join_sites(r.witness));
  }
  o.kv("mu_upper", static_cast<long long>(2 * z.width() * z.height() + 5));
  emit(g, o);
}

struct BoundsArgs {
  std::string zeroset, caps, window = "4x4";
  int max_ab = 4;
  int max_sites = 16;
  bool skip_exact = false;
  bool with_thin = false;
  bool with_window = false;
  long long candidate_cap = 200000;
};

void run_bounds(const GlobalOpts& g, const BoundsArgs& a) {
  const YoungDiagram z = parse_zeroset_arg(a.zeroset);
  growth::BoundsOptions opts;
  opts.max_ab = a.max_ab;
  opts.exact_mu_en = !a.skip_exact;
  opts.mu_en_candidate_cap = a.candidate_cap;
  if (a.with_thin) {
    growth::ThinSearchCaps caps;
    if (!a.caps.empty()) caps = parse_caps_arg(a.caps);
    opts.mu_th_caps = caps;
  }
  if (a.with_window) {
    growth::MuWindow win;
    parse_window_arg(a.window, win.w, win.h);
    win.max_sites = a.max_sites;
    opts.mu_window = win;
  }
  const growth::BoundsReport rep = growth::bounds(z, opts);

  Output o;
  o.kv("zeroset", rep.zero_set);
  o.kv("m", static_cast<long long>(rep.m));
  o.kv("n", static_cast<long long>(rep.n));
  o.kv("s", static_cast<long long>(rep.s));
  o.kv("cells", rep.cells);
  o.kv("mu_upper_general", static_cast<long long>(rep.mu_upper_general));
  o.kv("mu_en_upper", static_cast<long long>(rep.mu_en_upper));
  o.kv("mu_th_upper", static_cast<long long>(rep.mu_th_upper));
  o.kv("mu_en_lower", static_cast<long long>(rep.mu_en_lower));
  if (rep.mu_th_lower) o.kv("mu_th_lower", static_cast<long long>(*rep.mu_th_lower));
  if (rep.ratslope) {
    o.kv("ratslope_bound", static_cast<long long>(rep.ratslope->bound));
    o.kv("ratslope_a", static_cast<long long>(rep.ratslope->a));
    o.kv("ratslope_b", static_cast<long long>(rep.ratslope->b));
    o.kv("ratslope_k", static_cast<long long>(rep.ratslope->k));
  }
  if (rep.mu_en) {
    o.kv("mu_en", static_cast<long long>(rep.mu_en->value));
    o.kv("mu_en_candidates", rep.mu_en->candidates);
    o.kv("mu_en_witness_r", join_ints(rep.mu_en->witness.r));
    o.kv("mu_en_witness_c", join_ints(rep.mu_en->witness.c));
  }
  if (rep.mu_th) {
    o.kv("mu_th_found", rep.mu_th->found ? "yes" : "no");
    if (rep.mu_th->found) {
      o.kv("mu_th_lb", static_cast<long long>(rep.mu_th->value));
      o.kv("mu_th_witness", growth::format_thin_spec(rep.mu_th->witness));
    }
  }
  if (rep.mu) {
    o.kv("mu_found", rep.mu->found ? "yes" : "no");
    if (rep.mu->found) {
      o.kv("mu_lb", static_cast<long long>(rep.mu->value));
      o.kv("mu_witness", join_sites(rep.mu->witness));
    }
  }
  o.kv("chain", "ok");
  emit(g, o);
}

struct RatslopeArgs {
  std::string zeroset;
  int a = 0, b = 0;
  int max_ab = 4;
};

void run_ratslope(const GlobalOpts& g, const RatslopeArgs& args) {
  const YoungDiagram z = parse_zeroset_arg(args.zeroset);
  if ((args.a > 0) != (args.b > 0)) {
    throw std::invalid_argument("provide both --a and --b, or neither");
  }
  const growth::RatslopeResult r = (args.a > 0)
                                       ? growth::ratslope_bound(z, args.a, args.b)
                                       : growth::ratslope_best(z, args.max_ab);

  Output o;
  o.kv("zeroset", growth::format_diagram(z));
  o.kv("a", static_cast<long long>(r.a));
  o.kv("b", static_cast<long long>(r.b));
  o.kv("k", static_cast<long long>(r.k));
  o.kv("witness", std::to_string(r.witness.i) + " " + std::to_string(r.witness.j));
  o.kv("bound", static_cast<long long>(r.bound));
  o.kv("k1", static_cast<long long>(r.k1));
  o.kv("k2", static_cast<long long>(r.k2));
  o.kv("pair_r", join_ints(r.pair.r));
  o.kv("pair_c", join_ints(r.pair.c));
  emit(g, o);
}

struct AuditArgs {
  std::string family;
};

int run_audit(const GlobalOpts& g, const AuditArgs& a) {
  const growth::AuditReport rep = growth::audit_family(a.family);

  Output o;
  o.kv("family", rep.family);
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks) {
    std::ostringstream line;
    line << "check." << c.name << " = " << (c.pass() ? "pass" : "fail")
         << " (cases=" << c.cases << ")";
    o.raw(line.str());
    checks.push_back({{"name", c.name},
                      {"cases", c.cases},
                      {"pass", c.pass()},
                      {"failures", c.failures},
                      {"notes", c.notes}});
  }
  for (const auto& c : rep.checks) {
    for (const auto& n : c.notes) o.raw("note." + c.name + " = " + n);
  }
  constexpr size_t kMaxShown = 20;
  for (const auto& c : rep.checks) {
    for (size_t k = 0; k < c.failures.size() && k < kMaxShown; ++k) {
      o.raw("fail." + c.name + " = " + c.failures[k]);
    }
    if (c.failures.size() > kMaxShown) {
      o.raw("fail." + c.name + " = ... and " +
            std::to_string(c.failures.size() - kMaxShown) + " more");
    }
  }
  o.js["checks"] = std::move(checks);
  o.kv("result", rep.pass() ? "pass" : "fail");
  emit(g, o);
  return rep.pass() ? 0 : 1;
}

struct RenderArgs {
  std::string zeroset, init, thin, enh, mode = "ascii";
};

void run_render(const GlobalOpts& g, const RenderArgs& a) {
  const int sources = (!a.init.empty()) + (!a.thin.empty()) + (!a.enh.empty());
  if (sources > 1) {
    throw std::invalid_argument("provide at most one of --init, --thin, --enh");
  }
  const growth::RenderMode mode = growth::parse_render_mode(a.mode);
  std::string doc;
  if (!a.enh.empty()) {
    if (a.zeroset.empty()) throw std::invalid_argument("--enh requires --zeroset");
    const YoungDiagram z = parse_zeroset_arg(a.zeroset);
    const EnhancementPair e = growth::parse_enhancements(read_input(a.enh));
    doc = growth::render_enhanced_trace(growth::run_enhanced(z, e), e, mode);
  } else if (!a.init.empty() || !a.thin.empty()) {
    SiteSet init;
    if (!a.init.empty()) {
      init = growth::parse_sites(split_inline_sites(read_input(a.init)));
    } else {
      init = growth::standard_arrangement(growth::parse_thin_spec(read_input(a.thin)));
    }
    if (a.zeroset.empty()) {
      if (mode != growth::RenderMode::ascii) {
        throw std::invalid_argument("site-set rendering without a zero-set is ascii-only");
      }
      doc = growth::render_sites(init);
    } else {
      const YoungDiagram z = parse_zeroset_arg(a.zeroset);
      doc = growth::render_trace(growth::run(z, init), mode);
    }
  } else if (!a.zeroset.empty()) {
    if (mode != growth::RenderMode::ascii) {
      throw std::invalid_argument("diagram rendering is ascii-only");
    }
    doc = growth::render_diagram_ascii(parse_zeroset_arg(a.zeroset));
  } else {
    throw std::invalid_argument("nothing to render: provide --zeroset, --init, --thin or --enh");
  }
  Output o;
  o.text << doc;
  o.js["render"] = doc;
  emit(g, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"growthtool: exact simulation and extremal search for neighborhood "
               "growth dynamics on the Hamming plane"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts global;
  app.add_option("--out", global.out_path,
                 "write the text report to this path instead of stdout");
  app.add_option("--json", global.json_path, "also write a JSON report to this path");

  SimArgs sim_args;
  auto* sim = app.add_subcommand("sim", "simulate the regular dynamics T from a finite set");
  sim->add_option("--zeroset", sim_args.zeroset, "zero-set rows, e.g. \"4 3 1\" or \"empty\", or a file")
      ->required();
  sim->add_option("--init", sim_args.init,
                  "initial sites: \"i j\" lines ('#' comments), ';'- or ','-separated inline, or a file");
  sim->add_option("--thin", sim_args.thin,
                  "thin-set spec \"r: 4 2 / c: 2 2 / w: 3\"; its standard arrangement is the initial set");
  sim->add_option("--max-steps", sim_args.max_steps, "step cap (error when exceeded)");
  sim->add_option("--render", sim_args.render, "none | ascii | svg")
      ->check(CLI::IsMember({"none", "ascii", "svg"}));
  sim->add_flag("--print-init", sim_args.print_init, "echo the initial site list");

  TauEnArgs tau_args;
  auto* tau = app.add_subcommand("tau-en", "enhanced dynamics from the empty set");
  tau->add_option("--zeroset", tau_args.zeroset, "zero-set rows or a file")->required();
  tau->add_option("--enh", tau_args.enh, "enhancements \"r: 4 2 1 / c: 3 1\" or a file")
      ->required();
  tau->add_option("--render", tau_args.render, "none | ascii | svg")
      ->check(CLI::IsMember({"none", "ascii", "svg"}));

  MuEnArgs mu_en_args;
  auto* mu_en = app.add_subcommand("mu-en", "exact mu_en by sub-diagram enumeration");
  mu_en->add_option("--zeroset", mu_en_args.zeroset, "zero-set rows or a file")->required();
  mu_en->add_flag("--serial", mu_en_args.serial, "use the serial reference kernel");
  mu_en->add_flag("--cross-validate", mu_en_args.cross_validate,
                  "also run the full pair enumeration and compare");

  MuThArgs mu_th_args;
  auto* mu_th = app.add_subcommand("mu-th", "certified thin lower bound for mu_th");
  mu_th->add_option("--zeroset", mu_th_args.zeroset, "zero-set rows or a file")->required();
  mu_th->add_option("--caps", mu_th_args.caps,
                    "search caps \"max_entry max_len max_w\" (entry 0 = derive from the zero-set)");
  mu_th->add_flag("--serial", mu_th_args.serial, "use the serial reference kernel");

  MuArgs mu_args;
  auto* mu = app.add_subcommand("mu", "certified window lower bound for mu");
  mu->add_option("--zeroset", mu_args.zeroset, "zero-set rows or a file")->required();
  mu->add_option("--window", mu_args.window, "window WxH (exhaustive needs W*H <= 16)");
  mu->add_option("--max-sites", mu_args.max_sites, "maximum sites per candidate");
  mu->add_flag("--random", mu_args.random, "random-restart sampling instead of exhaustive");
  mu->add_option("--samples", mu_args.samples, "random mode: number of samples");
  mu->add_option("--seed", mu_args.seed, "random mode: RNG seed");

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds plus optional searches");
  bounds_cmd->add_option("--zeroset", bounds_args.zeroset, "zero-set rows or a file")->required();
  bounds_cmd->add_option("--max-ab", bounds_args.max_ab, "ratslope scan range");
  bounds_cmd->add_flag("--skip-exact", bounds_args.skip_exact, "skip the exact mu_en enumeration");
  bounds_cmd->add_option("--candidate-cap", bounds_args.candidate_cap,
                         "skip exact mu_en beyond this many sub-diagrams");
  bounds_cmd->add_flag("--with-thin", bounds_args.with_thin, "include the thin search");
  bounds_cmd->add_option("--caps", bounds_args.caps, "thin search caps");
  bounds_cmd->add_flag("--with-window", bounds_args.with_window, "include the window search");
  bounds_cmd->add_option("--window", bounds_args.window, "window WxH for --with-window");
  bounds_cmd->add_option("--max-sites", bounds_args.max_sites, "window search site cap");

  RatslopeArgs rat_args;
  auto* rat = app.add_subcommand("ratslope", "rational-slope lower bound");
  rat->add_option("--zeroset", rat_args.zeroset, "zero-set rows or a file")->required();
  rat->add_option("--a", rat_args.a, "slope numerator (with --b)");
  rat->add_option("--b", rat_args.b, "slope denominator (with --a)");
  rat->add_option("--max-ab", rat_args.max_ab, "scan range when --a/--b are omitted");

  AuditArgs audit_args;
  auto* audit = app.add_subcommand("audit", "run a batch audit family");
  audit->add_option("family", audit_args.family,
                    "all-MxN | rectangles-MxN | l-shapes-K | thresholds-K")
      ->required();

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "render a trace, arrangement or diagram");
  render->add_option("--zeroset", render_args.zeroset, "zero-set rows or a file");
  render->add_option("--init", render_args.init, "initial sites (renders the regular trace)");
  render->add_option("--thin", render_args.thin,
                     "thin spec (renders its trace, or the arrangement without --zeroset)");
  render->add_option("--enh", render_args.enh, "enhancements (renders the enhanced trace)");
  render->add_option("--mode", render_args.mode, "ascii | svg");

  int exit_code = 0;
  try {
    app.parse(argc, argv);
    if (*sim) run_sim(global, sim_args);
    if (*tau) run_tau_en(global, tau_args);
    if (*mu_en) run_mu_en(global, mu_en_args);
    if (*mu_th) run_mu_th(global, mu_th_args);
    if (*mu) run_mu(global, mu_args);
    if (*bounds_cmd) run_bounds(global, bounds_args);
    if (*rat) run_ratslope(global, rat_args);
    if (*audit) exit_code = run_audit(global, audit_args);
    if (*render) run_render(global, render_args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const growth::internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return exit_code;
}
