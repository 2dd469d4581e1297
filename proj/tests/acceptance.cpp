// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include "lexspec/gallery.hpp"
#include "lexspec/render.hpp"
#include "lexspec/serialize.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace lexspec;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool passed;
  std::string detail;
};

std::string points_text(const std::vector<ExtPoint>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + to_string(pts[i]);
  return s + "}";
}

// 1. Characteristic-point sets of the worked cases equal the printed lists.
Outcome golden_sets() {
  auto t0 = Clock::now();
  std::vector<std::string> mismatches;
  for (int c = 1; c <= 8; ++c) {
    GalleryEntry e = gallery_entry("3.7/" + std::to_string(c));
    std::vector<ExtPoint> listed;
    for (const auto& p : e.listed_char_points) listed.emplace_back(p.begin(), p.end());
    std::sort(listed.begin(), listed.end());
    std::vector<ExtPoint> got = all_blocks(e.resolution).char_points();
    if (got != listed)
      mismatches.push_back("(" + std::to_string(c) + ") computed " + points_text(got) + " vs listed " +
                           points_text(listed));
  }
  double t = seconds_since(t0);
  std::ostringstream d;
  d << 8 - mismatches.size() << "/8 cases equal, " << t << " s (limit 1 s)";
  for (const auto& m : mismatches) d << "; " << m;
  return {mismatches.empty() && t < 1.0, d.str()};
}

// 2. saturate/k has k-i+1 blocks at level i and k(k+1)/2 in total.
Outcome tight_bounds() {
  std::ostringstream d;
  bool ok = true;
  for (int k = 1; k <= 6; ++k) {
    BlockReport r = all_blocks(StepResolution::from_observable(saturating_family(k)));
    for (int i = 1; i <= k; ++i) ok = ok && r.counts()[static_cast<std::size_t>(i)] == static_cast<std::size_t>(k - i + 1);
    ok = ok && r.total() == static_cast<std::size_t>(k * (k + 1) / 2);
    d << (k > 1 ? ", " : "") << "k=" << k << ": " << r.total();
  }
  return {ok, "totals " + d.str()};
}

// 3. Randomized suite, 1000 trials.
Outcome random_suite() {
  auto t0 = Clock::now();
  TrialConfig c;
  c.seed = 1;
  c.trials = 1000;
  c.k_min = 1;
  c.k_max = 6;
  c.d_min = 1;
  c.d_max = 2;
  c.n_min = c.n_max = 2;
  c.max_atoms = 12;
  Summary s = run_suite(c);
  double t = seconds_since(t0);
  std::ostringstream d;
  d << s.trials << " trials, " << s.failure_count() << " failures, " << t << " s (target 60 s)";
  for (const auto& f : s.failures) {
    d << "; trial " << f.index << " " << f.check << ": " << f.detail;
    break;
  }
  return {s.failure_count() == 0 && t < 60.0, d.str()};
}

// 4. x_F on the rectangle ring agrees with x and does not depend on the
// decomposition.
std::vector<Box> refine(const Region& r, const std::vector<std::vector<Rational>>& grid, SplitMix64& rng) {
  std::vector<Box> out;
  for (const auto& b : r.boxes()) {
    std::vector<std::vector<Rational>> cuts(b.dim());
    for (std::size_t j = 0; j < b.dim(); ++j) {
      cuts[j].push_back(b[j].lo().value());
      for (const auto& g : grid[j])
        if (b[j].lo().value() < g && g < b[j].hi().value() && rng.uniform(0, 1)) cuts[j].push_back(g);
      cuts[j].push_back(b[j].hi().value());
    }
    std::vector<std::size_t> idx(b.dim(), 0);
    while (true) {
      std::vector<Interval> dims;
      for (std::size_t j = 0; j < b.dim(); ++j) dims.push_back(Interval::closed_open(cuts[j][idx[j]], cuts[j][idx[j] + 1]));
      out.emplace_back(std::move(dims));
      std::size_t j = b.dim();
      while (j-- > 0) {
        if (++idx[j] + 1 < cuts[j].size()) break;
        idx[j] = 0;
      }
      if (j == static_cast<std::size_t>(-1)) break;
    }
  }
  return out;
}

Outcome ring_oracle() {
  TrialConfig c;
  c.seed = 4;
  std::size_t regions = 0, bad = 0;
  std::string first;
  for (std::uint64_t i = 0; i < 200; ++i) {
    DiscreteObservable x = random_observable(c, i);
    StepResolution f = StepResolution::from_observable(x);
    std::vector<std::vector<Rational>> grid = f.breakpoints();
    for (auto& g : grid) {
      g.insert(g.begin(), g.front() - 1);
      g.push_back(g.back() + 1);
    }
    SplitMix64 rng = trial_rng(c.seed ^ 0x5eed, i);
    auto pick = [&](std::size_t j) {
      return grid[j][static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(grid[j].size()) - 1))];
    };
    for (int r = 0; r < 50; ++r) {
      Region reg = Region::empty(x.dim());
      int count = static_cast<int>(rng.uniform(1, 3));
      for (int b = 0; b < count; ++b) {
        Point lo(x.dim()), hi(x.dim());
        for (std::size_t j = 0; j < x.dim(); ++j) {
          Rational u = pick(j), v = pick(j);
          lo[j] = std::min(u, v);
          hi[j] = std::max(u, v);
        }
        reg = region_union(reg, halfopen_box(lo, hi));
      }
      ++regions;
      LexElement truth = x.eval(reg);
      LexElement a = ring_measure(f, refine(reg, grid, rng));
      LexElement b = ring_measure(f, refine(reg, grid, rng));
      if (a != truth || b != truth || ring_measure(f, reg) != truth) {
        ++bad;
        if (first.empty()) first = "observable " + std::to_string(i) + ", region " + to_string(reg);
      }
    }
  }
  std::ostringstream d;
  d << regions << " regions, " << bad << " disagreements";
  if (!first.empty()) d << "; first at " << first;
  return {bad == 0 && regions == 200 * 50, d.str()};
}

// 5. Reconstruction round trip, and the mismatch witness.
Outcome round_trip() {
  TrialConfig c;
  c.seed = 5;
  std::size_t found = 0, bad = 0, scanned = 0;
  for (std::uint64_t i = 0; found < 200 && i < 50000; ++i, ++scanned) {
    DiscreteObservable x = random_observable(c, i);
    StepResolution f = StepResolution::from_observable(x);
    if (!atoms_at_adjoined_points(x, all_blocks(f))) continue;
    ++found;
    ReconstructResult r = reconstruct(f);
    if (r.status != ReconstructResult::Status::Ok || *r.observable != x) ++bad;
  }
  ReconstructResult m = reconstruct(mismatch_resolution());
  bool witness = m.status == ReconstructResult::Status::Mismatch && m.witness_cell.has_value() && m.f_value &&
                 m.candidate_value && *m.f_value != *m.candidate_value;
  std::ostringstream d;
  d << found << " qualifying observables (of " << scanned << " drawn), " << bad << " round-trip failures; mismatch case: "
    << to_string(m.status);
  if (m.witness_cell) {
    d << " at cell";
    for (auto v : *m.witness_cell) d << " " << v;
    d << " (F = " << to_string(*m.f_value) << ", F_x' = " << to_string(*m.candidate_value) << ")";
  }
  return {found == 200 && bad == 0 && witness, d.str()};
}

// 6. k = 1: T_1 is the open orthant above its characteristic point.
Outcome perfect_case() {
  TrialConfig c;
  c.seed = 6;
  c.k_min = c.k_max = 1;
  c.n_min = 1;
  c.n_max = 3;
  std::size_t bad = 0;
  std::array<std::size_t, 4> by_n{};
  for (std::uint64_t i = 0; i < 200; ++i) {
    DiscreteObservable x = random_observable(c, i);
    StepResolution f = StepResolution::from_observable(x);
    ++by_n[x.dim()];
    BlockReport r = all_blocks(f);
    if (r.blocks[1].size() != 1) {
      ++bad;
      continue;
    }
    Point t0;
    for (const auto& e : r.blocks[1][0].char_point) t0.push_back(e.value());
    bool ok = level_regions(f).regions[1] == open_upper_orthant(t0) && point_mass_via_deltas(f, t0).height() == 1;
    bad += ok ? 0 : 1;
  }
  std::ostringstream d;
  d << "200 observables (n=1: " << by_n[1] << ", n=2: " << by_n[2] << ", n=3: " << by_n[3] << "), " << bad
    << " failures";
  return {bad == 0 && by_n[1] && by_n[2] && by_n[3], d.str()};
}

// 7. Staircases beyond the bound: axioms hold, bounds and reconstruction fail.
Outcome pathology() {
  bool ok = true;
  std::ostringstream d;
  for (auto shape : {PathologyShape::Staircase, PathologyShape::ShrinkingAntichain})
    for (int k = 1; k <= 4; ++k) {
      int m = k * (k + 1) / 2 + 1;
      StepResolution f = pathological_family(m, k, shape);
      AxiomReport a = check_axioms(f);
      bool bounds_fail = !bounds_check(all_blocks(f), k).passed;
      bool rec_fail = reconstruct(f).status != ReconstructResult::Status::Ok;
      ok = ok && a.all_passed() && bounds_fail && rec_fail;
      if (k == 3 && shape == PathologyShape::Staircase) {
        d << "k=3, m=7: axioms " << (a.all_passed() ? "pass" : "fail");
        for (const auto& r : a.results)
          if (!r.passed) d << " [" << r.name << ": " << r.witness << "]";
        d << ", bounds " << (bounds_fail ? "fail" : "pass") << ", reconstruct " << to_string(reconstruct(f).status);
      }
    }
  return {ok, d.str()};
}

// 8. Byte-identical JSON and SVG for identical inputs and seeds.
std::string cli_output(const std::string& args) {
  std::string out;
  FILE* p = popen(("LEXSPEC_COLOR=0 " + std::string(LEXSPEC_CLI) + " " + args + " 2>&1").c_str(), "r");
  if (!p) return out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  pclose(p);
  return out;
}

Outcome determinism() {
  auto produce = [] {
    std::string all;
    TrialConfig c;
    c.trials = 50;
    c.seed = 8;
    all += dump(to_json(run_suite(c)));
    for (const auto& name : gallery_names()) {
      GalleryEntry e = gallery_entry(name);
      BlockReport r = all_blocks(e.resolution);
      all += dump(to_json(e.resolution)) + dump(to_json(r)) + dump(to_json(reconstruct(e.resolution)));
      all += render_svg(e.resolution, r);
    }
    return all;
  };
  std::string a = produce(), b = produce();
  std::vector<std::string> cmds = {"verify --trials 50 --seed 8 --json", "example 3.7/7 --json",
                                   "render --format svg --example 3.7/7", "charpoints --json --example 3.7/6"};
  std::size_t same = 0;
  for (const auto& cmd : cmds) {
    std::string x = cli_output(cmd), y = cli_output(cmd);
    same += (!x.empty() && x == y) ? 1 : 0;
  }
  std::ostringstream d;
  d << "library outputs " << a.size() << " bytes " << (a == b ? "identical" : "differ") << "; CLI " << same << "/"
    << cmds.size() << " commands identical";
  return {a == b && same == cmds.size(), d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"worked-case characteristic points", golden_sets},
      {"saturating family attains the bound", tight_bounds},
      {"randomized property suite", random_suite},
      {"rectangle-ring measure equals x", ring_oracle},
      {"reconstruction round trip", round_trip},
      {"perfect case orthant", perfect_case},
      {"pathological staircases", pathology},
      {"deterministic output", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.passed ? 0 : 1;
    std::cout << (o.passed ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail << std::endl;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
