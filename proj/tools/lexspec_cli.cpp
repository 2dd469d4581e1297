// lexspec: command-line front end for observables and step spectral
// resolutions on Gamma(Z lex Z^d, (k,0)).

#include "lexspec/gallery.hpp"
#include "lexspec/render.hpp"
#include "lexspec/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

using namespace lexspec;

namespace {

struct Options {
  std::string input;
  std::string out;
  std::string format = "ascii";
  std::string point;
  std::string example;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  int k = 0;
  unsigned threads = 0;
  bool json = false;
};

bool use_color() {
  const char* env = std::getenv("LEXSPEC_COLOR");
  if (env && std::string(env) == "0") return false;
  return isatty(STDOUT_FILENO);
}

std::string verdict(bool ok, bool color) {
  if (!color) return ok ? "pass" : "FAIL";
  return ok ? "\x1b[32mpass\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
}

std::string region_text(const Region& r) { return r.boxes().empty() ? "∅" : to_string(r); }

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ParseError("cannot write " + o.out);
  f << text;
}

Document load(const Options& o) {
  if (!o.example.empty()) {
    GalleryEntry e = gallery_entry(o.example, o.k > 0 ? o.k : 2);
    return Document{e.observable, e.resolution};
  }
  if (o.input.empty()) throw ParseError("--input or --example is required");
  return load_document(o.input);
}

std::string block_lines(const BlockReport& report) {
  std::ostringstream s;
  for (std::size_t i = 1; i < report.blocks.size(); ++i)
    for (std::size_t j = 0; j < report.blocks[i].size(); ++j) {
      const Block& b = report.blocks[i][j];
      s << "  T_" << i << "^" << j + 1 << "  char point " << to_string(b.char_point) << "  infimum "
        << (b.infimum ? to_string(*b.infimum) : "undefined") << (b.t0_adjoined ? "  T_0-adjoined" : "")
        << (b.pathological ? "  pathological" : "") << "\n";
    }
  return s.str();
}

std::string bounds_line(const BoundsReport& b, bool color) {
  std::ostringstream s;
  s << "bounds:";
  for (std::size_t i = 1; i < b.counts.size(); ++i) s << " T_" << i << " " << b.counts[i] << "/" << b.limits[i];
  s << "; total " << b.total << "/" << b.total_limit << " " << verdict(b.passed, color);
  if (!b.passed) s << " (" << b.witness << ")";
  return s.str() + "\n";
}

int cmd_eval(const Options& o) {
  Document d = load(o);
  if (o.point.empty()) throw ParseError("--point is required");
  Point p = parse_point(o.point);
  if (p.size() != d.resolution.dim()) throw ParseError("--point has the wrong dimension");
  LexElement v = eval_F(d.resolution, p);
  if (o.json) {
    Json pj = Json::array();
    for (const auto& c : p) pj.push_back(to_json(c));
    emit(o, dump(Json{{"kind", "eval"}, {"point", pj}, {"value", to_json(v)}}));
  } else {
    emit(o, to_string(v) + "\n");
  }
  return 0;
}

int cmd_regions(const Options& o) {
  Document d = load(o);
  LevelDecomposition levels = level_regions(d.resolution);
  if (o.json) {
    emit(o, dump(to_json(levels)));
    return 0;
  }
  std::ostringstream s;
  for (std::size_t i = 0; i < levels.regions.size(); ++i) s << "T_" << i << " = " << region_text(levels.regions[i]) << "\n";
  if (levels.pathological) s << "note: F fails the axioms\n";
  emit(o, s.str());
  return 0;
}

int cmd_charpoints(const Options& o) {
  Document d = load(o);
  BlockReport report = all_blocks(d.resolution);
  BoundsReport bounds = bounds_check(report, d.resolution.signature().k);
  auto antichain = max_antichain(report);
  if (o.json) {
    emit(o, dump(Json{{"kind", "charpoints"},
                      {"blocks", to_json(report)},
                      {"bounds", to_json(bounds)},
                      {"max_antichain", antichain ? Json(*antichain) : Json(nullptr)}}));
  } else {
    std::ostringstream s;
    s << block_lines(report);
    s << "characteristic points (" << report.char_points().size() << "):";
    for (const auto& p : report.char_points()) s << " " << to_string(p);
    s << "\n" << bounds_line(bounds, use_color());
    if (antichain) s << "max antichain: " << *antichain << "\n";
    emit(o, s.str());
  }
  return bounds.passed ? 0 : 1;
}

int cmd_axioms(const Options& o) {
  Document d = load(o);
  AxiomReport r = check_axioms(d.resolution);
  if (o.json) {
    emit(o, dump(to_json(r)));
  } else {
    std::ostringstream s;
    for (const auto& a : r.results) {
      s << a.name << ": " << verdict(a.passed, use_color()) << (a.structural ? " (by construction)" : "");
      if (!a.passed) s << "  " << a.witness;
      s << "\n";
    }
    emit(o, s.str());
  }
  return r.all_passed() ? 0 : 1;
}

std::string reconstruct_text(const ReconstructResult& r) {
  std::ostringstream s;
  s << "status: " << to_string(r.status) << "\n";
  if (!r.detail.empty()) s << "detail: " << r.detail << "\n";
  for (const auto& a : r.candidate) s << "  " << to_string(a.point) << " -> " << to_string(a.weight) << "\n";
  if (r.witness_cell) {
    s << "witness cell:";
    for (auto c : *r.witness_cell) s << " " << c;
    s << "  F = " << to_string(*r.f_value) << ", F_x' = " << to_string(*r.candidate_value) << "\n";
  }
  return s.str();
}

int cmd_reconstruct(const Options& o) {
  Document d = load(o);
  ReconstructResult r = reconstruct(d.resolution);
  emit(o, o.json ? dump(to_json(r)) : reconstruct_text(r));
  return r.status == ReconstructResult::Status::Ok ? 0 : 1;
}

int cmd_verify(const Options& o) {
  TrialConfig c;
  c.seed = o.seed;
  c.trials = o.trials;
  if (o.k > 0) c.k_max = o.k;
  c.threads = o.threads;
  try {
    c.validate();
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  Summary s = run_suite(c);
  if (o.json) {
    emit(o, dump(to_json(s)));
  } else {
    std::ostringstream t;
    t << "seed " << s.seed << ", " << s.trials << " trials\n";
    for (const auto& [name, cnt] : s.checks)
      t << "  " << name << ": " << cnt.passed << " passed, " << cnt.failed << " failed, " << cnt.skipped
        << " skipped\n";
    for (const auto& f : s.failures) t << "  trial " << f.index << " " << f.check << ": " << f.detail << "\n";
    t << (s.failure_count() == 0 ? "all checks passed\n" : std::to_string(s.failure_count()) + " failures\n");
    emit(o, t.str());
  }
  return s.failure_count() == 0 ? 0 : 1;
}

int cmd_render(const Options& o) {
  Document d = load(o);
  if (d.resolution.dim() != 2) throw ParseError("render needs n = 2");
  BlockReport report = all_blocks(d.resolution);
  if (o.format == "svg")
    emit(o, render_svg(d.resolution, report));
  else
    emit(o, render_ascii(d.resolution, report, o.out.empty() && use_color()));
  return 0;
}

int cmd_example(const Options& o, const std::string& name) {
  GalleryEntry e = gallery_entry(name, o.k > 0 ? o.k : 2);
  const StepResolution& f = e.resolution;
  LevelDecomposition levels = level_regions(f);
  BlockReport report = all_blocks(f);
  BoundsReport bounds = bounds_check(report, f.signature().k);
  AxiomReport axioms = check_axioms(f);
  ReconstructResult rec = reconstruct(f);
  if (o.json) {
    Json listed = Json::array();
    for (const auto& p : e.listed_char_points) {
      Json pj = Json::array();
      for (const auto& c : p) pj.push_back(to_json(c));
      listed.push_back(pj);
    }
    emit(o, dump(Json{{"kind", "example"},
                      {"name", e.name},
                      {"title", e.title},
                      {"note", e.note},
                      {"observable", e.observable ? to_json(*e.observable) : Json(nullptr)},
                      {"resolution", to_json(f)},
                      {"regions", to_json(levels)},
                      {"blocks", to_json(report)},
                      {"bounds", to_json(bounds)},
                      {"axioms", to_json(axioms)},
                      {"reconstruct", to_json(rec)},
                      {"listed_char_points", listed}}));
    return 0;
  }
  const bool color = use_color();
  std::ostringstream s;
  s << "example " << e.name << ": " << e.title << "\n";
  s << "M = Gamma(Z lex Z^" << f.signature().d << ", (" << f.signature().k << ",0)), n = " << f.dim() << "\n";
  if (!e.note.empty()) s << "note: " << e.note << "\n";
  if (e.observable) {
    s << "atoms:\n";
    for (const auto& a : e.observable->atoms()) s << "  " << to_string(a.point) << " -> " << to_string(a.weight) << "\n";
  }
  for (std::size_t i = 0; i < levels.regions.size(); ++i) s << "T_" << i << " = " << region_text(levels.regions[i]) << "\n";
  s << "blocks:\n" << block_lines(report);
  s << "characteristic points (" << report.char_points().size() << "):";
  for (const auto& p : report.char_points()) s << " " << to_string(p);
  s << "\n";
  if (!e.listed_char_points.empty()) {
    std::vector<ExtPoint> listed;
    for (const auto& p : e.listed_char_points) listed.emplace_back(p.begin(), p.end());
    std::sort(listed.begin(), listed.end());
    s << "listed in the source (" << listed.size() << "):";
    for (const auto& p : listed) s << " " << to_string(p);
    s << (listed == report.char_points() ? "  [same]" : "  [differs]") << "\n";
  }
  s << bounds_line(bounds, color);
  if (auto m = max_antichain(report)) s << "max antichain: " << *m << "\n";
  s << "axioms: " << verdict(axioms.all_passed(), color);
  for (const auto& a : axioms.results)
    if (!a.passed) s << "  " << a.name << ": " << a.witness;
  s << "\n";
  s << "reconstruct: " << to_string(rec.status);
  if (rec.witness_cell) {
    s << " at cell";
    for (auto c : *rec.witness_cell) s << " " << c;
    s << " (F = " << to_string(*rec.f_value) << ", F_x' = " << to_string(*rec.candidate_value) << ")";
  } else if (!rec.detail.empty() && rec.status != ReconstructResult::Status::Ok) {
    s << " (" << rec.detail << ")";
  }
  s << "\n";
  emit(o, s.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Observables and step spectral resolutions on Gamma(Z lex Z^d, (k,0))", "lexspec"};
  app.require_subcommand(1, 1);
  Options o;
  std::string example_name;

  auto input = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "observable or resolution JSON file");
    sub->add_option("--example", o.example, "use a named example instead of --input");
    sub->add_option("--k", o.k, "k for the patho/ and antichain/ examples");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--out", o.out, "write output to a file");
  };

  auto* eval = app.add_subcommand("eval", "F at a point");
  input(eval);
  common(eval);
  eval->add_option("--point", o.point, "point such as \"4,4\"")->required();
  auto* regions = app.add_subcommand("regions", "level sets T_i");
  input(regions);
  common(regions);
  auto* charpoints = app.add_subcommand("charpoints", "blocks, characteristic points and bounds");
  input(charpoints);
  common(charpoints);
  auto* axioms = app.add_subcommand("axioms", "check the spectral-resolution axioms");
  input(axioms);
  common(axioms);
  auto* rec = app.add_subcommand("reconstruct", "rebuild an observable from its blocks");
  input(rec);
  common(rec);
  auto* verify = app.add_subcommand("verify", "randomized property suite");
  common(verify);
  verify->add_option("--seed", o.seed, "seed");
  verify->add_option("--trials", o.trials, "number of trials");
  verify->add_option("--k", o.k, "largest k drawn")->check(CLI::PositiveNumber);
  verify->add_option("--threads", o.threads, "worker threads (0: all cores)");
  auto* render = app.add_subcommand("render", "draw a two-dimensional level map");
  input(render);
  render->add_option("--out", o.out, "write output to a file");
  render->add_option("--format", o.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  auto* example = app.add_subcommand("example", "analyse a named example (3.7/1..9, saturate/k, patho/m, antichain/m)");
  common(example);
  example->add_option("name", example_name, "example name")->required();
  example->add_option("--k", o.k, "k for the patho/ and antichain/ families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eval) return cmd_eval(o);
    if (*regions) return cmd_regions(o);
    if (*charpoints) return cmd_charpoints(o);
    if (*axioms) return cmd_axioms(o);
    if (*rec) return cmd_reconstruct(o);
    if (*verify) return cmd_verify(o);
    if (*render) return cmd_render(o);
    if (*example) return cmd_example(o, example_name);
  } catch (const std::exception& e) {
    std::cerr << "lexspec: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
