#include "lexspec/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace lexspec {

namespace {

Json int_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    Rational r = parse_rational(j.get<std::string>());
    if (denominator(r) != 1) throw ParseError("expected an integer, got " + j.get<std::string>());
    return numerator(r);
  }
  throw ParseError("expected an integer, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

Signature signature_of(const Json& j) { return Signature(int_field(j, "k"), int_field(j, "d")); }

std::size_t dim_of(const Json& j) {
  int n = int_field(j, "n");
  if (n < 1) throw ParseError("field \"n\" must be positive");
  return static_cast<std::size_t>(n);
}

Point point_from_json(const Json& j) {
  if (j.is_string()) return parse_point(j.get<std::string>());
  if (!j.is_array()) throw ParseError("a point must be an array");
  Point p;
  for (const auto& c : j) p.push_back(rational_from_json(c));
  return p;
}

Json point_json(const Point& p) {
  Json a = Json::array();
  for (const auto& c : p) a.push_back(to_json(c));
  return a;
}

Json header(const char* kind, const Signature& sig, std::size_t n) {
  return Json{{"kind", kind}, {"k", sig.k}, {"d", sig.d}, {"n", n}};
}

Json cell_json(const CellIndex& c) {
  Json a = Json::array();
  for (auto v : c) a.push_back(v);
  return a;
}

CellIndex cell_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a cell index must be an array");
  CellIndex c;
  for (const auto& v : j) c.push_back(v.get<std::size_t>());
  return c;
}

std::string opt_string(const Json& j, const char* key) { return j.contains(key) ? j.at(key).get<std::string>() : ""; }

}  // namespace

Json to_json(const Rational& r) {
  if (denominator(r) == 1) return int_json(numerator(r));
  return to_string(r);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

Json to_json(const LexElement& a) {
  Json g = Json::array();
  for (const auto& v : a.infinitesimal()) g.push_back(int_json(v));
  return Json{{"h", int_json(a.height())}, {"g", g}};
}

LexElement lex_from_json(const Json& j, Signature sig) {
  if (j.is_string()) return parse_lex(j.get<std::string>(), sig);
  const Json& g = field(j, "g");
  if (!g.is_array()) throw ParseError("field \"g\" must be an array");
  std::vector<Integer> parts;
  for (const auto& v : g) parts.push_back(integer_from_json(v));
  return LexElement(sig, integer_from_json(field(j, "h")), std::move(parts));
}

Json to_json(const DiscreteObservable& x) {
  Json j = header("observable", x.signature(), x.dim());
  Json atoms = Json::array();
  for (const auto& a : x.atoms()) atoms.push_back(Json{{"point", point_json(a.point)}, {"weight", to_json(a.weight)}});
  j["atoms"] = atoms;
  return j;
}

DiscreteObservable observable_from_json(const Json& j) {
  Signature sig = signature_of(j);
  std::size_t n = dim_of(j);
  const Json& atoms = field(j, "atoms");
  if (!atoms.is_array()) throw ParseError("field \"atoms\" must be an array");
  std::vector<Atom> out;
  for (const auto& a : atoms) out.push_back({point_from_json(field(a, "point")), lex_from_json(field(a, "weight"), sig)});
  return DiscreteObservable::make(sig, n, std::move(out));
}

Json to_json(const StepResolution& f) {
  Json j = header("resolution", f.signature(), f.dim());
  Json bps = Json::array();
  for (const auto& axis : f.breakpoints()) bps.push_back(point_json(axis));
  j["breakpoints"] = bps;
  Json cells = Json::array();
  for (std::size_t i = 0; i < f.cell_count(); ++i)
    cells.push_back(Json{{"index", cell_json(f.unflat(i))}, {"value", to_json(f.value(i))}});
  j["cells"] = cells;
  return j;
}

StepResolution resolution_from_json(const Json& j) {
  Signature sig = signature_of(j);
  std::size_t n = dim_of(j);
  const Json& bps = field(j, "breakpoints");
  if (!bps.is_array()) throw ParseError("field \"breakpoints\" must be an array");
  std::vector<std::vector<Rational>> axes;
  for (const auto& axis : bps) axes.push_back(point_from_json(axis));
  if (axes.size() != n) throw ParseError("expected " + std::to_string(n) + " breakpoint lists");
  std::size_t total = 1;
  std::vector<std::size_t> extent;
  for (const auto& a : axes) {
    extent.push_back(a.size() + 1);
    total *= a.size() + 1;
  }
  const Json& cells = field(j, "cells");
  if (!cells.is_array()) throw ParseError("field \"cells\" must be an array");
  std::vector<std::optional<LexElement>> slots(total);
  for (const auto& c : cells) {
    CellIndex idx = cell_from_json(field(c, "index"));
    if (idx.size() != n) throw ParseError("cell index has the wrong dimension");
    std::size_t flat = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (idx[a] >= extent[a]) throw ParseError("cell index out of range");
      flat = flat * extent[a] + idx[a];
    }
    if (slots[flat]) throw ParseError("cell listed twice");
    slots[flat] = lex_from_json(field(c, "value"), sig);
  }
  std::vector<LexElement> vs;
  for (auto& v : slots) {
    if (!v) throw ParseError("every cell must be listed");
    vs.push_back(std::move(*v));
  }
  return StepResolution::from_cells(sig, n, std::move(axes), std::move(vs));
}

Document document_from_json(const Json& j) {
  std::string kind;
  if (j.is_object() && j.contains("kind") && j.at("kind").is_string())
    kind = j.at("kind").get<std::string>();
  else if (j.is_object() && j.contains("atoms"))
    kind = "observable";
  else if (j.is_object() && j.contains("cells"))
    kind = "resolution";
  if (kind == "observable") {
    DiscreteObservable x = observable_from_json(j);
    StepResolution f = StepResolution::from_observable(x);
    return Document{std::move(x), std::move(f)};
  }
  if (kind == "resolution") return Document{std::nullopt, resolution_from_json(j)};
  throw ParseError("unknown document kind \"" + kind + "\"");
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return document_from_json(j);
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json to_json(const ExtPoint& p) {
  Json a = Json::array();
  for (const auto& e : p) a.push_back(e.finite() ? to_json(e.value()) : Json(to_string(e)));
  return a;
}

ExtPoint ext_point_from_json(const Json& j) {
  ExtPoint p;
  for (const auto& c : j) {
    if (c.is_string() && c.get<std::string>() == "-inf")
      p.push_back(Endpoint::neg_inf());
    else if (c.is_string() && c.get<std::string>() == "+inf")
      p.push_back(Endpoint::pos_inf());
    else
      p.push_back(Endpoint(rational_from_json(c)));
  }
  return p;
}

Json to_json(const LevelDecomposition& levels) {
  Json ls = Json::array();
  for (std::size_t i = 0; i < levels.regions.size(); ++i)
    ls.push_back(Json{{"level", i}, {"region", to_string(levels.regions[i])}});
  return Json{{"kind", "regions"},
              {"n", levels.regions.empty() ? 0 : levels.regions.front().dim()},
              {"pathological", levels.pathological},
              {"levels", ls}};
}

LevelDecomposition levels_from_json(const Json& j) {
  LevelDecomposition out;
  std::size_t n = field(j, "n").get<std::size_t>();
  out.pathological = field(j, "pathological").get<bool>();
  for (const auto& l : field(j, "levels")) out.regions.push_back(parse_region(field(l, "region").get<std::string>(), n));
  return out;
}

Json to_json(const BlockReport& report) {
  Json levels = Json::array();
  for (std::size_t i = 1; i < report.blocks.size(); ++i) {
    Json bs = Json::array();
    for (const auto& b : report.blocks[i]) {
      Json landing = Json::array();
      for (const auto& l : b.landing_levels) landing.push_back(l ? Json(*l) : Json(nullptr));
      Json cells = Json::array();
      for (const auto& c : b.cells) cells.push_back(cell_json(c));
      bs.push_back(Json{{"char_point", to_json(b.char_point)},
                        {"region", to_string(b.region)},
                        {"cells", cells},
                        {"landing_levels", landing},
                        {"char_level", b.char_level ? Json(*b.char_level) : Json(nullptr)},
                        {"t0_adjoined", b.t0_adjoined},
                        {"infimum", b.infimum ? to_json(*b.infimum) : Json(nullptr)},
                        {"pathological", b.pathological}});
    }
    levels.push_back(Json{{"level", i}, {"count", report.blocks[i].size()}, {"blocks", bs}});
  }
  Json points = Json::array();
  for (const auto& p : report.char_points()) points.push_back(to_json(p));
  return Json{{"kind", "blocks"},         {"n", report.n},           {"k", report.k},
              {"total", report.total()},  {"pathological", report.pathological},
              {"char_points", points},    {"levels", levels}};
}

BlockReport block_report_from_json(const Json& j, Signature sig) {
  BlockReport r;
  r.n = field(j, "n").get<std::size_t>();
  r.k = int_field(j, "k");
  r.pathological = field(j, "pathological").get<bool>();
  r.blocks.resize(static_cast<std::size_t>(r.k) + 1);
  for (const auto& l : field(j, "levels")) {
    int level = int_field(l, "level");
    if (level < 1 || level > r.k) throw ParseError("block level out of range");
    for (const auto& b : field(l, "blocks")) {
      Block blk;
      blk.level = level;
      blk.char_point = ext_point_from_json(field(b, "char_point"));
      blk.region = parse_region(field(b, "region").get<std::string>(), r.n);
      for (const auto& c : field(b, "cells")) blk.cells.push_back(cell_from_json(c));
      for (const auto& v : field(b, "landing_levels"))
        blk.landing_levels.push_back(v.is_null() ? std::nullopt : std::optional<int>(v.get<int>()));
      const Json& cl = field(b, "char_level");
      if (!cl.is_null()) blk.char_level = cl.get<int>();
      blk.t0_adjoined = field(b, "t0_adjoined").get<bool>();
      const Json& inf = field(b, "infimum");
      if (!inf.is_null()) blk.infimum = lex_from_json(inf, sig);
      blk.pathological = field(b, "pathological").get<bool>();
      r.blocks[static_cast<std::size_t>(level)].push_back(std::move(blk));
    }
  }
  return r;
}

Json to_json(const BoundsReport& b) {
  Json levels = Json::array();
  for (std::size_t i = 1; i < b.counts.size(); ++i)
    levels.push_back(Json{{"level", i}, {"count", b.counts[i]}, {"limit", b.limits[i]}});
  return Json{{"kind", "bounds"},
              {"passed", b.passed},
              {"total", b.total},
              {"total_limit", b.total_limit},
              {"levels", levels},
              {"witness", b.witness}};
}

BoundsReport bounds_from_json(const Json& j) {
  BoundsReport b;
  b.passed = field(j, "passed").get<bool>();
  b.total = field(j, "total").get<std::size_t>();
  b.total_limit = field(j, "total_limit").get<std::size_t>();
  b.witness = field(j, "witness").get<std::string>();
  b.counts.push_back(0);
  b.limits.push_back(0);
  for (const auto& l : field(j, "levels")) {
    b.counts.push_back(field(l, "count").get<std::size_t>());
    b.limits.push_back(field(l, "limit").get<std::size_t>());
  }
  return b;
}

Json to_json(const AxiomReport& r) {
  Json results = Json::array();
  for (const auto& a : r.results)
    results.push_back(
        Json{{"name", a.name}, {"passed", a.passed}, {"structural", a.structural}, {"witness", a.witness}});
  return Json{{"kind", "axioms"}, {"passed", r.all_passed()}, {"results", results}};
}

AxiomReport axioms_from_json(const Json& j) {
  AxiomReport r;
  for (const auto& a : field(j, "results"))
    r.results.push_back(AxiomResult{field(a, "name").get<std::string>(), field(a, "passed").get<bool>(),
                                    field(a, "structural").get<bool>(), field(a, "witness").get<std::string>()});
  return r;
}

Json to_json(const ReconstructResult& r) {
  Json candidate = Json::array();
  for (const auto& a : r.candidate) candidate.push_back(Json{{"point", point_json(a.point)}, {"weight", to_json(a.weight)}});
  Json j{{"kind", "reconstruct"}, {"status", std::string(to_string(r.status))}, {"detail", r.detail}};
  if (!r.candidate.empty()) {
    const Signature& sig = r.candidate.front().weight.signature();
    j["k"] = sig.k;
    j["d"] = sig.d;
    j["n"] = r.candidate.front().point.size();
  }
  j["candidate"] = candidate;
  j["observable"] = r.observable ? to_json(*r.observable) : Json(nullptr);
  j["witness_cell"] = r.witness_cell ? cell_json(*r.witness_cell) : Json(nullptr);
  j["f_value"] = r.f_value ? to_json(*r.f_value) : Json(nullptr);
  j["candidate_value"] = r.candidate_value ? to_json(*r.candidate_value) : Json(nullptr);
  return j;
}

ReconstructResult reconstruct_from_json(const Json& j) {
  ReconstructResult r;
  std::string status = field(j, "status").get<std::string>();
  using S = ReconstructResult::Status;
  bool known = false;
  for (S s : {S::Ok, S::NotReconstructible, S::Pathological, S::Mismatch})
    if (to_string(s) == status) {
      r.status = s;
      known = true;
    }
  if (!known) throw ParseError("unknown reconstruct status \"" + status + "\"");
  r.detail = opt_string(j, "detail");
  if (!field(j, "observable").is_null()) r.observable = observable_from_json(j.at("observable"));
  if (!field(j, "candidate").empty()) {
    Signature sig = signature_of(j);
    for (const auto& a : j.at("candidate"))
      r.candidate.push_back({point_from_json(field(a, "point")), lex_from_json(field(a, "weight"), sig)});
    if (!field(j, "witness_cell").is_null()) r.witness_cell = cell_from_json(j.at("witness_cell"));
    if (!field(j, "f_value").is_null()) r.f_value = lex_from_json(j.at("f_value"), sig);
    if (!field(j, "candidate_value").is_null()) r.candidate_value = lex_from_json(j.at("candidate_value"), sig);
  }
  return r;
}

Json to_json(const Summary& s) {
  Json checks = Json::object();
  for (const auto& [name, c] : s.checks)
    checks[name] = Json{{"passed", c.passed}, {"failed", c.failed}, {"skipped", c.skipped}};
  Json failures = Json::array();
  for (const auto& f : s.failures)
    failures.push_back(Json{{"index", f.index}, {"check", f.check}, {"detail", f.detail}});
  return Json{{"kind", "summary"},
              {"seed", s.seed},
              {"trials", s.trials},
              {"failure_count", s.failure_count()},
              {"checks", checks},
              {"failures", failures}};
}

Summary summary_from_json(const Json& j) {
  Summary s;
  s.seed = field(j, "seed").get<std::uint64_t>();
  s.trials = field(j, "trials").get<std::size_t>();
  for (const auto& [name, c] : field(j, "checks").items())
    s.checks[name] = CheckCounter{field(c, "passed").get<std::size_t>(), field(c, "failed").get<std::size_t>(),
                                  field(c, "skipped").get<std::size_t>()};
  for (const auto& f : field(j, "failures"))
    s.failures.push_back(
        TrialFailure{field(f, "index").get<std::uint64_t>(), field(f, "check").get<std::string>(),
                     field(f, "detail").get<std::string>()});
  return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lexspec
