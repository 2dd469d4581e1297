#include "lexspec/gallery.hpp"
#include "lexspec/serialize.hpp"

#include <gtest/gtest.h>

using namespace lexspec;

namespace {

std::vector<GalleryEntry> entries() {
  std::vector<GalleryEntry> out;
  for (const auto& name : gallery_names()) out.push_back(gallery_entry(name));
  out.push_back(gallery_entry("saturate/4"));
  out.push_back(gallery_entry("patho/5", 2));
  out.push_back(gallery_entry("antichain/4", 2));
  return out;
}

}  // namespace

TEST(Json, Rationals) {
  EXPECT_EQ(to_json(Rational(3)), Json(3));
  EXPECT_EQ(to_json(Rational(-3, 2)), Json("-3/2"));
  EXPECT_EQ(rational_from_json(Json("6/4")), Rational(3, 2));
  EXPECT_EQ(rational_from_json(Json("0.25")), Rational(1, 4));
  EXPECT_THROW(rational_from_json(Json(0.5)), ParseError);
}

TEST(Json, ObservableRoundTrip) {
  TrialConfig c;
  c.n_min = 1;
  c.n_max = 3;
  for (std::uint64_t i = 0; i < 100; ++i) {
    DiscreteObservable x = random_observable(c, i);
    Json j = to_json(x);
    EXPECT_EQ(observable_from_json(j), x);
    EXPECT_EQ(to_json(observable_from_json(Json::parse(dump(j)))), j);
  }
}

TEST(Json, ObservableDocumentShape) {
  Json j = to_json(*gallery_entry("3.7/1").observable);
  EXPECT_EQ(j["kind"], "observable");
  EXPECT_EQ(j["atoms"][0]["point"], Json::parse("[1,1]"));
  EXPECT_EQ(j["atoms"][0]["weight"], Json::parse(R"({"h":0,"g":[1]})"));
}

TEST(Json, ResolutionRoundTrip) {
  for (const auto& e : entries()) {
    Json j = to_json(e.resolution);
    EXPECT_EQ(resolution_from_json(j), e.resolution) << e.name;
    EXPECT_EQ(j["cells"].size(), e.resolution.cell_count());
  }
}

TEST(Json, DocumentKinds) {
  GalleryEntry e = gallery_entry("3.7/7");
  Document d = document_from_json(to_json(*e.observable));
  EXPECT_EQ(d.resolution, e.resolution);
  Json bare = to_json(*e.observable);
  bare.erase("kind");
  EXPECT_TRUE(document_from_json(bare).observable.has_value());
  EXPECT_FALSE(document_from_json(to_json(e.resolution)).observable.has_value());
  EXPECT_THROW(document_from_json(Json::parse(R"({"kind":"other"})")), ParseError);
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(observable_from_json(Json::parse(R"({"k":2,"d":1,"n":2})")), ParseError);
  EXPECT_THROW(observable_from_json(Json::parse(R"({"k":2,"d":1,"n":2,"atoms":[{"point":[0,0],"weight":{"h":1,"g":[0]}}]})")),
               Error);
  Json r = to_json(gallery_entry("3.7/1").resolution);
  r["cells"].erase(r["cells"].size() - 1);
  EXPECT_THROW(resolution_from_json(r), ParseError);
  Json dup = to_json(gallery_entry("3.7/1").resolution);
  dup["cells"][1]["index"] = dup["cells"][0]["index"];
  EXPECT_THROW(resolution_from_json(dup), ParseError);
}

TEST(Json, ReportsRoundTrip) {
  for (const auto& e : entries()) {
    const StepResolution& f = e.resolution;
    LevelDecomposition l = level_regions(f);
    EXPECT_EQ(to_json(levels_from_json(to_json(l))), to_json(l)) << e.name;
    BlockReport b = all_blocks(f);
    EXPECT_EQ(to_json(block_report_from_json(to_json(b), f.signature())), to_json(b)) << e.name;
    BoundsReport bd = bounds_check(b, f.signature().k);
    EXPECT_EQ(to_json(bounds_from_json(to_json(bd))), to_json(bd)) << e.name;
    AxiomReport a = check_axioms(f);
    EXPECT_EQ(to_json(axioms_from_json(to_json(a))), to_json(a)) << e.name;
    ReconstructResult r = reconstruct(f);
    EXPECT_EQ(to_json(reconstruct_from_json(to_json(r))), to_json(r)) << e.name;
  }
}

TEST(Json, SummaryRoundTrip) {
  TrialConfig c;
  c.trials = 20;
  c.threads = 1;
  Summary s = run_suite(c);
  s.failures.push_back({7, "rays", "synthetic"});
  EXPECT_EQ(summary_from_json(to_json(s)), s);
}

TEST(Json, DumpIsStable) {
  Json j = to_json(all_blocks(gallery_entry("3.7/7").resolution));
  EXPECT_EQ(dump(j), dump(Json::parse(dump(j))));
}
