#include "lexspec/charpoints.hpp"
#include "lexspec/gallery.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace lexspec;

namespace {

const Signature k2(2, 1), k3(3, 1);

StepResolution F_of(std::string_view name) { return gallery_entry(name).resolution; }

ExtPoint E(Rational a, Rational b) { return {Endpoint(a), Endpoint(b)}; }

std::set<std::pair<int, Point>> computed(const StepResolution& f) {
  std::set<std::pair<int, Point>> out;
  BlockReport r = all_blocks(f);
  for (std::size_t i = 1; i < r.blocks.size(); ++i)
    for (const auto& b : r.blocks[i]) {
      Point p;
      for (const auto& e : b.char_point) p.push_back(e.finite() ? e.value() : Rational(-100000));
      out.insert({static_cast<int>(i), p});
    }
  return out;
}

const Block& block_at(const BlockReport& r, int level, const ExtPoint& p) {
  for (const auto& b : r.blocks[static_cast<std::size_t>(level)])
    if (b.char_point == p) return b;
  throw std::runtime_error("no block at " + to_string(p));
}

}  // namespace

TEST(LevelRegions, Examples) {
  LevelDecomposition l7 = level_regions(F_of("3.7/7"));
  EXPECT_EQ(l7.regions[3], open_upper_orthant({3, 3}));
  EXPECT_EQ(level_regions(F_of("3.7/8")).regions[2], parse_region("(2,+inf) x (1,2]", 2));
  EXPECT_TRUE(level_regions(F_of("3.7/5")).regions[1].boxes().empty());
  EXPECT_FALSE(l7.pathological);
}

TEST(LevelRegions, PartitionThePlane) {
  for (const auto& name : gallery_names()) {
    LevelDecomposition l = level_regions(F_of(name));
    Region all = Region::empty(2);
    for (std::size_t i = 0; i < l.regions.size(); ++i) {
      for (std::size_t j = i + 1; j < l.regions.size(); ++j)
        EXPECT_TRUE(region_intersect(l.regions[i], l.regions[j]).boxes().empty()) << name;
      all = region_union(all, l.regions[i]);
    }
    EXPECT_EQ(all, Region::full(2)) << name;
  }
}

TEST(Projection, Examples) {
  EXPECT_EQ(projection(F_of("3.7/7"), {Rational(5, 2), Rational(5, 2)}, 0), Endpoint(2));
  EXPECT_EQ(char_point(F_of("3.7/1"), {4, 4}), E(3, 3));
  EXPECT_EQ(projection(F_of("3.7/8"), {Rational(3, 2), 3}, 0), Endpoint(1));
  EXPECT_THROW(projection(F_of("3.7/1"), {0, 0}, 0), Error);
}

// Each worked case against the brute-force probe oracle.
TEST(CharPoints, MatchOracleOnWorkedCases) {
  for (const auto& name : gallery_names()) {
    GalleryEntry e = gallery_entry(name);
    if (!e.observable) continue;
    EXPECT_EQ(computed(e.resolution), oracle::char_points(*e.observable)) << name;
  }
}

TEST(CharPoints, WorkedCaseSets) {
  auto pts = [](std::string_view name) { return all_blocks(F_of(name)).char_points(); };
  EXPECT_EQ(pts("3.7/1"), (std::vector<ExtPoint>{E(2, 2), E(3, 3)}));
  EXPECT_EQ(pts("3.7/5"), (std::vector<ExtPoint>{E(2, 2)}));
  EXPECT_EQ(pts("3.7/7"), (std::vector<ExtPoint>{E(1, 3), E(2, 2), E(2, 3), E(3, 1), E(3, 2), E(3, 3)}));
  // Cases 4 and 6 have one more corner than their printed lists.
  EXPECT_EQ(pts("3.7/4"), (std::vector<ExtPoint>{E(3, 3), E(4, 2), E(4, 3)}));
  EXPECT_EQ(pts("3.7/6"), (std::vector<ExtPoint>{E(1, 2), E(2, 1), E(2, 2), E(3, 3)}));
  EXPECT_EQ(all_blocks(F_of("3.7/7")).counts(), (std::vector<std::size_t>{0, 3, 2, 1}));
}

TEST(CharPoints, MatchOracleOnRandomObservables) {
  TrialConfig c;
  c.max_atoms = 5;
  c.k_max = 4;
  c.coord_range = 3;
  for (std::uint64_t i = 0; i < 40; ++i) {
    DiscreteObservable x = random_observable(c, i);
    EXPECT_EQ(computed(StepResolution::from_observable(x)), oracle::char_points(x)) << "trial " << i;
  }
}

TEST(Blocks, InfimaAndAdjoinedness) {
  StepResolution f = F_of("3.7/7");
  BlockReport r = all_blocks(f);
  EXPECT_EQ(block_at(r, 1, E(2, 2)).infimum, LexElement(k3, 1, {2}));
  EXPECT_EQ(block_at(r, 1, E(1, 3)).infimum, LexElement(k3, 1, {1}));
  EXPECT_EQ(block_at(r, 1, E(3, 1)).infimum, LexElement(k3, 1, {-3}));
  for (const auto& b : r.blocks[1]) EXPECT_TRUE(b.t0_adjoined);
  EXPECT_FALSE(block_at(r, 3, E(3, 3)).t0_adjoined);
  EXPECT_FALSE(block_at(all_blocks(F_of("3.7/8")), 3, E(2, 2)).t0_adjoined);
  EXPECT_FALSE(r.pathological);
}

TEST(Blocks, InfimumIsMassBelowCharPoint) {
  TrialConfig c;
  for (std::uint64_t i = 0; i < 60; ++i) {
    DiscreteObservable x = random_observable(c, i);
    StepResolution f = StepResolution::from_observable(x);
    for (const auto& level : all_blocks(f).blocks)
      for (const auto& b : level) {
        Point p;
        for (const auto& e : b.char_point) p.push_back(e.value());
        std::vector<Interval> dims;
        for (const auto& v : p) dims.emplace_back(Endpoint::neg_inf(), false, v, true);
        ASSERT_TRUE(b.infimum.has_value());
        EXPECT_EQ(*b.infimum, x.eval(Region::from_boxes(2, {Box(dims)})));
        EXPECT_EQ(height_class(*b.infimum), b.level);
        for (const auto& l : b.landing_levels) EXPECT_LT(*l, b.level);
      }
  }
}

TEST(Reconstruct, RoundTripOnSaturatingAntichain) {
  GalleryEntry e = gallery_entry("3.7/7");
  ReconstructResult r = reconstruct(e.resolution);
  ASSERT_EQ(r.status, ReconstructResult::Status::Ok) << r.detail;
  EXPECT_EQ(*r.observable, *e.observable);
}

TEST(Reconstruct, MismatchWitness) {
  StepResolution f = F_of("3.7/9");
  ReconstructResult r = reconstruct(f);
  ASSERT_EQ(r.status, ReconstructResult::Status::Mismatch);
  ASSERT_TRUE(r.witness_cell.has_value());
  EXPECT_EQ(f.value(*r.witness_cell), *r.f_value);
  EXPECT_NE(*r.f_value, *r.candidate_value);
  std::vector<Atom> expected{{{1, 3}, LexElement(k2, 1, {2})}, {{3, 2}, LexElement(k2, 1, {-2})}};
  EXPECT_EQ(r.candidate, expected);
  EXPECT_EQ(eval_F(f, {Rational(5, 2), Rational(1, 2)}), LexElement(k2, 0, {1}));
}

TEST(Reconstruct, FailsWhenInfimaDoNotSumToOne) {
  EXPECT_EQ(reconstruct(F_of("3.7/1")).status, ReconstructResult::Status::NotReconstructible);
}

TEST(Bounds, Examples) {
  BoundsReport b7 = bounds_check(all_blocks(F_of("3.7/7")), 3);
  EXPECT_TRUE(b7.passed);
  EXPECT_EQ(b7.total, 6u);
  EXPECT_EQ(b7.total_limit, 6u);
  BoundsReport b1 = bounds_check(all_blocks(F_of("3.7/1")), 2);
  EXPECT_TRUE(b1.passed);
  EXPECT_EQ(b1.total, 2u);
  BoundsReport bp = bounds_check(all_blocks(pathological_family(3, 2)), 2);
  EXPECT_FALSE(bp.passed);
  EXPECT_FALSE(bp.witness.empty());
}

TEST(Rays, PassAtEveryCharPoint) {
  for (const auto& name : gallery_names()) {
    StepResolution f = F_of(name);
    for (const auto& p : all_blocks(f).char_points()) EXPECT_TRUE(rays_check(f, p).passed) << name << to_string(p);
  }
  StepResolution f7 = F_of("3.7/7");
  EXPECT_EQ(height_class(eval_F(f7, {Rational(3, 2), 4})), 1);
  EXPECT_EQ(height_class(eval_F(f7, {Rational(5, 2), 4})), 2);
}

TEST(Rays, FailOnNonMonotoneF) {
  Signature s(2, 1);
  LexElement z = LexElement::zero(s), h(s, 1, {0});
  StepResolution f = StepResolution::from_cells(s, 2, {{1}, {1}}, {z, h, z, h});
  CheckResult r = rays_check(f, E(1, 1));
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.witness.empty());
  Signature s1(1, 1);
  StepResolution line = StepResolution::from_cells(s1, 1, {{0}}, {LexElement::zero(s1), LexElement::unit(s1)});
  EXPECT_THROW(rays_check(line, {Endpoint(0)}), Error);
}

TEST(BlockCube, HoldsForWorkedCases) {
  for (const auto& name : gallery_names()) {
    StepResolution f = F_of(name);
    EXPECT_TRUE(block_cube_check(f, all_blocks(f)).passed) << name;
  }
}

TEST(Antichain, Examples) {
  EXPECT_EQ(max_antichain(all_blocks(F_of("3.7/7"))), 3u);
  EXPECT_EQ(max_antichain(all_blocks(F_of("3.7/1"))), 1u);
  EXPECT_EQ(max_antichain(all_blocks(F_of("saturate/1"))), 1u);
  Signature s1(1, 1);
  StepResolution line = StepResolution::from_cells(s1, 1, {{0}}, {LexElement::zero(s1), LexElement::unit(s1)});
  EXPECT_FALSE(max_antichain(all_blocks(line)).has_value());
}

TEST(Antichain, MatchesPairwiseOracle) {
  TrialConfig c;
  c.k_max = 4;
  for (std::uint64_t i = 0; i < 100; ++i) {
    BlockReport r = all_blocks(StepResolution::from_observable(random_observable(c, i)));
    auto pts = r.char_points();
    // Exhaustive search over subsets; point counts stay small.
    ASSERT_LE(pts.size(), 10u);
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << pts.size()); ++mask) {
      bool ok = true;
      for (std::size_t a = 0; a < pts.size() && ok; ++a)
        for (std::size_t b = a + 1; b < pts.size() && ok; ++b)
          if ((mask >> a & 1) && (mask >> b & 1)) {
            bool le = pts[a][0] <= pts[b][0] && pts[a][1] <= pts[b][1];
            bool ge = pts[b][0] <= pts[a][0] && pts[b][1] <= pts[a][1];
            ok = !le && !ge;
          }
      if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    EXPECT_EQ(max_antichain(r), best) << "trial " << i;
  }
}

TEST(Pathological, StaircaseIsFlaggedButPassesAxioms) {
  StepResolution f = pathological_family(4, 3);
  BlockReport r = all_blocks(f);
  auto pts = r.char_points();
  for (int j = 1; j <= 4; ++j)
    EXPECT_TRUE(std::count(pts.begin(), pts.end(), E(j, 5 - j))) << j;
  EXPECT_GE(r.counts()[1], 4u);
  EXPECT_NE(reconstruct(f).status, ReconstructResult::Status::Ok);
  AxiomReport a = check_axioms(f);
  EXPECT_TRUE(a.at("monotony").passed);
  EXPECT_TRUE(a.at("top").passed);
  EXPECT_TRUE(a.at("bottom").passed);
}
