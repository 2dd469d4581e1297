#pragma once

// Level sets T_i = {s : F(s) in M_i}, projections, characteristic points and
// blocks of a step spectral resolution, plus the structural checks that hold
// for resolutions induced by observables.

#include "lexspec/spectral.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lexspec {

/// A characteristic point; coordinates may be -inf for pathological F.
using ExtPoint = std::vector<Endpoint>;

std::string to_string(const ExtPoint& p);

struct LevelDecomposition {
  /// regions[i] = T_i for i = 0..k.
  std::vector<Region> regions;
  /// Set when F fails check_axioms; regions are still exact.
  bool pathological = false;
};

LevelDecomposition level_regions(const StepResolution& f);

/// pi_j^i(s) for s in T_i, i >= 1. Throws if s lies in T_0.
Endpoint projection(const StepResolution& f, const Point& s, std::size_t axis);
ExtPoint char_point(const StepResolution& f, const Point& s);

struct Block {
  int level = 0;
  ExtPoint char_point;
  Region region = Region::empty(1);
  /// Cells of F making up the block, in flat order.
  std::vector<CellIndex> cells;
  /// Per axis j: level of the block's lowest cell with coordinate j replaced
  /// by pi_j; nullopt when pi_j = -inf.
  std::vector<std::optional<int>> landing_levels;
  /// Level of the characteristic point itself (nullopt if not finite).
  std::optional<int> char_level;
  bool t0_adjoined = false;
  std::optional<LexElement> infimum;
  bool pathological = false;
};

struct BlockReport {
  std::size_t n = 0;
  int k = 0;
  /// blocks[i] lists the blocks of T_i ordered by characteristic point;
  /// blocks[0] is always empty.
  std::vector<std::vector<Block>> blocks;
  bool pathological = false;

  std::vector<std::size_t> counts() const;  // per level 0..k
  std::size_t total() const;
  /// Distinct characteristic points over all levels, sorted.
  std::vector<ExtPoint> char_points() const;
};

std::vector<Block> blocks(const StepResolution& f, int level);
BlockReport all_blocks(const StepResolution& f);

/// Lex meet of F over the block; nullopt if it falls below the block level.
std::optional<LexElement> block_infimum(const StepResolution& f, const Block& b);
bool t0_adjoined(const StepResolution& f, const Block& b);

struct ReconstructResult {
  enum class Status { Ok, NotReconstructible, Pathological, Mismatch };
  Status status = Status::Ok;
  std::optional<DiscreteObservable> observable;
  /// Atoms proposed from the T_0-adjoined blocks (also filled on failure).
  std::vector<Atom> candidate;
  std::string detail;
  /// Mismatch witness: a cell of F where F differs from F_x'.
  std::optional<CellIndex> witness_cell;
  std::optional<LexElement> f_value;
  std::optional<LexElement> candidate_value;
};

std::string_view to_string(ReconstructResult::Status s);

ReconstructResult reconstruct(const StepResolution& f);

struct BoundsReport {
  bool passed = true;
  std::vector<std::size_t> counts;  // per level 0..k
  std::vector<std::size_t> limits;  // k - i + 1 per level (index 0 unused)
  std::size_t total = 0;
  std::size_t total_limit = 0;
  std::string witness;
};

BoundsReport bounds_check(const BlockReport& report, int k);

struct CheckResult {
  bool passed = true;
  std::string witness;
};

/// Level strictly increases across the vertical and horizontal rays through
/// a characteristic point. n = 2 only.
CheckResult rays_check(const StepResolution& f, const ExtPoint& p);

/// Every grid cell t with pi << t <= s for a member s belongs to the block.
CheckResult block_cube_check(const StepResolution& f, const BlockReport& report);

/// Largest antichain among the characteristic points; nullopt unless n = 2.
std::optional<std::size_t> max_antichain(const BlockReport& report);

}  // namespace lexspec
