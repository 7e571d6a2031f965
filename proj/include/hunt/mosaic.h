#pragma once

// The painting procedure for bounded angles: a black/white quadtree over a
// square, painting passes that exclude one tile per hint at a fixed tiling
// depth, and a final exhaustive scan of the tiles left white.

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "hunt/geom.h"
#include "hunt/scan.h"
#include "hunt/simulator.h"
#include "hunt/tiling.h"

namespace hunt {

enum class TileState { white, black, mixed };

// Hierarchical black/white record over a square. Painting is monotone and
// tile-aligned: a tile is black when all its points are excluded, white when
// its interior is untouched (its border may belong to black neighbours).
class PaintState {
 public:
  PaintState(const StraightRect& base, int max_level);

  const StraightRect& base() const { return base_; }
  int max_level() const { return max_level_; }

  // Paints the subtree at `t` black and re-collapses ancestors. Idempotent.
  void paint_black(const TileAddress& t);
  TileState state(const TileAddress& t) const;
  bool is_white(const TileAddress& t) const { return state(t) == TileState::white; }

  double white_area() const;
  // Deepest depth at which a mixed node exists; -1 when the tree is pure.
  int max_mixed_depth() const;
  // Addresses of white tiles of Tiling(level), row-major (row, then col).
  std::vector<TileAddress> white_tiles(int level) const;
  // True when p lies strictly inside the painted-black region.
  bool point_excluded_strict(Point p) const;
  // Painted rectangles (black leaves), for rendering and audits.
  std::vector<StraightRect> black_rects() const;

 private:
  struct Node {
    TileState st = TileState::white;
    std::unique_ptr<Node> child[4];  // index = (col_bit << 1) | row_bit
  };

  StraightRect base_;
  int max_level_;
  Node root_;
};

struct MosaicReport {
  int i = 0;
  long long k = 0;
  long long index_max = 0;
  int passes = 0;
  std::vector<int> tiles_painted;            // per pass
  std::vector<double> white_area_after_pass;  // per pass
  double white_area = 0.0;                    // after the last pass
  double cost = 0.0;                          // travelled during the call
  int paint_gaps = 0;
  bool found = false;
  bool final_scan_ran = false;
  std::vector<StraightRect> black_rects;  // painted leaves, for rendering
};

enum class IndexMode { empirical, exact_formula };
const char* index_mode_name(IndexMode m);

struct MosaicOptions {
  IndexMode mode = IndexMode::empirical;
  // Admissible number of finest-tiling leaves; checked before any movement.
  std::uint64_t tile_budget = 1ull << 24;
  // Observation point for tests: called after each painting pass.
  std::function<void(const PaintState&, int pass)> pass_hook;
};

// Number of painting passes for square exponent i and depth step k.
int mosaic_pass_count(int i, long long k);

// One phase of the bounded-angle hunt over the square of side 2^i centred
// at the origin. Returns the largest per-hint index seen (k when every hint
// could be served at depth k, in which case the white remainder was scanned).
MosaicReport mosaic(Episode& ep, int i, long long k, const MosaicOptions& options = {});

struct BoundedHuntReport {
  bool found = false;
  double cost = 0.0;
  int phases = 0;
  std::vector<MosaicReport> mosaic_reports;
  std::vector<int> repeats_per_phase;
};

struct BoundedHuntOptions {
  MosaicOptions mosaic;
  int max_phases = 40;
};

BoundedHuntReport treasure_hunt_bounded(Episode& ep, const BoundedHuntOptions& options = {});

}  // namespace hunt
