#include "hunt/mosaic.h"

#include <algorithm>
#include <cmath>

namespace hunt {

const char* index_mode_name(IndexMode m) {
  return m == IndexMode::empirical ? "empirical" : "exact_formula";
}

// --- PaintState ---

PaintState::PaintState(const StraightRect& base, int max_level)
    : base_(base), max_level_(max_level) {
  if (std::abs(base.width() - base.height()) > eps() * (1.0 + base.width())) {
    throw Error(ErrorCode::precondition_violated, "paint state base must be a square");
  }
  if (max_level < 0 || max_level > 40) {
    throw Error(ErrorCode::level_overflow, "paint state level cap out of range");
  }
}

void PaintState::paint_black(const TileAddress& t) {
  if (t.level > max_level_) {
    throw Error(ErrorCode::level_overflow, "tile level beyond the paint state cap");
  }
  std::uint64_t n = 1ull << t.level;
  if (t.col >= n || t.row >= n) {
    throw Error(ErrorCode::precondition_violated, "tile address outside the base square");
  }
  // Descend along the address path, creating children of mixed nodes.
  std::vector<Node*> path;
  Node* node = &root_;
  for (int depth = t.level; depth > 0; --depth) {
    if (node->st == TileState::black) return;  // already covered
    if (node->st == TileState::white) {
      node->st = TileState::mixed;
      for (auto& c : node->child) c = std::make_unique<Node>();
    }
    path.push_back(node);
    int bit = depth - 1;
    int col_bit = static_cast<int>((t.col >> bit) & 1u);
    int row_bit = static_cast<int>((t.row >> bit) & 1u);
    node = node->child[(col_bit << 1) | row_bit].get();
  }
  node->st = TileState::black;
  for (auto& c : node->child) c.reset();
  // Re-collapse: a node with four black children is black.
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    Node* parent = *it;
    bool all_black = true;
    for (auto& c : parent->child) {
      if (c->st != TileState::black) {
        all_black = false;
        break;
      }
    }
    if (!all_black) break;
    parent->st = TileState::black;
    for (auto& c : parent->child) c.reset();
  }
}

TileState PaintState::state(const TileAddress& t) const {
  const Node* node = &root_;
  for (int depth = t.level; depth > 0; --depth) {
    if (node->st != TileState::mixed) return node->st;
    int bit = depth - 1;
    int col_bit = static_cast<int>((t.col >> bit) & 1u);
    int row_bit = static_cast<int>((t.row >> bit) & 1u);
    node = node->child[(col_bit << 1) | row_bit].get();
  }
  return node->st;
}

double PaintState::white_area() const {
  struct Walker {
    static double fraction(const Node& n) {
      if (n.st == TileState::white) return 1.0;
      if (n.st == TileState::black) return 0.0;
      double f = 0.0;
      for (const auto& c : n.child) f += fraction(*c);
      return f / 4.0;
    }
  };
  return Walker::fraction(root_) * base_.area();
}

int PaintState::max_mixed_depth() const {
  struct Walker {
    static int depth(const Node& n, int d) {
      if (n.st != TileState::mixed) return -1;
      int best = d;
      for (const auto& c : n.child) best = std::max(best, depth(*c, d + 1));
      return best;
    }
  };
  return Walker::depth(root_, 0);
}

std::vector<TileAddress> PaintState::white_tiles(int level) const {
  std::vector<TileAddress> out;
  std::uint64_t n = 1ull << level;
  for (std::uint64_t row = 0; row < n; ++row) {
    for (std::uint64_t col = 0; col < n; ++col) {
      TileAddress t{level, col, row};
      if (state(t) == TileState::white) out.push_back(t);
    }
  }
  return out;
}

bool PaintState::point_excluded_strict(Point p) const {
  struct Frame {
    const Node* node;
    StraightRect rect;
  };
  std::vector<Frame> stack{{&root_, base_}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    bool strictly_inside = p.x > f.rect.west() + eps() && p.x < f.rect.east() - eps() &&
                           p.y > f.rect.south() + eps() && p.y < f.rect.north() - eps();
    bool inside_loose = p.x >= f.rect.west() - eps() && p.x <= f.rect.east() + eps() &&
                        p.y >= f.rect.south() - eps() && p.y <= f.rect.north() + eps();
    if (!inside_loose) continue;
    if (f.node->st == TileState::black) {
      if (strictly_inside) return true;
      continue;
    }
    if (f.node->st == TileState::white) continue;
    double mx = (f.rect.west() + f.rect.east()) / 2.0;
    double my = (f.rect.south() + f.rect.north()) / 2.0;
    stack.push_back({f.node->child[0].get(), StraightRect(f.rect.west(), mx, f.rect.south(), my)});
    stack.push_back({f.node->child[1].get(), StraightRect(f.rect.west(), mx, my, f.rect.north())});
    stack.push_back({f.node->child[2].get(), StraightRect(mx, f.rect.east(), f.rect.south(), my)});
    stack.push_back({f.node->child[3].get(), StraightRect(mx, f.rect.east(), my, f.rect.north())});
  }
  return false;
}

std::vector<StraightRect> PaintState::black_rects() const {
  std::vector<StraightRect> out;
  struct Frame {
    const Node* node;
    StraightRect rect;
  };
  std::vector<Frame> stack{{&root_, base_}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.node->st == TileState::black) {
      out.push_back(f.rect);
      continue;
    }
    if (f.node->st == TileState::white) continue;
    double mx = (f.rect.west() + f.rect.east()) / 2.0;
    double my = (f.rect.south() + f.rect.north()) / 2.0;
    stack.push_back({f.node->child[0].get(), StraightRect(f.rect.west(), mx, f.rect.south(), my)});
    stack.push_back({f.node->child[1].get(), StraightRect(f.rect.west(), mx, my, f.rect.north())});
    stack.push_back({f.node->child[2].get(), StraightRect(mx, f.rect.east(), f.rect.south(), my)});
    stack.push_back({f.node->child[3].get(), StraightRect(mx, f.rect.east(), my, f.rect.north())});
  }
  return out;
}

// --- Mosaic ---

int mosaic_pass_count(int i, long long k) {
  // ceil(log_{4^k} sqrt(2^i)) = ceil(i / (4k)), exactly, in integers.
  return static_cast<int>((i + 4 * k - 1) / (4 * k));
}

namespace {

long long per_hint_index(IndexMode mode, double hint_size) {
  if (mode == IndexMode::exact_formula) return index_of(kTwoPi - hint_size);
  return empirical_index(hint_size);
}

}  // namespace

MosaicReport mosaic(Episode& ep, int i, long long k, const MosaicOptions& options) {
  if (i < 1 || k < 1) {
    throw Error(ErrorCode::precondition_violated, "mosaic needs i >= 1 and k >= 1");
  }
  const int passes = mosaic_pass_count(i, k);
  const long long finest = k * passes;
  // Fail fast, before any movement, when the finest tiling is unenumerable.
  if (finest >= 32 ||
      (1ull << static_cast<unsigned>(2 * finest)) > options.tile_budget) {
    throw Error(ErrorCode::tile_budget_exceeded,
                "finest tiling of the mosaic exceeds the tile budget");
  }

  MosaicReport report;
  report.i = i;
  report.k = k;
  report.index_max = k;
  report.passes = passes;

  const Point origin{0.0, 0.0};
  const StraightRect square = StraightRect::centered_square(origin, std::ldexp(1.0, i));
  PaintState paint(square, static_cast<int>(finest));
  const double cost_before = ep.ledger().total;

  auto finish = [&](bool found) {
    report.found = found;
    report.white_area = paint.white_area();
    report.cost = ep.ledger().total - cost_before;
    report.black_rects = paint.black_rects();
    return report;
  };

  for (int pass = 1; pass <= passes; ++pass) {
    int painted_this_pass = 0;
    const int visit_level = static_cast<int>((pass - 1) * k);
    for (const TileAddress& t : paint.white_tiles(visit_level)) {
      StraightRect trect = tile_rect(square, t);
      if (ep.move_to(trect.center()) != MoveOutcome::arrived) return finish(ep.found());
      AngularHint hint = ep.get_hint();
      long long k_prime = per_hint_index(options.mode, hint.size());
      if (k_prime > report.index_max) report.index_max = k_prime;
      if (report.index_max == k) {
        int painted_here = 0;
        std::uint64_t sub = 1ull << static_cast<unsigned>(k);
        for (std::uint64_t sc = 0; sc < sub; ++sc) {
          for (std::uint64_t sr = 0; sr < sub; ++sr) {
            TileAddress sub_tile{static_cast<int>(t.level + k), (t.col << k) | sc,
                                 (t.row << k) | sr};
            if (tile_in_hint_complement(square, sub_tile, hint)) {
              paint.paint_black(sub_tile);
              ++painted_here;
            }
          }
        }
        if (painted_here == 0) {
          // The depth cap failed for this hint. With the exact index formula this is
          // impossible; in empirical mode bump the index so the caller
          // retries the phase one depth deeper.
          ++report.paint_gaps;
          if (options.mode == IndexMode::exact_formula) {
            throw Error(ErrorCode::paint_gap, "no paintable tile at the exact index");
          }
          report.index_max = k + 1;
        }
        painted_this_pass += painted_here;
      }
    }
    report.tiles_painted.push_back(painted_this_pass);
    report.white_area_after_pass.push_back(paint.white_area());
    if (options.pass_hook) options.pass_hook(paint, pass);
  }

  if (report.index_max == k) {
    report.final_scan_ran = true;
    for (const TileAddress& t : paint.white_tiles(static_cast<int>(finest))) {
      StraightRect trect = tile_rect(square, t);
      if (ep.move_to(trect.center()) != MoveOutcome::arrived) return finish(ep.found());
      if (rectangle_scan(ep, trect) != ScanOutcome::completed) return finish(ep.found());
    }
  }
  if (ep.move_to(origin) != MoveOutcome::arrived) return finish(ep.found());
  return finish(false);
}

BoundedHuntReport treasure_hunt_bounded(Episode& ep, const BoundedHuntOptions& options) {
  if (ep.trajectory().waypoints.size() != 1 || ep.ledger().total != 0.0) {
    throw Error(ErrorCode::precondition_violated, "bounded hunt needs a fresh episode");
  }
  BoundedHuntReport report;
  if (ep.found()) {  // treasure within detection range of the start
    report.found = true;
    return report;
  }
  long long index_new = 1;
  for (int i = 1; i <= options.max_phases; ++i) {
    report.phases = i;
    int repeats = 0;
    long long index_old;
    do {
      index_old = index_new;
      MosaicReport mr = mosaic(ep, i, index_old, options.mosaic);
      ++repeats;
      index_new = mr.index_max;
      report.mosaic_reports.push_back(std::move(mr));
      if (ep.halted()) {
        report.repeats_per_phase.push_back(repeats);
        report.found = ep.found();
        report.cost = ep.ledger().total;
        return report;
      }
    } while (index_new != index_old);
    report.repeats_per_phase.push_back(repeats);
  }
  report.found = ep.found();
  report.cost = ep.ledger().total;
  return report;
}

}  // namespace hunt
