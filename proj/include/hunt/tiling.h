#pragma once

// Tilings and slicings of a square, and the index arithmetic built on them.
//
// Tiling(i) partitions a square into 4^i closed tiles. Slicing(i), for
// i >= 3, partitions it into 2^i triangles with apex at the centre, cut by
// lines at equal angles, one of them horizontal. rho(i) is the largest
// rounded-up ratio of two triangle side lengths of Slicing(i) (scale-free),
// phi(i) = i * rho(i), and index(alpha) = 4 * phi(max(3, ceil(log2(2*pi /
// alpha)) + 1)) is the tiling depth at which any angle of size 2*pi - alpha
// received at the square centre leaves a paintable tile in its complement.
//
// index(pi) is already 24, so the exact depth is unenumerable at desk
// scale; empirical_index finds the smallest depth that works for every
// orientation of a fixed hint size, which is all the painting procedure
// needs per hint.

#include <cstdint>
#include <vector>

#include "hunt/geom.h"

namespace hunt {

struct TileAddress {
  int level = 0;
  std::uint64_t col = 0;  // from the west edge
  std::uint64_t row = 0;  // from the south edge
};

StraightRect tile_rect(const StraightRect& base, const TileAddress& t);
TileAddress tile_at_point(const StraightRect& base, int level, Point p);

struct SlicingTriangle {
  Point apex;
  Point b0;  // boundary hit of the sector's counterclockwise-later ray
  Point b1;
  std::array<double, 3> side_lengths() const;
};

// Boundary hit of the ray from the square centre at `angle`.
Point square_boundary_point(const StraightRect& square, double angle);
// Materialized Slicing(i); guarded to i <= 16 (memory).
std::vector<SlicingTriangle> slicing(const StraightRect& square, int i);
SlicingTriangle slicing_triangle(const StraightRect& square, int i, std::uint64_t sector);

// Largest ceil(a/b) over triangle side lengths of Slicing(i); guard i <= 24.
int rho(int i);
long long phi(int i);
long long index_of(double alpha);
// index(2*pi - beta): the per-hint index cap for hints bounded by beta.
long long psi_of(double beta);

// Subquadratic-cost exponent margin 0.5 * (1 - log_{4^psi}(4^psi - 1)),
// evaluated in a cancellation-free form; positive for every psi >= 1.
double epsilon_exponent(long long psi);

// Ceiling with a tolerance snap: values within eps of an integer round to it.
long long ceil_eps(double x);

// Containment of the closed tile in a closed cone of size <= pi, tested on
// corners shrunk toward the tile centre by a factor 1e-9 so border-grazing
// tiles are rejected.
bool tile_in_cone(const StraightRect& base, const TileAddress& t, const AngularHint& cone);
// Containment in the complement of `hint` (the excluded zone).
bool tile_in_hint_complement(const StraightRect& base, const TileAddress& t,
                             const AngularHint& hint);
// Strict containment in the interior of a slicing triangle.
bool tile_in_triangle_interior(const StraightRect& base, const TileAddress& t,
                               const SlicingTriangle& tri);

// First tile of Tiling(level) of `base` inside the given cone, if any.
// Exhaustive below level 7, bisector-guided above (sound, may miss).
std::optional<TileAddress> find_tile_in_cone(const StraightRect& base, int level,
                                             const AngularHint& cone);

// Constructive witness: a tile of Tiling(4*phi(i)) of the square strictly
// inside the interior of the given slicing triangle (second tile row off the
// square side the triangle leans on). Intended for small i.
TileAddress witness_tile_in_triangle(const StraightRect& square, int i, std::uint64_t sector);

struct EmpiricalIndexParams {
  int trials = 200;
  std::uint64_t seed = 12345;
  int sweep_steps = 10000;
  int max_index = 12;
};

// Smallest k such that every orientation of a hint of size beta at the
// square centre leaves at least one tile of Tiling(k) inside the hint
// complement: certified over a deterministic orientation sweep, seeded
// random trials, and boundary-aligned orientations.
int empirical_index(double beta, const EmpiricalIndexParams& params);
// Memoized, default parameters.
int empirical_index(double beta);

}  // namespace hunt
