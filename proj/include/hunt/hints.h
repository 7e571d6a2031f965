#pragma once

// Hint oracles. Every oracle is honest by construction: each reply is a
// closed angle, anchored at the query position, that contains the treasure.
// Strategies are explicit and seeded so that runs are reproducible.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hunt/geom.h"

namespace hunt {

struct OracleDescriptor {
  std::string kind;      // "halfplane" | "bounded" | "forbidden" | "none"
  std::string strategy;  // e.g. "perpendicular_worst"
  std::optional<double> beta;
  std::optional<std::uint64_t> seed;
};

class HintOracle {
 public:
  virtual ~HintOracle() = default;
  virtual AngularHint query(Point pos) = 0;
  // nullopt marks a deferred-treasure oracle (the lower-bound adversary).
  virtual std::optional<Point> treasure() const = 0;
  virtual OracleDescriptor descriptor() const = 0;
};

// Emits half-planes (sweep exactly pi) whose boundary passes through the
// query position.
class HalfPlaneAdversary : public HintOracle {
 public:
  enum class Strategy { perpendicular_worst, random_honest, fixed_direction };

  HalfPlaneAdversary(Point treasure, Strategy strategy, std::uint64_t seed = 0,
                     double fixed_angle = 0.0);

  HalfPlane query_halfplane(Point pos);
  AngularHint query(Point pos) override { return halfplane_to_hint(query_halfplane(pos)); }
  std::optional<Point> treasure() const override { return treasure_; }
  OracleDescriptor descriptor() const override;

 private:
  Point treasure_;
  Strategy strategy_;
  std::uint64_t seed_;
  double fixed_angle_;
  std::mt19937_64 rng_;
};

// Emits angles of size exactly beta, with beta in (pi, 2*pi).
class BoundedAngleAdversary : public HintOracle {
 public:
  enum class Strategy { edge_worst, random_honest };

  BoundedAngleAdversary(Point treasure, double beta, Strategy strategy, std::uint64_t seed = 0);

  AngularHint query(Point pos) override;
  std::optional<Point> treasure() const override { return treasure_; }
  double beta() const { return beta_; }
  OracleDescriptor descriptor() const override;

 private:
  Point treasure_;
  double beta_;
  Strategy strategy_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

struct ForbiddenCone {
  Point vertex;
  double direction;  // bisector angle
  double size;
  AngularHint cone() const {
    return AngularHint(vertex, dir_from_angle(direction + size / 2.0), size);
  }
};

// Lower-bound adversary: the i-th reply excludes a "forbidden" cone of size
// 2^-i. Queries outside the disc of radius D get a cone disjoint from the
// disc; queries inside get the cone greedily aimed at the largest area of
// the disc not excluded so far. The treasure is deferred: it is placed
// post-hoc in the never-excluded, never-visited region.
class ForbiddenAngleAdversary : public HintOracle {
 public:
  explicit ForbiddenAngleAdversary(double disc_radius, std::uint64_t seed = 0);

  AngularHint query(Point pos) override;
  std::optional<Point> treasure() const override { return std::nullopt; }
  OracleDescriptor descriptor() const override;

  int call_count() const { return call_count_; }
  double disc_radius() const { return disc_radius_; }
  const std::vector<ForbiddenCone>& transcript() const { return transcript_; }

 private:
  double greedy_direction(Point pos, double size) const;

  double disc_radius_;
  std::uint64_t seed_;
  int call_count_ = 0;
  std::vector<ForbiddenCone> transcript_;
  std::vector<Point> disc_samples_;  // fixed scoring set for the greedy aim
};

const char* strategy_name(HalfPlaneAdversary::Strategy s);
const char* strategy_name(BoundedAngleAdversary::Strategy s);

}  // namespace hunt
