#pragma once

#include <vector>

#include "fiber/boxes.hpp"
#include "fiber/freewords.hpp"

namespace fiber {

enum class Kernel { FinitelyGenerated, NotFinitelyGenerated };
enum class Fibering { Fibers, DoesNotFiber };

// Throws std::invalid_argument unless r is nontrivial, cyclically reduced and phi(r) = 0.
Kernel brown_fg(const Word& r, const Phi& phi);

// Integer direction in the plane of homomorphisms; (x, y) stands for phi(a) = x, phi(b) = y.
struct Direction {
  long long x = 0;
  long long y = 0;
  Direction operator-() const { return {-x, -y}; }
  friend bool operator==(const Direction&, const Direction&) = default;
};

struct HullVertex {
  LatticePoint point;
  long long visits = 0;
  bool on_hull = true;
  bool marked() const { return visits > 1; }
};

// Open counterclockwise arc; endpoint flags cover the axis-direction clause.
struct SigmaArc {
  Direction from_dir;
  Direction to_dir;
  bool includes_from = false;
  bool includes_to = false;
};

// Vertices of the convex hull of the closed lift, counterclockwise from the lowest-leftmost.
std::vector<HullVertex> hull_with_marks(const Word& r);

std::vector<SigmaArc> bns_sigma(const Word& r);
bool sigma_contains(const std::vector<SigmaArc>& sigma, Direction u);
// Connected components of the union on the circle; 1 with full_circle set when it is everything.
struct SigmaShape {
  int components = 0;
  bool full_circle = false;
};
SigmaShape sigma_shape(const std::vector<SigmaArc>& sigma);

Fibering group_fibers(const Word& r);

}  // namespace fiber
