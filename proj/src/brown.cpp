#include "fiber/brown.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fiber {

namespace {

long long cross(Direction u, Direction v) { return u.x * v.y - u.y * v.x; }
long long dot(Direction u, Direction v) { return u.x * v.x + u.y * v.y; }
long long cross3(const LatticePoint& o, const LatticePoint& p, const LatticePoint& q) {
  return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
}

bool same_ray(Direction u, Direction v) { return cross(u, v) == 0 && dot(u, v) > 0; }

// Half-plane index then cross product gives an exact angular order from the +x axis.
bool angle_less(Direction u, Direction v) {
  auto half = [](Direction d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

bool arc_contains(const SigmaArc& arc, Direction u) {
  if (same_ray(u, arc.from_dir)) return arc.includes_from;
  if (same_ray(u, arc.to_dir)) return arc.includes_to;
  return cross(arc.from_dir, u) > 0 && cross(u, arc.to_dir) > 0;
}

Direction primitive(Direction d) {
  long long g = std::gcd(d.x, d.y);
  return g == 0 ? d : Direction{d.x / g, d.y / g};
}

void require_relator(const Word& r) {
  if (r.empty()) throw std::invalid_argument("relator must be nontrivial");
  if (!is_cyclically_reduced(r)) throw std::invalid_argument("relator must be cyclically reduced");
}

}  // namespace

Kernel brown_fg(const Word& r, const Phi& phi) {
  require_relator(r);
  if (phi(r) != 0) throw std::invalid_argument("phi does not vanish on the relator");
  if (r.size() == 2 && r[0] == r[1] && phi(r[0]) == 0) return Kernel::NotFinitelyGenerated;
  Box box = box_of_word(r, phi);
  return (marked_top(box) || marked_bottom(box)) ? Kernel::NotFinitelyGenerated
                                                 : Kernel::FinitelyGenerated;
}

std::vector<HullVertex> hull_with_marks(const Word& r) {
  require_relator(r);
  auto path = lift_path(r);
  if (path.back() != path.front()) throw std::invalid_argument("lift is not closed");
  path.pop_back();
  std::map<LatticePoint, long long> visits;
  for (const auto& p : path) ++visits[p];

  std::vector<LatticePoint> pts;
  pts.reserve(visits.size());
  for (const auto& [p, n] : visits) pts.push_back(p);
  if (pts.size() < 3) throw std::invalid_argument("degenerate hull");

  // Andrew's monotone chain on the lexicographically sorted points, dropping collinear ones.
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross3(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) throw std::invalid_argument("degenerate hull");

  std::vector<HullVertex> out;
  out.reserve(h.size());
  for (const auto& p : h) out.push_back({p, visits[p], true});
  return out;
}

std::vector<SigmaArc> bns_sigma(const Word& r) {
  require_relator(r);
  auto e = exponent_sums(r);
  if (e.ea != 0 || e.eb != 0) throw std::invalid_argument("relator is not in the commutator subgroup");
  const auto hull = hull_with_marks(r);
  const std::size_t n = hull.size();

  auto edge_normal = [&](std::size_t i) {  // outward normal of edge i -> i+1
    const auto& p = hull[i].point;
    const auto& q = hull[(i + 1) % n].point;
    return primitive(Direction{q.y - p.y, -(q.x - p.x)});
  };
  // An edge normal on an axis is included when the edge has length 1 and both ends are unmarked.
  auto axis_included = [&](std::size_t i) {
    Direction d = edge_normal(i);
    if (d.x != 0 && d.y != 0) return false;
    const auto& p = hull[i].point;
    const auto& q = hull[(i + 1) % n].point;
    long long len = std::abs(q.x - p.x) + std::abs(q.y - p.y);
    return len == 1 && !hull[i].marked() && !hull[(i + 1) % n].marked();
  };

  std::vector<SigmaArc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    if (hull[i].marked()) continue;
    std::size_t prev = (i + n - 1) % n;
    arcs.push_back({edge_normal(prev), edge_normal(i), axis_included(prev), axis_included(i)});
  }
  return arcs;
}

bool sigma_contains(const std::vector<SigmaArc>& sigma, Direction u) {
  return std::any_of(sigma.begin(), sigma.end(), [&](const SigmaArc& a) { return arc_contains(a, u); });
}

namespace {

// Sorted distinct critical directions: arc endpoints and, optionally, their antipodes.
std::vector<Direction> critical_directions(const std::vector<SigmaArc>& sigma, bool antipodes) {
  std::vector<Direction> ds;
  for (const auto& a : sigma) {
    ds.push_back(a.from_dir);
    ds.push_back(a.to_dir);
    if (antipodes) {
      ds.push_back(-a.from_dir);
      ds.push_back(-a.to_dir);
    }
  }
  // The axes make every gap between consecutive probes shorter than a half turn.
  for (Direction d : {Direction{1, 0}, Direction{0, 1}, Direction{-1, 0}, Direction{0, -1}}) ds.push_back(d);
  for (auto& d : ds) d = primitive(d);
  std::sort(ds.begin(), ds.end(), angle_less);
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  return ds;
}

}  // namespace

SigmaShape sigma_shape(const std::vector<SigmaArc>& sigma) {
  if (sigma.empty()) return {};
  const auto ds = critical_directions(sigma, false);
  // Alternate probes: critical direction i, then the open gap after it.
  std::vector<bool> in;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    Direction next = ds[(i + 1) % ds.size()];
    in.push_back(sigma_contains(sigma, ds[i]));
    in.push_back(sigma_contains(sigma, Direction{ds[i].x + next.x, ds[i].y + next.y}));
  }
  if (std::all_of(in.begin(), in.end(), [](bool b) { return b; })) return {1, true};
  int comps = 0;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i] && !in[(i + in.size() - 1) % in.size()]) ++comps;
  return {comps, false};
}

Fibering group_fibers(const Word& r) {
  require_relator(r);
  auto phi = phi_from_relator(r);
  if (auto* p = std::get_if<Phi>(&phi))
    return brown_fg(r, *p) == Kernel::FinitelyGenerated ? Fibering::Fibers : Fibering::DoesNotFiber;
  const auto sigma = bns_sigma(r);
  if (sigma.empty()) return Fibering::DoesNotFiber;
  const auto ds = critical_directions(sigma, true);
  auto both = [&](Direction u) { return sigma_contains(sigma, u) && sigma_contains(sigma, -u); };
  for (std::size_t i = 0; i < ds.size(); ++i) {
    Direction next = ds[(i + 1) % ds.size()];
    if (both(ds[i]) || both(Direction{ds[i].x + next.x, ds[i].y + next.y})) return Fibering::Fibers;
  }
  return Fibering::DoesNotFiber;
}

}  // namespace fiber
