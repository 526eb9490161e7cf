#include "torus2/confmetric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace torus2 {

namespace {

double wrap01(double t) {
  double f = t - std::floor(t);
  return f >= 1.0 ? 0.0 : f;  // guard against floor rounding at the boundary
}

}  // namespace

TorusPoint make_torus_point(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y))
    fail(errc::domain, "torus point coordinates must be finite");
  return TorusPoint{wrap01(x), wrap01(y)};
}

Configuration make_configuration(std::vector<TorusPoint> points) {
  if (points.empty()) fail(errc::domain, "a configuration needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        fail(errc::domain, "configuration points must be pairwise distinct");
  return Configuration{std::move(points)};
}

double torus_dist(const TorusPoint& p, const TorusPoint& q) {
  double best = std::numeric_limits<double>::infinity();
  for (int sx = -1; sx <= 1; ++sx)
    for (int sy = -1; sy <= 1; ++sy) {
      double dx = p.x - q.x + sx, dy = p.y - q.y + sy;
      best = std::min(best, std::hypot(dx, dy));
    }
  return best;
}

double hausdorff(const Configuration& z, const Configuration& w) {
  if (z.points.size() != w.points.size())
    fail(errc::domain, "configurations must have the same number of points");
  auto directed = [](const Configuration& a, const Configuration& b) {
    double worst = 0.0;
    for (const TorusPoint& p : a.points) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const TorusPoint& q : b.points) nearest = std::min(nearest, torus_dist(p, q));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(directed(z, w), directed(w, z));
}

}  // namespace torus2
