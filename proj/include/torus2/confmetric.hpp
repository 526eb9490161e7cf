#pragma once

#include <vector>

#include "torus2/error.hpp"

namespace torus2 {

// Point of the flat torus R^2/Z^2, coordinates reduced into [0,1).
struct TorusPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};

TorusPoint make_torus_point(double x, double y);

// Unordered configuration of n distinct torus points, n >= 1.
struct Configuration {
  std::vector<TorusPoint> points;
};

Configuration make_configuration(std::vector<TorusPoint> points);

// Flat metric: minimum Euclidean distance over integer shifts in {-1,0,1}^2.
double torus_dist(const TorusPoint& p, const TorusPoint& q);

// Hausdorff distance max(max_i min_j d(z_i,w_j), max_i min_j d(w_i,z_j)).
double hausdorff(const Configuration& z, const Configuration& w);

}  // namespace torus2
