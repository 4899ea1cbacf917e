#pragma once

#include <vector>

namespace polyft::quad {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre nodes and weights by Newton iteration on P_n.
GaussRule gauss_legendre(int n);

/// Same rule mapped to [0, 1].
GaussRule gauss_legendre_unit(int n);

}  // namespace polyft::quad
