#pragma once

#include <vector>

#include "digitop/maps.hpp"

namespace digitop {

// floor(a / k) for k > 0.
inline int floor_div(int a, int k) { return a >= 0 ? a / k : -((-a + k - 1) / k); }

struct Subdivision {
  Image base;
  int factor;
  Image image;
  Map projection;
};

// Points k*x + t with t in [0, k-1]^n. k = 1 returns the base itself.
Image subdivide_image(const Image& x, int k);
Subdivision subdivide(const Image& x, int k);
// rho_k : S(X,k) -> X.
Map subdivision_projection(const Image& x, int k);
std::vector<Point> fiber(const Subdivision& sub, const Point& x);
// S(j,k) for an inclusion j: A -> X.
Map subdivide_inclusion(const Map& j, int k);
Map iso_iterated(const Image& x, int k, int l);
Map iso_product_subdivision(const Image& x, const Image& y, int k);

// rho_k applied to a whole interval image: I_{kN+k-1} -> I_N.
Map interval_projection(int n, int k);

}  // namespace digitop
