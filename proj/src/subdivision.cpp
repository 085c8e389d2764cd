#include "digitop/subdivision.hpp"

namespace digitop {

Image subdivide_image(const Image& x, int k) {
  if (k < 1) throw PreconditionFailed("subdivision factor must be positive");
  if (k == 1) return x;
  int n = x.dim();
  std::size_t block = 1;
  for (int d = 0; d < n; ++d) block *= static_cast<std::size_t>(k);
  std::vector<int> flat;
  flat.reserve(x.size() * block * n);
  std::vector<int> t(n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto c = x.coords(i);
    std::fill(t.begin(), t.end(), 0);
    for (std::size_t b = 0; b < block; ++b) {
      for (int d = 0; d < n; ++d) flat.push_back(k * c[d] + t[d]);
      for (int d = n - 1; d >= 0; --d) {
        if (++t[d] < k) break;
        t[d] = 0;
      }
    }
  }
  return Image::from_flat(n, std::move(flat));
}

namespace {

Map projection_between(const Image& fine, const Image& coarse, int k) {
  Table t(fine.size());
  std::vector<int> q(fine.dim());
  for (std::size_t i = 0; i < fine.size(); ++i) {
    auto c = fine.coords(i);
    for (int d = 0; d < fine.dim(); ++d) q[d] = floor_div(c[d], k);
    auto j = coarse.index_of(q);
    if (!j) throw PreconditionFailed("projection leaves the base image");
    t[i] = static_cast<std::uint32_t>(*j);
  }
  return Map(fine, coarse, std::move(t));
}

}  // namespace

Map subdivision_projection(const Image& x, int k) { return projection_between(subdivide_image(x, k), x, k); }

Subdivision subdivide(const Image& x, int k) {
  if (k < 2) throw PreconditionFailed("subdivide: factor must be at least 2");
  Image s = subdivide_image(x, k);
  Map p = projection_between(s, x, k);
  if (!p.continuous()) throw std::logic_error("subdivision projection is not continuous");
  return {x, k, s, std::move(p)};
}

std::vector<Point> fiber(const Subdivision& sub, const Point& x) {
  if (!sub.base.contains(x)) throw PreconditionFailed("fiber: " + x.str() + " is not in the base");
  std::vector<Point> out;
  int n = sub.base.dim(), k = sub.factor;
  std::vector<int> t(n, 0);
  while (true) {
    std::vector<int> c(n);
    for (int d = 0; d < n; ++d) c[d] = k * x[d] + t[d];
    out.emplace_back(std::move(c));
    int d = n - 1;
    while (d >= 0 && t[d] == k - 1) t[d--] = 0;
    if (d < 0) break;
    ++t[d];
  }
  return out;
}

Map subdivide_inclusion(const Map& j, int k) {
  if (!is_inclusion(j)) throw PreconditionFailed("subdivide_inclusion: map is not an inclusion");
  if (k < 1) throw PreconditionFailed("subdivide_inclusion: factor must be positive");
  return inclusion(subdivide_image(j.domain(), k), subdivide_image(j.codomain(), k));
}

Map iso_iterated(const Image& x, int k, int l) {
  Image lhs = subdivide_image(subdivide_image(x, k), l);
  Image rhs = subdivide_image(x, k * l);
  return Map::from_function(lhs, rhs, [](const Point& p) { return p; });
}

Map iso_product_subdivision(const Image& x, const Image& y, int k) {
  Image lhs = subdivide_image(product(x, y), k);
  Image rhs = product(subdivide_image(x, k), subdivide_image(y, k));
  return Map::from_function(lhs, rhs, [](const Point& p) { return p; });
}

Map interval_projection(int n, int k) { return projection_between(subdivide_image(interval(n), k), interval(n), k); }

}  // namespace digitop
