#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <vector>

#include "digitop/lattice.hpp"
#include "digitop/verdict.hpp"

namespace digitop {

using Table = std::vector<std::uint32_t>;

// Total function between images, stored as codomain indices in domain order.
class Map {
 public:
  Map(Image domain, Image codomain, Table table);
  // Evaluate fn on every domain point.
  static Map from_function(const Image& domain, const Image& codomain, const std::function<Point(const Point&)>& fn);
  static Map from_pairs(const Image& domain, const Image& codomain, const std::vector<std::pair<Point, Point>>& pairs);

  const Image& domain() const { return dom_; }
  const Image& codomain() const { return cod_; }
  const Table& table() const { return table_; }
  std::uint32_t at(std::size_t i) const { return table_[i]; }
  Point operator()(const Point& x) const;
  // Computed on first use and shared by copies.
  bool continuous() const;
  // Throws if the map is not continuous.
  const Map& require_continuous(const char* what) const;

  bool operator==(const Map& o) const { return table_ == o.table_ && dom_ == o.dom_ && cod_ == o.cod_; }

 private:
  Image dom_, cod_;
  Table table_;
  std::shared_ptr<std::atomic<int>> continuous_;
};

bool is_continuous(const Map& f);
// Continuity of a table without building a Map.
bool table_continuous(const Image& domain, const Image& codomain, const Table& t);

Map identity(const Image& x);
Map compose(const Map& g, const Map& f);
Map product_map(const Map& f1, const Map& f2);
Map diagonal(const Image& x);
Map constant_map(const Image& x, const Point& y, const Image& target);
// Inclusion of a subset (coordinates unchanged).
Map inclusion(const Image& a, const Image& x);
bool is_inclusion(const Map& j);
// Projection of X x Y onto a factor.
Map projection_first(const Image& x, const Image& y);
Map projection_second(const Image& x, const Image& y);

struct Isomorphism {
  Map forward;
  Map inverse;
};
Verdict<Isomorphism> find_isomorphism(const Image& x, const Image& y);

}  // namespace digitop
