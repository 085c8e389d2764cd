#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "digitop/maps.hpp"

namespace digitop {

// DIGITOP_MAX_MAPS if set, else 10^7.
std::uint64_t default_map_cap();

struct EnumStats {
  std::uint64_t count = 0;
  bool overflow = false;  // cap reached before the space was exhausted
  bool stopped = false;   // visitor asked to stop
};

// Per-domain-point candidate lists (ascending codomain indices).
using Candidates = std::vector<std::vector<std::uint32_t>>;
using TableVisitor = std::function<bool(const Table&)>;

// Dense adjacency lookup over codomain indices.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(const Image& x);
  bool operator()(std::uint32_t a, std::uint32_t b) const {
    if (dense_) {
      std::size_t bit = static_cast<std::size_t>(a) * n_ + b;
      return (bits_[bit >> 6] >> (bit & 63)) & 1u;
    }
    return x_.adjacent_idx(a, b);
  }

 private:
  Image x_;
  std::size_t n_;
  bool dense_;
  std::vector<std::uint64_t> bits_;
};

// Backtracking over continuous tables in canonical order. Each point's
// candidates are cut down to the closed neighborhoods of the values already
// chosen at earlier adjacent points, and to allowed[i] when given.
class TableEnumerator {
 public:
  TableEnumerator(Image domain, Image codomain);
  EnumStats run(const Candidates* allowed, const TableVisitor& visit, std::uint64_t cap) const;
  const Image& domain() const { return dom_; }
  const Image& codomain() const { return cod_; }
  const AdjacencyMatrix& adjacency() const { return adj_; }

 private:
  Image dom_, cod_;
  AdjacencyMatrix adj_;
  std::vector<std::vector<std::uint32_t>> earlier_;
};

EnumStats enumerate_tables(const Image& domain, const Image& codomain, const Candidates* allowed,
                           const TableVisitor& visit, std::uint64_t cap);

class MapSpace {
 public:
  MapSpace(Image source, Image target) : source_(std::move(source)), target_(std::move(target)) {}
  const Image& source() const { return source_; }
  const Image& target() const { return target_; }
  EnumStats for_each(const std::function<bool(const Map&)>& visit, std::uint64_t cap = default_map_cap()) const;
  // Throws CapExceeded on overflow.
  std::vector<Map> all(std::uint64_t cap = default_map_cap()) const;

 private:
  Image source_, target_;
};

inline MapSpace enumerate_maps(const Image& y, const Image& z) { return MapSpace(y, z); }

class BasedPathSpace {
 public:
  BasedPathSpace(Image target, Point basepoint, int length);
  const Image& target() const { return target_; }
  const Point& basepoint() const { return base_; }
  int length() const { return n_; }
  bool contains(const Map& path) const;
  EnumStats for_each(const std::function<bool(const Map&)>& visit, std::uint64_t cap = default_map_cap()) const;
  std::vector<Map> all(std::uint64_t cap = default_map_cap()) const;

 private:
  Image target_;
  Point base_;
  int n_;
};

inline BasedPathSpace based_paths(const Image& y, const Point& y0, int n) { return BasedPathSpace(y, y0, n); }

bool maps_adjacent(const Map& f, const Map& g);
bool tables_adjacent(const Image& domain, const Image& codomain, const Table& f, const Table& g);

// Paths are maps I_N -> Y.
int path_length(const Map& path);
Map make_path(const Image& y, const std::vector<Point>& points);
Point eval_at(const Map& path, int t);
std::pair<Point, Point> endpoints(const Map& path);

// f^*(g) = g o f and f_*(g) = f o g.
Map pullback(const Map& f, const Map& g);
Map pushforward(const Map& f, const Map& g);
// q^*: P_M Y -> P_N Y, repeating the last value.
Map trivial_extension(const Map& path, int n);
// (rho_l)^*: P_N Y -> P_{lN+l-1} Y.
Map refine_path(const Map& path, int l);

// A function X -> map(Y, Z), one value per point of X in canonical order.
struct Curried {
  Image source;
  std::vector<Map> values;
};
Curried curry(const Map& f, const Image& x, const Image& y);
Map uncurry(const Curried& g);
// Each value continuous, adjacent arguments give adjacent values.
bool is_continuous(const Curried& g);

}  // namespace digitop
