#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace digitop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct SignatureMismatch : Error {
  using Error::Error;
};
struct PreconditionFailed : Error {
  using Error::Error;
};
struct CapExceeded : Error {
  using Error::Error;
};

// A point of Z^n.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<int> c) : c_(c) {}
  explicit Point(std::vector<int> c) : c_(std::move(c)) {}
  explicit Point(std::span<const int> c) : c_(c.begin(), c.end()) {}

  int dim() const { return static_cast<int>(c_.size()); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  std::span<const int> coords() const { return c_; }
  const std::vector<int>& vec() const { return c_; }

  auto operator<=>(const Point&) const = default;
  bool operator==(const Point&) const = default;

  std::string str() const;

 private:
  std::vector<int> c_;
};

bool adjacent(const Point& x, const Point& y);
bool adjacent(std::span<const int> x, std::span<const int> y);
Point concat(const Point& x, const Point& y);

namespace detail {
struct ImageData;
}

// Finite subset of Z^n, points in lexicographic order. Cheap to copy.
class Image {
 public:
  Image(int dim, std::vector<Point> points);
  // Points given as a flat row-major coordinate array.
  static Image from_flat(int dim, std::vector<int> coords);

  int dim() const;
  std::size_t size() const;
  Point point(std::size_t i) const;
  std::span<const int> coords(std::size_t i) const;
  std::vector<Point> points() const;

  std::optional<std::size_t> index_of(std::span<const int> c) const;
  std::optional<std::size_t> index_of(const Point& p) const { return index_of(p.coords()); }
  bool contains(const Point& p) const { return index_of(p).has_value(); }
  std::size_t require_index(const Point& p) const;

  bool adjacent_idx(std::size_t i, std::size_t j) const;

  // Closed neighborhood of point i (including i), ascending indices.
  std::span<const std::uint32_t> neighbors(std::size_t i) const;
  // Neighbors j > i without materializing the cache.
  void for_each_later_neighbor(std::size_t i, const std::function<void(std::size_t)>& fn) const;

  bool operator==(const Image& o) const;
  bool same_object(const Image& o) const { return d_ == o.d_; }
  bool is_subset_of(const Image& o) const;

 private:
  explicit Image(std::shared_ptr<detail::ImageData> d) : d_(std::move(d)) {}
  std::shared_ptr<detail::ImageData> d_;
};

Image interval(int n);
// {lo, ..., hi} in Z^1.
Image interval_range(int lo, int hi);
Image single_point(int dim = 1);
Image product(const Image& x, const Image& y);
Image power(const Image& x, int d);
bool is_connected(const Image& x);
std::size_t component_count(const Image& x);

}  // namespace digitop
