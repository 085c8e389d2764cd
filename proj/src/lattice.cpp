#include "digitop/lattice.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace digitop {

std::string Point::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

bool adjacent(std::span<const int> x, std::span<const int> y) {
  if (x.size() != y.size()) throw DimensionMismatch("adjacent: dimension mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) {
    int d = x[i] - y[i];
    if (d > 1 || d < -1) return false;
  }
  return true;
}

bool adjacent(const Point& x, const Point& y) { return adjacent(x.coords(), y.coords()); }

Point concat(const Point& x, const Point& y) {
  std::vector<int> c = x.vec();
  c.insert(c.end(), y.vec().begin(), y.vec().end());
  return Point(std::move(c));
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

namespace detail {

struct ImageData {
  int dim = 0;
  std::size_t n = 0;
  std::vector<int> coords;

  bool dense = false;
  std::vector<int> lo, ext;
  std::vector<std::int64_t> stride;
  std::vector<std::int32_t> cell;
  std::unordered_map<std::vector<int>, std::uint32_t, VecHash> table;

  std::vector<std::vector<int>> later_offsets;

  std::once_flag nbr_once;
  std::vector<std::uint32_t> nbr_start;
  std::vector<std::uint32_t> nbrs;

  std::span<const int> at(std::size_t i) const {
    return {coords.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }

  std::optional<std::size_t> find(std::span<const int> c) const {
    if (static_cast<int>(c.size()) != dim) throw DimensionMismatch("point dimension does not match image");
    if (dense) {
      std::int64_t idx = 0;
      for (int d = 0; d < dim; ++d) {
        int off = c[d] - lo[d];
        if (off < 0 || off >= ext[d]) return std::nullopt;
        idx += off * stride[d];
      }
      std::int32_t v = cell[static_cast<std::size_t>(idx)];
      if (v < 0) return std::nullopt;
      return static_cast<std::size_t>(v);
    }
    auto it = table.find(std::vector<int>(c.begin(), c.end()));
    if (it == table.end()) return std::nullopt;
    return it->second;
  }

  void build_index() {
    lo.assign(dim, 0);
    ext.assign(dim, 0);
    std::vector<int> hi(dim, 0);
    for (int d = 0; d < dim; ++d) {
      lo[d] = hi[d] = coords[d];
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto c = at(i);
      for (int d = 0; d < dim; ++d) {
        lo[d] = std::min(lo[d], c[d]);
        hi[d] = std::max(hi[d], c[d]);
      }
    }
    double volume = 1;
    for (int d = 0; d < dim; ++d) {
      ext[d] = hi[d] - lo[d] + 1;
      volume *= ext[d];
    }
    dense = volume <= std::max<double>(1 << 16, 8.0 * static_cast<double>(n));
    if (dense) {
      stride.assign(dim, 1);
      for (int d = dim - 2; d >= 0; --d) stride[d] = stride[d + 1] * ext[d + 1];
      cell.assign(static_cast<std::size_t>(volume), -1);
      for (std::size_t i = 0; i < n; ++i) {
        auto c = at(i);
        std::int64_t idx = 0;
        for (int d = 0; d < dim; ++d) idx += (c[d] - lo[d]) * stride[d];
        cell[static_cast<std::size_t>(idx)] = static_cast<std::int32_t>(i);
      }
    } else {
      table.reserve(n * 2);
      for (std::size_t i = 0; i < n; ++i) {
        auto c = at(i);
        table.emplace(std::vector<int>(c.begin(), c.end()), static_cast<std::uint32_t>(i));
      }
    }
    std::vector<int> delta(dim, -1);
    while (true) {
      auto first = std::find_if(delta.begin(), delta.end(), [](int v) { return v != 0; });
      if (first != delta.end() && *first > 0) later_offsets.push_back(delta);
      int d = dim - 1;
      while (d >= 0 && delta[d] == 1) delta[d--] = -1;
      if (d < 0) break;
      ++delta[d];
    }
  }

  void build_neighbors() {
    std::vector<std::vector<std::uint32_t>> tmp(n);
    std::vector<int> q(dim);
    for (std::size_t i = 0; i < n; ++i) {
      tmp[i].push_back(static_cast<std::uint32_t>(i));
      auto c = at(i);
      for (const auto& off : later_offsets) {
        for (int d = 0; d < dim; ++d) q[d] = c[d] + off[d];
        if (auto j = find(q)) {
          tmp[i].push_back(static_cast<std::uint32_t>(*j));
          tmp[*j].push_back(static_cast<std::uint32_t>(i));
        }
      }
    }
    nbr_start.resize(n + 1);
    nbr_start[0] = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::sort(tmp[i].begin(), tmp[i].end());
      nbr_start[i + 1] = nbr_start[i] + static_cast<std::uint32_t>(tmp[i].size());
    }
    nbrs.reserve(nbr_start[n]);
    for (auto& v : tmp) nbrs.insert(nbrs.end(), v.begin(), v.end());
  }
};

}  // namespace detail

namespace {

std::shared_ptr<detail::ImageData> make_data(int dim, std::vector<int> flat) {
  if (dim <= 0) throw PreconditionFailed("image dimension must be positive");
  if (flat.empty()) throw PreconditionFailed("image must be non-empty");
  if (flat.size() % static_cast<std::size_t>(dim) != 0) throw DimensionMismatch("coordinate count not a multiple of dim");
  std::size_t n = flat.size() / dim;
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(flat.begin() + a * dim, flat.begin() + (a + 1) * dim, flat.begin() + b * dim,
                                        flat.begin() + (b + 1) * dim);
  };
  if (!std::is_sorted(order.begin(), order.end(), less)) std::sort(order.begin(), order.end(), less);
  auto d = std::make_shared<detail::ImageData>();
  d->dim = dim;
  d->n = n;
  d->coords.resize(flat.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::copy_n(flat.begin() + order[i] * dim, dim, d->coords.begin() + i * dim);
    if (i > 0 && std::equal(d->coords.begin() + (i - 1) * dim, d->coords.begin() + i * dim, d->coords.begin() + i * dim)) {
      throw PreconditionFailed("duplicate point " + Point(d->at(i)).str());
    }
  }
  d->build_index();
  return d;
}

}  // namespace

Image::Image(int dim, std::vector<Point> points) {
  std::vector<int> flat;
  flat.reserve(points.size() * std::max(dim, 0));
  for (const auto& p : points) {
    if (p.dim() != dim) throw DimensionMismatch("point " + p.str() + " has wrong dimension");
    flat.insert(flat.end(), p.vec().begin(), p.vec().end());
  }
  d_ = make_data(dim, std::move(flat));
}

Image Image::from_flat(int dim, std::vector<int> coords) { return Image(make_data(dim, std::move(coords))); }

int Image::dim() const { return d_->dim; }
std::size_t Image::size() const { return d_->n; }
Point Image::point(std::size_t i) const { return Point(d_->at(i)); }
std::span<const int> Image::coords(std::size_t i) const { return d_->at(i); }

std::vector<Point> Image::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(point(i));
  return out;
}

std::optional<std::size_t> Image::index_of(std::span<const int> c) const { return d_->find(c); }

std::size_t Image::require_index(const Point& p) const {
  auto i = index_of(p);
  if (!i) throw PreconditionFailed("point " + p.str() + " is not in the image");
  return *i;
}

bool Image::adjacent_idx(std::size_t i, std::size_t j) const {
  auto a = d_->at(i);
  auto b = d_->at(j);
  for (int d = 0; d < d_->dim; ++d) {
    int x = a[d] - b[d];
    if (x > 1 || x < -1) return false;
  }
  return true;
}

std::span<const std::uint32_t> Image::neighbors(std::size_t i) const {
  std::call_once(d_->nbr_once, [this] { d_->build_neighbors(); });
  return {d_->nbrs.data() + d_->nbr_start[i], d_->nbr_start[i + 1] - d_->nbr_start[i]};
}

void Image::for_each_later_neighbor(std::size_t i, const std::function<void(std::size_t)>& fn) const {
  const auto& d = *d_;
  auto c = d.at(i);
  std::vector<int> q(d.dim);
  for (const auto& off : d.later_offsets) {
    for (int k = 0; k < d.dim; ++k) q[k] = c[k] + off[k];
    if (auto j = d.find(q)) fn(*j);
  }
}

bool Image::operator==(const Image& o) const {
  if (d_ == o.d_) return true;
  return d_->dim == o.d_->dim && d_->coords == o.d_->coords;
}

bool Image::is_subset_of(const Image& o) const {
  if (dim() != o.dim()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (!o.index_of(coords(i))) return false;
  return true;
}

Image interval(int n) {
  if (n < 0) throw PreconditionFailed("interval length must be non-negative");
  return interval_range(0, n);
}

Image interval_range(int lo, int hi) {
  if (hi < lo) throw PreconditionFailed("empty interval");
  std::vector<int> c(static_cast<std::size_t>(hi - lo + 1));
  std::iota(c.begin(), c.end(), lo);
  return Image::from_flat(1, std::move(c));
}

Image single_point(int dim) { return Image::from_flat(dim, std::vector<int>(dim, 0)); }

Image product(const Image& x, const Image& y) {
  int dim = x.dim() + y.dim();
  std::vector<int> flat;
  flat.reserve(x.size() * y.size() * dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto a = x.coords(i);
    for (std::size_t j = 0; j < y.size(); ++j) {
      auto b = y.coords(j);
      flat.insert(flat.end(), a.begin(), a.end());
      flat.insert(flat.end(), b.begin(), b.end());
    }
  }
  return Image::from_flat(dim, std::move(flat));
}

Image power(const Image& x, int d) {
  if (d < 1) throw PreconditionFailed("power exponent must be positive");
  Image out = x;
  for (int i = 1; i < d; ++i) out = product(out, x);
  return out;
}

std::size_t component_count(const Image& x) {
  std::vector<char> seen(x.size(), 0);
  std::size_t count = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < x.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      for (auto j : x.neighbors(i)) {
        if (!seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
  }
  return count;
}

bool is_connected(const Image& x) { return component_count(x) == 1; }

}  // namespace digitop
