#include "digitop/funcspace.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "digitop/subdivision.hpp"

namespace digitop {

std::uint64_t default_map_cap() {
  if (const char* s = std::getenv("DIGITOP_MAX_MAPS")) {
    try {
      auto v = std::stoull(s);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 10'000'000ull;
}

AdjacencyMatrix::AdjacencyMatrix(const Image& x) : x_(x), n_(x.size()), dense_(x.size() <= 8192) {
  if (!dense_) return;
  bits_.assign((n_ * n_ + 63) / 64, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (auto j : x.neighbors(i)) {
      std::size_t bit = i * n_ + j;
      bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
    }
}

TableEnumerator::TableEnumerator(Image domain, Image codomain)
    : dom_(std::move(domain)), cod_(std::move(codomain)), adj_(cod_), earlier_(dom_.size()) {
  for (std::size_t i = 0; i < dom_.size(); ++i)
    for (auto j : dom_.neighbors(i))
      if (j < i) earlier_[i].push_back(j);
}

EnumStats TableEnumerator::run(const Candidates* allowed, const TableVisitor& visit, std::uint64_t cap) const {
  EnumStats st;
  std::size_t n = dom_.size();
  if (allowed && allowed->size() != n) throw SignatureMismatch("candidate lists do not match the domain");
  Table t(n, 0);
  std::vector<std::vector<std::uint32_t>> cands(n);
  std::vector<std::size_t> pos(n, 0);

  auto fill = [&](std::size_t d) {
    auto& out = cands[d];
    out.clear();
    const auto& pre = earlier_[d];
    const std::vector<std::uint32_t>* allow = allowed ? &(*allowed)[d] : nullptr;
    if (pre.empty()) {
      if (allow) {
        out = *allow;
      } else {
        out.resize(cod_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint32_t>(i);
      }
      return;
    }
    for (auto c : cod_.neighbors(t[pre[0]])) {
      if (allow && !std::binary_search(allow->begin(), allow->end(), c)) continue;
      bool ok = true;
      for (std::size_t q = 1; q < pre.size() && ok; ++q) ok = adj_(c, t[pre[q]]);
      if (ok) out.push_back(c);
    }
  };

  std::size_t d = 0;
  fill(0);
  while (true) {
    if (pos[d] < cands[d].size()) {
      t[d] = cands[d][pos[d]++];
      if (d + 1 == n) {
        if (st.count >= cap) {
          st.overflow = true;
          return st;
        }
        ++st.count;
        if (!visit(t)) {
          st.stopped = true;
          return st;
        }
      } else {
        ++d;
        fill(d);
        pos[d] = 0;
      }
    } else {
      if (d == 0) break;
      --d;
    }
  }
  return st;
}

EnumStats enumerate_tables(const Image& domain, const Image& codomain, const Candidates* allowed,
                           const TableVisitor& visit, std::uint64_t cap) {
  return TableEnumerator(domain, codomain).run(allowed, visit, cap);
}

EnumStats MapSpace::for_each(const std::function<bool(const Map&)>& visit, std::uint64_t cap) const {
  return enumerate_tables(
      source_, target_, nullptr, [&](const Table& t) { return visit(Map(source_, target_, t)); }, cap);
}

std::vector<Map> MapSpace::all(std::uint64_t cap) const {
  std::vector<Map> out;
  auto st = for_each(
      [&](const Map& m) {
        out.push_back(m);
        return true;
      },
      cap);
  if (st.overflow) throw CapExceeded("map space enumeration exceeded cap of " + std::to_string(cap) + " maps");
  return out;
}

BasedPathSpace::BasedPathSpace(Image target, Point basepoint, int length)
    : target_(std::move(target)), base_(std::move(basepoint)), n_(length) {
  if (!target_.contains(base_)) throw PreconditionFailed("basepoint " + base_.str() + " is not in the target");
  if (n_ < 1) throw PreconditionFailed("based path length must be at least 1");
}

bool BasedPathSpace::contains(const Map& path) const {
  return path.domain() == interval(n_) && path.codomain() == target_ && path.continuous() &&
         path.at(0) == target_.require_index(base_);
}

EnumStats BasedPathSpace::for_each(const std::function<bool(const Map&)>& visit, std::uint64_t cap) const {
  Image dom = interval(n_);
  Candidates allowed(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    if (i == 0) {
      allowed[i] = {static_cast<std::uint32_t>(target_.require_index(base_))};
    } else {
      allowed[i].resize(target_.size());
      for (std::size_t j = 0; j < target_.size(); ++j) allowed[i][j] = static_cast<std::uint32_t>(j);
    }
  }
  return enumerate_tables(
      dom, target_, &allowed, [&](const Table& t) { return visit(Map(dom, target_, t)); }, cap);
}

std::vector<Map> BasedPathSpace::all(std::uint64_t cap) const {
  std::vector<Map> out;
  auto st = for_each(
      [&](const Map& m) {
        out.push_back(m);
        return true;
      },
      cap);
  if (st.overflow) throw CapExceeded("based path enumeration exceeded cap of " + std::to_string(cap) + " maps");
  return out;
}

bool tables_adjacent(const Image& domain, const Image& codomain, const Table& f, const Table& g) {
  for (std::size_t i = 0; i < domain.size(); ++i)
    for (auto j : domain.neighbors(i))
      if (!codomain.adjacent_idx(f[i], g[j])) return false;
  return true;
}

bool maps_adjacent(const Map& f, const Map& g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
    throw SignatureMismatch("maps_adjacent: signatures differ");
  return tables_adjacent(f.domain(), f.codomain(), f.table(), g.table());
}

int path_length(const Map& path) {
  const Image& d = path.domain();
  if (d.dim() != 1 || d.coords(0)[0] != 0 || d.coords(d.size() - 1)[0] != static_cast<int>(d.size()) - 1)
    throw SignatureMismatch("path domain must be an interval I_N");
  return static_cast<int>(d.size()) - 1;
}

Map make_path(const Image& y, const std::vector<Point>& points) {
  if (points.empty()) throw PreconditionFailed("a path needs at least one point");
  Image dom = interval(static_cast<int>(points.size()) - 1);
  Table t(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) t[i] = static_cast<std::uint32_t>(y.require_index(points[i]));
  return Map(dom, y, std::move(t));
}

Point eval_at(const Map& path, int t) {
  int n = path_length(path);
  if (t < 0 || t > n) throw PreconditionFailed("evaluation time " + std::to_string(t) + " is out of range");
  return path.codomain().point(path.at(static_cast<std::size_t>(t)));
}

std::pair<Point, Point> endpoints(const Map& path) { return {eval_at(path, 0), eval_at(path, path_length(path))}; }

Map pullback(const Map& f, const Map& g) { return compose(g, f); }
Map pushforward(const Map& f, const Map& g) { return compose(f, g); }

Map trivial_extension(const Map& path, int n) {
  int m = path_length(path);
  if (n < m) throw PreconditionFailed("trivial extension must not shorten the path");
  Table t(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) t[i] = path.at(static_cast<std::size_t>(std::min(i, m)));
  return Map(interval(n), path.codomain(), std::move(t));
}

Map refine_path(const Map& path, int l) {
  int n = path_length(path);
  return compose(path, interval_projection(n, l));
}

Curried curry(const Map& f, const Image& x, const Image& y) {
  if (!(f.domain() == product(x, y))) throw SignatureMismatch("curry: domain is not the product X x Y");
  Curried g{x, {}};
  g.values.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Table t(f.table().begin() + static_cast<std::ptrdiff_t>(i * y.size()),
            f.table().begin() + static_cast<std::ptrdiff_t>((i + 1) * y.size()));
    g.values.emplace_back(y, f.codomain(), std::move(t));
  }
  return g;
}

Map uncurry(const Curried& g) {
  if (g.values.size() != g.source.size()) throw SignatureMismatch("uncurry: one value per source point required");
  const Image& y = g.values.front().domain();
  const Image& z = g.values.front().codomain();
  Table t;
  t.reserve(g.source.size() * y.size());
  for (const auto& v : g.values) {
    if (!(v.domain() == y) || !(v.codomain() == z)) throw SignatureMismatch("uncurry: values have different signatures");
    t.insert(t.end(), v.table().begin(), v.table().end());
  }
  return Map(product(g.source, y), z, std::move(t));
}

bool is_continuous(const Curried& g) {
  for (std::size_t i = 0; i < g.source.size(); ++i)
    for (auto j : g.source.neighbors(i))
      if (!maps_adjacent(g.values[i], g.values[j])) return false;
  return true;
}

}  // namespace digitop
