#include "digitop/maps.hpp"

#include <algorithm>

namespace digitop {

bool table_continuous(const Image& domain, const Image& codomain, const Table& t) {
  if (t.size() != domain.size()) throw SignatureMismatch("table size does not match domain");
  bool ok = true;
  for (std::size_t i = 0; i < domain.size() && ok; ++i) {
    domain.for_each_later_neighbor(i, [&](std::size_t j) {
      if (ok && !codomain.adjacent_idx(t[i], t[j])) ok = false;
    });
  }
  return ok;
}

Map::Map(Image domain, Image codomain, Table table)
    : dom_(std::move(domain)),
      cod_(std::move(codomain)),
      table_(std::move(table)),
      continuous_(std::make_shared<std::atomic<int>>(-1)) {
  if (table_.size() != dom_.size()) throw SignatureMismatch("assignment is not total on the domain");
  for (auto v : table_)
    if (v >= cod_.size()) throw SignatureMismatch("assignment leaves the codomain");
}

bool Map::continuous() const {
  int s = continuous_->load();
  if (s < 0) {
    s = table_continuous(dom_, cod_, table_) ? 1 : 0;
    continuous_->store(s);
  }
  return s == 1;
}

Map Map::from_function(const Image& domain, const Image& codomain, const std::function<Point(const Point&)>& fn) {
  Table t(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    Point y = fn(domain.point(i));
    auto j = codomain.index_of(y);
    if (!j) throw SignatureMismatch("value " + y.str() + " is not in the codomain");
    t[i] = static_cast<std::uint32_t>(*j);
  }
  return Map(domain, codomain, std::move(t));
}

Map Map::from_pairs(const Image& domain, const Image& codomain, const std::vector<std::pair<Point, Point>>& pairs) {
  Table t(domain.size());
  std::vector<char> seen(domain.size(), 0);
  for (const auto& [x, y] : pairs) {
    auto i = domain.index_of(x);
    if (!i) throw SignatureMismatch("assignment source " + x.str() + " is not in the domain");
    auto j = codomain.index_of(y);
    if (!j) throw SignatureMismatch("assignment value " + y.str() + " is not in the codomain");
    if (seen[*i]) throw PreconditionFailed("point " + x.str() + " assigned twice");
    seen[*i] = 1;
    t[*i] = static_cast<std::uint32_t>(*j);
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw SignatureMismatch("assignment is not total");
  return Map(domain, codomain, std::move(t));
}

Point Map::operator()(const Point& x) const { return cod_.point(table_[dom_.require_index(x)]); }

const Map& Map::require_continuous(const char* what) const {
  if (!continuous()) throw PreconditionFailed(std::string(what) + ": map is not continuous");
  return *this;
}

bool is_continuous(const Map& f) { return f.continuous(); }

Map identity(const Image& x) {
  Table t(x.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<std::uint32_t>(i);
  return Map(x, x, std::move(t));
}

Map compose(const Map& g, const Map& f) {
  if (!(f.codomain() == g.domain())) throw SignatureMismatch("compose: codomain(f) != domain(g)");
  Table t(f.domain().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.at(f.at(i));
  return Map(f.domain(), g.codomain(), std::move(t));
}

Map product_map(const Map& f1, const Map& f2) {
  Image dom = product(f1.domain(), f2.domain());
  Image cod = product(f1.codomain(), f2.codomain());
  std::size_t n2 = f2.domain().size(), m2 = f2.codomain().size();
  Table t(dom.size());
  for (std::size_t i = 0; i < f1.domain().size(); ++i)
    for (std::size_t j = 0; j < n2; ++j) t[i * n2 + j] = static_cast<std::uint32_t>(f1.at(i) * m2 + f2.at(j));
  return Map(dom, cod, std::move(t));
}

Map diagonal(const Image& x) {
  Image xx = product(x, x);
  Table t(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) t[i] = static_cast<std::uint32_t>(i * x.size() + i);
  return Map(x, xx, std::move(t));
}

Map constant_map(const Image& x, const Point& y, const Image& target) {
  auto j = target.index_of(y);
  if (!j) throw PreconditionFailed("constant value " + y.str() + " is not in the target");
  return Map(x, target, Table(x.size(), static_cast<std::uint32_t>(*j)));
}

Map inclusion(const Image& a, const Image& x) {
  if (a.dim() != x.dim()) throw DimensionMismatch("inclusion: dimensions differ");
  Table t(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto j = x.index_of(a.coords(i));
    if (!j) throw PreconditionFailed("inclusion: " + a.point(i).str() + " is not in the ambient image");
    t[i] = static_cast<std::uint32_t>(*j);
  }
  return Map(a, x, std::move(t));
}

bool is_inclusion(const Map& j) {
  if (j.domain().dim() != j.codomain().dim()) return false;
  for (std::size_t i = 0; i < j.domain().size(); ++i) {
    auto a = j.domain().coords(i);
    auto b = j.codomain().coords(j.at(i));
    if (!std::equal(a.begin(), a.end(), b.begin())) return false;
  }
  return true;
}

Map projection_first(const Image& x, const Image& y) {
  Image xy = product(x, y);
  Table t(xy.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<std::uint32_t>(i / y.size());
  return Map(xy, x, std::move(t));
}

Map projection_second(const Image& x, const Image& y) {
  Image xy = product(x, y);
  Table t(xy.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<std::uint32_t>(i % y.size());
  return Map(xy, y, std::move(t));
}

Verdict<Isomorphism> find_isomorphism(const Image& x, const Image& y) {
  using V = Verdict<Isomorphism>;
  BoundsUsed b;
  if (x.size() != y.size()) return V::make_no("cardinality " + std::to_string(x.size()) + " != " + std::to_string(y.size()), b);
  std::size_t n = x.size();
  std::vector<std::size_t> degx(n), degy(n);
  for (std::size_t i = 0; i < n; ++i) {
    degx[i] = x.neighbors(i).size();
    degy[i] = y.neighbors(i).size();
  }
  {
    auto sx = degx, sy = degy;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy) return V::make_no("degree sequences differ", b);
  }
  Table t(n, 0);
  std::vector<char> used(n, 0);
  std::vector<std::size_t> next(n, 0);
  std::size_t depth = 0;
  std::int64_t nodes = 0;
  while (true) {
    bool placed = false;
    if (depth < n) {
      for (std::size_t c = next[depth]; c < n; ++c) {
        if (used[c] || degy[c] != degx[depth]) continue;
        bool ok = true;
        for (std::size_t k = 0; k < depth && ok; ++k)
          if (x.adjacent_idx(depth, k) != y.adjacent_idx(c, t[k])) ok = false;
        if (!ok) continue;
        t[depth] = static_cast<std::uint32_t>(c);
        used[c] = 1;
        next[depth] = c + 1;
        ++nodes;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++depth;
      if (depth == n) break;
      next[depth] = 0;
      continue;
    }
    if (depth == 0) {
      b.set("nodes", nodes);
      return V::make_no("exhaustive backtracking found no adjacency-preserving bijection", b);
    }
    --depth;
    used[t[depth]] = 0;
  }
  b.set("nodes", nodes);
  Table inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[t[i]] = static_cast<std::uint32_t>(i);
  Isomorphism iso{Map(x, y, t), Map(y, x, inv)};
  return V::make_yes(std::move(iso), b);
}

}  // namespace digitop
