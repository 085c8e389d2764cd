#include "digitop/lscat.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "digitop/circle.hpp"
#include "digitop/subdivision.hpp"

namespace digitop {

namespace {

void require_subset(const Image& u, const Image& x) {
  if (u.dim() != x.dim()) throw DimensionMismatch("subset and ambient image have different dimensions");
  if (!u.is_subset_of(x)) throw PreconditionFailed("U is not a subset of X");
}

bool is_constant_table(const Table& t) {
  return std::all_of(t.begin(), t.end(), [&](std::uint32_t v) { return v == t.front(); });
}

// i o rho_k : S(U,k) -> X.
Map projected_inclusion(const Image& u, const Image& x, int k) {
  Map j = inclusion(u, x);
  if (k == 1) return j;
  return compose(j, subdivision_projection(u, k));
}

Image subset_from_indices(const Image& x, const std::vector<std::uint32_t>& idx) {
  std::vector<Point> pts;
  pts.reserve(idx.size());
  for (auto i : idx) pts.push_back(x.point(i));
  return Image(x.dim(), std::move(pts));
}

std::vector<std::uint32_t> indices_in(const Image& u, const Image& x) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back(static_cast<std::uint32_t>(x.require_index(u.point(i))));
  return out;
}

std::optional<Point> diamond_center(const Image& x) {
  if (x.dim() != 2 || x.size() != 4) return std::nullopt;
  Point lo = x.point(0);  // the (-1,0) corner comes first in lexicographic order
  Point c{lo[0] + 1, lo[1]};
  Image d = diamond();
  for (std::size_t i = 0; i < 4; ++i) {
    Point p = x.point(i);
    if (!d.contains(Point{p[0] - c[0], p[1] - c[1]})) return std::nullopt;
  }
  return c;
}

}  // namespace

bool verify_categorical(const CategoricalWitness& w, const Image& x) {
  if (w.k < 1 || !x.contains(w.basepoint)) return false;
  Map target = projected_inclusion(w.subset, x, w.k);
  Map start = constant_map(target.domain(), w.basepoint, x);
  return verify_homotopy(w.homotopy, start, target);
}

CategoricalWitness restrict_witness(const CategoricalWitness& w, const Image& v) {
  require_subset(v, w.subset);
  Image sv = subdivide_image(v, w.k);
  const Image& su = w.homotopy.domain();
  std::vector<std::size_t> pos(sv.size());
  for (std::size_t i = 0; i < sv.size(); ++i) pos[i] = su.require_index(sv.point(i));
  std::vector<Map> stages;
  for (const auto& s : w.homotopy.stages()) {
    Table t(sv.size());
    for (std::size_t i = 0; i < sv.size(); ++i) t[i] = s.at(pos[i]);
    stages.emplace_back(sv, s.codomain(), std::move(t));
  }
  return {v, w.k, w.basepoint, Homotopy(std::move(stages))};
}

DiamondLowerBound diamond_lower_bound(int k) {
  if (k < 2) throw PreconditionFailed("diamond_lower_bound needs k >= 2");
  Image sd = subdivide_image(diamond(), k);
  std::vector<Point> pts;
  for (int t = 0; t < k; ++t) pts.push_back(Point{k, t});
  for (int s = 0; s < k; ++s) pts.push_back(Point{k - 1 - s, k});
  for (int t = 0; t < k; ++t) pts.push_back(Point{-1, k - 1 - t});
  for (int s = 0; s < k; ++s) pts.push_back(Point{s, -1});
  pts.push_back(pts.front());
  Map loop = make_path(sd, pts);
  loop.require_continuous("innermost loop");
  Map projected = compose(subdivision_projection(diamond(), k), loop);
  long long w = winding_number(projected);
  if (w == 0) throw std::logic_error("innermost loop of S(D," + std::to_string(k) + ") does not wind");
  return {k, loop, projected, w};
}

Obstruction diamond_winding_obstruction() {
  return {"diamond-winding", [](const Image& u, const Image& x, int k_max) -> std::optional<std::string> {
            if (!(u == x) || !diamond_center(x)) return std::nullopt;
            auto base = is_contractible(diamond());
            if (!base.no()) return std::nullopt;
            std::string cert = "k=1: " + base.obstruction;
            for (int k = 2; k <= std::max(k_max, 2); ++k) {
              auto lb = diamond_lower_bound(k);
              cert += "; k=" + std::to_string(k) + ": innermost loop projects with winding " + std::to_string(lb.winding);
            }
            return cert + "; a contraction of S(D,k) would contract that loop";
          }};
}

std::vector<Obstruction> default_obstructions() { return {diamond_winding_obstruction()}; }

Verdict<CategoricalWitness> is_categorical(const Image& u, const Image& x, const SearchLimits& lim) {
  using V = Verdict<CategoricalWitness>;
  require_subset(u, x);
  Map j = inclusion(u, x);
  auto v = search_homotopy(j, is_constant_table, lim, "a constant map");
  if (!v.yes()) return {v.outcome, std::nullopt, v.obstruction, v.bounds};
  Homotopy h = reverse(*v.witness);
  Point x0 = x.point(h.start().at(0));
  return V::make_yes({u, 1, x0, std::move(h)}, v.bounds);
}

Verdict<CategoricalWitness> is_subdivision_categorical(const Image& u, const Image& x, int k_max,
                                                       const SearchLimits& lim,
                                                       const std::vector<Obstruction>& obstructions) {
  using V = Verdict<CategoricalWitness>;
  require_subset(u, x);
  if (k_max < 1) throw PreconditionFailed("k_max must be positive");
  BoundsUsed b;
  b.set("k_max", k_max);
  for (const auto& ob : obstructions)
    if (auto cert = ob.check(u, x, k_max)) return V::make_no(ob.name + ": " + *cert, b);
  std::string notes;
  for (int k = 1; k <= k_max; ++k) {
    Map start = projected_inclusion(u, x, k);
    auto v = search_homotopy(start, is_constant_table, lim, "a constant map");
    for (const auto& [key, val] : v.bounds.entries) b.set("k" + std::to_string(k) + "_" + key, val);
    if (v.yes()) {
      Homotopy h = reverse(*v.witness);
      Point x0 = x.point(h.start().at(0));
      b.set("k", k);
      return V::make_yes({u, k, x0, std::move(h)}, b);
    }
    notes += "k=" + std::to_string(k) + ": " + to_string(v.outcome) + "; ";
  }
  return V::make_unknown("no deformation found for k <= " + std::to_string(k_max) + " (" + notes + ")", b);
}

bool verify_cover(const CategoricalCover& c) {
  std::vector<char> hit(c.space.size(), 0);
  for (const auto& m : c.members) {
    if (!m.subset.is_subset_of(c.space) || !verify_categorical(m, c.space)) return false;
    for (auto i : indices_in(m.subset, c.space)) hit[i] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

std::vector<Image> default_candidate_family(const Image& x, std::size_t exact_cover_limit) {
  std::size_t n = x.size();
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> fam;
  auto add = [&](std::vector<std::uint32_t> s) {
    if (!s.empty() && seen.insert(s).second) fam.push_back(std::move(s));
  };
  if (n <= exact_cover_limit && n < 31) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::uint32_t> s;
      for (std::uint32_t i = 0; i < n; ++i)
        if (mask >> i & 1u) s.push_back(i);
      add(std::move(s));
    }
  } else {
    std::vector<std::uint32_t> all(n);
    for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
    add(all);
    for (std::uint32_t i = 0; i < n; ++i) {
      add({i});
      auto rest = all;
      rest.erase(rest.begin() + i);
      add(std::move(rest));
    }
    for (int d = 0; d < x.dim(); ++d) {
      std::set<int> values;
      for (std::size_t i = 0; i < n; ++i) values.insert(x.coords(i)[d]);
      for (int c : values) {
        std::vector<std::uint32_t> lo, hi;
        for (std::uint32_t i = 0; i < n; ++i) (x.coords(i)[d] <= c ? lo : hi).push_back(i);
        add(std::move(lo));
        add(std::move(hi));
      }
    }
  }
  std::vector<Image> out;
  for (const auto& s : fam) out.push_back(subset_from_indices(x, s));
  return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const std::vector<std::uint32_t>& idx, std::size_t n) {
  Bits b((n + 63) / 64, 0);
  for (auto i : idx) b[i >> 6] |= 1ull << (i & 63);
  return b;
}

bool bits_subset(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

bool bit(const Bits& a, std::size_t i) { return a[i >> 6] >> (i & 63) & 1u; }

// Smallest cover by the given sets with at most limit members, by depth-first search
// branching on the sets that contain the first uncovered point.
struct CoverSearch {
  const std::vector<Bits>& sets;
  std::size_t n;
  std::uint64_t nodes = 0, node_cap;
  bool truncated = false;
  std::vector<std::size_t> chosen, best;

  bool run(Bits covered, std::size_t limit) {
    if (++nodes > node_cap) {
      truncated = true;
      return false;
    }
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!bit(covered, i)) {
        first = i;
        break;
      }
    if (first == n) {
      best = chosen;
      return true;
    }
    if (chosen.size() == limit) return false;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      if (!bit(sets[s], first)) continue;
      Bits next = covered;
      for (std::size_t w = 0; w < next.size(); ++w) next[w] |= sets[s][w];
      chosen.push_back(s);
      bool ok = run(next, limit);
      chosen.pop_back();
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace

DcatReport dcat(const Image& x, const DcatOptions& opt) {
  if (opt.k_max < 1 || opt.exact_cover_limit < 1) throw PreconditionFailed("dcat bounds must be positive");
  DcatReport rep;
  rep.bounds.set("k_max", opt.k_max);
  for (const auto& ob : opt.obstructions)
    if (auto cert = ob.check(x, x, opt.k_max)) {
      rep.lower = 1;
      rep.lower_certificates.push_back(ob.name + ": " + *cert);
    }

  std::vector<Image> family = opt.candidates ? *opt.candidates : default_candidate_family(x, opt.exact_cover_limit);
  for (const auto& u : family) require_subset(u, x);
  std::stable_sort(family.begin(), family.end(), [](const Image& a, const Image& b) { return a.size() > b.size(); });
  rep.bounds.set("candidates", static_cast<std::int64_t>(family.size()));

  std::size_t n = x.size();
  std::vector<Bits> yes_bits;
  std::vector<CategoricalWitness> yes_witness;
  std::int64_t searched = 0, derived = 0, unknown = 0;
  for (const auto& u : family) {
    Bits ub = to_bits(indices_in(u, x), n);
    bool covered = false;
    for (const auto& yb : yes_bits)
      if (bits_subset(ub, yb)) covered = true;
    if (covered) {
      ++derived;
      continue;
    }
    ++searched;
    auto v = is_subdivision_categorical(u, x, opt.k_max, opt.search, opt.obstructions);
    if (v.yes()) {
      yes_bits.push_back(ub);
      yes_witness.push_back(std::move(*v.witness));
      if (u.size() == n) break;
    } else if (v.unknown()) {
      ++unknown;
    }
  }
  rep.bounds.set("searched", searched);
  rep.bounds.set("derived_by_restriction", derived);
  rep.bounds.set("unknown_members", unknown);

  if (!yes_bits.empty()) {
    CoverSearch cs{yes_bits, n, 0, 5'000'000, false, {}, {}};
    for (std::size_t limit = static_cast<std::size_t>(rep.lower) + 1; limit <= n && !cs.truncated; ++limit) {
      if (cs.run(to_bits({}, n), limit)) break;
    }
    rep.bounds.set("cover_nodes", static_cast<std::int64_t>(cs.nodes));
    if (!cs.best.empty()) {
      CategoricalCover cover{x, {}};
      for (auto s : cs.best) cover.members.push_back(yes_witness[s]);
      if (!verify_cover(cover)) throw std::logic_error("dcat cover failed verification");
      rep.upper = static_cast<int>(cover.members.size()) - 1;
      rep.cover = std::move(cover);
    }
  }
  rep.outcome = rep.upper && *rep.upper == rep.lower ? Outcome::yes : Outcome::unknown;
  return rep;
}

bool verify_section(const Section& s, const Image& x) {
  if (s.k < 1 || s.length < 1 || !x.contains(s.basepoint)) return false;
  Map target = projected_inclusion(s.subset, x, s.k);
  const Image& su = target.domain();
  if (s.paths.size() != su.size()) return false;
  auto b = x.require_index(s.basepoint);
  for (std::size_t i = 0; i < su.size(); ++i) {
    const Map& p = s.paths[i];
    if (!(p.domain() == interval(s.length)) || !(p.codomain() == x) || !p.continuous()) return false;
    if (p.at(0) != b || p.at(s.length) != target.at(i)) return false;
    for (auto j : su.neighbors(i))
      if (j > i && !maps_adjacent(p, s.paths[j])) return false;
  }
  return true;
}

Verdict<Section> section_check(const Image& u, const Image& x, int k, int n, const Point& x0, std::uint64_t cap) {
  using V = Verdict<Section>;
  require_subset(u, x);
  if (k < 1 || n < 1) throw PreconditionFailed("section_check needs k, N >= 1");
  auto b0 = static_cast<std::uint32_t>(x.require_index(x0));
  Map target = projected_inclusion(u, x, k);
  const Image& su = target.domain();
  Image dom = product(su, interval(n));
  Candidates allowed(dom.size());
  std::vector<std::uint32_t> any(x.size());
  for (std::size_t q = 0; q < x.size(); ++q) any[q] = static_cast<std::uint32_t>(q);
  for (std::size_t i = 0; i < su.size(); ++i)
    for (int t = 0; t <= n; ++t) {
      auto& a = allowed[i * (n + 1) + t];
      if (t == 0) a = {b0};
      else if (t == n) a = {target.at(i)};
      else a = any;
    }
  std::optional<Table> hit;
  auto st = enumerate_tables(
      dom, x, &allowed,
      [&](const Table& t) {
        hit = t;
        return false;
      },
      cap);
  BoundsUsed bd;
  bd.set("k", k);
  bd.set("length", n);
  bd.set("candidates", static_cast<std::int64_t>(st.count));
  if (hit) {
    Section s{u, k, n, x0, {}};
    for (std::size_t i = 0; i < su.size(); ++i) {
      Table p(hit->begin() + i * (n + 1), hit->begin() + (i + 1) * (n + 1));
      s.paths.emplace_back(interval(n), x, std::move(p));
    }
    if (!verify_section(s, x)) throw std::logic_error("section failed verification");
    return V::make_yes(std::move(s), bd);
  }
  if (st.overflow) return V::make_unknown("candidate cap reached", bd);
  return V::make_no("no section for this (k, N, x0)", bd);
}

Section section_from_witness(const CategoricalWitness& w) {
  Homotopy h = prolong(w.homotopy, std::max(1, w.homotopy.length()));
  const auto& st = h.stages();
  int n = h.length();
  const Image& su = h.domain();
  const Image& x = h.codomain();
  Section s{w.subset, w.k, n, w.basepoint, {}};
  for (std::size_t i = 0; i < su.size(); ++i) {
    Table p(n + 1);
    for (int t = 0; t <= n; ++t) p[t] = st[t].at(i);
    s.paths.emplace_back(interval(n), x, std::move(p));
  }
  return s;
}

CategoricalWitness witness_from_section(const Section& s, const Image& x) {
  Map target = projected_inclusion(s.subset, x, s.k);
  const Image& su = target.domain();
  std::vector<Map> stages;
  for (int t = 0; t <= s.length; ++t) {
    Table tab(su.size());
    for (std::size_t i = 0; i < su.size(); ++i) tab[i] = s.paths[i].at(t);
    stages.emplace_back(su, x, std::move(tab));
  }
  return {s.subset, s.k, s.basepoint, Homotopy(std::move(stages))};
}

}  // namespace digitop
