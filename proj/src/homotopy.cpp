#include "digitop/homotopy.hpp"

#include <algorithm>
#include <random>
#include <thread>
#include <unordered_set>

#include "digitop/config.hpp"
#include "digitop/subdivision.hpp"

namespace digitop {

Homotopy::Homotopy(std::vector<Map> stages) : stages_(std::move(stages)) {
  if (stages_.empty()) throw PreconditionFailed("a homotopy needs at least one stage");
  for (const auto& s : stages_)
    if (!(s.domain() == stages_.front().domain()) || !(s.codomain() == stages_.front().codomain()))
      throw SignatureMismatch("homotopy stages have different signatures");
}

Homotopy Homotopy::from_left_form(const Map& h, const Image& x) {
  std::size_t total = h.domain().size();
  if (total % x.size() != 0) throw SignatureMismatch("left form domain is not X x I_N");
  int n = static_cast<int>(total / x.size()) - 1;
  Image time = interval(n);
  if (!(h.domain() == product(x, time))) throw SignatureMismatch("left form domain is not X x I_N");
  std::vector<Map> stages;
  for (int t = 0; t <= n; ++t) {
    Table tab(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) tab[i] = h.at(i * (n + 1) + t);
    stages.emplace_back(x, h.codomain(), std::move(tab));
  }
  return Homotopy(std::move(stages));
}

Map Homotopy::left_form() const {
  int n = length();
  const Image& x = domain();
  Table tab(x.size() * (n + 1));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (int t = 0; t <= n; ++t) tab[i * (n + 1) + t] = stages_[t].at(i);
  return Map(product(x, interval(n)), codomain(), std::move(tab));
}

bool verify_homotopy(const Homotopy& h, const Map& f, const Map& g) {
  if (!(h.start() == f) || !(h.end() == g)) return false;
  for (const auto& s : h.stages())
    if (!s.continuous()) return false;
  for (std::size_t i = 0; i + 1 < h.stages().size(); ++i)
    if (!maps_adjacent(h.stages()[i], h.stages()[i + 1])) return false;
  return true;
}

Homotopy constant_homotopy(const Map& f, int n) { return Homotopy(std::vector<Map>(static_cast<std::size_t>(n) + 1, f)); }

Homotopy concat(const Homotopy& h1, const Homotopy& h2) {
  if (!(h1.end() == h2.start())) throw PreconditionFailed("concat: homotopies do not meet");
  std::vector<Map> s = h1.stages();
  s.insert(s.end(), h2.stages().begin() + 1, h2.stages().end());
  return Homotopy(std::move(s));
}

Homotopy prolong(const Homotopy& h, int n) {
  if (n < h.length()) throw PreconditionFailed("prolong: target length is shorter than the homotopy");
  std::vector<Map> s = h.stages();
  while (static_cast<int>(s.size()) < n + 1) s.push_back(h.end());
  return Homotopy(std::move(s));
}

Homotopy reverse(const Homotopy& h) {
  std::vector<Map> s(h.stages().rbegin(), h.stages().rend());
  return Homotopy(std::move(s));
}

Homotopy interval_contraction(int m) {
  Image x = interval(m);
  std::vector<Map> s;
  for (int t = 0; t <= m; ++t)
    s.push_back(Map::from_function(x, x, [&](const Point& p) { return Point{std::min(p[0], m - t)}; }));
  return Homotopy(std::move(s));
}

namespace {

std::uint64_t hash_table(const std::uint32_t* p, std::size_t n) {
  std::uint64_t h = 0x243f6a8885a308d3ull ^ n;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x9e3779b97f4a7c15ull;
    h ^= h >> 29;
  }
  return h;
}

// Flat storage of visited tables with open-addressing dedup.
class StatePool {
 public:
  explicit StatePool(std::size_t stride) : stride_(stride), slots_(1024, 0) {}

  std::size_t size() const { return parent_.size(); }
  const std::uint32_t* get(std::size_t id) const { return data_.data() + id * stride_; }
  Table table(std::size_t id) const { return Table(get(id), get(id) + stride_); }
  std::uint32_t parent(std::size_t id) const { return parent_[id]; }

  // Returns (id, inserted).
  std::pair<std::size_t, bool> insert(const std::uint32_t* t, std::uint32_t parent) {
    if ((size() + 1) * 2 > slots_.size()) grow();
    std::uint64_t h = hash_table(t, stride_);
    std::size_t mask = slots_.size() - 1;
    std::size_t s = static_cast<std::size_t>(h) & mask;
    while (slots_[s] != 0) {
      std::size_t id = slots_[s] - 1;
      if (hashes_[id] == h && std::equal(t, t + stride_, get(id))) return {id, false};
      s = (s + 1) & mask;
    }
    std::size_t id = size();
    slots_[s] = static_cast<std::uint32_t>(id + 1);
    data_.insert(data_.end(), t, t + stride_);
    hashes_.push_back(h);
    parent_.push_back(parent);
    return {id, true};
  }

  bool contains(const std::uint32_t* t) const {
    std::uint64_t h = hash_table(t, stride_);
    std::size_t mask = slots_.size() - 1;
    std::size_t s = static_cast<std::size_t>(h) & mask;
    while (slots_[s] != 0) {
      std::size_t id = slots_[s] - 1;
      if (hashes_[id] == h && std::equal(t, t + stride_, get(id))) return true;
      s = (s + 1) & mask;
    }
    return false;
  }

 private:
  void grow() {
    std::vector<std::uint32_t> fresh(slots_.size() * 2, 0);
    std::size_t mask = fresh.size() - 1;
    for (std::size_t id = 0; id < size(); ++id) {
      std::size_t s = static_cast<std::size_t>(hashes_[id]) & mask;
      while (fresh[s] != 0) s = (s + 1) & mask;
      fresh[s] = static_cast<std::uint32_t>(id + 1);
    }
    slots_.swap(fresh);
  }

  std::size_t stride_;
  std::vector<std::uint32_t> data_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> slots_;
};

// Generates the continuous tables adjacent to a given one in map(X,Y).
class NeighborGenerator {
 public:
  NeighborGenerator(const Image& x, const Image& y) : en_(x, y), allowed_(x.size()) {}

  void run(const std::uint32_t* f, const std::function<bool(const Table&)>& visit) {
    const Image& x = en_.domain();
    const Image& y = en_.codomain();
    const auto& adj = en_.adjacency();
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto& out = allowed_[i];
      out.clear();
      auto nb = x.neighbors(i);
      for (auto c : y.neighbors(f[i])) {
        bool ok = true;
        for (auto j : nb)
          if (!adj(c, f[j])) {
            ok = false;
            break;
          }
        if (ok) out.push_back(c);
      }
    }
    en_.run(&allowed_, visit, UINT64_MAX);
  }

 private:
  TableEnumerator en_;
  Candidates allowed_;
};

struct BfsResult {
  enum Kind { found, exhausted, truncated_depth, truncated_states } kind;
  std::size_t goal_id = 0;
  int depth = 0;
};

BfsResult bfs(StatePool& pool, const Map& start, const std::function<bool(const Table&)>* goal, const SearchLimits& lim) {
  const Image& x = start.domain();
  const Image& y = start.codomain();
  std::size_t n = x.size();
  pool.insert(start.table().data(), UINT32_MAX);
  if (goal && (*goal)(start.table())) return {BfsResult::found, 0, 0};
  std::vector<std::size_t> frontier{0};
  int depth = 0;
  unsigned threads = std::max(1u, max_threads());
  std::vector<NeighborGenerator> gens;
  for (unsigned i = 0; i < threads; ++i) gens.emplace_back(x, y);
  (void)n;

  while (!frontier.empty()) {
    if (lim.max_steps && depth >= *lim.max_steps) return {BfsResult::truncated_depth, 0, depth};
    std::vector<std::size_t> next;
    const std::size_t batch = threads == 1 ? 1 : 256;
    for (std::size_t b0 = 0; b0 < frontier.size(); b0 += batch) {
      std::size_t b1 = std::min(frontier.size(), b0 + batch);
      std::vector<std::vector<Table>> found(b1 - b0);
      auto work = [&](unsigned tid) {
        for (std::size_t i = b0 + tid; i < b1; i += threads) {
          Table cur = pool.table(frontier[i]);
          gens[tid].run(cur.data(), [&](const Table& t) {
            found[i - b0].push_back(t);
            return true;
          });
        }
      };
      if (threads == 1) {
        work(0);
      } else {
        std::vector<std::thread> ts;
        for (unsigned tid = 0; tid < threads; ++tid) ts.emplace_back(work, tid);
        for (auto& t : ts) t.join();
      }
      for (std::size_t i = b0; i < b1; ++i) {
        for (const auto& t : found[i - b0]) {
          auto [id, inserted] = pool.insert(t.data(), static_cast<std::uint32_t>(frontier[i]));
          if (!inserted) continue;
          if (goal && (*goal)(t)) return {BfsResult::found, id, depth + 1};
          if (pool.size() > lim.max_states) return {BfsResult::truncated_states, 0, depth + 1};
          next.push_back(id);
        }
      }
    }
    frontier.swap(next);
    ++depth;
  }
  return {BfsResult::exhausted, 0, depth};
}

Homotopy path_to(const StatePool& pool, std::size_t id, const Image& x, const Image& y) {
  std::vector<Map> stages;
  for (std::size_t cur = id;; cur = pool.parent(cur)) {
    stages.emplace_back(x, y, pool.table(cur));
    if (pool.parent(cur) == UINT32_MAX) break;
  }
  std::reverse(stages.begin(), stages.end());
  return Homotopy(std::move(stages));
}

void record(BoundsUsed& b, const SearchLimits& lim, const StatePool& pool, int depth) {
  b.set("max_steps", lim.max_steps ? *lim.max_steps : -1);
  b.set("max_states", static_cast<std::int64_t>(lim.max_states));
  b.set("visited", static_cast<std::int64_t>(pool.size()));
  b.set("depth", depth);
}

bool is_constant_table(const Table& t) {
  return std::all_of(t.begin(), t.end(), [&](std::uint32_t v) { return v == t.front(); });
}

}  // namespace

void for_each_mapspace_neighbor(const Map& f, const std::function<bool(const Table&)>& visit) {
  f.require_continuous("neighbors_in_mapspace");
  NeighborGenerator gen(f.domain(), f.codomain());
  gen.run(f.table().data(), visit);
}

std::vector<Map> neighbors_in_mapspace(const Map& f) {
  std::vector<Map> out;
  for_each_mapspace_neighbor(f, [&](const Table& t) {
    out.emplace_back(f.domain(), f.codomain(), t);
    return true;
  });
  return out;
}

Component mapspace_component(const Map& f, const SearchLimits& lim) {
  f.require_continuous("mapspace_component");
  StatePool pool(f.domain().size());
  auto r = bfs(pool, f, nullptr, lim);
  Component c{f.domain(), f.codomain(), {}, r.kind == BfsResult::exhausted};
  c.maps.reserve(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) c.maps.push_back(pool.table(i));
  return c;
}

Verdict<Homotopy> search_homotopy(const Map& f, const std::function<bool(const Table&)>& goal, const SearchLimits& lim,
                                  const std::string& goal_name) {
  using V = Verdict<Homotopy>;
  f.require_continuous("homotopy search");
  StatePool pool(f.domain().size());
  auto r = bfs(pool, f, &goal, lim);
  BoundsUsed b;
  record(b, lim, pool, r.depth);
  switch (r.kind) {
    case BfsResult::found:
      return V::make_yes(path_to(pool, r.goal_id, f.domain(), f.codomain()), b);
    case BfsResult::exhausted:
      return V::make_no("component exhausted (" + std::to_string(pool.size()) + " maps) without reaching " + goal_name, b);
    case BfsResult::truncated_depth:
      return V::make_unknown("max_steps reached before the component was exhausted", b);
    case BfsResult::truncated_states:
      return V::make_unknown("max_states reached before the component was exhausted", b);
  }
  return V::make_unknown("unreachable", b);
}

Verdict<Homotopy> homotopic(const Map& f, const Map& g, const SearchLimits& lim) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
    throw SignatureMismatch("homotopic: signatures differ");
  f.require_continuous("homotopic");
  g.require_continuous("homotopic");
  const Table& target = g.table();
  return search_homotopy(f, [&](const Table& t) { return t == target; }, lim, "the target map");
}

Verdict<Homotopy> is_contractible(const Image& x, const SearchLimits& lim) {
  return search_homotopy(identity(x), is_constant_table, lim, "a constant map");
}

Verdict<SubdivisionContraction> is_subdivision_contractible(const Image& x, int k_max, const SearchLimits& lim) {
  using V = Verdict<SubdivisionContraction>;
  if (k_max < 2) throw PreconditionFailed("k_max must be at least 2");
  BoundsUsed b;
  b.set("k_max", k_max);
  std::string notes;
  for (int k = 2; k <= k_max; ++k) {
    Map rho = subdivision_projection(x, k);
    auto v = search_homotopy(rho, is_constant_table, lim, "a constant map");
    for (const auto& [key, val] : v.bounds.entries) b.set("k" + std::to_string(k) + "_" + key, val);
    if (v.yes()) return V::make_yes({k, std::move(*v.witness)}, b);
    notes += "k=" + std::to_string(k) + ": " + to_string(v.outcome) + "; ";
  }
  return V::make_unknown("no contraction found for k <= " + std::to_string(k_max) + " (" + notes + ")", b);
}

Verdict<EquivalenceWitness> homotopy_equivalent(const Image& x, const Image& y, const EquivalenceCaps& caps) {
  using V = Verdict<EquivalenceWitness>;
  BoundsUsed b;
  b.set("max_maps", static_cast<std::int64_t>(caps.max_maps));
  if (component_count(x) != component_count(y)) return V::make_no("different numbers of connected components", b);

  auto iso = find_isomorphism(x, y);
  if (iso.yes()) {
    const auto& w = *iso.witness;
    Map gf = compose(w.inverse, w.forward), fg = compose(w.forward, w.inverse);
    return V::make_yes({w.forward, w.inverse, constant_homotopy(gf, 0), constant_homotopy(fg, 0)}, b);
  }

  Component cx = mapspace_component(identity(x), caps.search);
  Component cy = mapspace_component(identity(y), caps.search);
  StatePool px(x.size()), py(y.size());
  for (const auto& t : cx.maps) px.insert(t.data(), 0);
  for (const auto& t : cy.maps) py.insert(t.data(), 0);
  b.set("component_x", static_cast<std::int64_t>(cx.maps.size()));
  b.set("component_y", static_cast<std::int64_t>(cy.maps.size()));

  std::vector<Table> fs, gs;
  auto sf = enumerate_tables(x, y, nullptr, [&](const Table& t) { fs.push_back(t); return true; }, caps.max_maps);
  auto sg = enumerate_tables(y, x, nullptr, [&](const Table& t) { gs.push_back(t); return true; }, caps.max_maps);
  b.set("maps_xy", static_cast<std::int64_t>(fs.size()));
  b.set("maps_yx", static_cast<std::int64_t>(gs.size()));

  Table gf(x.size()), fg(y.size());
  for (const auto& f : fs) {
    for (const auto& g : gs) {
      for (std::size_t i = 0; i < x.size(); ++i) gf[i] = g[f[i]];
      if (!px.contains(gf.data())) continue;
      for (std::size_t i = 0; i < y.size(); ++i) fg[i] = f[g[i]];
      if (!py.contains(fg.data())) continue;
      Map mf(x, y, f), mg(y, x, g);
      auto h1 = homotopic(Map(x, x, gf), identity(x), caps.search);
      auto h2 = homotopic(Map(y, y, fg), identity(y), caps.search);
      if (h1.yes() && h2.yes()) return V::make_yes({mf, mg, *h1.witness, *h2.witness}, b);
    }
  }
  bool complete = cx.complete && cy.complete && !sf.overflow && !sg.overflow;
  if (complete)
    return V::make_no("exhaustive: no pair (f,g) has g.f in the component of id_X and f.g in the component of id_Y", b);
  return V::make_unknown("caps reached before every candidate pair was decided", b);
}

Map Ev0Witness::stage(const Map& path, int s) const {
  int n = path_length(path);
  if (n != length) throw SignatureMismatch("path has the wrong length");
  Table t(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) t[i] = path.at(static_cast<std::size_t>(std::min(i, n - s)));
  return Map(path.domain(), path.codomain(), std::move(t));
}

Homotopy Ev0Witness::homotopy_at(const Map& path) const {
  std::vector<Map> s;
  for (int i = 0; i <= length; ++i) s.push_back(stage(path, i));
  return Homotopy(std::move(s));
}

Ev0Witness ev0_homotopy_equivalence_witness(const Image& y, int n) {
  if (n < 1) throw PreconditionFailed("path length must be at least 1");
  Ev0Witness w{y, n, {}};
  Image dom = interval(n);
  for (std::size_t i = 0; i < y.size(); ++i) w.section.push_back(Map(dom, y, Table(dom.size(), static_cast<std::uint32_t>(i))));
  return w;
}

Ev0Check validate_ev0_witness(const Ev0Witness& w, std::uint64_t exhaustive_limit, std::uint64_t samples,
                              std::uint64_t seed) {
  Ev0Check res;
  const Image& y = w.space;
  int n = w.length;
  Image dom = interval(n);
  for (std::size_t i = 0; i < y.size(); ++i)
    if (w.section[i].at(0) != i || !w.section[i].continuous()) return res;

  auto check_path = [&](const Map& a) {
    if (!(w.stage(a, 0) == a)) return false;
    if (!(w.stage(a, n) == w.section[a.at(0)])) return false;
    return true;
  };
  // H(a,s) and H(b,s') adjacent whenever a ~ b and s ~ s'.
  auto check_pair = [&](const Map& a, const Map& b) {
    ++res.pairs;
    for (int s = 0; s <= n; ++s)
      for (int s2 = std::max(0, s - 1); s2 <= std::min(n, s + 1); ++s2)
        if (!maps_adjacent(w.stage(a, s), w.stage(b, s2))) return false;
    return true;
  };

  std::vector<Table> paths;
  auto st = enumerate_tables(dom, y, nullptr, [&](const Table& t) { paths.push_back(t); return true; }, exhaustive_limit);
  if (!st.overflow) {
    res.exhaustive = true;
    for (const auto& t : paths) {
      Map a(dom, y, t);
      if (!check_path(a)) return res;
      bool ok = true;
      for_each_mapspace_neighbor(a, [&](const Table& u) {
        ok = check_pair(a, Map(dom, y, u));
        return ok;
      });
      if (!ok) return res;
    }
    res.ok = true;
    return res;
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    Table t(dom.size());
    t[0] = static_cast<std::uint32_t>(rng() % y.size());
    for (std::size_t i = 1; i < t.size(); ++i) {
      auto nb = y.neighbors(t[i - 1]);
      t[i] = nb[rng() % nb.size()];
    }
    Map a(dom, y, t);
    if (!check_path(a)) return res;
    auto nbs = neighbors_in_mapspace(a);
    if (!check_pair(a, nbs[rng() % nbs.size()])) return res;
  }
  res.ok = true;
  return res;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::yes:
      return "yes";
    case Outcome::no:
      return "no";
    case Outcome::unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace digitop
