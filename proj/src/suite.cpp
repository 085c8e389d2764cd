#include "digitop/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace digitop {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << "FAILED: " << what << "; ";
    ok = ok && cond;
  }
};

bool constant_table(const Table& t) {
  return std::all_of(t.begin(), t.end(), [&](std::uint32_t v) { return v == t.front(); });
}

// Continuity over every pair of domain points, without neighborhood caches.
bool all_pairs_continuous(const Map& f) {
  const Image& d = f.domain();
  const Image& c = f.codomain();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (adjacent(d.coords(i), d.coords(j)) && !adjacent(c.coords(f.at(i)), c.coords(f.at(j)))) return false;
  return true;
}

std::optional<Table> pick_table(const Image& dom, const Image& cod, const Candidates* allowed, std::mt19937_64& rng,
                                std::uint64_t pool = 4000) {
  std::optional<Table> chosen;
  std::uint64_t seen = 0;
  enumerate_tables(
      dom, cod, allowed,
      [&](const Table& t) {
        ++seen;
        if (std::uniform_int_distribution<std::uint64_t>(1, seen)(rng) == 1) chosen = t;
        return seen < pool;
      },
      pool + 1);
  return chosen;
}

Candidates free_candidates(const Image& dom, const Image& cod) {
  std::vector<std::uint32_t> all(cod.size());
  for (std::size_t i = 0; i < cod.size(); ++i) all[i] = static_cast<std::uint32_t>(i);
  return Candidates(dom.size(), all);
}

Image two_points() { return Image(1, {{0}, {2}}); }

std::vector<std::pair<std::string, Image>> small_corpus() {
  return {{"pt", single_point()}, {"I1", interval(1)}, {"I2", interval(2)}, {"I3", interval(3)},
          {"D", diamond()},       {"{0,2}", two_points()}, {"I1xI1", product(interval(1), interval(1))}};
}

// ---- 1
void diamond_noncontractible(Check& c) {
  auto v = is_contractible(diamond());
  c.expect(v.no(), "is_contractible(D) is No");
  auto comp = mapspace_component(identity(diamond()));
  bool none_constant = std::none_of(comp.maps.begin(), comp.maps.end(), constant_table);
  c.expect(comp.complete, "component of id_D fully enumerated");
  c.expect(none_constant, "component of id_D has no constant map");
  c.detail << "component of id_D: " << comp.maps.size() << " maps, none constant; ";
}

// ---- 2
void interval_contractible(Check& c) {
  std::int64_t worst = 0;
  for (int m = 0; m <= 6; ++m) {
    auto t0 = Clock::now();
    Image x = interval(m);
    auto v = is_contractible(x);
    bool ok = v.yes() && constant_table(v.witness->end().table()) && verify_homotopy(*v.witness, identity(x), v.witness->end());
    Homotopy h = interval_contraction(m);
    ok = ok && verify_homotopy(h, identity(x), constant_map(x, Point{0}, x));
    std::int64_t ms = ms_since(t0);
    worst = std::max(worst, ms);
    c.expect(ok, "I_" + std::to_string(m) + " contraction");
    c.expect(ms < 1000, "I_" + std::to_string(m) + " under 1 s");
  }
  c.detail << "M=0..6 verified, slowest " << worst << " ms; ";
}

// ---- 3
void exponential_law(Check& c) {
  std::uint64_t total = 0, functions = 0;
  for (const auto& [xn, x] : small_corpus())
    for (const auto& [yn, y] : small_corpus())
      for (int n = 1; n <= 2; ++n) {
        if (yn == "I1xI1" && n == 2) continue;
        Image time = interval(n);
        Image z = product(x, time);
        std::uint64_t count_f = 0;
        bool ok = true;
        enumerate_tables(
            z, y, nullptr,
            [&](const Table& t) {
              Map f(z, y, t);
              Curried g = curry(f, x, time);
              ok = ok && is_continuous(g) && uncurry(g) == f;
              ++count_f;
              return ok;
            },
            UINT64_MAX);
        // continuous curried functions, built independently: X -> paths with ~1 adjacency
        std::vector<Map> paths = MapSpace(time, y).all();
        std::size_t np = paths.size();
        std::vector<char> adj(np * np);
        for (std::size_t a = 0; a < np; ++a)
          for (std::size_t b = 0; b < np; ++b) adj[a * np + b] = maps_adjacent(paths[a], paths[b]);
        std::uint64_t count_g = 0;
        std::vector<std::size_t> pick(x.size(), 0);
        std::size_t depth = 0;
        std::vector<std::size_t> next(x.size() + 1, 0);
        while (ok) {
          if (depth == x.size()) {
            Curried g{x, {}};
            for (auto p : pick) g.values.push_back(paths[p]);
            Map f = uncurry(g);
            ok = ok && f.continuous() && table_continuous(z, y, f.table());
            Curried back = curry(f, x, time);
            for (std::size_t i = 0; i < x.size(); ++i) ok = ok && back.values[i] == g.values[i];
            ++count_g;
            --depth;
            continue;
          }
          bool placed = false;
          for (std::size_t p = next[depth]; p < np; ++p) {
            bool fits = adj[p * np + p];
            for (std::size_t e = 0; e < depth && fits; ++e)
              if (x.adjacent_idx(depth, e) && !adj[p * np + pick[e]]) fits = false;
            if (!fits) continue;
            pick[depth] = p;
            next[depth] = p + 1;
            placed = true;
            break;
          }
          if (placed) {
            ++depth;
            next[depth] = 0;
          } else if (depth == 0) {
            break;
          } else {
            --depth;
          }
        }
        ok = ok && count_f == count_g;
        // every function, continuous or not, when the space is small
        double space = std::pow(static_cast<double>(y.size()), static_cast<double>(z.size()));
        if (ok && space <= 65536) {
          std::size_t nz = z.size();
          Table t(nz, 0);
          while (true) {
            Map f(z, y, t);
            if (f.continuous() != is_continuous(curry(f, x, time))) ok = false;
            ++functions;
            std::size_t i = 0;
            while (i < nz && ++t[i] == y.size()) t[i++] = 0;
            if (i == nz || !ok) break;
          }
        }
        total += count_f;
        c.expect(ok, "exponential law for X=" + xn + ", Y=" + yn + ", N=" + std::to_string(n));
      }
  c.detail << total << " continuous maps round-tripped and matched against curried enumeration; " << functions
           << " arbitrary functions checked for continuity reflection; ";
}

// ---- 4
void origin_retractions(Check& c) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      auto w = retraction_origin_interval(m, n);
      auto chk = check_retraction(w);
      c.expect(chk.ok() && w.k == 2 && w.l == 2 && w.m == 2,
               "origin retraction M=" + std::to_string(m) + " N=" + std::to_string(n) + " " + chk.detail);
      c.expect(all_pairs_continuous(w.r), "all-pairs continuity M=" + std::to_string(m) + " N=" + std::to_string(n));
    }
  c.detail << "16 retractions verified; ";
}

// ---- 5
void endpoint_retractions(Check& c) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      auto w = retraction_both_endpoints(m, n);
      auto chk = check_retraction(w);
      std::string tag = "M=" + std::to_string(m) + " N=" + std::to_string(n);
      c.expect(chk.ok(), "endpoint retraction " + tag + " " + chk.detail);
      c.expect(all_pairs_continuous(w.r), "all-pairs continuity " + tag);
      int p = *w.p;
      c.expect(p == endpoints_exponent(m, n), "p recorded " + tag);
      int height_p = 2;
      while (4 * n + 3 > (m + 1) * (1 << (height_p - 2)) - 1) ++height_p;
      c.detail << tag << ":p=" << p << "(height rule alone " << height_p << ") ";
    }
  auto lit = literal_endpoints_composite(2, 1);
  c.detail << "; unwidened composite at M=2 N=1 triangle=" << (check_retraction(lit).triangle ? "ok" : "fails") << "; ";
}

// ---- 6
HepProblem example_nonfiller() {
  Image a = interval(0), x = interval(2), y = interval(3);
  Map h = Map::from_pairs(product(a, interval(1)), y, {{Point{0, 0}, Point{1}}, {Point{0, 1}, Point{0}}});
  Map f = Map::from_function(x, y, [](const Point& p) { return Point{p[0] + 1}; });
  return {a, x, h, f};
}

HepProblem example_nonpush() {
  Image a = interval(0), x = interval(1), d = diamond();
  Map h = Map::from_pairs(product(a, interval(1)), d, {{Point{0, 0}, Point{1, 0}}, {Point{0, 1}, Point{0, 1}}});
  Map f = Map::from_pairs(x, d, {{Point{0}, Point{1, 0}}, {Point{1}, Point{0, -1}}});
  return {a, x, h, f};
}

void negative_fixtures(Check& c) {
  struct Case {
    const char* name;
    HepProblem prob;
    int k;  // subdivision of X the filler needs
  };
  for (const auto& [name, prob, k] : {Case{"non-cofibration", example_nonfiller(), 2}, Case{"non-push", example_nonpush(), 1}}) {
    std::string tag(name);
    c.expect(exhaustive_filler_search(prob, 1, 1).no(), tag + ": no filler at k=l=1");
    auto some = filler_search_at(prob, k, 2);
    c.expect(some.yes(), tag + ": filler at l=2, k=" + std::to_string(k));
    if (some.yes()) c.expect(verify_hep_filler(prob, *some.witness), tag + ": searched filler revalidates");
    auto built = hep_filler(prob, retraction_origin_interval(static_cast<int>(prob.space.size()) - 1, 1));
    c.expect(verify_hep_filler(prob, built), tag + ": constructed filler revalidates");
  }
  c.expect(filler_search_at(example_nonfiller(), 1, 2).no(), "non-cofibration: l=2 alone does not suffice");
  auto p = example_nonpush();
  auto pn = exhaustive_pushout_search(p.sub, p.space, p.h, p.f, 1);
  c.expect(pn.no(), "non-push: no pushout filler at l=1");
  auto cnt = count_pushout_fillers(p.sub, p.space, p.h, p.f, 2);
  c.expect(cnt.count == 1, "non-push: exactly one pushout filler at l=2");
  c.detail << "both examples: No at k=l=1; Yes at l=2 (k=2 for the non-cofibration, k=1 for non-push); ";
}

// ---- 7
void lifting_battery(Check& c) {
  std::mt19937_64 rng(20190611);
  int built = 0;
  for (const auto& z : {single_point(), interval(1)})
    for (const auto& y : {interval(2), diamond()}) {
      Image yy = product(y, y);
      for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
          std::string tag = "|Z|=" + std::to_string(z.size()) + " |Y|=" + std::to_string(y.size()) + " N=" +
                            std::to_string(n) + " M=" + std::to_string(m);
          Image zn = product(z, interval(n)), zm = product(z, interval(m));
          Map f(zn, y, *pick_table(zn, y, nullptr, rng));
          Candidates hc = free_candidates(zm, y);
          for (std::size_t i = 0; i < z.size(); ++i) hc[i * (m + 1)] = {f.at(i * (n + 1))};
          Map h(zm, y, *pick_table(zm, y, &hc, rng));
          auto pl = path_fibration_lift(z, f, h);
          c.expect(verify_path_lift(z, f, h, pl), "path lift " + tag);
          ++built;

          if (n == 1) {
            // Borsuk directly: X = I_1, A = {0}, time M
            Image x = interval(1), a = interval(0);
            Image zx = product(z, x);
            Map bf(zx, y, *pick_table(zx, y, nullptr, rng));
            Image zma = product(zm, a);
            Candidates bc = free_candidates(zma, y);
            for (std::size_t i = 0; i < z.size(); ++i) bc[i * (m + 1)] = {bf.at(i * 2)};
            Map bh(zma, y, *pick_table(zma, y, &bc, rng));
            BorsukProblem prob{z, x, a, bf, bh};
            auto w = borsuk_filler(prob, retraction_origin_interval(1, m));
            c.expect(verify_borsuk_filler(prob, w), "Borsuk " + tag);
            ++built;
            continue;
          }
          Candidates ec = free_candidates(zm, yy);
          for (std::size_t i = 0; i < z.size(); ++i)
            ec[i * (m + 1)] = {static_cast<std::uint32_t>(f.at(i * (n + 1)) * y.size() + f.at(i * (n + 1) + n))};
          Map eh(zm, yy, *pick_table(zm, yy, &ec, rng));
          auto el = endpoints_fibration_lift(z, f, eh);
          c.expect(verify_endpoints_lift(z, f, eh, el), "endpoints lift " + tag);

          Candidates fc = free_candidates(zn, y);
          for (std::size_t i = 0; i < z.size(); ++i) fc[i * (n + 1)] = {0};
          Map bf(zn, y, *pick_table(zn, y, &fc, rng));
          Candidates bc = free_candidates(zm, y);
          for (std::size_t i = 0; i < z.size(); ++i) bc[i * (m + 1)] = {bf.at(i * (n + 1) + n)};
          Map bh(zm, y, *pick_table(zm, y, &bc, rng));
          auto bl = based_path_fibration_lift(z, bf, bh, y.point(0));
          c.expect(verify_based_lift(z, bf, bh, y.point(0), bl), "based lift " + tag);
          built += 2;
        }
    }
  c.detail << built << " fillers constructed and revalidated; ";
}

// ---- 8
void brute_lifts(const std::vector<Point>& alpha, long long v, std::size_t t, long long window,
                 std::vector<long long>& cur, std::vector<std::vector<long long>>& out) {
  cur.push_back(v);
  if (t + 1 == alpha.size()) {
    out.push_back(cur);
  } else {
    for (long long w = v - 1; w <= v + 1; ++w)
      if (std::llabs(w) <= window && cover_point(w) == alpha[t + 1]) brute_lifts(alpha, w, t + 1, window, cur, out);
  }
  cur.pop_back();
}

void lift_uniqueness(Check& c) {
  std::uint64_t checked = 0;
  Image d = diamond();
  for (int n = 1; n <= 6; ++n) {
    for (const auto& alpha : MapSpace(interval(n), d).all()) {
      std::vector<Point> pts;
      for (int t = 0; t <= n; ++t) pts.push_back(eval_at(alpha, t));
      for (long long s = -8; s <= 8; ++s) {
        if (cover_point(s) != pts[0]) continue;
        auto lift = lift_path(alpha, s);
        std::vector<std::vector<long long>> all;
        std::vector<long long> cur;
        brute_lifts(pts, s, 0, lift.window + 2, cur, all);
        bool ok = all.size() == 1 && all[0] == lift.path() && verify_path_lift(alpha, lift);
        if (!ok) c.expect(false, "lift of a length-" + std::to_string(n) + " path from " + std::to_string(s));
        ++checked;
      }
    }
  }
  c.detail << checked << " (path, start) pairs have exactly one lift, equal to the constructed one; ";
}

// ---- 9
void winding_invariance(Check& c) {
  Image d = diamond();
  std::uint64_t pairs = 0, loops = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<Map> ls;
    std::vector<long long> wind;
    for (auto& p : MapSpace(interval(n), d).all())
      if (p.at(0) == p.at(n)) {
        wind.push_back(winding_number(p));
        ls.push_back(std::move(p));
      }
    loops += ls.size();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (wind[i] % 4 != 0) c.expect(false, "winding is a multiple of 4");
      for (long long s : {-4LL, 0LL, 4LL}) {
        auto l = lift_path(ls[i], diamond_index(eval_at(ls[i], 0)) + s);
        if (l.path().back() - l.path().front() != wind[i]) c.expect(false, "winding independent of start");
      }
      for (std::size_t j = i + 1; j < ls.size(); ++j)
        if (tables_adjacent(ls[i].domain(), d, ls[i].table(), ls[j].table())) {
          ++pairs;
          if (wind[i] != wind[j]) c.expect(false, "adjacent loops wind equally (length " + std::to_string(n) + ")");
        }
    }
  }
  Map loop4 = make_path(d, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}});
  Map rev4 = make_path(d, {{1, 0}, {0, -1}, {-1, 0}, {0, 1}, {1, 0}});
  c.expect(winding_number(loop4) == 4 && winding_index(loop4) == 1, "canonical loop raw 4, index 1");
  c.expect(winding_number(rev4) == -4, "reversed loop raw -4");
  c.detail << loops << " loops, " << pairs << " adjacent pairs with equal winding; canonical loop raw 4 index 1; ";
}

// ---- 10
void diamond_dcat(Check& c) {
  Image d = diamond();
  DcatOptions opt;
  opt.k_max = 4;
  auto rep = dcat(d, opt);
  c.expect(rep.outcome == Outcome::yes && rep.lower == 1 && rep.upper == 1, "dcat(D) reports (1,1)");
  if (rep.cover) c.expect(verify_cover(*rep.cover), "reported cover revalidates");
  c.expect(is_contractible(d).no(), "k=1 case: D not contractible");
  for (int k = 2; k <= 4; ++k) {
    auto lb = diamond_lower_bound(k);
    c.expect(lb.winding != 0 && path_length(lb.loop) == 4 * k, "innermost loop winds for k=" + std::to_string(k));
  }
  Image rest(2, {{0, 1}, {-1, 0}, {0, -1}});
  Image p(2, {{1, 0}});
  auto a = is_subdivision_categorical(rest, d, 4);
  auto b = is_subdivision_categorical(p, d, 4);
  c.expect(a.yes() && b.yes(), "D-{p} and {p} are categorical");
  if (a.yes() && b.yes()) c.expect(verify_cover({d, {*a.witness, *b.witness}}), "cover {D-{p}, {p}} revalidates");
  c.detail << "lower " << rep.lower << ", upper " << (rep.upper ? std::to_string(*rep.upper) : "none") << "; ";
}

// ---- 11
void section_equivalence(Check& c) {
  Image d = diamond();
  struct Fixture {
    std::string name;
    Image u, x;
  };
  std::vector<Fixture> fx = {{"singleton in D", Image(2, {{1, 0}}), d},
                             {"D-{p} in D", Image(2, {{0, 1}, {-1, 0}, {0, -1}}), d},
                             {"edge in I_3", Image(1, {{1}, {2}}), interval(3)}};
  for (const auto& f : fx) {
    auto v = is_subdivision_categorical(f.u, f.x, 3);
    c.expect(v.yes() && verify_categorical(*v.witness, f.x), f.name + ": categorical witness");
    if (!v.yes()) continue;
    const auto& w = *v.witness;
    Section from_w = section_from_witness(w);
    c.expect(verify_section(from_w, f.x), f.name + ": section from homotopy revalidates");
    auto s = section_check(f.u, f.x, w.k, std::max(1, w.homotopy.length()), w.basepoint);
    c.expect(s.yes(), f.name + ": section search succeeds at the translated bounds");
    if (s.yes()) c.expect(verify_categorical(witness_from_section(*s.witness, f.x), f.x), f.name + ": homotopy from section");
  }
  // the converse direction on a non-categorical subset
  auto v = is_subdivision_categorical(d, d, 3);
  c.expect(v.no(), "D in D: not subdivision-categorical");
  std::uint64_t searched = 0;
  for (int k = 1; k <= 2; ++k)
    for (int n = 1; n <= (k == 1 ? 3 : 2); ++n)
      for (const auto& x0 : d.points()) {
        auto s = section_check(d, d, k, n, x0);
        c.expect(s.no(), "D in D: no section at k=" + std::to_string(k) + " N=" + std::to_string(n));
        ++searched;
      }
  c.detail << "3 positive fixtures matched both ways; " << searched << " section searches exhausted for D in D; ";
}

// ---- 12
void subdivision_algebra(Check& c) {
  std::vector<std::pair<std::string, Image>> corpus = {
      {"pt", single_point()},    {"I3", interval(3)},        {"D", diamond()},
      {"C", circle8()},          {"S2", sphere(2)},          {"{0,2}", two_points()},
      {"I1xI1", product(interval(1), interval(1))}};
  for (int n = 0; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k)
      c.expect(subdivide_image(interval(n), k) == interval(k * n + k - 1), "S(I_N,k) = I_{kN+k-1}");
  auto iso_ok = [](const Map& f) {
    if (f.domain().size() != f.codomain().size()) return false;
    Table inv(f.domain().size(), UINT32_MAX);
    for (std::size_t i = 0; i < inv.size(); ++i) {
      if (inv[f.at(i)] != UINT32_MAX) return false;
      inv[f.at(i)] = static_cast<std::uint32_t>(i);
    }
    return f.continuous() && Map(f.codomain(), f.domain(), inv).continuous();
  };
  for (const auto& [name, x] : corpus) {
    Image a = Image(x.dim(), {x.point(0)});
    Map j = inclusion(a, x);
    for (int k = 1; k <= 4; ++k) {
      std::size_t block = static_cast<std::size_t>(std::llround(std::pow(k, x.dim())));
      c.expect(subdivide_image(x, k).size() == x.size() * block, "|S(X,k)| for " + name);
      Map lhs = compose(subdivision_projection(x, k), subdivide_inclusion(j, k));
      Map rhs = compose(j, subdivision_projection(a, k));
      c.expect(lhs == rhs, "rho_k o S(j,k) = j o rho_k for " + name);
      for (int l = 1; l <= 4; ++l)
        if (x.size() * block * std::pow(l, x.dim()) <= 200000) c.expect(iso_ok(iso_iterated(x, k, l)), "iso_iterated " + name);
    }
  }
  std::vector<Image> small = {interval(1), interval(2), diamond(), two_points()};
  for (const auto& x : small)
    for (const auto& y : small)
      for (int k = 1; k <= 4; ++k) c.expect(iso_ok(iso_product_subdivision(x, y, k)), "iso_product_subdivision");
  c.detail << "corpus of " << corpus.size() << " images, k,l <= 4; ";
}

struct Entry {
  int id;
  const char* name;
  const char* module;
  std::int64_t limit_ms;
  void (*run)(Check&);
};

const Entry kEntries[] = {
    {1, "diamond-noncontractible", "homotopy", 10000, diamond_noncontractible},
    {2, "interval-contractible", "homotopy", 7000, interval_contractible},
    {3, "exponential-law", "funcspace", 60000, exponential_law},
    {4, "retraction-origin", "cofib", 10000, origin_retractions},
    {5, "retraction-endpoints", "cofib", 30000, endpoint_retractions},
    {6, "negative-fixtures", "cofib", 10000, negative_fixtures},
    {7, "borsuk-and-lifts", "cofib", 60000, lifting_battery},
    {8, "path-lift-uniqueness", "circle", 60000, lift_uniqueness},
    {9, "winding-invariance", "circle", 60000, winding_invariance},
    {10, "dcat-diamond", "lscat", 120000, diamond_dcat},
    {11, "section-equivalence", "lscat", 120000, section_equivalence},
    {12, "subdivision-algebra", "subdivision", 30000, subdivision_algebra},
};

}  // namespace

std::vector<std::string> suite_scopes() {
  return {"all", "lattice", "maps", "subdivision", "funcspace", "homotopy", "cofib", "circle", "lscat"};
}

std::vector<CriterionResult> run_suite(const std::string& scope, const std::function<void(const CriterionResult&)>& on_result) {
  auto scopes = suite_scopes();
  if (std::find(scopes.begin(), scopes.end(), scope) == scopes.end()) throw PreconditionFailed("unknown suite scope " + scope);
  std::vector<CriterionResult> out;
  for (const auto& e : kEntries) {
    if (scope != "all" && scope != e.module) continue;
    CriterionResult r{e.id, e.name, e.module, false, 0, e.limit_ms, {}};
    Check c;
    auto t0 = Clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    r.elapsed_ms = ms_since(t0);
    r.pass = c.ok && r.elapsed_ms <= r.limit_ms;
    r.detail = c.detail.str();
    if (c.ok && !r.pass) r.detail += "over time limit; ";
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

Json suite_to_json(const std::vector<CriterionResult>& results) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : results) {
    arr.push_back({{"id", r.id}, {"name", r.name}, {"module", r.module}, {"pass", r.pass}, {"elapsed_ms", r.elapsed_ms},
                   {"limit_ms", r.limit_ms}, {"detail", r.detail}});
    all = all && r.pass;
  }
  return {{"pass", all}, {"criteria", std::move(arr)}};
}

}  // namespace digitop
