#include "digitop/circle.hpp"

#include <cstdlib>

namespace digitop {

namespace {

const int kCycle[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

long long mod4(long long n) { return ((n % 4) + 4) % 4; }

int step_between(int a, int b) {
  switch (mod4(b - a)) {
    case 0: return 0;
    case 1: return 1;
    case 3: return -1;
  }
  throw PreconditionFailed("antipodal points of D are not adjacent");
}

std::vector<int> path_indices(const Map& alpha) {
  int n = path_length(alpha);
  std::vector<int> idx(n + 1);
  for (int t = 0; t <= n; ++t) idx[t] = diamond_index(eval_at(alpha, t));
  for (int t = 0; t < n; ++t) step_between(idx[t], idx[t + 1]);
  return idx;
}

std::vector<long long> lift_indices(const std::vector<int>& idx, long long start) {
  if (mod4(start) != idx.front()) throw PreconditionFailed("start " + std::to_string(start) + " does not project to the first point");
  std::vector<long long> out(idx.size());
  out[0] = start;
  for (std::size_t t = 1; t < idx.size(); ++t) out[t] = out[t - 1] + step_between(idx[t - 1], idx[t]);
  return out;
}

}  // namespace

Image diamond() { return Image(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

Image circle8() { return Image(2, {{2, 0}, {1, 1}, {0, 2}, {-1, 1}, {-2, 0}, {-1, -1}, {0, -2}, {1, -1}}); }

Image sphere(int n) {
  if (n < 1) throw PreconditionFailed("sphere needs n >= 1");
  std::vector<Point> pts;
  for (int i = 0; i <= n; ++i)
    for (int s : {1, -1}) {
      std::vector<int> c(n + 1, 0);
      c[i] = s;
      pts.emplace_back(std::move(c));
    }
  return Image(n + 1, std::move(pts));
}

Point cover_point(long long n) {
  const int* c = kCycle[mod4(n)];
  return Point{c[0], c[1]};
}

int diamond_index(const Point& x) {
  if (x.dim() == 2)
    for (int i = 0; i < 4; ++i)
      if (x[0] == kCycle[i][0] && x[1] == kCycle[i][1]) return i;
  throw PreconditionFailed(x.str() + " is not a point of D");
}

int diamond_step(const Point& from, const Point& to) { return step_between(diamond_index(from), diamond_index(to)); }

Map LiftCertificate::path_map() const {
  const auto& p = path();
  Image win = interval_range(static_cast<int>(-window), static_cast<int>(window));
  Table t(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) t[i] = static_cast<std::uint32_t>(p[i] + window);
  return Map(interval(static_cast<int>(p.size()) - 1), win, std::move(t));
}

std::vector<Point> diamond_path_points(const Map& alpha) {
  auto idx = path_indices(alpha);
  std::vector<Point> out;
  for (int i : idx) out.push_back(cover_point(i));
  return out;
}

LiftCertificate lift_path(const Map& alpha, long long start) {
  auto idx = path_indices(alpha);
  long long n = static_cast<long long>(idx.size()) - 1;
  LiftCertificate c{{lift_indices(idx, start)}, std::llabs(start) + n};
  if (!verify_path_lift(alpha, c)) throw std::logic_error("path lift failed verification");
  return c;
}

bool verify_path_lift(const Map& alpha, const LiftCertificate& lift) {
  if (lift.rows.size() != 1) return false;
  const auto& p = lift.path();
  int n = path_length(alpha);
  if (static_cast<int>(p.size()) != n + 1) return false;
  for (int t = 0; t <= n; ++t) {
    if (std::llabs(p[t]) > lift.window) return false;
    if (cover_point(p[t]) != eval_at(alpha, t)) return false;
    if (t > 0 && std::llabs(p[t] - p[t - 1]) > 1) return false;
  }
  return true;
}

std::vector<std::vector<long long>> enumerate_path_lifts(const Map& alpha, long long start, std::size_t cap) {
  int n = path_length(alpha);
  long long window = std::llabs(start) + n;
  Image win = interval_range(static_cast<int>(-window), static_cast<int>(window));
  Candidates allowed(n + 1);
  for (int t = 0; t <= n; ++t) {
    Point a = eval_at(alpha, t);
    for (long long v = -window; v <= window; ++v)
      if ((t > 0 || v == start) && cover_point(v) == a) allowed[t].push_back(static_cast<std::uint32_t>(v + window));
  }
  std::vector<std::vector<long long>> out;
  enumerate_tables(
      interval(n), win, &allowed,
      [&](const Table& tab) {
        std::vector<long long> row(tab.size());
        for (std::size_t i = 0; i < tab.size(); ++i) row[i] = static_cast<long long>(tab[i]) - window;
        out.push_back(std::move(row));
        return out.size() < cap;
      },
      cap + 1);
  return out;
}

bool is_diamond_loop(const Map& loop) {
  try {
    path_indices(loop);
  } catch (const Error&) {
    return false;
  }
  return loop.at(0) == loop.at(loop.domain().size() - 1);
}

long long winding_number(const Map& loop) {
  if (!is_diamond_loop(loop)) throw PreconditionFailed("winding_number needs a loop in D");
  auto lift = lift_path(loop, diamond_index(eval_at(loop, 0)));
  return lift.path().back() - lift.path().front();
}

long long winding_index(const Map& loop) { return winding_number(loop) / 4; }

LiftCertificate lift_homotopy(const Map& h, const LiftCertificate& initial) {
  if (initial.rows.size() != 1) throw PreconditionFailed("initial lift must be a path lift");
  int n = static_cast<int>(initial.path().size()) - 1;
  std::size_t total = h.domain().size();
  if (total % (n + 1) != 0) throw SignatureMismatch("homotopy domain is not I_N x I_M");
  int m = static_cast<int>(total / (n + 1)) - 1;
  if (!(h.domain() == product(interval(n), interval(m)))) throw SignatureMismatch("homotopy domain is not I_N x I_M");
  h.require_continuous("lift_homotopy");
  auto value = [&](int s, int t) { return diamond_index(h.codomain().point(h.at(s * (m + 1) + t))); };
  for (int s = 0; s <= n; ++s)
    if (mod4(initial.path()[s]) != value(s, 0)) throw PreconditionFailed("initial lift does not cover H(-,0)");

  std::vector<int> column(m + 1);
  for (int t = 0; t <= m; ++t) column[t] = value(0, t);
  auto first = lift_indices(column, initial.start());
  LiftCertificate out;
  out.window = std::llabs(initial.start()) + n + m;
  for (int t = 0; t <= m; ++t) {
    std::vector<int> row(n + 1);
    for (int s = 0; s <= n; ++s) row[s] = value(s, t);
    out.rows.push_back(lift_indices(row, first[t]));
  }
  if (out.rows.front() != initial.path()) throw std::logic_error("homotopy lift disagrees with the initial lift");
  if (!verify_homotopy_lift(h, out)) throw std::logic_error("homotopy lift failed verification");
  return out;
}

bool verify_homotopy_lift(const Map& h, const LiftCertificate& lift) {
  int m = static_cast<int>(lift.rows.size()) - 1;
  if (m < 0) return false;
  int n = static_cast<int>(lift.rows.front().size()) - 1;
  if (!(h.domain() == product(interval(n), interval(m)))) return false;
  for (int t = 0; t <= m; ++t) {
    if (static_cast<int>(lift.rows[t].size()) != n + 1) return false;
    for (int s = 0; s <= n; ++s) {
      long long v = lift.rows[t][s];
      if (std::llabs(v) > lift.window) return false;
      if (cover_point(v) != h.codomain().point(h.at(s * (m + 1) + t))) return false;
      for (int ds = -1; ds <= 1; ++ds)
        for (int dt = -1; dt <= 1; ++dt) {
          int s2 = s + ds, t2 = t + dt;
          if (s2 < 0 || s2 > n || t2 < 0 || t2 > m) continue;
          if (std::llabs(lift.rows[t2][s2] - v) > 1) return false;
        }
    }
  }
  return true;
}

std::string WindingObstruction::str() const {
  return "winding numbers differ: " + std::to_string(winding_f) + " vs " + std::to_string(winding_g);
}

std::optional<WindingObstruction> winding_obstruction(const Map& f, const Map& g) {
  if (path_length(f) != path_length(g)) throw PreconditionFailed("winding_obstruction needs loops of equal length");
  long long wf = winding_number(f), wg = winding_number(g);
  if (wf == wg) return std::nullopt;
  return WindingObstruction{wf, wg};
}

Verdict<Homotopy> homotopic_loops(const Map& f, const Map& g, const SearchLimits& lim) {
  if (auto ob = winding_obstruction(f, g)) {
    BoundsUsed b;
    b.set("winding_f", ob->winding_f);
    b.set("winding_g", ob->winding_g);
    return Verdict<Homotopy>::make_no(ob->str(), b);
  }
  return homotopic(f, g, lim);
}

}  // namespace digitop
