#include "digitop/cofib.hpp"

#include <algorithm>

#include "digitop/subdivision.hpp"

namespace digitop {

namespace {

int rho(int a, int k) { return floor_div(a, k); }

struct Pt2 {
  int x, y;
};

int infer_time_length(std::size_t total, std::size_t base, const char* what) {
  if (base == 0 || total % base != 0 || total / base < 1) throw SignatureMismatch(std::string(what) + ": domain is not a product with an interval");
  return static_cast<int>(total / base) - 1;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionFailed(msg);
}

Map build_interval_retraction(const Image& x, const Image& a, int n, int k, int l, int m,
                              const std::function<Pt2(int, int)>& value) {
  Image dom = retraction_domain(x, n, k, l * m);
  Image tgt = retraction_target(x, a, n, l);
  Table t(dom.size());
  int c[2];
  for (std::size_t i = 0; i < dom.size(); ++i) {
    auto p = dom.coords(i);
    Pt2 v = value(p[0], p[1]);
    c[0] = v.x;
    c[1] = v.y;
    auto j = tgt.index_of(std::span<const int>(c, 2));
    if (!j) throw std::logic_error("retraction value (" + std::to_string(v.x) + "," + std::to_string(v.y) + ") leaves the target");
    t[i] = static_cast<std::uint32_t>(*j);
  }
  return Map(dom, tgt, std::move(t));
}

// Diagonal collapse onto a fixed strip of width k and the bottom edge.
Pt2 strip_value(int i, int j, int k) {
  if (i <= k - 1) return {0, rho(j, 2)};
  if (j - i >= -(k - 1)) return {0, rho(j - i + k - 1, 2)};
  return {rho(i - j, k), 0};
}

Map reorder_left_form(const Map& src, const Image& dst_domain, const std::vector<int>& from_dst) {
  // from_dst[d] = source coordinate placed at destination slot d.
  Table t(dst_domain.size());
  std::vector<int> c(from_dst.size());
  for (std::size_t i = 0; i < dst_domain.size(); ++i) {
    auto p = dst_domain.coords(i);
    for (std::size_t d = 0; d < from_dst.size(); ++d) c[from_dst[d]] = p[d];
    auto j = src.domain().index_of(c);
    if (!j) throw std::logic_error("coordinate reorder left the source domain");
    t[i] = src.at(*j);
  }
  return Map(dst_domain, src.codomain(), std::move(t));
}

Map hep_compose(const HepProblem& prob, const RetractionWitness& w) {
  int n = prob.time_length();
  require(w.space == prob.space && w.sub == prob.sub, "retraction witness is for a different inclusion");
  require(w.time_length == n, "retraction witness has a different time length");
  Map phi = pushout_filler(prob.sub, prob.space, prob.h, prob.f, w.l);
  return compose(phi, w.r);
}

std::vector<int> floor_coords(std::span<const int> c, std::size_t from, std::size_t len, int k) {
  std::vector<int> out(len);
  for (std::size_t d = 0; d < len; ++d) out[d] = rho(c[from + d], k);
  return out;
}

}  // namespace

Image retraction_domain(const Image& x, int n, int k, int lm) {
  return product(subdivide_image(x, k), interval(lm * n + lm - 1));
}

Image retraction_target(const Image& x, const Image& a, int n, int l) {
  require(a.is_subset_of(x), "retraction target: A is not a subset of X");
  int d = x.dim();
  std::vector<int> flat;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto c = x.coords(i);
    flat.insert(flat.end(), c.begin(), c.end());
    flat.push_back(0);
  }
  int top = l * n + l - 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = a.coords(i);
    for (int t = 1; t <= top; ++t) {
      flat.insert(flat.end(), c.begin(), c.end());
      flat.push_back(t);
    }
  }
  return Image::from_flat(d + 1, std::move(flat));
}

RetractionCheck check_retraction(const RetractionWitness& w) {
  RetractionCheck res;
  int lm = w.l * w.m;
  Image dom = retraction_domain(w.space, w.time_length, w.k, lm);
  Image tgt = retraction_target(w.space, w.sub, w.time_length, w.l);
  if (!(w.r.domain() == dom) || !(w.r.codomain() == tgt)) {
    res.detail = "retraction domain or target does not match the factors";
    return res;
  }
  res.signature = true;
  res.continuous = table_continuous(w.r.domain(), w.r.codomain(), w.r.table());
  if (!res.continuous) res.detail = "retraction is not continuous";
  int d = w.space.dim();
  std::vector<int> base(d);
  for (std::size_t i = 0; i < dom.size(); ++i) {
    auto c = dom.coords(i);
    for (int q = 0; q < d; ++q) base[q] = rho(c[q], w.k);
    int t = c[d];
    bool on_a = w.sub.index_of(base).has_value();
    if (t != 0 && !on_a) continue;
    auto v = tgt.coords(w.r.at(i));
    bool ok = std::equal(base.begin(), base.end(), v.begin()) && v[d] == (t == 0 ? 0 : rho(t, w.m));
    if (!ok) {
      res.detail = "triangle fails at " + dom.point(i).str() + " -> " + tgt.point(w.r.at(i)).str();
      return res;
    }
  }
  res.triangle = true;
  return res;
}

bool verify_retraction(const RetractionWitness& w) { return check_retraction(w).ok(); }

RetractionWitness retraction_origin_interval(int m, int n) {
  require(m >= 1 && n >= 1, "retraction_origin_interval needs M, N >= 1");
  Image x = interval(m), a = interval(0);
  Map r = build_interval_retraction(x, a, n, 2, 2, 2, [](int i, int j) { return strip_value(i, j, 2); });
  RetractionWitness w{x, a, n, 2, 2, 2, std::move(r), std::nullopt};
  auto chk = check_retraction(w);
  if (!chk.ok()) throw std::logic_error("origin retraction failed verification: " + chk.detail);
  return w;
}

int endpoints_exponent(int m, int n) {
  require(m >= 1 && n >= 1, "endpoints_exponent needs M, N >= 1");
  for (int p = 2; p < 30; ++p) {
    long long q = 1ll << (p - 2);
    bool tall = 4ll * n + 3 <= (m + 1) * q - 1;
    bool wide = m == 1 || (m - 1) * (2 * q) >= 8ll * n + 9;
    if (tall && wide) return p;
  }
  throw PreconditionFailed("no admissible exponent below 2^30");
}

RetractionWitness retraction_both_endpoints(int m, int n) {
  int p = endpoints_exponent(m, n);
  int k = 1 << p;
  int w_last = k * (m + 1) - 1;
  int s = (w_last + 1) / 2;
  Image x = interval(m);
  Image a = Image::from_flat(1, m == 0 ? std::vector<int>{0} : std::vector<int>{0, m});
  auto left = [=](int i, int j) -> Pt2 {
    if (i <= k - 1) return {0, rho(j, 2)};
    if (i == s - 1) return {rho(s - 1, k), 0};
    if (j >= 1 && i + j > s - 2) return {rho(2 * i - s + 2, k), 0};
    return strip_value(i, j, k);
  };
  Map r = build_interval_retraction(x, a, n, k, 2, 2, [=](int i, int j) -> Pt2 {
    if (i < s) return left(i, j);
    Pt2 v = left(w_last - i, j);
    return {m - v.x, v.y};
  });
  RetractionWitness w{x, a, n, k, 2, 2, std::move(r), p};
  auto chk = check_retraction(w);
  if (!chk.ok()) throw std::logic_error("endpoint retraction failed verification: " + chk.detail);
  return w;
}

RetractionWitness literal_endpoints_composite(int m, int n) {
  require(m >= 1 && n >= 1, "literal_endpoints_composite needs M, N >= 1");
  int p = 2;
  while (4 * n + 3 > (m + 1) * (1 << (p - 2)) - 1) ++p;
  int big_k = (m + 1) * (1 << (p - 2)) - 1;
  int k = 1 << p;
  int half = 1 << (p - 1);
  auto left = [=](int i, int j) -> Pt2 {
    if (i == 2 * big_k + 1) return {big_k, 0};
    if (j >= 1 && i > 2 * big_k - j && i <= 2 * big_k) return {i - big_k, 0};
    if (i <= 1) return {0, rho(j, 2)};
    if (j >= i - 1) return {0, rho(j - i + 1, 2)};
    return {rho(i - j, 2), 0};
  };
  Image x = interval(m);
  Image a = Image::from_flat(1, {0, m});
  Map r = build_interval_retraction(x, a, n, k, 2, 2, [=](int i, int j) -> Pt2 {
    Pt2 v = i <= 2 * big_k + 1 ? left(i, j) : left(4 * big_k + 3 - i, j);
    if (i > 2 * big_k + 1) v.x = 2 * big_k + 1 - v.x;
    return {rho(v.x, half), v.y};
  });
  return {x, a, n, k, 2, 2, std::move(r), p};
}

RetractionWitness product_with_cofibration(const RetractionWitness& w, const Image& z, bool verify) {
  Image zx = product(z, w.space);
  Image za = product(z, w.sub);
  Image sz = subdivide_image(z, w.k);
  Map rz = subdivision_projection(z, w.k);
  Image dom = product(sz, w.r.domain());
  Image tgt = product(z, w.r.codomain());
  std::size_t nd = w.r.domain().size(), nt = w.r.codomain().size();
  Table t(dom.size());
  for (std::size_t i = 0; i < sz.size(); ++i)
    for (std::size_t j = 0; j < nd; ++j) t[i * nd + j] = static_cast<std::uint32_t>(rz.at(i) * nt + w.r.at(j));
  RetractionWitness out{zx, za, w.time_length, w.k, w.l, w.m, Map(dom, tgt, std::move(t)), w.p};
  if (verify) {
    auto chk = check_retraction(out);
    if (!chk.ok()) throw std::logic_error("product retraction failed verification: " + chk.detail);
  }
  return out;
}

namespace {

Map pushout_table(const Image& a, const Image& x, const Map& h, const Map& f, int l) {
  require(l >= 1, "pushout: l must be positive");
  int n = infer_time_length(h.domain().size(), a.size(), "pushout");
  require(h.domain() == product(a, interval(n)), "pushout: H must be defined on A x I_N");
  require(f.domain() == x, "pushout: f must be defined on X");
  require(h.codomain() == f.codomain(), "pushout: H and f have different codomains");
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t xi = x.require_index(a.point(i));
    require(h.at(i * (n + 1)) == f.at(xi), "pushout: H(a,0) differs from f(a) at " + a.point(i).str());
  }
  Image tgt = retraction_target(x, a, n, l);
  int d = x.dim();
  Table t(tgt.size());
  for (std::size_t i = 0; i < tgt.size(); ++i) {
    auto c = tgt.coords(i);
    auto base = c.subspan(0, d);
    int q = c[d];
    if (q == 0) {
      t[i] = f.at(*x.index_of(base));
    } else {
      std::size_t ai = *a.index_of(base);
      t[i] = h.at(ai * (n + 1) + rho(q, l));
    }
  }
  return Map(tgt, f.codomain(), std::move(t));
}

}  // namespace

Map pushout_filler(const Image& a, const Image& x, const Map& h, const Map& f, int l) {
  require(l >= 2, "pushout_filler needs l >= 2");
  h.require_continuous("pushout_filler H");
  f.require_continuous("pushout_filler f");
  Map phi = pushout_table(a, x, h, f, l);
  if (!phi.continuous()) throw std::logic_error("pushout filler is not continuous");
  return phi;
}

PushoutCount count_pushout_fillers(const Image& a, const Image& x, const Map& h, const Map& f, int l,
                                   std::uint64_t cap) {
  Map forced = pushout_table(a, x, h, f, l);
  const Image& dom = forced.domain();
  Candidates allowed(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) allowed[i] = {forced.at(i)};
  PushoutCount res;
  auto st = enumerate_tables(
      dom, forced.codomain(), &allowed,
      [&](const Table& t) {
        if (!res.first) res.first = Map(dom, forced.codomain(), t);
        return true;
      },
      cap);
  res.count = st.count;
  res.overflow = st.overflow;
  return res;
}

Verdict<Map> exhaustive_pushout_search(const Image& a, const Image& x, const Map& h, const Map& f, int l_max,
                                       std::uint64_t cap) {
  using V = Verdict<Map>;
  BoundsUsed b;
  b.set("l_max", l_max);
  bool overflow = false;
  for (int l = 1; l <= l_max; ++l) {
    auto c = count_pushout_fillers(a, x, h, f, l, cap);
    b.set("l" + std::to_string(l) + "_candidates", static_cast<std::int64_t>(c.count));
    if (c.first) {
      b.set("l", l);
      return V::make_yes(*c.first, b);
    }
    overflow |= c.overflow;
  }
  if (overflow) return V::make_unknown("candidate cap reached", b);
  return V::make_no("no continuous filler for l <= " + std::to_string(l_max), b);
}

int HepProblem::time_length() const { return infer_time_length(h.domain().size(), sub.size(), "HEP"); }

FillerWitness hep_filler(const HepProblem& prob, const RetractionWitness& w) {
  FillerWitness out{hep_compose(prob, w), w.k, w.l * w.m, w.p};
  if (!verify_hep_filler(prob, out)) throw std::logic_error("HEP filler failed verification");
  return out;
}

bool verify_hep_filler(const HepProblem& prob, const FillerWitness& w) {
  int n = prob.time_length();
  Image dom = product(subdivide_image(prob.space, w.k), interval(w.time_factor * n + w.time_factor - 1));
  if (!(w.filler.domain() == dom) || !(w.filler.codomain() == prob.f.codomain())) return false;
  if (!w.filler.continuous()) return false;
  int d = prob.space.dim();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    auto c = dom.coords(i);
    auto base = floor_coords(c, 0, d, w.k);
    int t = c[d];
    if (t == 0 && w.filler.at(i) != prob.f.at(*prob.space.index_of(base))) return false;
    if (auto ai = prob.sub.index_of(base)) {
      if (w.filler.at(i) != prob.h.at(*ai * (n + 1) + rho(t, w.time_factor))) return false;
    }
  }
  return true;
}

Verdict<FillerWitness> filler_search_at(const HepProblem& prob, int k, int l, std::uint64_t cap) {
  using V = Verdict<FillerWitness>;
  require(k >= 1 && l >= 1, "filler search factors must be positive");
  int n = prob.time_length();
  require(prob.h.domain() == product(prob.sub, interval(n)), "HEP: H must be defined on A x I_N");
  const Image& y = prob.f.codomain();
  int d = prob.space.dim();
  Image dom = product(subdivide_image(prob.space, k), interval(l * n + l - 1));
  Candidates allowed(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    auto c = dom.coords(i);
    auto base = floor_coords(c, 0, d, k);
    int t = c[d];
    std::optional<std::uint32_t> forced;
    if (t == 0) forced = prob.f.at(*prob.space.index_of(base));
    if (auto ai = prob.sub.index_of(base)) {
      std::uint32_t v = prob.h.at(*ai * (n + 1) + rho(t, l));
      if (forced && *forced != v) throw PreconditionFailed("HEP: H(a,0) differs from f(a)");
      forced = v;
    }
    if (forced) {
      allowed[i] = {*forced};
    } else {
      allowed[i].resize(y.size());
      for (std::size_t q = 0; q < y.size(); ++q) allowed[i][q] = static_cast<std::uint32_t>(q);
    }
  }
  std::optional<Table> hit;
  auto st = enumerate_tables(
      dom, y, &allowed,
      [&](const Table& t) {
        hit = t;
        return false;
      },
      cap);
  BoundsUsed b;
  b.set("k", k);
  b.set("l", l);
  b.set("candidates", static_cast<std::int64_t>(st.count));
  if (hit) return V::make_yes({Map(dom, y, *hit), k, l, std::nullopt}, b);
  if (st.overflow) return V::make_unknown("candidate cap reached", b);
  return V::make_no("no filler at k=" + std::to_string(k) + ", l=" + std::to_string(l), b);
}

Verdict<FillerWitness> exhaustive_filler_search(const HepProblem& prob, int k_max, int l_max, std::uint64_t cap) {
  using V = Verdict<FillerWitness>;
  require(k_max >= 1 && l_max >= 1, "exhaustive_filler_search bounds must be positive");
  BoundsUsed b;
  b.set("k_max", k_max);
  b.set("l_max", l_max);
  bool overflow = false;
  for (int k = 1; k <= k_max; ++k) {
    for (int l = 1; l <= l_max; ++l) {
      auto v = filler_search_at(prob, k, l, cap);
      std::string key = "k" + std::to_string(k) + "_l" + std::to_string(l);
      b.set(key + "_candidates", *v.bounds.get("candidates"));
      if (v.yes()) {
        b.set("k", k);
        b.set("l", l);
        return V::make_yes(std::move(*v.witness), b);
      }
      overflow |= v.unknown();
    }
  }
  if (overflow) return V::make_unknown("candidate cap reached", b);
  return V::make_no("no filler for k <= " + std::to_string(k_max) + ", l <= " + std::to_string(l_max), b);
}

int BorsukProblem::time_length() const {
  return infer_time_length(h.domain().size(), z.size() * sub.size(), "Borsuk");
}

namespace {

// Filler domain S(Z,k) x S(I_M,L) x S(X,k).
Image borsuk_domain(const BorsukProblem& prob, int k, int lm) {
  int m = prob.time_length();
  return product(product(subdivide_image(prob.z, k), interval(lm * m + lm - 1)), subdivide_image(prob.space, k));
}

void check_borsuk_inputs(const BorsukProblem& prob) {
  int m = prob.time_length();
  const Image& y = prob.f.codomain();
  require(prob.f.domain() == product(prob.z, prob.space), "Borsuk: f must be defined on Z x X");
  require(prob.h.domain() == product(product(prob.z, interval(m)), prob.sub), "Borsuk: H must be defined on Z x I_M x A");
  require(prob.h.codomain() == y, "Borsuk: f and H have different codomains");
  prob.f.require_continuous("Borsuk f");
  prob.h.require_continuous("Borsuk H");
  std::size_t na = prob.sub.size(), nx = prob.space.size();
  for (std::size_t iz = 0; iz < prob.z.size(); ++iz)
    for (std::size_t ia = 0; ia < na; ++ia) {
      std::size_t xi = prob.space.require_index(prob.sub.point(ia));
      require(prob.h.at((iz * (m + 1)) * na + ia) == prob.f.at(iz * nx + xi),
              "Borsuk: H(z,0) does not restrict f(z) to A");
    }
}

}  // namespace

FillerWitness borsuk_filler(const BorsukProblem& prob, const RetractionWitness& w) {
  check_borsuk_inputs(prob);
  int m = prob.time_length();
  std::size_t na = prob.sub.size();
  Image za = product(prob.z, prob.sub);
  Image zx = product(prob.z, prob.space);
  Table ht(za.size() * (m + 1));
  for (std::size_t iz = 0; iz < prob.z.size(); ++iz)
    for (std::size_t ia = 0; ia < na; ++ia)
      for (int t = 0; t <= m; ++t) ht[(iz * na + ia) * (m + 1) + t] = prob.h.at((iz * (m + 1) + t) * na + ia);
  HepProblem hep{za, zx, Map(product(za, interval(m)), prob.h.codomain(), std::move(ht)), Map(zx, prob.f.codomain(), prob.f.table())};
  RetractionWitness wz = product_with_cofibration(w, prob.z, false);
  Map raw = hep_compose(hep, wz);
  int dz = prob.z.dim(), dx = prob.space.dim();
  std::vector<int> from_dst(dz + 1 + dx);
  for (int q = 0; q < dz; ++q) from_dst[q] = q;
  from_dst[dz] = dz + dx;
  for (int q = 0; q < dx; ++q) from_dst[dz + 1 + q] = dz + q;
  int lm = w.l * w.m;
  FillerWitness out{reorder_left_form(raw, borsuk_domain(prob, w.k, lm), from_dst), w.k, lm, w.p};
  if (!verify_borsuk_filler(prob, out)) throw std::logic_error("Borsuk filler failed verification");
  return out;
}

bool verify_borsuk_filler(const BorsukProblem& prob, const FillerWitness& w) {
  int m = prob.time_length();
  Image dom = borsuk_domain(prob, w.k, w.time_factor);
  if (!(w.filler.domain() == dom) || !(w.filler.codomain() == prob.f.codomain())) return false;
  if (!w.filler.continuous()) return false;
  int dz = prob.z.dim(), dx = prob.space.dim();
  std::size_t nx = prob.space.size(), na = prob.sub.size();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    auto c = dom.coords(i);
    std::size_t iz = *prob.z.index_of(floor_coords(c, 0, dz, w.k));
    int t = c[dz];
    auto xb = floor_coords(c, dz + 1, dx, w.k);
    if (t == 0 && w.filler.at(i) != prob.f.at(iz * nx + *prob.space.index_of(xb))) return false;
    if (auto ia = prob.sub.index_of(xb)) {
      std::size_t hi = (iz * (m + 1) + rho(t, w.time_factor)) * na + *ia;
      if (w.filler.at(i) != prob.h.at(hi)) return false;
    }
  }
  return true;
}

namespace {

struct PathData {
  int n, m;
};

PathData check_path_inputs(const Image& z, const Map& f, const Map& h) {
  int n = infer_time_length(f.domain().size(), z.size(), "lift f");
  int m = infer_time_length(h.domain().size(), z.size(), "lift H");
  require(f.domain() == product(z, interval(n)), "lift: f must be defined on Z x I_N");
  require(h.domain() == product(z, interval(m)), "lift: H must be defined on Z x I_M");
  return {n, m};
}

BorsukProblem path_problem(const Image& z, const Map& f, const Map& h, int n, const std::vector<int>& a_points,
                           const std::function<std::uint32_t(std::size_t, int, std::size_t)>& hval) {
  Image a = Image::from_flat(1, a_points);
  int m = infer_time_length(h.domain().size(), z.size(), "lift H");
  Image dom = product(product(z, interval(m)), a);
  Table t(dom.size());
  for (std::size_t iz = 0; iz < z.size(); ++iz)
    for (int s = 0; s <= m; ++s)
      for (std::size_t ia = 0; ia < a.size(); ++ia) t[(iz * (m + 1) + s) * a.size() + ia] = hval(iz, s, ia);
  return {z, interval(n), a, f, Map(dom, f.codomain(), std::move(t))};
}

BorsukProblem ev0_problem(const Image& z, const Map& f, const Map& h) {
  auto [n, m] = check_path_inputs(z, f, h);
  require(h.codomain() == f.codomain(), "lift: f and H have different codomains");
  return path_problem(z, f, h, n, {0}, [&](std::size_t iz, int s, std::size_t) { return h.at(iz * (m + 1) + s); });
}

BorsukProblem endpoints_problem(const Image& z, const Map& f, const Map& h) {
  auto [n, m] = check_path_inputs(z, f, h);
  require(n >= 2, "endpoints lift needs N >= 2");
  const Image& y = f.codomain();
  require(h.codomain() == product(y, y), "endpoints lift: H must land in Y x Y");
  std::size_t ny = y.size();
  return path_problem(z, f, h, n, {0, n}, [&, m = m](std::size_t iz, int s, std::size_t ia) {
    std::uint32_t v = h.at(iz * (m + 1) + s);
    return static_cast<std::uint32_t>(ia == 0 ? v / ny : v % ny);
  });
}

BorsukProblem based_problem(const Image& z, const Map& f, const Map& h, const Point& y0) {
  auto [n, m] = check_path_inputs(z, f, h);
  require(n >= 2, "based lift needs N >= 2");
  const Image& y = f.codomain();
  require(h.codomain() == y, "based lift: f and H have different codomains");
  auto b = static_cast<std::uint32_t>(y.require_index(y0));
  for (std::size_t iz = 0; iz < z.size(); ++iz)
    require(f.at(iz * (n + 1)) == b, "based lift: input path does not start at the basepoint");
  return path_problem(z, f, h, n, {0, n}, [&, m = m](std::size_t iz, int s, std::size_t ia) {
    return ia == 0 ? b : h.at(iz * (m + 1) + s);
  });
}

// Value of the lift at (z', t', s') for s' at the given end of the path.
bool check_path_ends(const Image& z, const FillerWitness& w, int n,
                     const std::function<bool(std::size_t iz_sub, int t, std::uint32_t first, std::uint32_t last)>& ok) {
  std::size_t len = static_cast<std::size_t>(w.k) * n + w.k;  // points of S(I_N,k)
  std::size_t rows = w.filler.domain().size() / len;
  int dz = z.dim();
  for (std::size_t r = 0; r < rows; ++r) {
    auto c = w.filler.domain().coords(r * len);
    std::size_t iz = *z.index_of(floor_coords(c, 0, dz, w.k));
    if (!ok(iz, c[dz], w.filler.at(r * len), w.filler.at(r * len + len - 1))) return false;
  }
  return true;
}

}  // namespace

FillerWitness path_fibration_lift(const Image& z, const Map& f, const Map& h) {
  BorsukProblem prob = ev0_problem(z, f, h);
  int n = prob.space.size() - 1;
  auto w = borsuk_filler(prob, retraction_origin_interval(n, prob.time_length()));
  if (!verify_path_lift(z, f, h, w)) throw std::logic_error("path lift failed verification");
  return w;
}

bool verify_path_lift(const Image& z, const Map& f, const Map& h, const FillerWitness& w) {
  BorsukProblem prob = ev0_problem(z, f, h);
  if (!verify_borsuk_filler(prob, w)) return false;
  int n = static_cast<int>(prob.space.size()) - 1;
  int m = prob.time_length();
  return check_path_ends(z, w, n, [&](std::size_t iz, int t, std::uint32_t first, std::uint32_t) {
    return first == h.at(iz * (m + 1) + rho(t, w.time_factor));
  });
}

FillerWitness endpoints_fibration_lift(const Image& z, const Map& f, const Map& h) {
  BorsukProblem prob = endpoints_problem(z, f, h);
  int n = static_cast<int>(prob.space.size()) - 1;
  auto w = borsuk_filler(prob, retraction_both_endpoints(n, prob.time_length()));
  if (!verify_endpoints_lift(z, f, h, w)) throw std::logic_error("endpoints lift failed verification");
  return w;
}

bool verify_endpoints_lift(const Image& z, const Map& f, const Map& h, const FillerWitness& w) {
  BorsukProblem prob = endpoints_problem(z, f, h);
  if (!verify_borsuk_filler(prob, w)) return false;
  int n = static_cast<int>(prob.space.size()) - 1;
  int m = prob.time_length();
  std::size_t ny = f.codomain().size();
  return check_path_ends(z, w, n, [&](std::size_t iz, int t, std::uint32_t first, std::uint32_t last) {
    std::uint32_t v = h.at(iz * (m + 1) + rho(t, w.time_factor));
    return first == v / ny && last == v % ny;
  });
}

FillerWitness based_path_fibration_lift(const Image& z, const Map& f, const Map& h, const Point& y0) {
  BorsukProblem prob = based_problem(z, f, h, y0);
  int n = static_cast<int>(prob.space.size()) - 1;
  auto w = borsuk_filler(prob, retraction_both_endpoints(n, prob.time_length()));
  if (!verify_based_lift(z, f, h, y0, w)) throw std::logic_error("based lift failed verification");
  return w;
}

bool verify_based_lift(const Image& z, const Map& f, const Map& h, const Point& y0, const FillerWitness& w) {
  BorsukProblem prob = based_problem(z, f, h, y0);
  if (!verify_borsuk_filler(prob, w)) return false;
  int n = static_cast<int>(prob.space.size()) - 1;
  int m = prob.time_length();
  auto b = f.codomain().require_index(y0);
  return check_path_ends(z, w, n, [&](std::size_t iz, int t, std::uint32_t first, std::uint32_t last) {
    return first == b && last == h.at(iz * (m + 1) + rho(t, w.time_factor));
  });
}

}  // namespace digitop
