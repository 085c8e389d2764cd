#include "digitop/io.hpp"

#include <fstream>
#include <sstream>

namespace digitop {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& ptr, const std::string& msg) {
  std::string loc = where.empty() ? ptr : where + ": " + ptr;
  throw ParseError(loc + ": " + msg);
}

const Json& field(const Json& j, const char* key, const std::string& where, const std::string& ptr) {
  if (!j.is_object()) fail(where, ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, ptr, std::string("missing field \"") + key + "\"");
  return *it;
}

int int_value(const Json& j, const std::string& where, const std::string& ptr) {
  if (!j.is_number_integer()) fail(where, ptr, "expected an integer");
  auto v = j.get<long long>();
  if (v < INT32_MIN || v > INT32_MAX) fail(where, ptr, "integer out of range");
  return static_cast<int>(v);
}

Point point_at(const Json& j, const std::string& where, const std::string& ptr) {
  if (!j.is_array() || j.empty()) fail(where, ptr, "expected a nonempty array of integers");
  std::vector<int> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(int_value(j[i], where, ptr + "/" + std::to_string(i)));
  return Point(std::move(c));
}

Image image_at(const Json& j, const std::string& where, const std::string& ptr) {
  int dim = int_value(field(j, "dim", where, ptr), where, ptr + "/dim");
  const Json& pts = field(j, "points", where, ptr);
  if (!pts.is_array()) fail(where, ptr + "/points", "expected an array");
  std::vector<Point> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::string p = ptr + "/points/" + std::to_string(i);
    Point q = point_at(pts[i], where, p);
    if (q.dim() != dim) fail(where, p, "point has dimension " + std::to_string(q.dim()) + ", expected " + std::to_string(dim));
    out.push_back(std::move(q));
  }
  try {
    return Image(dim, std::move(out));
  } catch (const Error& e) {
    fail(where, ptr, e.what());
  }
}

Map map_at(const Json& j, const std::string& where, const std::string& ptr) {
  Image dom = image_at(field(j, "domain", where, ptr), where, ptr + "/domain");
  Image cod = image_at(field(j, "codomain", where, ptr), where, ptr + "/codomain");
  const Json& as = field(j, "assignment", where, ptr);
  if (!as.is_array()) fail(where, ptr + "/assignment", "expected an array");
  std::vector<std::pair<Point, Point>> pairs;
  for (std::size_t i = 0; i < as.size(); ++i) {
    std::string p = ptr + "/assignment/" + std::to_string(i);
    if (!as[i].is_array() || as[i].size() != 2) fail(where, p, "expected a [source, value] pair");
    pairs.emplace_back(point_at(as[i][0], where, p + "/0"), point_at(as[i][1], where, p + "/1"));
  }
  try {
    return Map::from_pairs(dom, cod, pairs);
  } catch (const Error& e) {
    fail(where, ptr + "/assignment", e.what());
  }
}

}  // namespace

Json point_to_json(const Point& p) { return Json(p.vec()); }

Json image_to_json(const Image& x) {
  Json pts = Json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto c = x.coords(i);
    pts.push_back(std::vector<int>(c.begin(), c.end()));
  }
  return {{"dim", x.dim()}, {"points", std::move(pts)}};
}

Json map_to_json(const Map& f) {
  Json as = Json::array();
  const Image& d = f.domain();
  const Image& c = f.codomain();
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto a = d.coords(i);
    auto b = c.coords(f.at(i));
    as.push_back({std::vector<int>(a.begin(), a.end()), std::vector<int>(b.begin(), b.end())});
  }
  return {{"domain", image_to_json(d)}, {"codomain", image_to_json(c)}, {"assignment", std::move(as)}};
}

Json path_to_json(const Map& path) {
  int n = path_length(path);
  Json pts = Json::array();
  for (int t = 0; t <= n; ++t) pts.push_back(point_to_json(eval_at(path, t)));
  return {{"length", n}, {"points", std::move(pts)}};
}

Json homotopy_to_json(const Homotopy& h) {
  Json st = Json::array();
  for (const auto& s : h.stages()) st.push_back(map_to_json(s));
  return {{"stages", std::move(st)}};
}

Json bounds_to_json(const BoundsUsed& b) {
  Json j = Json::object();
  for (const auto& [k, v] : b.entries) j[k] = v;
  return j;
}

Point point_from_json(const Json& j, const std::string& where) { return point_at(j, where, ""); }
Image image_from_json(const Json& j, const std::string& where) { return image_at(j, where, ""); }
Map map_from_json(const Json& j, const std::string& where) { return map_at(j, where, ""); }

Map path_from_json(const Json& j, const Image& target, const std::string& where) {
  int n = int_value(field(j, "length", where, ""), where, "/length");
  const Json& pts = field(j, "points", where, "");
  if (!pts.is_array() || static_cast<int>(pts.size()) != n + 1) fail(where, "/points", "expected length + 1 points");
  std::vector<Point> ps;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Point p = point_at(pts[i], where, "/points/" + std::to_string(i));
    if (!target.contains(p)) fail(where, "/points/" + std::to_string(i), p.str() + " is not in the target image");
    ps.push_back(std::move(p));
  }
  return make_path(target, ps);
}

Homotopy homotopy_from_json(const Json& j, const std::string& where) {
  const Json& st = field(j, "stages", where, "");
  if (!st.is_array() || st.empty()) fail(where, "/stages", "expected a nonempty array of maps");
  std::vector<Map> stages;
  for (std::size_t i = 0; i < st.size(); ++i) stages.push_back(map_at(st[i], where, "/stages/" + std::to_string(i)));
  try {
    return Homotopy(std::move(stages));
  } catch (const Error& e) {
    fail(where, "/stages", e.what());
  }
}

Json subdivision_to_json(const Subdivision& s) {
  return {{"factor", s.factor}, {"image", image_to_json(s.image)}, {"projection", map_to_json(s.projection)}};
}

Json retraction_to_json(const RetractionWitness& w) {
  Json j = {{"space", image_to_json(w.space)}, {"sub", image_to_json(w.sub)}, {"time_length", w.time_length},
            {"k", w.k}, {"l", w.l}, {"m", w.m}, {"retraction", map_to_json(w.r)}};
  if (w.p) j["p"] = *w.p;
  return j;
}

Json retraction_check_to_json(const RetractionCheck& c) {
  Json j = {{"signature", c.signature}, {"continuous", c.continuous}, {"triangle", c.triangle}, {"ok", c.ok()}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json filler_to_json(const FillerWitness& w) {
  Json j = {{"k", w.k}, {"time_factor", w.time_factor}, {"filler", map_to_json(w.filler)}};
  if (w.p) j["p"] = *w.p;
  return j;
}

Json lift_to_json(const LiftCertificate& c) { return {{"rows", c.rows}, {"window", c.window}}; }

Json categorical_to_json(const CategoricalWitness& w) {
  return {{"subset", image_to_json(w.subset)}, {"k", w.k}, {"basepoint", point_to_json(w.basepoint)},
          {"homotopy", homotopy_to_json(w.homotopy)}};
}

Json cover_to_json(const CategoricalCover& c) {
  Json m = Json::array();
  for (const auto& w : c.members) m.push_back(categorical_to_json(w));
  return {{"space", image_to_json(c.space)}, {"members", std::move(m)}};
}

Json section_to_json(const Section& s) {
  Json paths = Json::array();
  for (const auto& p : s.paths) paths.push_back(path_to_json(p));
  return {{"subset", image_to_json(s.subset)}, {"k", s.k}, {"length", s.length},
          {"basepoint", point_to_json(s.basepoint)}, {"paths", std::move(paths)}};
}

Json dcat_to_json(const DcatReport& r) {
  Json j = {{"outcome", to_string(r.outcome)}, {"lower", r.lower}};
  j["upper"] = r.upper ? Json(*r.upper) : Json(nullptr);
  j["witness"] = r.cover ? cover_to_json(*r.cover) : Json(nullptr);
  j["lower_certificates"] = r.lower_certificates;
  j["bounds"] = bounds_to_json(r.bounds);
  return j;
}

Json obstruction_to_json(const DiamondLowerBound& b) {
  return {{"k", b.k}, {"loop", path_to_json(b.loop)}, {"projected", path_to_json(b.projected)}, {"winding", b.winding}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Image load_image(const std::string& path) { return image_from_json(load_json_file(path), path); }
Map load_map(const std::string& path) { return map_from_json(load_json_file(path), path); }

Image fixture(const std::string& name) {
  std::vector<std::string> parts;
  std::stringstream ss(name);
  for (std::string s; std::getline(ss, s, ':');) parts.push_back(s);
  auto num = [&](std::size_t i) {
    if (i >= parts.size()) throw ParseError("fixture " + name + ": missing parameter");
    try {
      std::size_t used = 0;
      int v = std::stoi(parts[i], &used);
      if (used != parts[i].size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw ParseError("fixture " + name + ": bad parameter " + parts[i]);
    }
  };
  if (parts.empty()) throw ParseError("empty fixture name");
  const std::string& kind = parts[0];
  std::size_t want = 1;
  Image out = single_point();
  if (kind == "diamond") {
    out = diamond();
  } else if (kind == "circle8") {
    out = circle8();
  } else if (kind == "point") {
    out = single_point();
  } else if (kind == "sphere") {
    want = 2;
    out = sphere(num(1));
  } else if (kind == "interval") {
    want = 2;
    int n = num(1);
    if (n < 0) throw ParseError("fixture " + name + ": length must be nonnegative");
    out = interval(n);
  } else if (kind == "cube") {
    want = 3;
    int n = num(1), d = num(2);
    if (n < 0 || d < 1) throw ParseError("fixture " + name + ": need N >= 0 and D >= 1");
    out = power(interval(n), d);
  } else {
    throw ParseError("unknown fixture " + kind);
  }
  if (parts.size() != want) throw ParseError("fixture " + name + ": wrong number of parameters");
  return out;
}

}  // namespace digitop
