#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "digitop/config.hpp"
#include "digitop/io.hpp"
#include "digitop/suite.hpp"

namespace py = pybind11;
using namespace digitop;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) { return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

Image make_image(const std::vector<std::vector<int>>& pts) {
  if (pts.empty()) throw PreconditionFailed("an image needs at least one point");
  std::vector<Point> ps;
  for (const auto& p : pts) ps.emplace_back(p);
  return Image(static_cast<int>(pts.front().size()), std::move(ps));
}

std::vector<std::vector<int>> image_points(const Image& x) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto c = x.coords(i);
    out.emplace_back(c.begin(), c.end());
  }
  return out;
}

Map path_in(const Image& y, const std::vector<std::vector<int>>& pts) {
  std::vector<Point> ps;
  for (const auto& p : pts) ps.emplace_back(p);
  return make_path(y, ps);
}

SearchLimits limits(std::optional<int> max_steps, std::uint64_t max_states) { return {max_steps, max_states}; }

}  // namespace

PYBIND11_MODULE(_digitop, m) {
  m.doc() = "Digital images on Z^n, function spaces, homotopy search, cofibration retractions, winding and d-cat";

  py::register_exception<Error>(m, "DigitopError", PyExc_ValueError);

  py::class_<Image>(m, "Image")
      .def(py::init(&make_image), py::arg("points"))
      .def_property_readonly("dim", &Image::dim)
      .def("__len__", &Image::size)
      .def("points", &image_points)
      .def("__contains__", [](const Image& x, const std::vector<int>& p) { return x.contains(Point(p)); })
      .def("__eq__", [](const Image& a, const Image& b) { return a == b; })
      .def("to_json", [](const Image& x) { return to_py(image_to_json(x)); })
      .def_static("from_json", [](const py::object& o) { return image_from_json(from_py(o)); })
      .def("__repr__", [](const Image& x) { return "Image(dim=" + std::to_string(x.dim()) + ", size=" + std::to_string(x.size()) + ")"; });

  py::class_<Map>(m, "Map")
      .def(py::init([](const Image& d, const Image& c, const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs) {
             std::vector<std::pair<Point, Point>> ps;
             for (const auto& [a, b] : pairs) ps.emplace_back(Point(a), Point(b));
             return Map::from_pairs(d, c, ps);
           }),
           py::arg("domain"), py::arg("codomain"), py::arg("assignment"))
      .def_property_readonly("domain", &Map::domain)
      .def_property_readonly("codomain", &Map::codomain)
      .def_property_readonly("table", &Map::table)
      .def_property_readonly("continuous", &Map::continuous)
      .def("__call__", [](const Map& f, const std::vector<int>& p) { return f(Point(p)).vec(); })
      .def("__eq__", [](const Map& a, const Map& b) { return a == b; })
      .def("to_json", [](const Map& f) { return to_py(map_to_json(f)); })
      .def_static("from_json", [](const py::object& o) { return map_from_json(from_py(o)); });

  m.def("interval", &interval, py::arg("n"));
  m.def("single_point", &single_point, py::arg("dim") = 1);
  m.def("diamond", &diamond);
  m.def("circle8", &circle8);
  m.def("sphere", &sphere, py::arg("n"));
  m.def("fixture", &fixture, py::arg("name"));
  m.def("product", py::overload_cast<const Image&, const Image&>(&product));
  m.def("subdivide_image", &subdivide_image, py::arg("x"), py::arg("k"));
  m.def("subdivision_projection", &subdivision_projection, py::arg("x"), py::arg("k"));
  m.def("identity", &identity);
  m.def("compose", &compose, py::arg("g"), py::arg("f"));
  m.def("constant_map", [](const Image& x, const std::vector<int>& y, const Image& t) { return constant_map(x, Point(y), t); });
  m.def("maps_adjacent", &maps_adjacent);
  m.def("count_maps", [](const Image& y, const Image& z) { return MapSpace(y, z).for_each([](const Map&) { return true; }).count; });

  m.def(
      "homotopic",
      [](const Map& f, const Map& g, std::optional<int> steps, std::uint64_t states) {
        return to_py(verdict_to_json(homotopic(f, g, limits(steps, states)), homotopy_to_json));
      },
      py::arg("f"), py::arg("g"), py::arg("max_steps") = py::none(), py::arg("max_states") = 4'000'000);
  m.def(
      "is_contractible",
      [](const Image& x, std::optional<int> steps, std::uint64_t states) {
        return to_py(verdict_to_json(is_contractible(x, limits(steps, states)), homotopy_to_json));
      },
      py::arg("x"), py::arg("max_steps") = py::none(), py::arg("max_states") = 4'000'000);
  m.def(
      "is_subdivision_contractible",
      [](const Image& x, int k_max) {
        return to_py(verdict_to_json(is_subdivision_contractible(x, k_max), [](const SubdivisionContraction& s) {
          return Json{{"k", s.k}, {"homotopy", homotopy_to_json(s.homotopy)}};
        }));
      },
      py::arg("x"), py::arg("k_max"));

  m.def(
      "retraction",
      [](const std::string& kind, int m_, int n_) {
        RetractionWitness w = kind == "origin"      ? retraction_origin_interval(m_, n_)
                              : kind == "endpoints" ? retraction_both_endpoints(m_, n_)
                                                    : throw PreconditionFailed("kind must be origin or endpoints");
        Json j = {{"k", w.k}, {"l", w.l}, {"m", w.m}, {"domain_size", w.r.domain().size()}};
        if (w.p) j["p"] = *w.p;
        j["check"] = retraction_check_to_json(check_retraction(w));
        return to_py(j);
      },
      py::arg("kind"), py::arg("M"), py::arg("N"));

  m.def("winding_number", [](const std::vector<std::vector<int>>& pts) { return winding_number(path_in(diamond(), pts)); });
  m.def("winding_index", [](const std::vector<std::vector<int>>& pts) { return winding_index(path_in(diamond(), pts)); });
  m.def(
      "lift_path", [](const std::vector<std::vector<int>>& pts, long long start) { return lift_path(path_in(diamond(), pts), start).path(); },
      py::arg("points"), py::arg("start"));
  m.def("cover_point", [](long long n) { return cover_point(n).vec(); });

  m.def(
      "is_subdivision_categorical",
      [](const Image& u, const Image& x, int k_max) {
        return to_py(verdict_to_json(is_subdivision_categorical(u, x, k_max), categorical_to_json));
      },
      py::arg("u"), py::arg("x"), py::arg("k_max") = 3);
  m.def(
      "dcat",
      [](const Image& x, int k_max) {
        DcatOptions opt;
        opt.k_max = k_max;
        return to_py(dcat_to_json(dcat(x, opt)));
      },
      py::arg("x"), py::arg("k_max") = 4);
  m.def(
      "run_suite", [](const std::string& scope) { return to_py(suite_to_json(run_suite(scope))); }, py::arg("scope") = "all");
  m.def("set_max_threads", &set_max_threads);
}
