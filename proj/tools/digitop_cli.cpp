#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "digitop/config.hpp"
#include "digitop/io.hpp"
#include "digitop/suite.hpp"

using namespace digitop;

namespace {

enum Exit { kYes = 0, kNo = 1, kOther = 2 };

struct RunConfig {
  std::string out;
  int verbose = 0;
  unsigned threads = 1;
  std::optional<int> max_steps;
  std::uint64_t max_states = 4'000'000;
};

RunConfig cfg;

void emit(const Json& j) {
  if (cfg.out.empty()) {
    std::cout << j.dump() << "\n";
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw Error("cannot write " + cfg.out);
  f << j.dump() << "\n";
}

void note(const std::string& msg) {
  if (cfg.verbose > 0) std::cerr << msg << "\n";
}

SearchLimits limits() { return {cfg.max_steps, cfg.max_states}; }

int exit_for(Outcome o) { return o == Outcome::yes ? kYes : o == Outcome::no ? kNo : kOther; }

// Map JSON or {"length", "points"} with points in D.
Map load_loop(const std::string& path) {
  Json j = load_json_file(path);
  if (j.is_object() && j.contains("assignment")) return map_from_json(j, path);
  return path_from_json(j, diamond(), path);
}

std::vector<Image> load_subsets(const std::string& path) {
  Json j = load_json_file(path);
  if (!j.is_array()) throw ParseError(path + ": expected an array of images");
  std::vector<Image> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(image_from_json(j[i], path + "#" + std::to_string(i)));
  return out;
}

bool is_diamond_map(const Map& f) { return f.codomain() == diamond() && f.domain().dim() == 1; }

std::optional<RetractionWitness> retraction_for(const Image& a, const Image& x, int n) {
  if (x.dim() != 1 || !(x == interval(static_cast<int>(x.size()) - 1))) return std::nullopt;
  int m = static_cast<int>(x.size()) - 1;
  if (a == interval(0)) return retraction_origin_interval(m, n);
  if (m >= 1 && a == Image(1, {{0}, {m}})) return retraction_both_endpoints(m, n);
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digital homotopy toolkit"};
  app.require_subcommand(1);
  app.add_option("--out", cfg.out, "write the JSON report here instead of stdout");
  app.add_flag("-v,--verbose", cfg.verbose, "diagnostics on stderr");
  app.add_option("--threads", cfg.threads, "worker thread cap")->check(CLI::PositiveNumber);
  app.add_option("--max-states", cfg.max_states, "visited-map cap for homotopy searches")->check(CLI::PositiveNumber);

  std::string name, image_file, f_file, g_file, h_file, x_file, y_file, a_file, z_file, loop_file, subsets_file;
  std::string scope = "all";
  int factor = 2, k_max = 4, m_arg = 1, n_arg = 1, l_arg = 2;
  long long start = 0;
  std::optional<int> steps;

  auto* fixtures = app.add_subcommand("fixtures", "emit a canonical image");
  fixtures->add_option("--name", name, "diamond|circle8|point|sphere:N|interval:N|cube:N:D")->required();

  auto* check_map = app.add_subcommand("check-map", "check continuity of a map");
  check_map->add_option("--map", f_file)->required()->check(CLI::ExistingFile);

  auto* prod = app.add_subcommand("product", "product of two images");
  prod->add_option("--x", x_file)->required()->check(CLI::ExistingFile);
  prod->add_option("--y", y_file)->required()->check(CLI::ExistingFile);

  auto* subdiv = app.add_subcommand("subdivide", "subdivision image and projection");
  subdiv->add_option("--image", image_file)->required()->check(CLI::ExistingFile);
  subdiv->add_option("--factor", factor)->required()->check(CLI::Range(2, 1 << 16));

  auto* adj = app.add_subcommand("maps-adjacent", "adjacency in the function space");
  adj->add_option("--f", f_file)->required()->check(CLI::ExistingFile);
  adj->add_option("--g", g_file)->required()->check(CLI::ExistingFile);

  auto* hom = app.add_subcommand("homotopic", "search for a homotopy f -> g");
  hom->add_option("--f", f_file)->required()->check(CLI::ExistingFile);
  hom->add_option("--g", g_file)->required()->check(CLI::ExistingFile);
  hom->add_option("--max-steps", steps)->check(CLI::NonNegativeNumber);

  auto* contr = app.add_subcommand("contractible", "search for a contraction");
  contr->add_option("image,--image", image_file)->required()->check(CLI::ExistingFile);
  contr->add_option("--max-steps", steps)->check(CLI::NonNegativeNumber);

  auto* sub_contr = app.add_subcommand("subdivision-contractible", "search for a contraction of some S(X,k)");
  sub_contr->add_option("--image", image_file)->required()->check(CLI::ExistingFile);
  sub_contr->add_option("--k-max", k_max)->check(CLI::Range(2, 64));
  sub_contr->add_option("--max-steps", steps)->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "constructions and the acceptance suite");
  verify->require_subcommand(1);
  auto* v_origin = verify->add_subcommand("cofibration-origin", "retraction for {0} -> I_M");
  auto* v_ends = verify->add_subcommand("cofibration-endpoints", "retraction for {0,M} -> I_M");
  for (auto* s : {v_origin, v_ends}) {
    s->add_option("--M", m_arg)->required()->check(CLI::Range(1, 64));
    s->add_option("--N", n_arg)->required()->check(CLI::Range(1, 64));
  }
  auto* v_push = verify->add_subcommand("pushout", "pushout filler");
  v_push->add_option("--A", a_file)->required()->check(CLI::ExistingFile);
  v_push->add_option("--X", x_file)->required()->check(CLI::ExistingFile);
  v_push->add_option("--H", h_file, "H: A x I_N -> Y")->required()->check(CLI::ExistingFile);
  v_push->add_option("--f", f_file, "f: X -> Y")->required()->check(CLI::ExistingFile);
  v_push->add_option("--l", l_arg)->check(CLI::Range(1, 64));
  auto* v_borsuk = verify->add_subcommand("borsuk", "Borsuk filler for an interval inclusion");
  v_borsuk->add_option("--Z", z_file)->required()->check(CLI::ExistingFile);
  v_borsuk->add_option("--X", x_file)->required()->check(CLI::ExistingFile);
  v_borsuk->add_option("--A", a_file)->required()->check(CLI::ExistingFile);
  v_borsuk->add_option("--f", f_file, "f: Z x X -> Y")->required()->check(CLI::ExistingFile);
  v_borsuk->add_option("--H", h_file, "H: Z x I_M x A -> Y")->required()->check(CLI::ExistingFile);
  auto* v_suite = verify->add_subcommand("suite", "acceptance battery");
  v_suite->add_option("--scope", scope)->check(CLI::IsMember(suite_scopes()));

  auto* lift = app.add_subcommand("lift", "lifting constructions");
  lift->require_subcommand(1);
  auto* l_path = lift->add_subcommand("path-fibration", "lift against ev_0");
  auto* l_ends = lift->add_subcommand("endpoints-fibration", "lift against (ev_0, ev_N)");
  auto* l_based = lift->add_subcommand("based-path-fibration", "lift against ev_N on based paths");
  for (auto* s : {l_path, l_ends, l_based}) {
    s->add_option("--f", f_file, "f: Z x I_N -> Y")->required()->check(CLI::ExistingFile);
    s->add_option("--H", h_file, "H: Z x I_M -> Y (or Y x Y)")->required()->check(CLI::ExistingFile);
    s->add_option("--Z", z_file, "parameter image, default a point")->check(CLI::ExistingFile);
  }
  auto* l_dpath = lift->add_subcommand("diamond-path", "lift a path in D to Z");
  l_dpath->add_option("--path", loop_file)->required()->check(CLI::ExistingFile);
  l_dpath->add_option("--start", start);
  auto* l_dhom = lift->add_subcommand("diamond-homotopy", "lift H: I_N x I_M -> D to Z");
  l_dhom->add_option("--H", h_file)->required()->check(CLI::ExistingFile);
  l_dhom->add_option("--start", start);

  auto* wind = app.add_subcommand("winding", "winding number of a loop in D");
  wind->add_option("--loop", loop_file)->required()->check(CLI::ExistingFile);

  auto* dc = app.add_subcommand("dcat", "bounds on d-cat");
  dc->add_option("--image", image_file)->required()->check(CLI::ExistingFile);
  dc->add_option("--k-max", k_max)->check(CLI::Range(1, 64));
  dc->add_option("--max-steps", steps)->check(CLI::NonNegativeNumber);
  dc->add_option("--subsets", subsets_file)->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kYes : kOther;
  }

  set_max_threads(cfg.threads);
  cfg.max_steps = steps;

  try {
    if (*fixtures) {
      emit(image_to_json(fixture(name)));
      return kYes;
    }
    if (*check_map) {
      Map f = load_map(f_file);
      emit({{"continuous", f.continuous()}});
      return f.continuous() ? kYes : kNo;
    }
    if (*prod) {
      emit(image_to_json(product(load_image(x_file), load_image(y_file))));
      return kYes;
    }
    if (*subdiv) {
      emit(subdivision_to_json(subdivide(load_image(image_file), factor)));
      return kYes;
    }
    if (*adj) {
      bool a = maps_adjacent(load_map(f_file), load_map(g_file));
      emit({{"adjacent", a}});
      return a ? kYes : kNo;
    }
    if (*hom) {
      Map f = load_map(f_file), g = load_map(g_file);
      auto v = homotopic(f, g, limits());
      if (v.unknown() && is_diamond_map(f) && is_diamond_loop(f) && is_diamond_map(g) && is_diamond_loop(g) &&
          path_length(f) == path_length(g)) {
        note("search inconclusive; trying the winding obstruction");
        auto w = homotopic_loops(f, g, limits());
        if (w.no()) v = w;
      }
      emit(verdict_to_json(v, homotopy_to_json));
      return exit_for(v.outcome);
    }
    if (*contr) {
      auto v = is_contractible(load_image(image_file), limits());
      emit(verdict_to_json(v, homotopy_to_json));
      return exit_for(v.outcome);
    }
    if (*sub_contr) {
      auto v = is_subdivision_contractible(load_image(image_file), k_max, limits());
      emit(verdict_to_json(v, [](const SubdivisionContraction& s) {
        return Json{{"k", s.k}, {"homotopy", homotopy_to_json(s.homotopy)}};
      }));
      return exit_for(v.outcome);
    }
    if (*v_origin || *v_ends) {
      auto w = *v_origin ? retraction_origin_interval(m_arg, n_arg) : retraction_both_endpoints(m_arg, n_arg);
      auto chk = check_retraction(w);
      Json j = retraction_to_json(w);
      j["check"] = retraction_check_to_json(chk);
      emit(j);
      return chk.ok() ? kYes : kOther;
    }
    if (*v_push) {
      Image a = load_image(a_file), x = load_image(x_file);
      Map h = load_map(h_file), f = load_map(f_file);
      auto c = count_pushout_fillers(a, x, h, f, l_arg);
      Json j = {{"l", l_arg}, {"candidates", c.count}, {"overflow", c.overflow}};
      if (c.first) j["filler"] = map_to_json(*c.first);
      emit(j);
      return c.first ? kYes : c.overflow ? kOther : kNo;
    }
    if (*v_borsuk) {
      BorsukProblem prob{load_image(z_file), load_image(x_file), load_image(a_file), load_map(f_file), load_map(h_file)};
      auto w = retraction_for(prob.sub, prob.space, prob.time_length());
      if (!w) throw PreconditionFailed("no retraction is available for this inclusion; supported: {0} or {0,M} in I_M");
      auto fw = borsuk_filler(prob, *w);
      emit(filler_to_json(fw));
      return verify_borsuk_filler(prob, fw) ? kYes : kOther;
    }
    if (*v_suite) {
      auto results = run_suite(scope, [](const CriterionResult& r) {
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.name << " " << r.elapsed_ms << " ms\n";
      });
      Json j = suite_to_json(results);
      emit(j);
      return j["pass"].get<bool>() ? kYes : kNo;
    }
    if (*l_path || *l_ends || *l_based) {
      Image z = z_file.empty() ? single_point() : load_image(z_file);
      Map f = load_map(f_file), h = load_map(h_file);
      FillerWitness w = *l_path ? path_fibration_lift(z, f, h)
                        : *l_ends ? endpoints_fibration_lift(z, f, h)
                                  : based_path_fibration_lift(z, f, h, f.codomain().point(f.at(0)));
      emit(filler_to_json(w));
      return kYes;
    }
    if (*l_dpath) {
      Map alpha = load_loop(loop_file);
      emit(lift_to_json(lift_path(alpha, start)));
      return kYes;
    }
    if (*l_dhom) {
      Map h = load_map(h_file);
      const Image& dom = h.domain();
      if (dom.dim() != 2) throw SignatureMismatch("diamond-homotopy: H must be defined on I_N x I_M");
      int n = dom.coords(dom.size() - 1)[0];
      std::vector<Point> row;
      for (int s = 0; s <= n; ++s) row.push_back(h(Point{s, 0}));
      auto init = lift_path(make_path(h.codomain(), row), start);
      emit(lift_to_json(lift_homotopy(h, init)));
      return kYes;
    }
    if (*wind) {
      Map loop = load_loop(loop_file);
      long long raw = winding_number(loop);
      emit({{"raw", raw}, {"index", raw / 4}});
      return kYes;
    }
    if (*dc) {
      DcatOptions opt;
      opt.k_max = k_max;
      opt.search = limits();
      if (!subsets_file.empty()) opt.candidates = load_subsets(subsets_file);
      auto rep = dcat(load_image(image_file), opt);
      emit(dcat_to_json(rep));
      return rep.outcome == Outcome::yes ? kYes : kOther;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}
