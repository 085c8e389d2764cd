#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "digitop/funcspace.hpp"
#include "digitop/verdict.hpp"

namespace digitop {

// Stages H_0, ..., H_N of maps X -> Y.
class Homotopy {
 public:
  explicit Homotopy(std::vector<Map> stages);
  // From H: X x I_N -> Y.
  static Homotopy from_left_form(const Map& h, const Image& x);

  int length() const { return static_cast<int>(stages_.size()) - 1; }
  const std::vector<Map>& stages() const { return stages_; }
  const Map& start() const { return stages_.front(); }
  const Map& end() const { return stages_.back(); }
  const Image& domain() const { return stages_.front().domain(); }
  const Image& codomain() const { return stages_.front().codomain(); }
  Map left_form() const;

 private:
  std::vector<Map> stages_;
};

bool verify_homotopy(const Homotopy& h, const Map& f, const Map& g);
Homotopy constant_homotopy(const Map& f, int n);
Homotopy concat(const Homotopy& h1, const Homotopy& h2);
Homotopy prolong(const Homotopy& h, int n);
Homotopy reverse(const Homotopy& h);
// H(s,t) = min(s, M - t): id_{I_M} to the constant 0.
Homotopy interval_contraction(int m);

struct SearchLimits {
  std::optional<int> max_steps;           // BFS depth; nullopt = unbounded
  std::uint64_t max_states = 4'000'000;   // visited maps before giving up
};

// Continuous g with g adjacent to f in map(X,Y).
std::vector<Map> neighbors_in_mapspace(const Map& f);
void for_each_mapspace_neighbor(const Map& f, const std::function<bool(const Table&)>& visit);

struct Component {
  Image domain, codomain;
  std::vector<Table> maps;  // BFS order from the start map
  bool complete = false;
};
Component mapspace_component(const Map& f, const SearchLimits& lim = {});

// BFS from f until a map satisfying goal is reached.
Verdict<Homotopy> search_homotopy(const Map& f, const std::function<bool(const Table&)>& goal, const SearchLimits& lim,
                                  const std::string& goal_name);
Verdict<Homotopy> homotopic(const Map& f, const Map& g, const SearchLimits& lim = {});

// Homotopy id_X -> constant.
Verdict<Homotopy> is_contractible(const Image& x, const SearchLimits& lim = {});

struct SubdivisionContraction {
  int k;
  Homotopy homotopy;  // rho_k : S(X,k) -> X to a constant
};
Verdict<SubdivisionContraction> is_subdivision_contractible(const Image& x, int k_max, const SearchLimits& lim = {});

struct EquivalenceWitness {
  Map f;  // X -> Y
  Map g;  // Y -> X
  Homotopy gf;  // g o f to id_X
  Homotopy fg;  // f o g to id_Y
};
struct EquivalenceCaps {
  std::uint64_t max_maps = 200'000;  // per direction
  SearchLimits search;
};
Verdict<EquivalenceWitness> homotopy_equivalent(const Image& x, const Image& y, const EquivalenceCaps& caps = {});

// Section c_y of ev_0 and H(a, s)(t) = a(min(t, N - s)).
struct Ev0Witness {
  Image space;
  int length;
  std::vector<Map> section;  // indexed by point of space
  Map stage(const Map& path, int s) const;
  Homotopy homotopy_at(const Map& path) const;
};
Ev0Witness ev0_homotopy_equivalence_witness(const Image& y, int n);
struct Ev0Check {
  bool ok = false;
  bool exhaustive = false;
  std::uint64_t pairs = 0;
};
// Exhaustive when the path space has at most exhaustive_limit paths, else sampled.
Ev0Check validate_ev0_witness(const Ev0Witness& w, std::uint64_t exhaustive_limit = 20'000, std::uint64_t samples = 2'000,
                              std::uint64_t seed = 7);

}  // namespace digitop
