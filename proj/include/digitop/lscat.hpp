#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "digitop/homotopy.hpp"

namespace digitop {

// Homotopy on S(U,k) from the constant at basepoint to i o rho_k.
struct CategoricalWitness {
  Image subset;
  int k;
  Point basepoint;
  Homotopy homotopy;
};
bool verify_categorical(const CategoricalWitness& w, const Image& x);
// Restriction of a witness to a smaller subset.
CategoricalWitness restrict_witness(const CategoricalWitness& w, const Image& v);

// A rule proving U is not subdivision-categorical in X for any k.
struct Obstruction {
  std::string name;
  std::function<std::optional<std::string>(const Image& u, const Image& x, int k_max)> check;
};

struct DiamondLowerBound {
  int k;
  Map loop;       // innermost loop I_{4k} -> S(D,k)
  Map projected;  // rho_k o loop
  long long winding;
};
DiamondLowerBound diamond_lower_bound(int k);
// U = X a translate of D.
Obstruction diamond_winding_obstruction();
std::vector<Obstruction> default_obstructions();

Verdict<CategoricalWitness> is_categorical(const Image& u, const Image& x, const SearchLimits& lim = {});
Verdict<CategoricalWitness> is_subdivision_categorical(const Image& u, const Image& x, int k_max,
                                                       const SearchLimits& lim = {},
                                                       const std::vector<Obstruction>& obstructions = default_obstructions());

struct CategoricalCover {
  Image space;
  std::vector<CategoricalWitness> members;
};
bool verify_cover(const CategoricalCover& c);

struct DcatOptions {
  int k_max = 4;
  SearchLimits search;
  std::optional<std::vector<Image>> candidates;
  std::size_t exact_cover_limit = 12;
  std::vector<Obstruction> obstructions = default_obstructions();
};

struct DcatReport {
  Outcome outcome = Outcome::unknown;
  int lower = 0;
  std::optional<int> upper;
  std::optional<CategoricalCover> cover;
  std::vector<std::string> lower_certificates;
  BoundsUsed bounds;
};

// Singletons, complements of singletons and axis half-space slices; every
// nonempty subset when |X| <= exact_cover_limit.
std::vector<Image> default_candidate_family(const Image& x, std::size_t exact_cover_limit);
DcatReport dcat(const Image& x, const DcatOptions& opt = {});

// sigma: S(U,k) -> based paths of length N at x0 with ev_N o sigma = i o rho_k.
struct Section {
  Image subset;
  int k;
  int length;
  Point basepoint;
  std::vector<Map> paths;  // one per point of S(U,k)
};
bool verify_section(const Section& s, const Image& x);
Verdict<Section> section_check(const Image& u, const Image& x, int k, int n, const Point& x0,
                               std::uint64_t cap = default_map_cap());
Section section_from_witness(const CategoricalWitness& w);
CategoricalWitness witness_from_section(const Section& s, const Image& x);

}  // namespace digitop
