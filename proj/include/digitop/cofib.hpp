#pragma once

#include <optional>
#include <string>

#include "digitop/funcspace.hpp"
#include "digitop/verdict.hpp"

namespace digitop {

// S(X,k) x S(I_N, l*m), time coordinate last.
Image retraction_domain(const Image& x, int n, int k, int lm);
// X x {0} u A x S(I_N, l) inside Z^{dim+1}.
Image retraction_target(const Image& x, const Image& a, int n, int l);

struct RetractionWitness {
  Image space;  // X
  Image sub;    // A
  int time_length;  // N
  int k, l, m;
  Map r;
  std::optional<int> p;  // exponent with k = 2^p, when chosen by rule
};

struct RetractionCheck {
  bool signature = false;
  bool continuous = false;
  bool triangle = false;
  std::string detail;
  bool ok() const { return signature && continuous && triangle; }
};
RetractionCheck check_retraction(const RetractionWitness& w);
bool verify_retraction(const RetractionWitness& w);

RetractionWitness retraction_origin_interval(int m, int n);
// Smallest p >= 2 admitted by retraction_both_endpoints.
int endpoints_exponent(int m, int n);
RetractionWitness retraction_both_endpoints(int m, int n);
// The composite rho_{2^{p-1}} o R_K with a two-column fixed strip, p from
// 4N+3 <= (M+1) 2^{p-2} - 1. Returned unverified.
RetractionWitness literal_endpoints_composite(int m, int n);
// rho_k x R for id_Z x j. Verification is optional because it dominates the cost.
RetractionWitness product_with_cofibration(const RetractionWitness& w, const Image& z, bool verify = true);

// phi on X x {0} u A x S(I_N,l) from H: A x I_N -> Y and f: X -> Y.
Map pushout_filler(const Image& a, const Image& x, const Map& h, const Map& f, int l);

struct HepProblem {
  Image sub;    // A
  Image space;  // X
  Map h;        // A x I_N -> Y, left form of the right homotopy
  Map f;        // X -> Y
  int time_length() const;
};

// Left-form filler with its subdivision factors.
struct FillerWitness {
  Map filler;
  int k;
  int time_factor;
  std::optional<int> p;
};

FillerWitness hep_filler(const HepProblem& prob, const RetractionWitness& w);
bool verify_hep_filler(const HepProblem& prob, const FillerWitness& w);

// Fillers S(X,k) x S(I_N,l) -> Y at one (k,l).
Verdict<FillerWitness> filler_search_at(const HepProblem& prob, int k, int l, std::uint64_t cap = default_map_cap());
// All fillers for 1 <= k <= k_max, 1 <= l <= l_max.
Verdict<FillerWitness> exhaustive_filler_search(const HepProblem& prob, int k_max, int l_max,
                                                std::uint64_t cap = default_map_cap());
// Candidate fillers of the pushout square at one l.
struct PushoutCount {
  std::uint64_t count = 0;
  bool overflow = false;
  std::optional<Map> first;
};
PushoutCount count_pushout_fillers(const Image& a, const Image& x, const Map& h, const Map& f, int l,
                                   std::uint64_t cap = default_map_cap());
Verdict<Map> exhaustive_pushout_search(const Image& a, const Image& x, const Map& h, const Map& f, int l_max,
                                       std::uint64_t cap = default_map_cap());

struct BorsukProblem {
  Image z;
  Image space;  // X
  Image sub;    // A
  Map f;        // Z x X -> Y
  Map h;        // Z x I_M x A -> Y
  int time_length() const;
};
// Filler on S(Z,k) x S(I_M,L) x S(X,k) -> Y.
FillerWitness borsuk_filler(const BorsukProblem& prob, const RetractionWitness& w);
bool verify_borsuk_filler(const BorsukProblem& prob, const FillerWitness& w);

// f: Z x I_N -> Y (paths), h: Z x I_M -> Y.
FillerWitness path_fibration_lift(const Image& z, const Map& f, const Map& h);
bool verify_path_lift(const Image& z, const Map& f, const Map& h, const FillerWitness& w);
// h: Z x I_M -> Y x Y.
FillerWitness endpoints_fibration_lift(const Image& z, const Map& f, const Map& h);
bool verify_endpoints_lift(const Image& z, const Map& f, const Map& h, const FillerWitness& w);
// f based at y0, h: Z x I_M -> Y lifting ev_N.
FillerWitness based_path_fibration_lift(const Image& z, const Map& f, const Map& h, const Point& y0);
bool verify_based_lift(const Image& z, const Map& f, const Map& h, const Point& y0, const FillerWitness& w);

}  // namespace digitop
