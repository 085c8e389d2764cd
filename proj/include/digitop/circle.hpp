#pragma once

#include <optional>
#include <string>
#include <vector>

#include "digitop/homotopy.hpp"

namespace digitop {

Image diamond();
// The 8-point circle of radius 2.
Image circle8();
// Vertices +-e_i of the cross-polytope in Z^{n+1}.
Image sphere(int n);

// p(n): n mod 4 -> (1,0), (0,1), (-1,0), (0,-1).
Point cover_point(long long n);
// Inverse of p on D, in 0..3. Throws for points outside D.
int diamond_index(const Point& x);
// Step in {-1,0,1} between adjacent points of D.
int diamond_step(const Point& from, const Point& to);

// Lift rows into the window [-window, window] of Z. A path lift has one row;
// a homotopy lift has rows[t] lifting H(-,t).
struct LiftCertificate {
  std::vector<std::vector<long long>> rows;
  long long window = 0;

  const std::vector<long long>& path() const { return rows.front(); }
  long long start() const { return rows.front().front(); }
  // The lifted path as a map I_N -> [-window, window].
  Map path_map() const;
};

// Points of alpha as D-indices; throws unless alpha is a continuous path into D.
std::vector<Point> diamond_path_points(const Map& alpha);

LiftCertificate lift_path(const Map& alpha, long long start);
bool verify_path_lift(const Map& alpha, const LiftCertificate& lift);
// Every continuous lift of alpha starting at start, by brute force over the window.
std::vector<std::vector<long long>> enumerate_path_lifts(const Map& alpha, long long start, std::size_t cap = 16);

// Raw difference lift(N) - lift(0), a multiple of 4.
long long winding_number(const Map& loop);
long long winding_index(const Map& loop);
bool is_diamond_loop(const Map& loop);

// h: I_N x I_M -> D with s first and t second. initial lifts h(-,0).
LiftCertificate lift_homotopy(const Map& h, const LiftCertificate& initial);
bool verify_homotopy_lift(const Map& h, const LiftCertificate& lift);

struct WindingObstruction {
  long long winding_f;
  long long winding_g;
  std::string str() const;
};
std::optional<WindingObstruction> winding_obstruction(const Map& f, const Map& g);
// homotopic, answering No immediately when the loops wind differently.
Verdict<Homotopy> homotopic_loops(const Map& f, const Map& g, const SearchLimits& lim = {});

}  // namespace digitop
