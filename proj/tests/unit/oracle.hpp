#pragma once

// Brute-force reference computations that share no code with the library.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <vector>

#include "digitop/lattice.hpp"

namespace oracle {

using Pt = std::vector<int>;

inline bool cheb_adjacent(const Pt& a, const Pt& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1) return false;
  return true;
}

inline std::vector<Pt> points(const digitop::Image& x) {
  std::vector<Pt> out;
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x.point(i).vec());
  return out;
}

inline bool continuous(const std::vector<Pt>& dom, const std::vector<Pt>& cod, const std::vector<std::size_t>& f) {
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = i + 1; j < dom.size(); ++j)
      if (cheb_adjacent(dom[i], dom[j]) && !cheb_adjacent(cod[f[i]], cod[f[j]])) return false;
  return true;
}

// Visit every function dom -> cod as an index vector.
inline void all_functions(std::size_t n, std::size_t m, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> f(n, 0);
  while (true) {
    fn(f);
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) return;
  }
}

inline std::uint64_t count_continuous(const digitop::Image& x, const digitop::Image& y) {
  auto dom = points(x), cod = points(y);
  std::uint64_t n = 0;
  all_functions(dom.size(), cod.size(), [&](const auto& f) { n += continuous(dom, cod, f); });
  return n;
}

inline bool is_connected(const std::vector<Pt>& pts) {
  std::vector<bool> seen(pts.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (!seen[j] && cheb_adjacent(pts[i], pts[j])) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  for (bool s : seen)
    if (!s) return false;
  return true;
}

}  // namespace oracle
