#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace digitop {

enum class Outcome { yes, no, unknown };

const char* to_string(Outcome o);

// Named caps and counters a search actually used.
struct BoundsUsed {
  std::vector<std::pair<std::string, std::int64_t>> entries;

  void set(const std::string& key, std::int64_t value) {
    for (auto& e : entries)
      if (e.first == key) {
        e.second = value;
        return;
      }
    entries.emplace_back(key, value);
  }
  std::optional<std::int64_t> get(const std::string& key) const {
    for (const auto& e : entries)
      if (e.first == key) return e.second;
    return std::nullopt;
  }
};

template <class W>
struct Verdict {
  Outcome outcome = Outcome::unknown;
  std::optional<W> witness;
  std::string obstruction;
  BoundsUsed bounds;

  bool yes() const { return outcome == Outcome::yes; }
  bool no() const { return outcome == Outcome::no; }
  bool unknown() const { return outcome == Outcome::unknown; }

  static Verdict make_yes(W w, BoundsUsed b = {}) { return {Outcome::yes, std::move(w), {}, std::move(b)}; }
  static Verdict make_no(std::string why, BoundsUsed b = {}) { return {Outcome::no, std::nullopt, std::move(why), std::move(b)}; }
  static Verdict make_unknown(std::string why, BoundsUsed b = {}) {
    return {Outcome::unknown, std::nullopt, std::move(why), std::move(b)};
  }
};

}  // namespace digitop
