#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "digitop/io.hpp"

namespace digitop {

struct CriterionResult {
  int id;
  std::string name;
  std::string module;
  bool pass = false;
  std::int64_t elapsed_ms = 0;
  std::int64_t limit_ms = 0;
  std::string detail;
};

// all, or one of lattice, maps, subdivision, funcspace, homotopy, cofib, circle, lscat.
std::vector<std::string> suite_scopes();
std::vector<CriterionResult> run_suite(const std::string& scope,
                                       const std::function<void(const CriterionResult&)>& on_result = {});
Json suite_to_json(const std::vector<CriterionResult>& results);

}  // namespace digitop
