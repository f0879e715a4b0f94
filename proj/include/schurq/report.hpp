#pragma once

#include <string>

#include "json.hpp"

namespace schurq {

// Outcome record of one verification case. Failure is data, not an
// exception: checkers return reports with witnesses so suites can
// aggregate. The witness is present when the check fails (carrying the
// offending coefficient, partition, or index) and for reproduce-style
// checks that always carry the computed object.
struct CheckReport {
  std::string suite_id;
  nlohmann::json params = nlohmann::json::object();
  bool passed = false;
  nlohmann::json witness;  // null when absent

  nlohmann::json to_json() const {
    return {{"suite", suite_id},
            {"params", params},
            {"passed", passed},
            {"witness", witness}};
  }
  std::string to_line() const { return to_json().dump(); }
};

inline CheckReport make_pass(std::string suite, nlohmann::json params,
                             nlohmann::json witness = nullptr) {
  return CheckReport{std::move(suite), std::move(params), true,
                     std::move(witness)};
}

inline CheckReport make_fail(std::string suite, nlohmann::json params,
                             nlohmann::json witness) {
  return CheckReport{std::move(suite), std::move(params), false,
                     std::move(witness)};
}

}  // namespace schurq
