#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace cofmat::verify {

struct SuiteOutcome {
  bool pass = true;
  nlohmann::json results = nlohmann::json::object();
  nlohmann::json counterexamples = nlohmann::json::array();
  nlohmann::json certificates = nlohmann::json::object();
};

const std::vector<std::string>& suite_names();
std::size_t default_trials(const std::string& suite);

/// Runs one named suite. Throws std::invalid_argument for an unknown name.
SuiteOutcome run_suite(const std::string& suite, std::size_t trials, std::uint64_t seed);

}  // namespace cofmat::verify
