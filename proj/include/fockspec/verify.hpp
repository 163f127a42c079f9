#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fockspec/extremal.hpp"

namespace fockspec {

struct VerifyOptions {
  std::uint64_t seed = 0;
  int instances = 100;  // size of each random family
};

/// Names accepted by run_suite, excluding "all".
std::span<const std::string_view> suite_names();

/// Runs one named inequality suite (or "all"). Random families are folded
/// into a single report carrying the instance with the smallest margin.
/// Throws kDomain for an unknown suite name.
std::vector<CheckReport> run_suite(std::string_view suite, const VerifyOptions& options);

/// Folds a family of reports: the smallest-margin member, satisfied iff all are.
CheckReport worst_case(std::string name, std::span<const CheckReport> family);

}  // namespace fockspec
