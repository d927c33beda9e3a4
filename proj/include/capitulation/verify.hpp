#pragma once

#include <string>
#include <vector>

#include "capitulation/presentation.hpp"

namespace capitulation::verify {

inline constexpr int kMinMaxN = 4;
inline constexpr int kMaxMaxN = 9;

struct Instance {
  Presentation presentation;  ///< carries the catalog tag
  std::size_t expected_order = 0;
};

/// One (theorem, instance) result.
struct Outcome {
  std::string theorem;   ///< e.g. "Thm 004.2", "Remark JNT2"
  std::string instance;  ///< e.g. "Gm(4,7)"
  bool pass = false;
  std::string detail;    ///< filled on failure
};

/// Catalog groups of order <= 2^max_n, sorted by family name then
/// parameters. An empty filter selects every family. Throws
/// InvalidArgument on max_n outside [4, 9] or an unknown family.
std::vector<Instance> instances(int max_n, const std::vector<std::string>& families = {});

/// Every applicable check on one group, in a fixed order.
std::vector<Outcome> check(const Instance& inst);

/// check() over instances(max_n, families), concatenated in instance order.
std::vector<Outcome> run(int max_n, const std::vector<std::string>& families = {});

/// "Thm 004.2 / Gm(4,7): pass", failures followed by the detail.
std::string format(const Outcome& o);

}  // namespace capitulation::verify
