#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orelclm/lclm.hpp"

namespace orelclm {

/// Unrecognized algorithm tag.
class UnknownAlgorithm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LclmOptions {
  int heuristic_trials = 3;
  std::uint64_t seed = 1;
};

/// Base tags: new, heffter, euclid, ext-euclid, li, vanhoeij, heuristic.
/// Combinators: dac:<base>, iter:<base>.
const std::vector<std::string>& base_algorithm_tags();
bool is_known_algorithm(std::string_view tag);

/// LCLM with the algorithm named by tag.  The two-operator methods applied to
/// k > 2 operators go through divide and conquer.  Throws UnknownAlgorithm.
LclmResult compute_lclm(std::span<const OreOperator> ops, std::string_view tag, const LclmOptions& opt = {});

}  // namespace orelclm
