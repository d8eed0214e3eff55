#include "orelclm/algorithms.hpp"

#include <algorithm>

#include "orelclm/clm.hpp"

namespace orelclm {
namespace {

bool is_base(std::string_view tag) {
  const auto& tags = base_algorithm_tags();
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

bool is_two_ary(std::string_view tag) {
  return tag == "heffter" || tag == "euclid" || tag == "ext-euclid" || tag == "li";
}

PairwiseLclm pairwise_for(std::string_view tag, const LclmOptions& opt) {
  const std::string t(tag);
  return [t, opt](const OreOperator& a, const OreOperator& b) {
    const OreOperator pair[] = {a, b};
    return compute_lclm(pair, t, opt);
  };
}

}  // namespace

const std::vector<std::string>& base_algorithm_tags() {
  static const std::vector<std::string> tags{"new", "heffter", "euclid", "ext-euclid", "li", "vanhoeij", "heuristic"};
  return tags;
}

bool is_known_algorithm(std::string_view tag) {
  if (is_base(tag)) return true;
  for (std::string_view prefix : {"dac:", "iter:"})
    if (tag.starts_with(prefix)) return is_base(tag.substr(prefix.size()));
  return false;
}

LclmResult compute_lclm(std::span<const OreOperator> ops, std::string_view tag, const LclmOptions& opt) {
  if (!is_known_algorithm(tag)) throw UnknownAlgorithm("unknown algorithm '" + std::string(tag) + "'");
  const std::string name(tag);

  for (auto [prefix, strategy] : {std::pair{std::string_view("dac:"), CombineStrategy::DivideAndConquer},
                                  std::pair{std::string_view("iter:"), CombineStrategy::Iterative}})
    if (tag.starts_with(prefix))
      return lclm_pairwise_combine(ops, pairwise_for(tag.substr(prefix.size()), opt), strategy, name);

  if (is_two_ary(tag) && ops.size() != 2)
    return lclm_pairwise_combine(ops, pairwise_for(tag, opt), CombineStrategy::DivideAndConquer, name);

  LclmResult r;
  if (tag == "new") r = lclm_new(ops);
  else if (tag == "vanhoeij") r = lclm_van_hoeij(ops);
  else if (tag == "heuristic") r = heuristic_lclm(ops, opt.heuristic_trials, opt.seed);
  else if (tag == "heffter") r = lclm_heffter(ops[0], ops[1]);
  else if (tag == "euclid") r = lclm_euclid(ops[0], ops[1]);
  else if (tag == "ext-euclid") r = lclm_extended_euclid(ops[0], ops[1]);
  else r = lclm_li(ops[0], ops[1]);
  r.algorithm = name;
  return r;
}

}  // namespace orelclm
