#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "alcfit/sample.hpp"

namespace alcfit {

/// A generated sample with ground-truth annotations (target concept, sizes, parameters).
struct GeneratedSample {
  Sample sample;
  std::map<std::string, std::string> meta;
};

/// Hitting-set reduction: one positive (I, a) and one negative (J, b), merged
/// by disjoint union. The sets must cover exactly {1..n}.
/// `meta`: n, m, k, k_prime = k + n + 2, sets.
GeneratedSample gen_hitting_set_instance(const std::vector<std::vector<int>>& sets, int k);

/// Parses "1,3;2,4" into {{1,3},{2,4}}.
std::vector<std::vector<int>> parse_set_family(const std::string& text);

/// Paths over {r,s} of length n. For each word w the negative (I_w, a_w) is the
/// plain path and the positive (J_w, a_w) adds a t-path of length n+1.
/// With `one_per_word`, each word contributes only one of its two examples,
/// chosen by `seed`. `meta`: target = exists t^(n+1).top.
GeneratedSample gen_depth_family(int n, bool one_per_word = false, unsigned seed = 0);

/// Positive (I, a_1) on a doubled r/s chain with A at both ends, negative
/// (J, b_1) on a chain ending in a self-loop element, plus the negatives
/// (I_w, a_w) for the words selected by `include_word` (indexed by w read as
/// a binary number with r = 0, first letter most significant; empty = all).
/// `meta`: target = A.
GeneratedSample gen_mostgeneral_family(int n, const std::vector<bool>& include_word = {});

struct RandomSampleParams {
  int num_elements = 6;
  int num_concept_names = 2;
  int num_role_names = 2;
  double edge_density = 0.3;
  /// Probability that an element belongs to a concept name.
  double concept_density = 0.5;
  int num_pos = 2;
  int num_neg = 2;
  unsigned seed = 0;
};

/// Seeded random interpretation with disjoint random P and N.
/// Throws ConfigError if P and N do not fit in the domain.
GeneratedSample gen_random(const RandomSampleParams& params);

/// Interpretation with exactly `num_names` concept names occurring in exactly
/// `num_types` distinct element types; no role facts. P and N are empty.
GeneratedSample gen_type_stand_in(int num_elements, int num_names, int num_types, unsigned seed = 0);

/// Concept and role names used by the random generators, in order.
std::string generated_concept_name(int index);
std::string generated_role_name(int index);

/// Writes `<stem>.facts`, `<stem>.manifest` and `<stem>.meta.json`; returns the manifest path.
std::filesystem::path write_generated(const GeneratedSample& gen, const std::filesystem::path& dir,
                                      const std::string& stem);

std::string meta_json(const std::map<std::string, std::string>& meta);

}  // namespace alcfit
