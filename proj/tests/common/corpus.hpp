#pragma once

// Shared fixtures for the unit tests and the acceptance suite.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "alcfit/benchgen.hpp"
#include "alcfit/encoder.hpp"
#include "alcfit/sample.hpp"
#include "alcfit/solver.hpp"

namespace alcfit::testing {

/// Seeded random samples with at most 6 elements, 2 concept names and 2 role names.
inline std::vector<Sample> random_corpus(int count = 200, unsigned seed = 2024) {
  std::mt19937 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const std::array<double, 5> densities{0.1, 0.2, 0.3, 0.5, 0.8};
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    RandomSampleParams p;
    p.num_elements = pick(2, 6);
    p.num_concept_names = pick(1, 2);
    p.num_role_names = pick(1, 2);
    p.edge_density = densities[static_cast<std::size_t>(pick(0, 4))];
    p.concept_density = densities[static_cast<std::size_t>(pick(1, 3))];
    p.num_pos = pick(1, std::min(2, p.num_elements - 1));
    p.num_neg = pick(1, std::min(2, p.num_elements - p.num_pos));
    p.seed = static_cast<unsigned>(rng());
    out.push_back(gen_random(p).sample);
  }
  return out;
}

/// The 24 fragments that contain exists or forall.
inline std::vector<OperatorSet> quantifier_fragments() {
  std::vector<OperatorSet> out;
  for (unsigned bits = 0; bits < 32; ++bits) {
    auto ops = OperatorSet::from_bits(static_cast<std::uint8_t>(bits));
    if (ops.contains(Op::exists) || ops.contains(Op::forall)) out.push_back(ops);
  }
  return out;
}

inline EncodingOptions exact_size_options(bool typed = true, bool templates = true) {
  EncodingOptions o;
  o.typed = typed;
  o.templates = templates;
  o.pattern_bans = false;
  return o;
}

inline SolveOutcome solve_cnf(const Cnf& cnf, unsigned seed = 0) {
  SolverConfig cfg;
  cfg.seed = seed;
  auto session = make_session(cfg);
  session->reserve_vars(cnf.num_vars());
  session->add_cnf(cnf);
  return session->solve();
}

/// Ordered trees with n nodes whose node arities lie in `allowed` (by recursion on the root).
inline std::int64_t count_trees(int n, const std::array<bool, 3>& allowed) {
  std::vector<std::int64_t> t(static_cast<std::size_t>(n + 1), 0);
  for (int m = 1; m <= n; ++m) {
    std::int64_t v = (allowed[0] && m == 1) ? 1 : 0;
    if (allowed[1]) v += t[static_cast<std::size_t>(m - 1)];
    if (allowed[2])
      for (int i = 1; i + 1 < m; ++i) v += t[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(m - 1 - i)];
    t[static_cast<std::size_t>(m)] = v;
  }
  return t[static_cast<std::size_t>(n)];
}

/// Size of a smallest hitting set, by trying every subset of {1..n}.
inline int min_hitting_set(const std::vector<std::vector<int>>& sets, int n) {
  int best = n + 1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool hits_all = true;
    for (const auto& s : sets) {
      bool hit = false;
      for (int e : s) hit = hit || ((mask >> (e - 1)) & 1u);
      hits_all = hits_all && hit;
    }
    if (hits_all) best = std::min(best, static_cast<int>(std::popcount(mask)));
  }
  return best;
}

}  // namespace alcfit::testing
