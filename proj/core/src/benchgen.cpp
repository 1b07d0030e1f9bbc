#include "alcfit/benchgen.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "alcfit/error.hpp"

namespace alcfit {

namespace {

std::string id(const std::string& base, int i) { return base + "_" + std::to_string(i); }
std::string id(const std::string& base, int j, int i) { return base + "_" + std::to_string(j) + "_" + std::to_string(i); }

// J' of the reduction: one r-path b_{j,0..n} per set with s-detours through b'_{j,i}
// for i outside S_j, plus the sink c.
void add_set_paths(InterpretationBuilder& b, const std::vector<std::set<int>>& sets, int n) {
  const int m = static_cast<int>(sets.size());
  for (int j = 1; j <= m; ++j)
    for (int i = 0; i <= n; ++i) b.add_element(id("b", j, i));
  for (int j = 1; j <= m; ++j)
    for (int i = 0; i <= n; ++i)
      if (!sets[static_cast<std::size_t>(j - 1)].contains(i)) b.add_element(id("b", j, i) + "'");
  b.add_element("c");

  for (int j = 1; j <= m; ++j) b.add_concept_fact("A", id("b", j, n));

  b.add_role_fact("r", "c", "c");
  b.add_role_fact("s", "c", "c");
  for (int j = 1; j <= m; ++j) {
    const auto& sj = sets[static_cast<std::size_t>(j - 1)];
    for (int i = 1; i <= n; ++i) {
      b.add_role_fact("r", id("b", j, i - 1), id("b", j, i));
      if (!sj.contains(i)) {
        b.add_role_fact("r", id("b", j, i) + "'", "c");
        b.add_role_fact("s", id("b", j, i - 1), id("b", j, i) + "'");
        b.add_role_fact("s", id("b", j, i) + "'", id("b", j, i));
      } else {
        b.add_role_fact("s", id("b", j, i - 1), "c");
      }
    }
    b.add_role_fact("r", id("b", j, n), "c");
    b.add_role_fact("s", id("b", j, n), "c");
  }
}

std::string join_sets(const std::vector<std::vector<int>>& sets) {
  std::string out;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    if (j) out += ";";
    for (std::size_t i = 0; i < sets[j].size(); ++i) out += (i ? "," : "") + std::to_string(sets[j][i]);
  }
  return out;
}

class Coin {
public:
  explicit Coin(unsigned seed) : rng_(seed) {}
  // Platform-independent Bernoulli draw from raw 32-bit engine output.
  bool flip(double p) {
    const auto threshold = static_cast<std::uint64_t>(std::clamp(p, 0.0, 1.0) * 4294967296.0);
    return static_cast<std::uint64_t>(rng_()) < threshold;
  }
  std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(rng_() % n); }
  std::mt19937& engine() { return rng_; }

private:
  std::mt19937 rng_;
};

std::string word_of(int bits, int n) {
  std::string w;
  for (int p = n - 1; p >= 0; --p) w += ((bits >> p) & 1) ? 's' : 'r';
  return w;
}

// A path a -> p_1 -> ... -> p_n labeled by `w`; returns the builder for further edits.
void add_word_path(InterpretationBuilder& b, const std::string& w) {
  std::string prev = "a";
  b.add_element(prev);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::string next = id("p", static_cast<int>(i) + 1);
    b.add_role_fact(std::string(1, w[i]), prev, next);
    prev = next;
  }
}

}  // namespace

std::vector<std::vector<int>> parse_set_family(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ';');) {
    std::vector<int> set;
    std::stringstream ps(part);
    for (std::string num; std::getline(ps, num, ',');) {
      num.erase(std::remove_if(num.begin(), num.end(), ::isspace), num.end());
      if (num.empty()) continue;
      try {
        std::size_t used = 0;
        set.push_back(std::stoi(num, &used));
        if (used != num.size()) throw std::invalid_argument(num);
      } catch (const std::exception&) {
        throw ConfigError("bad set element '" + num + "'");
      }
    }
    out.push_back(std::move(set));
  }
  return out;
}

GeneratedSample gen_hitting_set_instance(const std::vector<std::vector<int>>& sets, int k) {
  if (sets.empty()) throw ConfigError("set family is empty");
  if (k < 1) throw ConfigError("hitting set bound must be at least 1");
  std::vector<std::set<int>> s;
  std::set<int> all;
  for (const auto& set : sets) {
    for (int e : set)
      if (e < 1) throw ConfigError("set elements must be positive integers");
    s.emplace_back(set.begin(), set.end());
    all.insert(set.begin(), set.end());
  }
  const int n = all.empty() ? 0 : *all.rbegin();
  if (static_cast<int>(all.size()) != n || n == 0) throw ConfigError("sets must cover exactly {1..n}");
  const int m = static_cast<int>(sets.size());

  InterpretationBuilder bi;
  bi.add_element("a");
  for (int i = 0; i <= n; ++i) bi.add_element(id("a", i));
  for (int i = 0; i <= n; ++i) bi.add_element(id("a", i) + "'");
  add_set_paths(bi, s, n);
  bi.add_concept_fact("A", id("a", n));
  bi.add_role_fact("r", "a", id("a", 0));
  for (int i = 1; i <= n; ++i) {
    bi.add_role_fact("r", id("a", i - 1), id("a", i));
    bi.add_role_fact("r", id("a", i) + "'", "c");
    bi.add_role_fact("s", id("a", i - 1), id("a", i) + "'");
    bi.add_role_fact("s", id("a", i) + "'", id("a", i));
  }
  for (int j = 1; j <= m; ++j) bi.add_role_fact("r", "a", id("b", j, 0));
  bi.add_role_fact("r", id("a", n), "c");
  bi.add_role_fact("s", id("a", n), "c");

  InterpretationBuilder bj;
  bj.add_element("b");
  add_set_paths(bj, s, n);
  for (int j = 1; j <= m; ++j) bj.add_role_fact("r", "b", id("b", j, 0));

  const Interpretation I = bi.build();
  const Interpretation J = bj.build();
  auto [merged, offsets] = disjoint_union({I, J});
  GeneratedSample out{Sample(std::move(merged), {offsets[0] + *I.index_of("a")}, {offsets[1] + *J.index_of("b")}), {}};
  out.meta["generator"] = "hitting-set";
  out.meta["n"] = std::to_string(n);
  out.meta["m"] = std::to_string(m);
  out.meta["k"] = std::to_string(k);
  out.meta["k_prime"] = std::to_string(k + n + 2);
  out.meta["sets"] = join_sets(sets);
  out.meta["domain_I"] = std::to_string(I.domain_size());
  out.meta["domain_J"] = std::to_string(J.domain_size());
  return out;
}

GeneratedSample gen_depth_family(int n, bool one_per_word, unsigned seed) {
  if (n < 1) throw ConfigError("depth family needs n >= 1");
  if (n > 16) throw ConfigError("depth family limited to n <= 16");
  Coin coin(seed);
  std::vector<Interpretation> parts;
  std::vector<bool> positive;
  for (int bits = 0; bits < (1 << n); ++bits) {
    const std::string w = word_of(bits, n);
    bool with_pos = true, with_neg = true;
    if (one_per_word) {
      with_pos = coin.flip(0.5);
      with_neg = !with_pos;
    }
    if (with_pos) {
      InterpretationBuilder b;
      add_word_path(b, w);
      std::string prev = "a";
      for (int i = 1; i <= n + 1; ++i) {
        b.add_role_fact("t", prev, id("q", i));
        prev = id("q", i);
      }
      parts.push_back(b.build());
      positive.push_back(true);
    }
    if (with_neg) {
      InterpretationBuilder b;
      add_word_path(b, w);
      parts.push_back(b.build());
      positive.push_back(false);
    }
  }
  auto [merged, offsets] = disjoint_union(parts);
  std::vector<int> pos, neg;
  for (std::size_t p = 0; p < parts.size(); ++p)
    (positive[p] ? pos : neg).push_back(offsets[p] + *parts[p].index_of("a"));
  GeneratedSample out{Sample(std::move(merged), std::move(pos), std::move(neg)), {}};
  std::string target = "top";
  for (int i = 0; i <= n; ++i) target = "exists t." + target;
  out.meta["generator"] = "depth";
  out.meta["n"] = std::to_string(n);
  out.meta["target"] = target;
  out.meta["one_per_word"] = one_per_word ? "true" : "false";
  return out;
}

GeneratedSample gen_mostgeneral_family(int n, const std::vector<bool>& include_word) {
  if (n < 2) throw ConfigError("most-general family needs n >= 2");
  if (n > 16) throw ConfigError("most-general family limited to n <= 16");
  const int words = 1 << n;
  if (!include_word.empty() && static_cast<int>(include_word.size()) != words)
    throw ConfigError("word selection must have 2^n entries");

  InterpretationBuilder bi;
  for (int i = 1; i <= n; ++i) bi.add_element(id("a", i));
  bi.add_concept_fact("A", id("a", 1));
  bi.add_concept_fact("A", id("a", n));
  for (int i = 1; i < n; ++i) {
    bi.add_role_fact("r", id("a", i), id("a", i + 1));
    bi.add_role_fact("s", id("a", i), id("a", i + 1));
  }

  InterpretationBuilder bj;
  for (int i = 1; i <= n + 1; ++i) bj.add_element(id("b", i));
  for (int i = 2; i <= n - 1; ++i) bj.add_concept_fact("A", id("b", i));
  bj.add_concept_fact("A", id("b", n + 1));
  for (int i = 1; i <= n; ++i) {
    bj.add_role_fact("r", id("b", i), id("b", i + 1));
    bj.add_role_fact("s", id("b", i), id("b", i + 1));
  }
  bj.add_role_fact("r", id("b", n + 1), id("b", n + 1));
  bj.add_role_fact("s", id("b", n + 1), id("b", n + 1));

  std::vector<Interpretation> parts{bi.build(), bj.build()};
  std::vector<std::string> roots{id("a", 1), id("b", 1)};
  int included = 0;
  for (int bits = 0; bits < words; ++bits) {
    if (!include_word.empty() && !include_word[static_cast<std::size_t>(bits)]) continue;
    InterpretationBuilder b;
    add_word_path(b, word_of(bits, n));
    b.add_concept_fact("A", id("p", n));
    parts.push_back(b.build());
    roots.push_back("a");
    ++included;
  }
  auto [merged, offsets] = disjoint_union(parts);
  std::vector<int> pos{offsets[0] + *parts[0].index_of(roots[0])};
  std::vector<int> neg;
  for (std::size_t p = 1; p < parts.size(); ++p) neg.push_back(offsets[p] + *parts[p].index_of(roots[p]));
  GeneratedSample out{Sample(std::move(merged), std::move(pos), std::move(neg)), {}};
  out.meta["generator"] = "mostgeneral";
  out.meta["n"] = std::to_string(n);
  out.meta["target"] = "A";
  out.meta["words_included"] = std::to_string(included);
  return out;
}

std::string generated_concept_name(int index) {
  const std::string base(1, static_cast<char>('A' + index % 26));
  return index < 26 ? base : base + std::to_string(index / 26);
}

std::string generated_role_name(int index) {
  static const char* names[] = {"r", "s", "t", "u", "v", "w"};
  const std::string base = names[index % 6];
  return index < 6 ? base : base + std::to_string(index / 6);
}

GeneratedSample gen_random(const RandomSampleParams& p) {
  if (p.num_elements < 1) throw ConfigError("random sample needs at least one element");
  if (p.num_concept_names < 0 || p.num_role_names < 0) throw ConfigError("name counts must be non-negative");
  if (p.num_pos < 0 || p.num_neg < 0 || p.num_pos + p.num_neg > p.num_elements)
    throw ConfigError("positive and negative examples do not fit in the domain");
  if (p.edge_density < 0 || p.edge_density > 1 || p.concept_density < 0 || p.concept_density > 1)
    throw ConfigError("densities must lie in [0,1]");

  Coin coin(p.seed);
  InterpretationBuilder b;
  for (int e = 0; e < p.num_elements; ++e) b.add_element(id("e", e));
  for (int c = 0; c < p.num_concept_names; ++c)
    for (int e = 0; e < p.num_elements; ++e)
      if (coin.flip(p.concept_density)) b.add_concept_fact(generated_concept_name(c), id("e", e));
  for (int r = 0; r < p.num_role_names; ++r)
    for (int e = 0; e < p.num_elements; ++e)
      for (int f = 0; f < p.num_elements; ++f)
        if (coin.flip(p.edge_density)) b.add_role_fact(generated_role_name(r), id("e", e), id("e", f));

  std::vector<int> order(static_cast<std::size_t>(p.num_elements));
  std::iota(order.begin(), order.end(), 0);
  for (int i = p.num_elements - 1; i > 0; --i)
    std::swap(order[static_cast<std::size_t>(i)], order[coin.below(static_cast<std::uint32_t>(i) + 1)]);
  std::vector<int> pos(order.begin(), order.begin() + p.num_pos);
  std::vector<int> neg(order.begin() + p.num_pos, order.begin() + p.num_pos + p.num_neg);

  GeneratedSample out{Sample(b.build(), std::move(pos), std::move(neg)), {}};
  out.meta["generator"] = "random";
  out.meta["seed"] = std::to_string(p.seed);
  out.meta["elements"] = std::to_string(p.num_elements);
  out.meta["concept_names"] = std::to_string(p.num_concept_names);
  out.meta["role_names"] = std::to_string(p.num_role_names);
  return out;
}

GeneratedSample gen_type_stand_in(int num_elements, int num_names, int num_types, unsigned seed) {
  if (num_types < 1 || num_elements < num_types) throw ConfigError("need at least one element per type");
  const int coded = num_types > 1 ? std::bit_width(static_cast<unsigned>(num_types - 1)) : 0;
  if (num_names < coded || (num_types == 1 && num_names > 0))
    throw ConfigError("cannot realize that many types with that many names");

  // Type 0 is empty. Type t > 0 carries the binary code of t on the first
  // names (distinct types) and a round-robin share of the remaining names.
  std::vector<std::vector<int>> types(static_cast<std::size_t>(num_types));
  for (int t = 1; t < num_types; ++t)
    for (int bit = 0; bit < coded; ++bit)
      if ((t >> bit) & 1) types[static_cast<std::size_t>(t)].push_back(bit);
  for (int c = coded; c < num_names; ++c) types[static_cast<std::size_t>(1 + (c - coded) % (num_types - 1))].push_back(c);

  Coin coin(seed);
  InterpretationBuilder b;
  for (int e = 0; e < num_elements; ++e) {
    const int t = e < num_types ? e : static_cast<int>(coin.below(static_cast<std::uint32_t>(num_types)));
    const std::string name = id("e", e);
    b.add_element(name);
    for (int c : types[static_cast<std::size_t>(t)]) b.add_concept_fact(generated_concept_name(c), name);
  }
  GeneratedSample out{Sample(b.build(), {}, {}), {}};
  out.meta["generator"] = "types";
  out.meta["elements"] = std::to_string(num_elements);
  out.meta["concept_names"] = std::to_string(num_names);
  out.meta["types"] = std::to_string(num_types);
  return out;
}

std::string meta_json(const std::map<std::string, std::string>& meta) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : meta) {
    const bool numeric = !v.empty() && std::all_of(v.begin(), v.end(), ::isdigit);
    if (numeric) j[k] = std::stoll(v);
    else j[k] = v;
  }
  return j.dump(2) + "\n";
}

std::filesystem::path write_generated(const GeneratedSample& gen, const std::filesystem::path& dir,
                                      const std::string& stem) {
  const auto manifest = save_sample(gen.sample, dir, stem);
  write_text_file(dir / (stem + ".meta.json"), meta_json(gen.meta));
  return manifest;
}

}  // namespace alcfit
