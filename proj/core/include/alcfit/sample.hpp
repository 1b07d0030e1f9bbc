#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "alcfit/interpretation.hpp"

namespace alcfit {

/// Positive and negative examples over one shared interpretation.
class Sample {
public:
  /// Throws DataError if an index is out of range or P and N intersect.
  Sample(Interpretation interp, std::vector<int> positives, std::vector<int> negatives);

  const Interpretation& interpretation() const { return interp_; }
  const std::vector<int>& positives() const { return positives_; }
  const std::vector<int>& negatives() const { return negatives_; }
  std::size_t example_count() const { return positives_.size() + negatives_.size(); }

private:
  Interpretation interp_;
  std::vector<int> positives_;
  std::vector<int> negatives_;
};

/// Size of the example (I, a): number of facts of I plus one.
std::size_t example_size(const Interpretation& interp);

// -- Fact files --------------------------------------------------------------
//
// One item per line: `A(e)` concept fact, `r(e,f)` role fact, `element e`
// domain declaration. `#` starts a comment; blank lines are ignored.

Interpretation load_facts(std::string_view text);
Interpretation load_facts_file(const std::filesystem::path& path);
/// Canonical order: element declarations for isolated elements, then concept
/// facts sorted, then role facts sorted.
std::string save_facts(const Interpretation& interp);

// -- Sample manifests --------------------------------------------------------
//
//   facts = <path>          starts a block; relative to the manifest directory
//   positive = e1 e2 ...
//   negative = e3 ...
//
// With several blocks the interpretations are merged by disjoint union.

using FactsLoader = std::function<Interpretation(const std::string& path)>;

Sample load_sample_text(std::string_view manifest, const FactsLoader& loader);
Sample load_sample(const std::filesystem::path& manifest_path);

/// Writes `<stem>.facts` and `<stem>.manifest` into `dir`; returns the manifest path.
std::filesystem::path save_sample(const Sample& sample, const std::filesystem::path& dir, const std::string& stem);

/// Dualizes the interpretation over `sigma` and swaps P and N.
Sample dualize_sample(const Sample& sample, const Signature& sigma);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace alcfit
