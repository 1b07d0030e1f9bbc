#include "alcfit/sample.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "alcfit/error.hpp"

namespace alcfit {

Sample::Sample(Interpretation interp, std::vector<int> positives, std::vector<int> negatives)
    : interp_(std::move(interp)), positives_(std::move(positives)), negatives_(std::move(negatives)) {
  const int n = static_cast<int>(interp_.domain_size());
  std::set<int> pos;
  for (int a : positives_) {
    if (a < 0 || a >= n) throw DataError("positive example index out of range");
    pos.insert(a);
  }
  for (int b : negatives_) {
    if (b < 0 || b >= n) throw DataError("negative example index out of range");
    if (pos.contains(b)) throw DataError("element '" + interp_.element(b) + "' is both positive and negative");
  }
}

std::size_t example_size(const Interpretation& interp) { return interp.fact_count() + 1; }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view s) {
  auto hash = s.find('#');
  return hash == std::string_view::npos ? s : s.substr(0, hash);
}

bool is_element_id(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char ch) {
    return std::isspace(static_cast<unsigned char>(ch)) || ch == '(' || ch == ')' || ch == ',' || ch == '#';
  });
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

Interpretation load_facts(std::string_view text) {
  InterpretationBuilder b;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const auto line = trim(strip_comment(text.substr(start, end - start)));
    start = end + 1;
    if (line.empty()) continue;

    if (line.starts_with("element") && line.size() > 7 && std::isspace(static_cast<unsigned char>(line[7]))) {
      const auto id = trim(line.substr(7));
      if (!is_element_id(id)) throw DataError("malformed element declaration", line_no);
      b.add_element(std::string(id));
      continue;
    }

    const auto open = line.find('(');
    if (open == std::string_view::npos || line.back() != ')') throw DataError("malformed fact", line_no);
    const std::string pred(trim(line.substr(0, open)));
    const auto args = line.substr(open + 1, line.size() - open - 2);
    std::vector<std::string> ids;
    std::size_t p = 0;
    while (true) {
      auto comma = args.find(',', p);
      auto id = trim(args.substr(p, comma == std::string_view::npos ? std::string_view::npos : comma - p));
      if (!is_element_id(id)) throw DataError("malformed element identifier", line_no);
      ids.emplace_back(id);
      if (comma == std::string_view::npos) break;
      p = comma + 1;
    }
    if (ids.size() == 1) {
      if (!is_concept_name(pred)) throw DataError("concept name '" + pred + "' must start uppercase", line_no);
      b.add_concept_fact(pred, ids[0]);
    } else if (ids.size() == 2) {
      if (!is_role_name(pred)) throw DataError("role name '" + pred + "' must start lowercase", line_no);
      b.add_role_fact(pred, ids[0], ids[1]);
    } else {
      throw DataError("fact must have one or two arguments", line_no);
    }
  }
  return b.build();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << text;
}

Interpretation load_facts_file(const std::filesystem::path& path) { return load_facts(read_text_file(path)); }

std::string save_facts(const Interpretation& interp) {
  const std::size_t n = interp.domain_size();
  std::vector<bool> mentioned(n, false);
  std::vector<std::string> concept_lines;
  std::vector<std::string> role_lines;
  for (const auto& [name, ext] : interp.concepts())
    for (int a : ext.members()) {
      mentioned[static_cast<std::size_t>(a)] = true;
      concept_lines.push_back(name + "(" + interp.element(a) + ")");
    }
  for (const auto& [name, ext] : interp.roles())
    for (std::size_t a = 0; a < n; ++a)
      for (int b : ext.successors[a]) {
        mentioned[a] = mentioned[static_cast<std::size_t>(b)] = true;
        role_lines.push_back(name + "(" + interp.element(static_cast<int>(a)) + "," + interp.element(b) + ")");
      }
  std::sort(concept_lines.begin(), concept_lines.end());
  std::sort(role_lines.begin(), role_lines.end());

  std::string out;
  for (std::size_t a = 0; a < n; ++a)
    if (!mentioned[a]) out += "element " + interp.element(static_cast<int>(a)) + "\n";
  for (const auto& l : concept_lines) out += l + "\n";
  for (const auto& l : role_lines) out += l + "\n";
  return out;
}

namespace {

struct Block {
  std::string facts;
  std::vector<std::string> positives;
  std::vector<std::string> negatives;
  std::size_t line;
};

}  // namespace

Sample load_sample_text(std::string_view manifest, const FactsLoader& loader) {
  std::vector<Block> blocks;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= manifest.size()) {
    auto end = manifest.find('\n', start);
    if (end == std::string_view::npos) end = manifest.size();
    ++line_no;
    const auto line = trim(strip_comment(manifest.substr(start, end - start)));
    start = end + 1;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw DataError("expected 'key = value'", line_no);
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "facts") {
      if (value.empty()) throw DataError("empty facts path", line_no);
      blocks.push_back({std::string(value), {}, {}, line_no});
    } else if (key == "positive" || key == "negative") {
      if (blocks.empty()) throw DataError("'" + std::string(key) + "' before any 'facts' entry", line_no);
      auto words = split_words(value);
      auto& dst = key == "positive" ? blocks.back().positives : blocks.back().negatives;
      dst.insert(dst.end(), words.begin(), words.end());
    } else {
      throw DataError("unknown manifest key '" + std::string(key) + "'", line_no);
    }
  }
  if (blocks.empty()) throw DataError("manifest lists no facts file");

  std::vector<Interpretation> parts;
  parts.reserve(blocks.size());
  for (const auto& blk : blocks) parts.push_back(loader(blk.facts));

  auto resolve = [&](std::size_t part, const std::string& id, std::size_t line) {
    auto idx = parts[part].index_of(id);
    if (!idx) throw DataError("element '" + id + "' not in '" + blocks[part].facts + "'", line);
    return *idx;
  };

  if (parts.size() == 1) {
    std::vector<int> pos, neg;
    for (const auto& id : blocks[0].positives) pos.push_back(resolve(0, id, blocks[0].line));
    for (const auto& id : blocks[0].negatives) neg.push_back(resolve(0, id, blocks[0].line));
    return Sample(std::move(parts[0]), std::move(pos), std::move(neg));
  }

  std::vector<int> pos, neg;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (const auto& id : blocks[p].positives) resolve(p, id, blocks[p].line);
    for (const auto& id : blocks[p].negatives) resolve(p, id, blocks[p].line);
  }
  auto [merged, offsets] = disjoint_union(parts);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (const auto& id : blocks[p].positives) pos.push_back(offsets[p] + *parts[p].index_of(id));
    for (const auto& id : blocks[p].negatives) neg.push_back(offsets[p] + *parts[p].index_of(id));
  }
  return Sample(std::move(merged), std::move(pos), std::move(neg));
}

Sample load_sample(const std::filesystem::path& manifest_path) {
  const auto dir = manifest_path.parent_path();
  return load_sample_text(read_text_file(manifest_path), [&](const std::string& p) {
    std::filesystem::path fp(p);
    return load_facts_file(fp.is_absolute() ? fp : dir / fp);
  });
}

std::filesystem::path save_sample(const Sample& sample, const std::filesystem::path& dir, const std::string& stem) {
  std::filesystem::create_directories(dir);
  write_text_file(dir / (stem + ".facts"), save_facts(sample.interpretation()));
  std::string m = "facts = " + stem + ".facts\npositive =";
  for (int a : sample.positives()) m += " " + sample.interpretation().element(a);
  m += "\nnegative =";
  for (int b : sample.negatives()) m += " " + sample.interpretation().element(b);
  m += "\n";
  const auto path = dir / (stem + ".manifest");
  write_text_file(path, m);
  return path;
}

Sample dualize_sample(const Sample& sample, const Signature& sigma) {
  return Sample(dualize_interpretation(sample.interpretation(), sigma), sample.negatives(), sample.positives());
}

}  // namespace alcfit
