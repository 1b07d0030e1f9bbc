#include "alcfit/cnf.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "alcfit/error.hpp"

namespace alcfit {

const char* to_string(ClauseGroup group) {
  switch (group) {
    case ClauseGroup::syntax: return "syntax";
    case ClauseGroup::name_semantics: return "name_semantics";
    case ClauseGroup::semantics: return "semantics";
    case ClauseGroup::fitting: return "fitting";
    case ClauseGroup::templates: return "templates";
    case ClauseGroup::pattern_bans: return "pattern_bans";
    case ClauseGroup::cardinality: return "cardinality";
  }
  return "?";
}

void Cnf::add_clause(std::span<const Lit> lits, ClauseGroup group) {
  if (lits.empty()) throw std::logic_error("empty clause");
  for (Lit l : lits) {
    if (l == 0) throw std::logic_error("zero literal");
    declare_vars(std::abs(l));
  }
  lits_.insert(lits_.end(), lits.begin(), lits.end());
  offsets_.push_back(lits_.size());
  groups_.push_back(group);
  ++counts_[static_cast<std::size_t>(group)];
}

void Cnf::append(const Cnf& other) {
  for (std::size_t i = 0; i < other.num_clauses(); ++i) add_clause(other.clause(i), other.group(i));
  declare_vars(other.num_vars());
}

void Cnf::replay(ClauseSink& sink) const {
  for (std::size_t i = 0; i < num_clauses(); ++i) sink.add_clause(clause(i), group(i));
}

std::string export_dimacs(const Cnf& cnf, const std::vector<std::string>& comments) {
  std::string out;
  out.reserve(cnf.literal_count() * 4 + cnf.num_clauses() * 3 + comments.size() * 24 + 32);
  for (const auto& c : comments) {
    out += "c ";
    out += c;
    out += '\n';
  }
  out += "p cnf " + std::to_string(cnf.num_vars()) + " " + std::to_string(cnf.num_clauses()) + "\n";
  for (std::size_t i = 0; i < cnf.num_clauses(); ++i) {
    for (Lit l : cnf.clause(i)) {
      out += std::to_string(l);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

Cnf parse_dimacs(std::string_view text) {
  Cnf cnf;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  long declared_clauses = -1;
  std::vector<Lit> clause;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      long vars = 0;
      if (!(ls >> p >> fmt >> vars >> declared_clauses) || fmt != "cnf") throw DataError("bad DIMACS header", line_no);
      cnf.declare_vars(static_cast<int>(vars));
      header = true;
      continue;
    }
    if (!header) throw DataError("clause before DIMACS header", line_no);
    long lit = 0;
    while (ls >> lit) {
      if (lit == 0) {
        if (clause.empty()) throw DataError("empty clause in DIMACS input", line_no);
        cnf.add_clause(clause, ClauseGroup::syntax);
        clause.clear();
      } else {
        clause.push_back(static_cast<Lit>(lit));
      }
    }
  }
  if (!clause.empty()) throw DataError("unterminated clause at end of DIMACS input");
  if (declared_clauses >= 0 && static_cast<std::size_t>(declared_clauses) != cnf.num_clauses())
    throw DataError("DIMACS header clause count mismatch");
  return cnf;
}

}  // namespace alcfit
