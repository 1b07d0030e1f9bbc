#include "alcfit/varmap.hpp"

#include <stdexcept>

#include "alcfit/error.hpp"

namespace alcfit {

std::string Label::to_string() const {
  switch (kind) {
    case ConceptKind::top: return "top";
    case ConceptKind::bot: return "bot";
    case ConceptKind::name: return symbol;
    case ConceptKind::neg: return "not";
    case ConceptKind::conj: return "and";
    case ConceptKind::disj: return "or";
    case ConceptKind::exists: return "exists_" + symbol;
    case ConceptKind::forall: return "forall_" + symbol;
  }
  return "?";
}

VarMap::VarMap(int k, OperatorSet ops, const Signature& sigma) : k_(k), ops_(ops) {
  if (k < 1) throw ConfigError("size bound k must be at least 1");
  labels_.push_back({ConceptKind::top, {}});
  labels_.push_back({ConceptKind::bot, {}});
  for (const auto& name : sigma.concept_names) {
    name_labels_.push_back(static_cast<int>(labels_.size()));
    labels_.push_back({ConceptKind::name, name});
  }
  if (ops.contains(Op::neg)) labels_.push_back({ConceptKind::neg, {}});
  if (ops.contains(Op::conj)) labels_.push_back({ConceptKind::conj, {}});
  if (ops.contains(Op::disj)) labels_.push_back({ConceptKind::disj, {}});
  if (ops.contains(Op::exists))
    for (const auto& r : sigma.role_names) labels_.push_back({ConceptKind::exists, r});
  if (ops.contains(Op::forall))
    for (const auto& r : sigma.role_names) labels_.push_back({ConceptKind::forall, r});
  for (const auto& lab : labels_) arity_available_[static_cast<std::size_t>(lab.label_arity())] = true;

  const auto n = static_cast<std::size_t>(k);
  x_.assign(n, std::vector<int>(labels_.size(), 0));
  for (int i = 1; i <= k; ++i)
    for (std::size_t v = 0; v < labels_.size(); ++v) x_[idx(i)][v] = new_var({VarKind::label, i, static_cast<int>(v)});

  arity_.assign(n, std::vector<int>(3, 0));
  for (int i = 1; i <= k; ++i)
    for (int a = 0; a < 3; ++a)
      if (has_arity(a)) arity_[idx(i)][static_cast<std::size_t>(a)] = new_var({VarKind::arity, i, a});

  y1_.assign(n, std::vector<int>(n + 1, 0));
  y2_.assign(n, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      if (has_arity(1)) y1_[idx(i)][static_cast<std::size_t>(j)] = new_var({VarKind::succ1, i, j});
      if (has_arity(2) && j < k) y2_[idx(i)][static_cast<std::size_t>(j)] = new_var({VarKind::succ2, i, j});
    }
}

int VarMap::label_index(ConceptKind kind, const std::string& symbol) const {
  for (std::size_t v = 0; v < labels_.size(); ++v)
    if (labels_[v].kind == kind && labels_[v].symbol == symbol) return static_cast<int>(v);
  return -1;
}

int VarMap::new_var(VarTag tag) {
  tags_.push_back(tag);
  return num_vars();
}

int VarMap::y1(int node, int child) const {
  if (node < 1 || child <= node || child > k_) return 0;
  return y1_[idx(node)][static_cast<std::size_t>(child)];
}

int VarMap::y2(int node, int left) const {
  if (node < 1 || left <= node || left >= k_) return 0;
  return y2_[idx(node)][static_cast<std::size_t>(left)];
}

void VarMap::allocate_eval(int domain_size) {
  if (has_eval()) throw std::logic_error("evaluation variables already allocated");
  domain_size_ = domain_size;
  z_.assign(static_cast<std::size_t>(k_), std::vector<int>(static_cast<std::size_t>(domain_size), 0));
  for (int i = 1; i <= k_; ++i)
    for (int a = 0; a < domain_size; ++a) z_[idx(i)][static_cast<std::size_t>(a)] = new_var({VarKind::eval, i, a});
}

void VarMap::allocate_types(int type_count) {
  if (type_count_ > 0) throw std::logic_error("type variables already allocated");
  type_count_ = type_count;
  xt_.assign(static_cast<std::size_t>(k_), std::vector<int>(static_cast<std::size_t>(type_count), 0));
  l_.assign(static_cast<std::size_t>(k_), 0);
  for (int i = 1; i <= k_; ++i) {
    for (int t = 0; t < type_count; ++t) xt_[idx(i)][static_cast<std::size_t>(t)] = new_var({VarKind::type, i, t});
    l_[idx(i)] = new_var({VarKind::is_name, i, 0});
  }
}

int VarMap::falsum(ClauseSink& out) {
  if (falsum_ == 0) {
    falsum_ = new_var({VarKind::constant});
    out.add({-falsum_}, ClauseGroup::syntax);
  }
  return falsum_;
}

std::string VarMap::describe(int var, const std::vector<std::string>* element_names) const {
  const VarTag& t = tag(var);
  auto num = [](int v) { return std::to_string(v); };
  switch (t.kind) {
    case VarKind::label: return "x " + num(t.a) + " " + labels_[static_cast<std::size_t>(t.b)].to_string();
    case VarKind::succ1: return "y1 " + num(t.a) + " " + num(t.b);
    case VarKind::succ2: return "y2 " + num(t.a) + " " + num(t.b);
    case VarKind::eval:
      return "z " + num(t.a) + " " +
             (element_names ? (*element_names)[static_cast<std::size_t>(t.b)] : num(t.b));
    case VarKind::type: return "xt " + num(t.a) + " " + num(t.b);
    case VarKind::is_name: return "l " + num(t.a);
    case VarKind::arity: return "arity " + num(t.a) + " " + num(t.b);
    case VarKind::topology: return "topology " + num(t.a);
    case VarKind::counter: return "count " + num(t.a) + " " + num(t.b);
    case VarKind::constant: return "false";
  }
  return "?";
}

std::vector<std::string> VarMap::dimacs_comments(const std::vector<std::string>* element_names) const {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(num_vars()) + 1);
  out.push_back("alcfit encoding k=" + std::to_string(k_) + " ops=" + ops_.to_string());
  for (int v = 1; v <= num_vars(); ++v) out.push_back(describe(v, element_names) + " = " + std::to_string(v));
  return out;
}

void ClauseWriter::emit(ClauseGroup g, std::span<const Lit> lits) {
  if (lits.empty()) {
    const Lit f = vm_.falsum(out_);
    out_.add({f}, g);
    return;
  }
  out_.add_clause(lits, g);
}

void ClauseWriter::at_most_one(ClauseGroup g, const std::vector<Lit>& lits) {
  for (std::size_t i = 0; i < lits.size(); ++i)
    for (std::size_t j = i + 1; j < lits.size(); ++j) clause(g, {-lits[i], -lits[j]});
}

void ClauseWriter::exactly_one(ClauseGroup g, const std::vector<Lit>& lits) {
  emit(g, lits);
  at_most_one(g, lits);
}

}  // namespace alcfit
