#include "alcfit/encoder.hpp"

#include <algorithm>

#include "alcfit/error.hpp"

namespace alcfit {

namespace {

constexpr auto G_SYN = ClauseGroup::syntax;
constexpr auto G_NAME = ClauseGroup::name_semantics;
constexpr auto G_SEM = ClauseGroup::semantics;

std::vector<int> labels_of(const VarMap& vm, ConceptKind kind) {
  std::vector<int> out;
  for (std::size_t v = 0; v < vm.labels().size(); ++v)
    if (vm.labels()[v].kind == kind) out.push_back(static_cast<int>(v));
  return out;
}

std::array<bool, 3> arities_of(const VarMap& vm) { return {vm.has_arity(0), vm.has_arity(1), vm.has_arity(2)}; }

}  // namespace

void encode_syntax(ClauseWriter& out) {
  VarMap& vm = out.vars();
  const int k = vm.k();
  const int nl = static_cast<int>(vm.labels().size());

  for (int i = 1; i <= k; ++i) {
    std::vector<Lit> all;
    for (int v = 0; v < nl; ++v) all.push_back(vm.x(i, v));
    out.exactly_one(G_SYN, all);

    for (int a = 0; a < 3; ++a) {
      if (!vm.has_arity(a)) continue;
      std::vector<Lit> def{-vm.arity_var(i, a)};
      for (int v = 0; v < nl; ++v)
        if (vm.labels()[static_cast<std::size_t>(v)].label_arity() == a) {
          def.push_back(vm.x(i, v));
          out.clause(G_SYN, {-vm.x(i, v), vm.arity_var(i, a)});
        }
      out.emit(G_SYN, def);
    }

    // Successor edges agree with the arity and there is at most one of them.
    std::vector<Lit> succ1{}, succ2{};
    for (int j = i + 1; j <= k; ++j) {
      if (int y = vm.y1(i, j)) {
        succ1.push_back(y);
        out.clause(G_SYN, {-y, vm.arity_var(i, 1)});
      }
      if (int y = vm.y2(i, j)) {
        succ2.push_back(y);
        out.clause(G_SYN, {-y, vm.arity_var(i, 2)});
      }
    }
    if (vm.has_arity(1)) {
      std::vector<Lit> c{-vm.arity_var(i, 1)};
      c.insert(c.end(), succ1.begin(), succ1.end());
      out.emit(G_SYN, c);
    }
    if (vm.has_arity(2)) {
      std::vector<Lit> c{-vm.arity_var(i, 2)};
      c.insert(c.end(), succ2.begin(), succ2.end());
      out.emit(G_SYN, c);
    }
    std::vector<Lit> succ = succ1;
    succ.insert(succ.end(), succ2.begin(), succ2.end());
    out.at_most_one(G_SYN, succ);
  }

  // Every node but the root has exactly one parent.
  for (int j = 2; j <= k; ++j) {
    std::vector<Lit> parents;
    for (int i = 1; i < j; ++i) {
      if (int y = vm.y1(i, j)) parents.push_back(y);
      if (int y = vm.y2(i, j)) parents.push_back(y);
      if (int y = vm.y2(i, j - 1)) parents.push_back(y);
    }
    out.exactly_one(G_SYN, parents);
  }
}

namespace {

void check_domain(const Interpretation& interp, VarMap& vm) {
  const int n = static_cast<int>(interp.domain_size());
  if (!vm.has_eval()) vm.allocate_eval(n);
  else if (vm.domain_size() != n) throw ConfigError("variable map built for a different domain");
}

void encode_structural_semantics(const Interpretation& interp, ClauseWriter& out) {
  VarMap& vm = out.vars();
  const int k = vm.k();
  const int n = static_cast<int>(interp.domain_size());

  for (int v : labels_of(vm, ConceptKind::top))
    for (int i = 1; i <= k; ++i)
      for (int a = 0; a < n; ++a) out.clause(G_SEM, {-vm.x(i, v), vm.z(i, a)});
  for (int v : labels_of(vm, ConceptKind::bot))
    for (int i = 1; i <= k; ++i)
      for (int a = 0; a < n; ++a) out.clause(G_SEM, {-vm.x(i, v), -vm.z(i, a)});

  for (int v : labels_of(vm, ConceptKind::neg))
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        const Lit x = vm.x(i, v), y = vm.y1(i, j);
        for (int a = 0; a < n; ++a) {
          out.clause(G_SEM, {-x, -y, vm.z(i, a), vm.z(j, a)});
          out.clause(G_SEM, {-x, -y, -vm.z(i, a), -vm.z(j, a)});
        }
      }

  for (auto kind : {ConceptKind::conj, ConceptKind::disj}) {
    const int s = kind == ConceptKind::conj ? 1 : -1;  // disjunction is the dual under literal negation
    for (int v : labels_of(vm, kind))
      for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j < k; ++j) {
          const Lit x = vm.x(i, v), y = vm.y2(i, j);
          for (int a = 0; a < n; ++a) {
            const Lit zi = s * vm.z(i, a), zl = s * vm.z(j, a), zr = s * vm.z(j + 1, a);
            out.clause(G_SEM, {-x, -y, -zi, zl});
            out.clause(G_SEM, {-x, -y, -zi, zr});
            out.clause(G_SEM, {-x, -y, zi, -zl, -zr});
          }
        }
  }

  for (auto kind : {ConceptKind::exists, ConceptKind::forall}) {
    const int s = kind == ConceptKind::exists ? 1 : -1;  // forall r.C = not exists r.not C row-wise
    for (int v : labels_of(vm, kind)) {
      const auto* role = interp.role_extension(vm.labels()[static_cast<std::size_t>(v)].symbol);
      for (int i = 1; i <= k; ++i) {
        const Lit x = vm.x(i, v);
        for (int a = 0; a < n; ++a) {
          const auto* succ = role ? &role->successors[static_cast<std::size_t>(a)] : nullptr;
          if (!succ || succ->empty()) out.clause(G_SEM, {-x, -s * vm.z(i, a)});
        }
        for (int j = i + 1; j <= k; ++j) {
          const Lit y = vm.y1(i, j);
          for (int a = 0; a < n; ++a) {
            const auto* succ = role ? &role->successors[static_cast<std::size_t>(a)] : nullptr;
            if (!succ || succ->empty()) continue;
            const Lit zi = s * vm.z(i, a);
            std::vector<Lit> some{-x, -y, -zi};
            for (int b : *succ) {
              const Lit zb = s * vm.z(j, b);
              some.push_back(zb);
              out.clause(G_SEM, {-x, -y, zi, -zb});
            }
            out.emit(G_SEM, some);
          }
        }
      }
    }
  }
}

}  // namespace

void encode_semantics_base(const Interpretation& interp, ClauseWriter& out) {
  VarMap& vm = out.vars();
  check_domain(interp, vm);
  const int n = static_cast<int>(interp.domain_size());
  for (int v : vm.name_labels()) {
    const auto* ext = interp.concept_extension(vm.labels()[static_cast<std::size_t>(v)].symbol);
    for (int i = 1; i <= vm.k(); ++i)
      for (int a = 0; a < n; ++a) {
        const bool in = ext && ext->test(static_cast<std::size_t>(a));
        out.clause(G_NAME, {-vm.x(i, v), in ? vm.z(i, a) : -vm.z(i, a)});
      }
  }
  encode_structural_semantics(interp, out);
}

void encode_semantics_typed(const Interpretation& interp, const TypeTable& types, ClauseWriter& out) {
  VarMap& vm = out.vars();
  const int n = static_cast<int>(interp.domain_size());
  if (types.type_of.size() != interp.domain_size()) throw ConfigError("type table does not match the domain");
  for (std::size_t c = 0; c < types.concept_names.size(); ++c) {
    const auto* ext = interp.concept_extension(types.concept_names[c]);
    for (int a = 0; a < n; ++a) {
      const bool in = ext && ext->test(static_cast<std::size_t>(a));
      if (in != types.type_contains(types.type_of[static_cast<std::size_t>(a)], static_cast<int>(c)))
        throw ConfigError("type table disagrees with the interpretation at element '" + interp.element(a) + "'");
    }
  }
  check_domain(interp, vm);
  const int nt = static_cast<int>(types.types.size());
  vm.allocate_types(nt);

  for (int i = 1; i <= vm.k(); ++i) {
    std::vector<Lit> is_name{-vm.l(i)};
    for (int v : vm.name_labels()) {
      const auto& name = vm.labels()[static_cast<std::size_t>(v)].symbol;
      const auto it = std::find(types.concept_names.begin(), types.concept_names.end(), name);
      const int c = it == types.concept_names.end() ? -1 : static_cast<int>(it - types.concept_names.begin());
      for (int t = 0; t < nt; ++t) {
        const bool in = c >= 0 && types.type_contains(t, c);
        out.clause(G_NAME, {-vm.x(i, v), in ? vm.xt(i, t) : -vm.xt(i, t)});
      }
      is_name.push_back(vm.x(i, v));
      out.clause(G_SYN, {-vm.x(i, v), vm.l(i)});
    }
    out.emit(G_SYN, is_name);
    for (int a = 0; a < n; ++a) {
      const Lit xt = vm.xt(i, types.type_of[static_cast<std::size_t>(a)]);
      out.clause(G_NAME, {-xt, vm.z(i, a)});
      out.clause(G_NAME, {xt, -vm.z(i, a), -vm.l(i)});
    }
  }
  encode_structural_semantics(interp, out);
}

void encode_fitting(const Sample& sample, ClauseWriter& out) {
  VarMap& vm = out.vars();
  for (int a : sample.positives()) out.clause(ClauseGroup::fitting, {vm.z(1, a)});
  for (int b : sample.negatives()) out.clause(ClauseGroup::fitting, {-vm.z(1, b)});
}

CoverageCounter::CoverageCounter(const Sample& sample, VarMap& vm) {
  for (int a : sample.positives()) lits_.push_back(vm.z(1, a));
  for (int b : sample.negatives()) lits_.push_back(-vm.z(1, b));
}

int CoverageCounter::s(int i, int j) const {
  if (i < j) return 0;
  return levels_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
}

void CoverageCounter::add_level(int j, ClauseWriter& out) {
  VarMap& vm = out.vars();
  const int len = example_count();
  std::vector<int> level(static_cast<std::size_t>(len), 0);
  for (int i = j; i <= len; ++i) level[static_cast<std::size_t>(i - 1)] = vm.new_var({VarKind::counter, i, j});
  levels_.push_back(std::move(level));
  for (int i = j; i <= len; ++i) {
    const Lit sij = s(i, j);
    const Lit prev = s(i - 1, j);
    const Lit e = lits_[static_cast<std::size_t>(i - 1)];
    if (prev) out.clause(ClauseGroup::cardinality, {-sij, prev, e});
    else out.clause(ClauseGroup::cardinality, {-sij, e});
    if (j >= 2) {
      const Lit lower = s(i - 1, j - 1);
      if (prev) out.clause(ClauseGroup::cardinality, {-sij, prev, lower});
      else out.clause(ClauseGroup::cardinality, {-sij, lower});
    }
  }
}

void CoverageCounter::require(int m, ClauseWriter& out) {
  if (m < 1 || m > example_count()) throw ConfigError("coverage bound out of range");
  while (static_cast<int>(levels_.size()) < m) add_level(static_cast<int>(levels_.size()) + 1, out);
  if (m > required_) {
    out.clause(ClauseGroup::cardinality, {s(example_count(), m)});
    required_ = m;
  }
}

namespace {

// c = number of nodes created so far (root included) after processing node i.
void extend_topologies(int k, int limit, const std::array<bool, 3>& ar, std::vector<int>& seq, int created,
                       const std::function<bool(int created)>& accept, std::vector<std::vector<int>>& out) {
  const int i = static_cast<int>(seq.size());
  if (i == limit) {
    if (accept(created)) out.push_back(seq);
    return;
  }
  for (int a = 0; a < 3; ++a) {
    if (!ar[static_cast<std::size_t>(a)]) continue;
    const int c = created + a;
    if (c > k) continue;
    if (i + 1 < k && c < i + 2) continue;  // the next node must already exist
    seq.push_back(a);
    extend_topologies(k, limit, ar, seq, c, accept, out);
    seq.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_topologies(int k, const std::array<bool, 3>& arities) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  extend_topologies(k, k, arities, seq, 1, [k](int c) { return c == k; }, out);
  return out;
}

std::vector<std::vector<int>> enumerate_topology_prefixes(int k, int t, const std::array<bool, 3>& arities) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  extend_topologies(
      k, t, arities, seq, 1,
      [&](int c) {
        const int rest = k - c;
        if (rest == 0) return arities[0];
        if (arities[1]) return arities[0];
        return arities[2] && arities[0] && rest % 2 == 0;
      },
      out);
  return out;
}

void encode_templates(ClauseWriter& out, int threshold) {
  if (threshold < 1) throw ConfigError("template threshold must be at least 1");
  VarMap& vm = out.vars();
  const int k = vm.k();
  const auto ar = arities_of(vm);
  const bool prefix = k > threshold;
  const auto shapes = prefix ? enumerate_topology_prefixes(k, threshold, ar) : enumerate_topologies(k, ar);

  std::vector<Lit> any;
  for (std::size_t t = 0; t < shapes.size(); ++t) {
    const int sel = vm.new_var({VarKind::topology, static_cast<int>(t)});
    any.push_back(sel);
    int created = 1;
    for (std::size_t idx = 0; idx < shapes[t].size(); ++idx) {
      const int i = static_cast<int>(idx) + 1;
      const int a = shapes[t][idx];
      out.clause(ClauseGroup::templates, {-sel, vm.arity_var(i, a)});
      if (a == 1) out.clause(ClauseGroup::templates, {-sel, vm.y1(i, created + 1)});
      if (a == 2) out.clause(ClauseGroup::templates, {-sel, vm.y2(i, created + 1)});
      created += a;
    }
  }
  out.emit(ClauseGroup::templates, any);
}

void encode_pattern_bans(ClauseWriter& out) {
  VarMap& vm = out.vars();
  const int k = vm.k();
  constexpr auto G = ClauseGroup::pattern_bans;
  const int top = vm.label_index(ConceptKind::top);
  const int bot = vm.label_index(ConceptKind::bot);
  const int neg = vm.label_index(ConceptKind::neg);

  for (auto kind : {ConceptKind::conj, ConceptKind::disj}) {
    const int v = vm.label_index(kind);
    if (v < 0) continue;
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j < k; ++j) {
        const Lit x = vm.x(i, v), y = vm.y2(i, j);
        for (int c : {j, j + 1}) {
          out.clause(G, {-x, -y, -vm.x(c, top)});
          out.clause(G, {-x, -y, -vm.x(c, bot)});
        }
        // Re-associate (C o D) o (E o F) to the right.
        out.clause(G, {-x, -y, -vm.x(j, v), -vm.x(j + 1, v)});
      }
  }

  if (neg < 0) return;
  std::vector<int> over_neg{neg};
  if (vm.ops().contains(Op::forall))
    for (int v : labels_of(vm, ConceptKind::exists)) over_neg.push_back(v);
  if (vm.ops().contains(Op::exists))
    for (int v : labels_of(vm, ConceptKind::forall)) over_neg.push_back(v);
  for (int v : over_neg)
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) out.clause(G, {-vm.x(i, v), -vm.y1(i, j), -vm.x(j, neg)});
}

Concept decode_model(const ModelValue& value, const VarMap& vm) {
  const int k = vm.k();
  const int nl = static_cast<int>(vm.labels().size());
  std::vector<int> label(static_cast<std::size_t>(k) + 1, -1);
  std::vector<std::vector<int>> children(static_cast<std::size_t>(k) + 1);
  std::vector<int> parents(static_cast<std::size_t>(k) + 1, 0);

  for (int i = 1; i <= k; ++i) {
    for (int v = 0; v < nl; ++v)
      if (value(vm.x(i, v))) {
        if (label[static_cast<std::size_t>(i)] >= 0) throw SoundnessError("node " + std::to_string(i) + " has two labels");
        label[static_cast<std::size_t>(i)] = v;
      }
    if (label[static_cast<std::size_t>(i)] < 0) throw SoundnessError("node " + std::to_string(i) + " has no label");
    auto& ch = children[static_cast<std::size_t>(i)];
    for (int j = i + 1; j <= k; ++j) {
      if (int y = vm.y1(i, j); y && value(y)) ch.push_back(j);
      if (int y = vm.y2(i, j); y && value(y)) {
        ch.push_back(j);
        ch.push_back(j + 1);
      }
    }
    if (static_cast<int>(ch.size()) != vm.labels()[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])].label_arity())
      throw SoundnessError("node " + std::to_string(i) + " has the wrong number of children");
    for (int c : ch) ++parents[static_cast<std::size_t>(c)];
  }
  for (int j = 2; j <= k; ++j)
    if (parents[static_cast<std::size_t>(j)] != 1) throw SoundnessError("node " + std::to_string(j) + " is not a tree node");

  std::vector<Concept> built(static_cast<std::size_t>(k) + 1, Concept::top());
  for (int i = k; i >= 1; --i) {
    const auto& lab = vm.labels()[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])];
    const auto& ch = children[static_cast<std::size_t>(i)];
    const Concept* first = ch.size() > 0 ? &built[static_cast<std::size_t>(ch[0])] : nullptr;
    const Concept* second = ch.size() > 1 ? &built[static_cast<std::size_t>(ch[1])] : nullptr;
    built[static_cast<std::size_t>(i)] = Concept::make(lab.kind, lab.symbol, first, second);
  }
  return built[1];
}

Encoding build_encoding(const Sample& sample, int k, OperatorSet ops, const EncodingOptions& options,
                        bool with_fitting) {
  const Interpretation& interp = sample.interpretation();
  Encoding enc{VarMap(k, ops, interp.signature()), Cnf{}};
  ClauseWriter out(enc.vars, enc.cnf);
  encode_syntax(out);
  if (options.typed) encode_semantics_typed(interp, compute_types(interp), out);
  else encode_semantics_base(interp, out);
  if (options.templates) encode_templates(out, options.template_threshold);
  if (options.pattern_bans) encode_pattern_bans(out);
  if (with_fitting) encode_fitting(sample, out);
  enc.cnf.declare_vars(enc.vars.num_vars());
  return enc;
}

std::pair<Cnf, VarMap> encode_syntax(int k, OperatorSet ops, const Signature& sigma) {
  std::pair<Cnf, VarMap> result{Cnf{}, VarMap(k, ops, sigma)};
  ClauseWriter out(result.second, result.first);
  encode_syntax(out);
  result.first.declare_vars(result.second.num_vars());
  return result;
}

}  // namespace alcfit
