#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace alcfit {

enum class ConceptKind : std::uint8_t { top, bot, name, neg, conj, disj, exists, forall };

/// Number of children a node of this kind has.
constexpr int arity(ConceptKind kind) {
  switch (kind) {
    case ConceptKind::top:
    case ConceptKind::bot:
    case ConceptKind::name: return 0;
    case ConceptKind::neg:
    case ConceptKind::exists:
    case ConceptKind::forall: return 1;
    case ConceptKind::conj:
    case ConceptKind::disj: return 2;
  }
  return 0;
}

/// Immutable ALC concept syntax tree with shared structure.
///
/// A quantifier node carries its role name, so `exists r.A` is two nodes.
class Concept {
public:
  static Concept top();
  static Concept bot();
  static Concept name(std::string concept_name);
  static Concept negation(Concept child);
  static Concept conjunction(Concept left, Concept right);
  static Concept disjunction(Concept left, Concept right);
  static Concept exists(std::string role, Concept child);
  static Concept forall(std::string role, Concept child);
  /// Generic constructor; `symbol` is the concept or role name where applicable.
  static Concept make(ConceptKind kind, std::string symbol, const Concept* first, const Concept* second);

  ConceptKind kind() const;
  /// Concept name for `name`, role name for quantifiers, empty otherwise.
  const std::string& symbol() const;
  /// Only child of neg/exists/forall.
  const Concept& child() const;
  const Concept& left() const;
  const Concept& right() const;

  /// Cached node count (same as `size(*this)`).
  int node_count() const;

  friend bool operator==(const Concept& a, const Concept& b);
  /// Total order: by size, then kind, then symbol, then children left to right.
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b);

private:
  struct Node;
  Concept() = default;
  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class Op : std::uint8_t { neg = 0, conj = 1, disj = 2, exists = 3, forall = 4 };

/// Subset of {neg, and, or, exists, forall}; selects the fragment L(O).
class OperatorSet {
public:
  constexpr OperatorSet() = default;
  constexpr OperatorSet(std::initializer_list<Op> ops) {
    for (auto op : ops) bits_ |= bit(op);
  }
  static constexpr OperatorSet all() { return {Op::neg, Op::conj, Op::disj, Op::exists, Op::forall}; }
  static constexpr OperatorSet from_bits(std::uint8_t bits) {
    OperatorSet s;
    s.bits_ = bits & 0x1f;
    return s;
  }
  /// Comma-separated list over {neg, and, or, exists, forall}; empty string is the empty set.
  static OperatorSet parse(std::string_view text);

  constexpr bool contains(Op op) const { return bits_ & bit(op); }
  constexpr OperatorSet with(Op op) const { return from_bits(bits_ | bit(op)); }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }

  /// Swaps and/or and exists/forall; keeps neg.
  constexpr OperatorSet dual() const {
    OperatorSet d;
    if (contains(Op::neg)) d.bits_ |= bit(Op::neg);
    if (contains(Op::conj)) d.bits_ |= bit(Op::disj);
    if (contains(Op::disj)) d.bits_ |= bit(Op::conj);
    if (contains(Op::exists)) d.bits_ |= bit(Op::forall);
    if (contains(Op::forall)) d.bits_ |= bit(Op::exists);
    return d;
  }

  std::string to_string() const;

  friend constexpr bool operator==(OperatorSet, OperatorSet) = default;

private:
  static constexpr std::uint8_t bit(Op op) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(op)); }
  std::uint8_t bits_ = 0;
};

/// Operator needed to build a node of this kind; none for top, bot and names.
std::optional<Op> operator_of(ConceptKind kind);

struct Signature {
  std::set<std::string> concept_names;
  std::set<std::string> role_names;

  void merge(const Signature& other) {
    concept_names.insert(other.concept_names.begin(), other.concept_names.end());
    role_names.insert(other.role_names.begin(), other.role_names.end());
  }
  friend bool operator==(const Signature&, const Signature&) = default;
};

bool is_keyword(std::string_view word);
/// Uppercase initial, then [A-Za-z0-9_].
bool is_concept_name(std::string_view word);
/// Lowercase initial, then [A-Za-z0-9_], not a keyword.
bool is_role_name(std::string_view word);

/// Parses the concept grammar:
///
///   disj  := conj ("or" conj)*          left-associative
///   conj  := unary ("and" unary)*       left-associative
///   unary := "not" unary | ("exists"|"forall") role "." disj | atom
///   atom  := "top" | "bot" | ConceptName | "(" disj ")"
///
/// The unicode symbols ⊤ ⊥ ¬ ⊓ ⊔ ∃ ∀ are accepted as synonyms.
/// Throws ParseError.
Concept parse_concept(std::string_view text);

enum class RenderStyle { ascii, unicode };

/// Canonical text with minimal parentheses; reparses to the identical tree.
std::string render_concept(const Concept& c, RenderStyle style = RenderStyle::ascii);

int size(const Concept& c);
int quantifier_depth(const Concept& c);
Signature signature_of(const Concept& c);
bool in_fragment(const Concept& c, OperatorSet ops);
/// Swaps top/bot, and/or, exists/forall. An involution.
Concept dualize_concept(const Concept& c);

}  // namespace alcfit
