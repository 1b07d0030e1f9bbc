#include "alcfit/concept.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <vector>

#include "alcfit/error.hpp"

namespace alcfit {

struct Concept::Node {
  ConceptKind kind;
  std::string symbol;
  std::vector<Concept> children;
  int size;
};

namespace {

const std::string& empty_string() {
  static const std::string s;
  return s;
}

}  // namespace

Concept Concept::make(ConceptKind kind, std::string symbol, const Concept* first, const Concept* second) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->symbol = std::move(symbol);
  node->size = 1;
  const int n = arity(kind);
  if (n >= 1) {
    node->children.push_back(*first);
    node->size += first->node_count();
  }
  if (n == 2) {
    node->children.push_back(*second);
    node->size += second->node_count();
  }
  return Concept(std::move(node));
}

Concept Concept::top() {
  static const Concept t = make(ConceptKind::top, {}, nullptr, nullptr);
  return t;
}
Concept Concept::bot() {
  static const Concept b = make(ConceptKind::bot, {}, nullptr, nullptr);
  return b;
}
Concept Concept::name(std::string concept_name) {
  return make(ConceptKind::name, std::move(concept_name), nullptr, nullptr);
}
Concept Concept::negation(Concept child) { return make(ConceptKind::neg, {}, &child, nullptr); }
Concept Concept::conjunction(Concept left, Concept right) { return make(ConceptKind::conj, {}, &left, &right); }
Concept Concept::disjunction(Concept left, Concept right) { return make(ConceptKind::disj, {}, &left, &right); }
Concept Concept::exists(std::string role, Concept child) {
  return make(ConceptKind::exists, std::move(role), &child, nullptr);
}
Concept Concept::forall(std::string role, Concept child) {
  return make(ConceptKind::forall, std::move(role), &child, nullptr);
}

// A default-constructed Concept (inside an unused child slot) has no node; it
// is never reachable through the public accessors.
ConceptKind Concept::kind() const { return node_->kind; }
const std::string& Concept::symbol() const { return node_ ? node_->symbol : empty_string(); }
const Concept& Concept::child() const { return node_->children[0]; }
const Concept& Concept::left() const { return node_->children[0]; }
const Concept& Concept::right() const { return node_->children[1]; }
int Concept::node_count() const { return node_ ? node_->size : 0; }

bool operator==(const Concept& a, const Concept& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_count() <=> b.node_count(); c != 0) return c;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.symbol() <=> b.symbol(); c != 0) return c;
  const int n = arity(a.kind());
  for (int i = 0; i < n; ++i) {
    if (auto c = a.node_->children[i] <=> b.node_->children[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

OperatorSet OperatorSet::parse(std::string_view text) {
  OperatorSet ops;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto item = text.substr(pos, comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item == "neg" || item == "not") ops = ops.with(Op::neg);
    else if (item == "and") ops = ops.with(Op::conj);
    else if (item == "or") ops = ops.with(Op::disj);
    else if (item == "exists") ops = ops.with(Op::exists);
    else if (item == "forall") ops = ops.with(Op::forall);
    else if (item == "all") ops = OperatorSet::all();
    else if (!item.empty()) throw ConfigError("unknown operator '" + std::string(item) + "'");
    pos = comma + 1;
  }
  return ops;
}

std::string OperatorSet::to_string() const {
  static constexpr std::array<std::pair<Op, const char*>, 5> names{
      {{Op::neg, "neg"}, {Op::conj, "and"}, {Op::disj, "or"}, {Op::exists, "exists"}, {Op::forall, "forall"}}};
  std::string out;
  for (auto [op, name] : names) {
    if (!contains(op)) continue;
    if (!out.empty()) out += ',';
    out += name;
  }
  return out;
}

std::optional<Op> operator_of(ConceptKind kind) {
  switch (kind) {
    case ConceptKind::neg: return Op::neg;
    case ConceptKind::conj: return Op::conj;
    case ConceptKind::disj: return Op::disj;
    case ConceptKind::exists: return Op::exists;
    case ConceptKind::forall: return Op::forall;
    default: return std::nullopt;
  }
}

bool is_keyword(std::string_view w) {
  return w == "top" || w == "bot" || w == "not" || w == "and" || w == "or" || w == "exists" || w == "forall";
}

namespace {

bool is_ident_tail(std::string_view w) {
  return std::all_of(w.begin(), w.end(),
                     [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
}

}  // namespace

bool is_concept_name(std::string_view w) {
  return !w.empty() && std::isupper(static_cast<unsigned char>(w[0])) && is_ident_tail(w);
}

bool is_role_name(std::string_view w) {
  return !w.empty() && std::islower(static_cast<unsigned char>(w[0])) && is_ident_tail(w) && !is_keyword(w);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { ident, kw_top, kw_bot, kw_not, kw_and, kw_or, kw_exists, kw_forall, dot, lparen, rparen, end };

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  static const std::array<std::pair<std::string_view, Tok>, 7> unicode{{{"⊤", Tok::kw_top},
                                                                        {"⊥", Tok::kw_bot},
                                                                        {"¬", Tok::kw_not},
                                                                        {"⊓", Tok::kw_and},
                                                                        {"⊔", Tok::kw_or},
                                                                        {"∃", Tok::kw_exists},
                                                                        {"∀", Tok::kw_forall}}};
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    if (ch == '.' || ch == '(' || ch == ')') {
      out.push_back({ch == '.' ? Tok::dot : ch == '(' ? Tok::lparen : Tok::rparen, std::string(1, s[i]), i});
      ++i;
      continue;
    }
    if (std::isalpha(ch) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string word(s.substr(i, j - i));
      Tok t = Tok::ident;
      if (word == "top") t = Tok::kw_top;
      else if (word == "bot") t = Tok::kw_bot;
      else if (word == "not") t = Tok::kw_not;
      else if (word == "and") t = Tok::kw_and;
      else if (word == "or") t = Tok::kw_or;
      else if (word == "exists") t = Tok::kw_exists;
      else if (word == "forall") t = Tok::kw_forall;
      out.push_back({t, std::move(word), i});
      i = j;
      continue;
    }
    bool matched = false;
    for (auto [sym, t] : unicode) {
      if (s.substr(i, sym.size()) == sym) {
        out.push_back({t, std::string(sym), i});
        i += sym.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError("unknown token '" + std::string(1, s[i]) + "'", i);
  }
  out.push_back({Tok::end, {}, s.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Concept parse() {
    Concept c = disjunction();
    if (peek().type != Tok::end) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return c;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  Concept disjunction() {
    Concept c = conjunction();
    while (peek().type == Tok::kw_or) {
      next();
      c = Concept::disjunction(std::move(c), conjunction());
    }
    return c;
  }

  Concept conjunction() {
    Concept c = unary();
    while (peek().type == Tok::kw_and) {
      next();
      c = Concept::conjunction(std::move(c), unary());
    }
    return c;
  }

  Concept unary() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::kw_not: next(); return Concept::negation(unary());
      case Tok::kw_exists:
      case Tok::kw_forall: {
        const bool ex = next().type == Tok::kw_exists;
        const Token& role = next();
        if (role.type != Tok::ident || !is_role_name(role.text))
          throw ParseError("expected role name after quantifier", role.pos);
        if (peek().type != Tok::dot) throw ParseError("expected '.' after role name", peek().pos);
        next();
        Concept body = disjunction();
        return ex ? Concept::exists(role.text, std::move(body)) : Concept::forall(role.text, std::move(body));
      }
      default: return atom();
    }
  }

  Concept atom() {
    const Token& t = next();
    switch (t.type) {
      case Tok::kw_top: return Concept::top();
      case Tok::kw_bot: return Concept::bot();
      case Tok::lparen: {
        Concept c = disjunction();
        if (peek().type != Tok::rparen) throw ParseError("expected ')'", peek().pos);
        next();
        return c;
      }
      case Tok::ident:
        if (!is_concept_name(t.text)) throw ParseError("'" + t.text + "' is not a concept name", t.pos);
        return Concept::name(t.text);
      case Tok::end: throw ParseError("unexpected end of input", t.pos);
      default: throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Rendering

struct Symbols {
  const char* top;
  const char* bot;
  const char* neg;
  const char* conj;
  const char* disj;
  const char* exists;
  const char* forall;
};

constexpr Symbols kAscii{"top", "bot", "not ", " and ", " or ", "exists ", "forall "};
constexpr Symbols kUnicode{"⊤", "⊥", "¬", " ⊓ ", " ⊔ ", "∃", "∀"};

int precedence(ConceptKind k) { return k == ConceptKind::disj ? 1 : k == ConceptKind::conj ? 2 : 3; }
bool is_binary(const Concept& c) { return arity(c.kind()) == 2; }

class Renderer {
public:
  explicit Renderer(const Symbols& sym) : sym_(sym) {}

  // `followed`: more input follows this term at the same nesting level, so a
  // quantifier here must be closed off with parentheses.
  void emit(const Concept& c, bool followed) {
    switch (c.kind()) {
      case ConceptKind::top: out += sym_.top; break;
      case ConceptKind::bot: out += sym_.bot; break;
      case ConceptKind::name: out += c.symbol(); break;
      case ConceptKind::neg:
        out += sym_.neg;
        if (is_binary(c.child())) parenthesized(c.child());
        else emit(c.child(), followed);
        break;
      case ConceptKind::exists:
      case ConceptKind::forall:
        if (followed) out += '(';
        out += c.kind() == ConceptKind::exists ? sym_.exists : sym_.forall;
        out += c.symbol();
        out += '.';
        if (is_binary(c.child())) parenthesized(c.child());
        else emit(c.child(), false);
        if (followed) out += ')';
        break;
      case ConceptKind::conj:
      case ConceptKind::disj: {
        const int p = precedence(c.kind());
        if (is_binary(c.left()) && precedence(c.left().kind()) < p) parenthesized(c.left());
        else emit(c.left(), true);
        out += c.kind() == ConceptKind::conj ? sym_.conj : sym_.disj;
        if (is_binary(c.right()) && precedence(c.right().kind()) <= p) parenthesized(c.right());
        else emit(c.right(), followed);
        break;
      }
    }
  }

  std::string out;

private:
  void parenthesized(const Concept& c) {
    out += '(';
    emit(c, false);
    out += ')';
  }

  const Symbols& sym_;
};

}  // namespace

Concept parse_concept(std::string_view text) { return Parser(text).parse(); }

std::string render_concept(const Concept& c, RenderStyle style) {
  Renderer r(style == RenderStyle::ascii ? kAscii : kUnicode);
  r.emit(c, false);
  return std::move(r.out);
}

int size(const Concept& c) { return c.node_count(); }

int quantifier_depth(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::neg: return quantifier_depth(c.child());
    case ConceptKind::exists:
    case ConceptKind::forall: return 1 + quantifier_depth(c.child());
    case ConceptKind::conj:
    case ConceptKind::disj: return std::max(quantifier_depth(c.left()), quantifier_depth(c.right()));
    default: return 0;
  }
}

namespace {

void collect_signature(const Concept& c, Signature& sig) {
  switch (arity(c.kind())) {
    case 0:
      if (c.kind() == ConceptKind::name) sig.concept_names.insert(c.symbol());
      break;
    case 1:
      if (c.kind() != ConceptKind::neg) sig.role_names.insert(c.symbol());
      collect_signature(c.child(), sig);
      break;
    default:
      collect_signature(c.left(), sig);
      collect_signature(c.right(), sig);
  }
}

}  // namespace

Signature signature_of(const Concept& c) {
  Signature sig;
  collect_signature(c, sig);
  return sig;
}

bool in_fragment(const Concept& c, OperatorSet ops) {
  if (auto op = operator_of(c.kind()); op && !ops.contains(*op)) return false;
  switch (arity(c.kind())) {
    case 0: return true;
    case 1: return in_fragment(c.child(), ops);
    default: return in_fragment(c.left(), ops) && in_fragment(c.right(), ops);
  }
}

Concept dualize_concept(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::top: return Concept::bot();
    case ConceptKind::bot: return Concept::top();
    case ConceptKind::name: return c;
    case ConceptKind::neg: return Concept::negation(dualize_concept(c.child()));
    case ConceptKind::conj: return Concept::disjunction(dualize_concept(c.left()), dualize_concept(c.right()));
    case ConceptKind::disj: return Concept::conjunction(dualize_concept(c.left()), dualize_concept(c.right()));
    case ConceptKind::exists: return Concept::forall(c.symbol(), dualize_concept(c.child()));
    case ConceptKind::forall: return Concept::exists(c.symbol(), dualize_concept(c.child()));
  }
  return c;
}

}  // namespace alcfit
