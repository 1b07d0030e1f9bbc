#include <doctest.h>

#include "alcfit/concept.hpp"
#include "alcfit/error.hpp"

using namespace alcfit;

TEST_SUITE("concept") {
  TEST_CASE("size counts a quantifier with its role as one node") {
    CHECK(size(parse_concept("exists r.A")) == 2);
    CHECK(size(parse_concept("forall r.(A or B)")) == 4);
    CHECK(size(parse_concept("not (A and exists r.top)")) == 5);
    CHECK(size(parse_concept("top")) == 1);
  }

  TEST_CASE("render reparses to the same tree") {
    for (const char* text : {"A and B and C", "A and (B and C)", "not not A", "exists r.(A or B) and forall s.bot",
                             "forall r.exists s.not A", "(A or B) and C", "A or B and C", "not (A or B)",
                             "exists r.A or B"}) {
      const Concept c = parse_concept(text);
      CAPTURE(text);
      CHECK(parse_concept(render_concept(c)) == c);
      CHECK(parse_concept(render_concept(c, RenderStyle::unicode)) == c);
    }
  }

  TEST_CASE("precedence and associativity") {
    const Concept c = parse_concept("A or B and C");
    REQUIRE(c.kind() == ConceptKind::disj);
    CHECK(c.right().kind() == ConceptKind::conj);
    const Concept d = parse_concept("A and B and C");
    CHECK(d.left().kind() == ConceptKind::conj);
    CHECK(render_concept(parse_concept("A and (B and C)")) == "A and (B and C)");
    // The quantifier scope extends as far right as possible.
    CHECK(parse_concept("exists r.A or B").kind() == ConceptKind::exists);
  }

  TEST_CASE("unicode symbols") {
    CHECK(parse_concept("∃r.(A ⊔ ¬B) ⊓ ∀s.⊥") == parse_concept("exists r.(A or not B) and forall s.bot"));
    CHECK(render_concept(parse_concept("forall r.(B or A)"), RenderStyle::unicode) == "∀r.(B ⊔ A)");
  }

  TEST_CASE("malformed text is a parse error") {
    for (const char* text : {"", "A and", "exists .A", "(A or B", "a", "exists R.A", "A B", "forall r A"}) {
      CAPTURE(text);
      CHECK_THROWS_AS(parse_concept(text), ParseError);
    }
  }

  TEST_CASE("quantifier depth and signature") {
    const Concept c = parse_concept("exists r.forall s.A and B");
    CHECK(quantifier_depth(c) == 2);
    const Signature sig = signature_of(parse_concept("exists r.(A and forall s.B) or C"));
    CHECK(sig.concept_names == std::set<std::string>{"A", "B", "C"});
    CHECK(sig.role_names == std::set<std::string>{"r", "s"});
  }

  TEST_CASE("fragment membership") {
    const Concept c = parse_concept("exists r.A and exists s.top");
    CHECK(in_fragment(c, {Op::exists, Op::conj}));
    CHECK_FALSE(in_fragment(c, {Op::exists}));
    CHECK(in_fragment(parse_concept("A"), OperatorSet{}));
    CHECK_FALSE(in_fragment(parse_concept("not A"), {Op::conj}));
  }

  TEST_CASE("dualization swaps constructors and is an involution") {
    const Concept c = parse_concept("exists r.(A and top) or forall s.bot");
    CHECK(dualize_concept(c) == parse_concept("forall r.(A or bot) and exists s.top"));
    CHECK(dualize_concept(dualize_concept(c)) == c);
    CHECK(size(dualize_concept(c)) == size(c));
  }

  TEST_CASE("operator sets") {
    CHECK(OperatorSet::parse("exists,and") == OperatorSet{Op::exists, Op::conj});
    CHECK(OperatorSet::parse("") == OperatorSet{});
    CHECK(OperatorSet::parse("neg,and,or,exists,forall") == OperatorSet::all());
    CHECK(OperatorSet{Op::exists, Op::conj}.dual() == OperatorSet{Op::forall, Op::disj});
    CHECK(OperatorSet::all().dual() == OperatorSet::all());
    CHECK_THROWS_AS(OperatorSet::parse("exists,bogus"), ConfigError);
  }

  TEST_CASE("ordering is total and starts with size") {
    CHECK(parse_concept("A") < parse_concept("not A"));
    CHECK_FALSE(parse_concept("A") < parse_concept("A"));
    CHECK((parse_concept("A and B") <=> parse_concept("B and A")) != 0);
  }
}
