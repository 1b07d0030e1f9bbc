#include <doctest.h>

#include <filesystem>

#include "alcfit/error.hpp"
#include "alcfit/interpretation.hpp"
#include "alcfit/sample.hpp"
#include "alcfit/semantics.hpp"
#include "corpus.hpp"

using namespace alcfit;

namespace {

Sample fig1() { return load_sample(ALCFIT_TEST_DATA_DIR "/fig1/fig1.manifest"); }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("alcfit_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("data") {
  TEST_CASE("fact files: facts, declarations and comments") {
    const Interpretation I = load_facts("# comment\nA(a)\nr(a, b)\n\nelement c\nB(b)  # trailing\n");
    CHECK(I.domain_size() == 3);
    CHECK(I.fact_count() == 3);
    CHECK(I.concept_extension("A")->test(static_cast<std::size_t>(*I.index_of("a"))));
    const auto* r = I.role_extension("r");
    REQUIRE(r);
    CHECK(r->pair_count == 1);
    CHECK(I.concept_extension("C") == nullptr);
  }

  TEST_CASE("malformed facts report the line") {
    try {
      load_facts("A(a)\nr(a,\n");
      FAIL("expected DataError");
    } catch (const DataError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(load_facts("a(b)"), DataError);
    CHECK_THROWS_AS(load_facts("R(a,b)"), DataError);
  }

  TEST_CASE("fact round trip") {
    for (const auto& s : testing::random_corpus(30, 5)) {
      const Interpretation& I = s.interpretation();
      CHECK(load_facts(save_facts(I)) == I);
    }
  }

  TEST_CASE("Fig. 1 manifest") {
    const Sample s = fig1();
    CHECK(s.positives().size() == 2);
    CHECK(s.negatives().size() == 1);
    CHECK(s.interpretation().domain_size() == 7);
    const auto& I = s.interpretation();
    CHECK(I.element(s.positives()[0]) == "0:a1");
    CHECK(I.element(s.negatives()[0]) == "1:b");
  }

  TEST_CASE("sample round trip through manifest files") {
    const auto dir = scratch("roundtrip");
    for (const auto& s : testing::random_corpus(10, 11)) {
      const auto path = save_sample(s, dir, "s");
      const Sample back = load_sample(path);
      CHECK(back.interpretation() == s.interpretation());
      REQUIRE(back.positives().size() == s.positives().size());
      for (std::size_t i = 0; i < s.positives().size(); ++i)
        CHECK(back.interpretation().element(back.positives()[i]) ==
              s.interpretation().element(s.positives()[i]));
      CHECK(back.negatives().size() == s.negatives().size());
    }
  }

  TEST_CASE("sample invariants") {
    const Interpretation I = load_facts("A(a)\nA(b)\n");
    CHECK_THROWS_AS(Sample(I, {0}, {0}), DataError);
    CHECK_THROWS_AS(Sample(I, {5}, {}), DataError);
    auto loader = [&](const std::string&) { return I; };
    CHECK_THROWS_AS(load_sample_text("facts = x\npositive = zz\n", loader), DataError);
    CHECK_THROWS_AS(load_sample_text("positive = a\n", loader), DataError);
  }

  TEST_CASE("disjoint union renames and offsets") {
    const Interpretation a = load_facts("A(x)\nr(x,y)\n");
    const Interpretation b = load_facts("B(x)\n");
    auto [u, off] = disjoint_union({a, b});
    CHECK(u.domain_size() == 3);
    CHECK(off == std::vector<int>{0, 2});
    CHECK(u.element(2) == "1:x");
    CHECK(u.fact_count() == 3);
  }

  TEST_CASE("dualized sample: complemented names, swapped examples") {
    const Sample s = fig1();
    const Signature sig = s.interpretation().signature();
    const Sample d = dualize_sample(s, sig);
    CHECK(d.positives() == s.negatives());
    CHECK(d.negatives() == s.positives());
    CHECK(*d.interpretation().concept_extension("A") == s.interpretation().concept_extension("A")->complement());
    // The dual of a fitting concept for the dual sample fits the original, and vice versa.
    const Concept c = parse_concept("forall r.(A or B)");
    CHECK(fits(c, s));
    CHECK(fits(dualize_concept(c), d));
    CHECK(dualize_sample(d, sig).interpretation() == s.interpretation());
  }

  TEST_CASE("types") {
    const Interpretation I = load_facts("A(a)\nB(a)\nA(b)\nelement c\nB(d)\nA(e)\n");
    const TypeTable t = compute_types(I);
    CHECK(t.concept_names == std::vector<std::string>{"A", "B"});
    CHECK(t.types.size() == 4);
    CHECK(t.types.front().empty());
    CHECK(t.type_of[static_cast<std::size_t>(*I.index_of("b"))] == t.type_of[static_cast<std::size_t>(*I.index_of("e"))]);
  }

  TEST_CASE("evaluation") {
    const Sample s = fig1();
    const Interpretation& I = s.interpretation();
    CHECK(fits(parse_concept("forall r.(A or B)"), s));
    CHECK_FALSE(fits(parse_concept("exists r.(A or B)"), s));
    CHECK(coverage_of(evaluate(parse_concept("top"), I), s) == 2);
    // b has two r-successors, one of them outside A and B.
    CHECK(evaluate(parse_concept("exists r.not (A or B)"), I).test(static_cast<std::size_t>(s.negatives()[0])));
    // Elements without successors satisfy every universal restriction.
    CHECK(evaluate(parse_concept("forall r.bot"), I).count() == 4);
  }
}
