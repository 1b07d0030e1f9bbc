#include <doctest.h>

#include <set>

#include "alcfit/oracle.hpp"
#include "alcfit/semantics.hpp"
#include "corpus.hpp"

using namespace alcfit;

TEST_SUITE("oracle") {
  TEST_CASE("enumeration counts") {
    const Signature a{{"A"}, {}};
    // top, bot, A at size 1; every ordered pair under "and" at size 3.
    CHECK(enumerate_concepts({Op::conj}, a, 1).size() == 3);
    CHECK(enumerate_concepts({Op::conj}, a, 3).size() == 9);
    CHECK(enumerate_concepts({Op::conj}, a, 3, Enumeration::commutative).size() == 6);
    CHECK(enumerate_concepts({Op::conj}, a, 2).empty());
    const Signature ar{{"A"}, {"r"}};
    CHECK(enumerate_concepts({Op::exists}, ar, 2).size() == 3);
  }

  TEST_CASE("enumerated concepts are distinct, in the fragment and of the right size") {
    const Signature sig{{"A", "B"}, {"r"}};
    for (int k = 1; k <= 4; ++k) {
      const auto all = enumerate_concepts(OperatorSet::all(), sig, k);
      CHECK(std::set<Concept>(all.begin(), all.end()).size() == all.size());
      for (const auto& c : all) {
        CHECK(size(c) == k);
        CHECK(in_fragment(c, OperatorSet::all()));
      }
    }
  }

  TEST_CASE("ExtensionTable realizes exactly the extensions of enumerated concepts") {
    for (const auto& s : testing::random_corpus(15, 21)) {
      const Interpretation& I = s.interpretation();
      for (const OperatorSet ops : {OperatorSet::all(), OperatorSet{Op::exists, Op::conj}, OperatorSet{Op::forall}}) {
        ExtensionTable table(I, ops);
        for (int k = 1; k <= 4; ++k) {
          std::set<ElementSet> by_enum;
          for_each_concept(ops, I.signature(), k, [&](const Concept& c) {
            by_enum.insert(evaluate(c, I));
            return true;
          });
          std::set<ElementSet> by_table;
          for (const auto& [ext, c] : table.of_size(k)) {
            by_table.insert(ext);
            CHECK(evaluate(c, I) == ext);
            CHECK(size(c) == k);
          }
          CHECK(by_table == by_enum);
        }
      }
    }
  }

  TEST_CASE("brute force on Fig. 1") {
    const Sample s = load_sample(ALCFIT_TEST_DATA_DIR "/fig1/fig1.manifest");
    const auto r = brute_force_fit(s, OperatorSet::all(), 6);
    REQUIRE(r);
    CHECK(r->second == 4);
    CHECK(fits(r->first, s));
    CHECK_FALSE(brute_force_fit(s, {Op::exists, Op::conj}, 7));
    CHECK_FALSE(fitting_of_size(s, OperatorSet::all(), 3));
    CHECK(max_coverage(s, OperatorSet::all(), 3).first == 2);
    CHECK(max_coverage(s, OperatorSet::all(), 4).first == 3);
  }

  TEST_CASE("early stop") {
    int seen = 0;
    for_each_concept(OperatorSet::all(), Signature{{"A"}, {"r"}}, 4, [&](const Concept&) { return ++seen < 5; });
    CHECK(seen == 5);
  }
}
