#include <doctest.h>

#include <atomic>
#include <json.hpp>

#include "alcfit/benchgen.hpp"
#include "alcfit/error.hpp"
#include "alcfit/fitter.hpp"
#include "alcfit/oracle.hpp"
#include "alcfit/semantics.hpp"
#include "corpus.hpp"

using namespace alcfit;

namespace {

Sample fig1() { return load_sample(ALCFIT_TEST_DATA_DIR "/fig1/fig1.manifest"); }

}  // namespace

TEST_SUITE("fitter") {
  TEST_CASE("Fig. 1 in ALC: size 4") {
    const FitResult r = bounded_fit(fig1(), {});
    REQUIRE(r.status == FitStatus::fitted);
    CHECK(r.size() == 4);
    CHECK(verify(*r.best, fig1()).fits);
    CHECK(r.per_size.size() == 4);
    CHECK(r.coverage == 3);
    CHECK(exit_code(r.status) == 0);
  }

  TEST_CASE("Fig. 1 in EL: no fit up to 10") {
    FitConfig cfg;
    cfg.ops = {Op::exists, Op::conj};
    cfg.max_size = 10;
    const FitResult r = bounded_fit(fig1(), cfg);
    CHECK(r.status == FitStatus::no_fit_within_bound);
    CHECK_FALSE(r.best);
    CHECK(exit_code(r.status) == 20);
  }

  TEST_CASE("every encoding variant finds the same minimal size") {
    for (const auto& s : testing::random_corpus(20, 8)) {
      const auto oracle = brute_force_fit(s, OperatorSet::all(), 5);
      for (int variant = 0; variant < 8; ++variant) {
        FitConfig cfg;
        cfg.max_size = 5;
        cfg.encoding.typed = variant & 1;
        cfg.encoding.templates = variant & 2;
        cfg.encoding.pattern_bans = variant & 4;
        const FitResult r = bounded_fit(s, cfg);
        CAPTURE(variant);
        CHECK(r.size() == (oracle ? oracle->second : 0));
      }
    }
  }

  TEST_CASE("empty example sets are fitted by top") {
    const Interpretation I = load_facts("A(a)\n");
    const FitResult r = bounded_fit(Sample(I, {}, {}), {});
    REQUIRE(r.best);
    CHECK(*r.best == Concept::top());
  }

  TEST_CASE("approximation on a fittable sample ends fitted") {
    FitConfig cfg;
    cfg.mode = FitMode::approximate;
    const FitResult r = fit(fig1(), cfg);
    CHECK(r.status == FitStatus::fitted);
    CHECK(r.coverage == 3);
    CHECK(r.size() == 4);
    REQUIRE_FALSE(r.trace.empty());
    CHECK(r.trace.back().coverage == 3);
    for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i].coverage > r.trace[i - 1].coverage);
  }

  TEST_CASE("approximation under a size bound matches the oracle") {
    for (const auto& s : testing::random_corpus(25, 13)) {
      for (bool incremental : {true, false}) {
        FitConfig cfg;
        cfg.mode = FitMode::approximate;
        cfg.max_size = 3;
        cfg.incremental = incremental;
        const FitResult r = approx_fit(s, cfg);
        CHECK(r.coverage == max_coverage(s, OperatorSet::all(), 3).first);
        CHECK((r.status == FitStatus::fitted) == (r.coverage == static_cast<int>(s.example_count())));
      }
    }
  }

  TEST_CASE("an exhausted budget reports a timeout") {
    const auto gen = gen_hitting_set_instance({{1, 2, 3}, {3, 4, 5}, {1, 5}}, 2);
    FitConfig cfg;
    cfg.timeout_seconds = 0.0;
    const FitResult r = bounded_fit(gen.sample, cfg);
    CHECK(r.status == FitStatus::timed_out);
    CHECK(exit_code(r.status) == 30);

    std::atomic<bool> cancel{true};
    FitConfig c2;
    c2.cancel = &cancel;
    c2.mode = FitMode::approximate;
    CHECK(fit(gen.sample, c2).status == FitStatus::timed_out);
  }

  TEST_CASE("configuration is validated") {
    FitConfig cfg;
    cfg.max_size = 0;
    CHECK_THROWS_AS(bounded_fit(fig1(), cfg), ConfigError);
    FitConfig neg;
    neg.timeout_seconds = -1.0;
    CHECK_THROWS_AS(bounded_fit(fig1(), neg), ConfigError);
  }

  TEST_CASE("verify reports misclassified examples") {
    const Sample s = fig1();
    const VerifyReport top = verify(Concept::top(), s);
    CHECK_FALSE(top.fits);
    CHECK(top.coverage == 2);
    CHECK(top.misclassified == s.negatives());
    CHECK(verify(parse_concept("forall r.(A or B)"), s).fits);
  }

  TEST_CASE("reports") {
    const FitResult r = bounded_fit(fig1(), {});
    const std::string text = summary_text(r);
    CHECK(text.find("status=fitted") != std::string::npos);
    const auto j = nlohmann::json::parse(summary_json(r));
    CHECK(j["status"] == "fitted");
    CHECK(j["size"] == 4);
    CHECK(j["sizes"].size() == 4);
  }

  TEST_CASE("cross-validation folds partition the examples") {
    RandomSampleParams p;
    p.num_elements = 16;
    p.num_pos = 5;
    p.num_neg = 5;
    p.seed = 4;
    const auto gen = gen_random(p);
    FitConfig cfg;
    cfg.max_size = 5;
    cfg.mode = FitMode::approximate;
    const auto rep = cross_validate(gen.sample, cfg, 5, 1);
    REQUIRE(rep.folds.size() == 5);
    int held = 0;
    for (const auto& f : rep.folds) {
      held += f.test_examples;
      CHECK(f.train_examples + f.test_examples == 10);
      CHECK(f.test_accuracy >= 0.0);
      CHECK(f.test_accuracy <= 1.0);
    }
    CHECK(held == 10);
    const auto j = nlohmann::json::parse(cross_validation_json(rep));
    CHECK(j["folds"].size() == 5);
    CHECK_THROWS_AS(cross_validate(gen.sample, cfg, 1, 1), ConfigError);
  }
}
