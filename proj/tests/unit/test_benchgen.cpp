#include <doctest.h>

#include <filesystem>
#include <optional>
#include <json.hpp>

#include "alcfit/benchgen.hpp"
#include "alcfit/error.hpp"
#include "alcfit/oracle.hpp"
#include "alcfit/semantics.hpp"

using namespace alcfit;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("alcfit_gen_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("benchgen") {
  TEST_CASE("hitting-set instance for {{1,3},{2,4}}") {
    const auto g = gen_hitting_set_instance({{1, 3}, {2, 4}}, 2);
    CHECK(g.meta.at("n") == "4");
    CHECK(g.meta.at("m") == "2");
    CHECK(g.meta.at("k_prime") == "8");
    CHECK(g.meta.at("domain_I") == "28");
    CHECK(g.meta.at("domain_J") == "18");
    const Sample& s = g.sample;
    CHECK(s.positives().size() == 1);
    CHECK(s.negatives().size() == 1);
    CHECK(s.interpretation().domain_size() == 46);
    CHECK(fits(parse_concept("exists r.exists s.exists s.exists s.exists s.exists r.exists r.A"), s));
    // H = {1} misses S_2; its path concept must fail on the negative.
    CHECK_FALSE(fits(parse_concept("exists r.exists s.exists s.exists r.exists r.exists r.A"), s));
    // The sink is present in both parts and loops on r and s.
    const auto& I = s.interpretation();
    for (const char* c : {"0:c", "1:c"}) {
      const auto idx = I.index_of(c);
      REQUIRE(idx);
      CHECK(I.role_extension("r")->successors[static_cast<std::size_t>(*idx)] == std::vector<int>{*idx});
      CHECK(I.role_extension("s")->successors[static_cast<std::size_t>(*idx)] == std::vector<int>{*idx});
    }
    // Isolated elements of the construction are declared.
    CHECK(I.index_of("0:a_0'"));
  }

  TEST_CASE("hitting-set input validation") {
    CHECK_THROWS_AS(gen_hitting_set_instance({{1, 3}}, 1), ConfigError);  // 2 not covered
    CHECK_THROWS_AS(gen_hitting_set_instance({{1}}, 0), ConfigError);
    CHECK(parse_set_family("1,3;2,4") == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
    CHECK_THROWS_AS(parse_set_family("1,x"), ConfigError);
  }

  TEST_CASE("depth family") {
    const auto g = gen_depth_family(1);
    const Sample& s = g.sample;
    CHECK(s.positives().size() == 2);
    CHECK(s.negatives().size() == 2);
    CHECK(fits(parse_concept(g.meta.at("target")), s));
    CHECK(parse_concept(g.meta.at("target")) == parse_concept("exists t.exists t.top"));

    // Depth 1 already separates each pair: the t-path is visible one step out.
    CHECK(fits(parse_concept("exists t.top"), s));
    const auto one = gen_depth_family(3, true, 5);
    CHECK(one.sample.example_count() == 8);
    CHECK(fits(parse_concept(one.meta.at("target")), one.sample));
    CHECK(gen_depth_family(2).sample.example_count() == 8);

    // With one example per word, the disjunction of the positives' word paths has depth n and fits.
    for (unsigned seed = 0; seed < 6; ++seed) {
      const auto g = gen_depth_family(3, true, seed);
      const Interpretation& I = g.sample.interpretation();
      std::optional<Concept> c0;
      for (int a : g.sample.positives()) {
        std::string word;
        for (int e = a, step = 0; step < 3; ++step)
          for (const char* r : {"r", "s"})
            if (const auto* ext = I.role_extension(r); ext && !ext->successors[static_cast<std::size_t>(e)].empty()) {
              word += r;
              e = ext->successors[static_cast<std::size_t>(e)].front();
              break;
            }
        Concept cw = Concept::top();
        for (auto it = word.rbegin(); it != word.rend(); ++it) cw = Concept::exists(std::string(1, *it), cw);
        c0 = c0 ? Concept::disjunction(*c0, cw) : cw;
      }
      if (!c0) continue;
      CHECK(quantifier_depth(*c0) == 3);
      CHECK(fits(*c0, g.sample));
    }
  }

  TEST_CASE("most-general family: A fits with every I_w example") {
    for (int n = 2; n <= 4; ++n) {
      const auto g = gen_mostgeneral_family(n);
      CHECK(g.sample.positives().size() == 1);
      CHECK(g.sample.negatives().size() == 1u + (1u << n));
      CHECK(fits(parse_concept("A"), g.sample));
    }
    const auto partial = gen_mostgeneral_family(2, {true, false, false, true});
    CHECK(partial.sample.negatives().size() == 3);
  }

  TEST_CASE("random generator: determinism and shape") {
    RandomSampleParams p;
    p.num_elements = 7;
    p.seed = 7;
    const auto a = gen_random(p);
    const auto b = gen_random(p);
    CHECK(a.sample.interpretation() == b.sample.interpretation());
    CHECK(a.sample.positives() == b.sample.positives());
    p.seed = 8;
    const auto c = gen_random(p);
    CHECK_FALSE((c.sample.interpretation() == a.sample.interpretation() && c.sample.positives() == a.sample.positives()));

    p.edge_density = 1.0;
    p.concept_density = 1.0;
    const auto full = gen_random(p);
    CHECK(full.sample.interpretation().role_extension("r")->pair_count == 49u);
    CHECK(full.sample.interpretation().concept_extension("A")->count() == 7u);

    p.num_pos = 5;
    p.num_neg = 5;
    CHECK_THROWS_AS(gen_random(p), ConfigError);
  }

  TEST_CASE("type stand-in has exactly the requested shape") {
    for (auto [elements, names, types] : {std::array{50, 10, 7}, std::array{200, 20, 33}, std::array{10, 4, 5}}) {
      const auto g = gen_type_stand_in(elements, names, types, 1);
      const TypeTable t = compute_types(g.sample.interpretation());
      CHECK(static_cast<int>(g.sample.interpretation().domain_size()) == elements);
      CHECK(static_cast<int>(t.concept_names.size()) == names);
      CHECK(static_cast<int>(t.types.size()) == types);
    }
    CHECK_THROWS_AS(gen_type_stand_in(3, 10, 5), ConfigError);
    CHECK_THROWS_AS(gen_type_stand_in(100, 2, 9), ConfigError);
  }

  TEST_CASE("generated files round-trip") {
    const auto dir = scratch("files");
    const auto g = gen_hitting_set_instance({{1, 2}, {2, 3}}, 1);
    const auto manifest = write_generated(g, dir, "hs");
    const Sample back = load_sample(manifest);
    CHECK(back.example_count() == 2);
    CHECK(back.interpretation().domain_size() == g.sample.interpretation().domain_size());
    CHECK(back.interpretation().fact_count() == g.sample.interpretation().fact_count());
    const auto meta = nlohmann::json::parse(read_text_file(dir / "hs.meta.json"));
    CHECK(meta["k_prime"] == 6);
  }

  TEST_CASE("name generators") {
    CHECK(generated_concept_name(0) == "A");
    CHECK(generated_concept_name(25) == "Z");
    CHECK(generated_concept_name(26) == "A1");
    CHECK(generated_role_name(0) == "r");
    CHECK(generated_role_name(6) == "r1");
    CHECK(is_concept_name(generated_concept_name(100)));
    CHECK(is_role_name(generated_role_name(100)));
  }
}
