#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

#include "alcfit/cnf.hpp"
#include "alcfit/sample.hpp"

#ifdef ALCFIT_CLI_PATH

using namespace alcfit;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with `args` through the shell; stderr is discarded.
Run cli(const std::string& args) {
  const std::string cmd = std::string(ALCFIT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kFig1 = ALCFIT_TEST_DATA_DIR "/fig1/fig1.manifest";

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("alcfit_cli_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("fit: Fig. 1") {
    const Run r = cli("fit " + kFig1 + " --ops neg,and,or,exists,forall");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "status=fitted size=4"));
    const Run el = cli("fit " + kFig1 + " --ops exists,and --max-size 10");
    CHECK(el.code == 20);
  }

  TEST_CASE("fit: approximate mode and reports") {
    const auto dir = scratch("report");
    const Run r = cli("fit " + kFig1 + " --mode approx --timeout 30 --report " + (dir / "r.json").string());
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(read_text_file(dir / "r.json"));
    CHECK(j["coverage"] == 3);

    // A contradictory sample: the same interpretation as positive and negative.
    write_text_file(dir / "x.facts", "A(a)\n");
    write_text_file(dir / "x.manifest", "facts = x.facts\npositive = a\nfacts = x.facts\nnegative = a\n");
    const Run bad = cli("fit " + (dir / "x.manifest").string() + " --mode approx --max-size 3");
    CHECK(bad.code == 10);
    CHECK(contains(bad.out, "coverage=1/2"));
  }

  TEST_CASE("fit: timeout exit code") {
    const auto dir = scratch("timeout");
    CHECK(cli("gen hitting-set --sets \"1,2,3;3,4,5;1,5\" --k 2 --out " + dir.string()).code == 0);
    const Run r = cli("fit " + (dir / "hitting-set.manifest").string() + " --timeout 0");
    CHECK(r.code == 30);
  }

  TEST_CASE("fit: usage and data errors") {
    CHECK(cli("fit " + kFig1 + " --ops exists,bogus").code == 64);
    CHECK(cli("fit " + kFig1 + " --mode sideways").code != 0);
    CHECK(cli("fit /nonexistent.manifest").code == 65);
    CHECK(cli("frobnicate").code != 0);
  }

  TEST_CASE("fit: cross-validation folds") {
    const auto dir = scratch("cv");
    CHECK(cli("gen random --seed 3 --elements 20 --pos 6 --neg 6 --out " + dir.string()).code == 0);
    const Run r = cli("fit " + (dir / "random.manifest").string() +
                      " --mode approx --max-size 4 --folds 3 --report " + (dir / "cv.json").string());
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(read_text_file(dir / "cv.json"));
    CHECK(j["folds"].size() == 3);
  }

  TEST_CASE("encode: DIMACS output and solver round trip") {
    const auto dir = scratch("encode");
    const auto k4 = (dir / "k4.cnf").string();
    const auto k3 = (dir / "k3.cnf").string();
    CHECK(cli("encode " + kFig1 + " -k 4 -o " + k4).code == 0);
    CHECK(cli("encode " + kFig1 + " -k 3 -o " + k3).code == 0);
    const std::string text = read_text_file(k4);
    CHECK(contains(text, "c "));
    CHECK(contains(text, "p cnf "));
    CHECK(cli("solve-dimacs " + k4).code == 10);
    CHECK(cli("solve-dimacs " + k3).code == 20);

    // Base encoding toggles: clause counts follow the plain encoding.
    const auto plain = (dir / "plain.cnf").string();
    CHECK(cli("encode " + kFig1 + " -k 4 --no-typed --no-templates --no-pattern-bans -o " + plain).code == 0);
    const Cnf a = parse_dimacs(read_text_file(k4));
    const Cnf b = parse_dimacs(read_text_file(plain));
    CHECK(a.num_clauses() != b.num_clauses());
    CHECK(cli("solve-dimacs " + plain).code == 10);
  }

  TEST_CASE("fit --emit-dimacs writes the winning encoding") {
    const auto dir = scratch("emit");
    const auto path = (dir / "fit.cnf").string();
    CHECK(cli("fit " + kFig1 + " --emit-dimacs " + path).code == 0);
    CHECK(cli("solve-dimacs " + path).code == 10);
  }

  TEST_CASE("external backend through the CLI") {
    const Run r = cli("fit " + kFig1 + " --backend external --solver-cmd \"" + std::string(ALCFIT_CLI_PATH) +
                      " solve-dimacs\"");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "size=4"));
  }

  TEST_CASE("verify") {
    const Run ok = cli("verify " + kFig1 + " \"forall r.(A or B)\"");
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "fits yes"));
    const Run top = cli("verify " + kFig1 + " top");
    CHECK(top.code == 1);
    CHECK(contains(top.out, "coverage 2/3"));
    CHECK(cli("verify " + kFig1 + " \"forall r.(A or\"").code == 65);
  }

  TEST_CASE("dualize") {
    const Run c = cli("dualize --concept \"exists r.(A and top)\"");
    CHECK(c.code == 0);
    CHECK(contains(c.out, "forall r.(A or bot)"));
    const Run twice = cli("dualize --concept \"" + std::string("forall r.(A or bot)") + "\"");
    CHECK(contains(twice.out, "exists r.(A and top)"));

    // Fitting the dual sample in the dual fragment gives a concept whose dual fits Fig. 1.
    const auto dir = scratch("dual");
    CHECK(cli("dualize " + kFig1 + " --out " + dir.string() + " --stem d").code == 0);
    const Run fit = cli("fit " + (dir / "d.manifest").string());
    REQUIRE(fit.code == 0);
    const std::string line = fit.out.substr(fit.out.rfind("concept=") + 8);
    const std::string learned = line.substr(0, line.find(" time="));
    const Run back = cli("dualize --concept \"" + learned + "\"");
    std::string dual_text = back.out.substr(0, back.out.find('\n'));
    CHECK(cli("verify " + kFig1 + " \"" + dual_text + "\"").code == 0);
  }

  TEST_CASE("gen: hitting set, depth, random determinism") {
    const auto dir = scratch("gen");
    CHECK(cli("gen hitting-set --sets \"1,3;2,4\" --k 2 --out " + dir.string()).code == 0);
    const Sample hs = load_sample(dir / "hitting-set.manifest");
    CHECK(hs.interpretation().domain_size() == 46);
    const auto meta = nlohmann::json::parse(read_text_file(dir / "hitting-set.meta.json"));
    CHECK(meta["k_prime"] == 8);

    CHECK(cli("gen depth --n 1 --out " + dir.string()).code == 0);
    CHECK(load_sample(dir / "depth.manifest").example_count() == 4);

    CHECK(cli("gen random --seed 7 --out " + dir.string() + " --stem r1").code == 0);
    CHECK(cli("gen random --seed 7 --out " + dir.string() + " --stem r2").code == 0);
    CHECK(read_text_file(dir / "r1.facts") == read_text_file(dir / "r2.facts"));
    CHECK(cli("gen nonsense --out " + dir.string()).code != 0);
  }
}

#endif
