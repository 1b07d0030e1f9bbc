// alcfit: command-line front end for bounded fitting of ALC concepts.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "alcfit/benchgen.hpp"
#include "alcfit/cnf.hpp"
#include "alcfit/concept.hpp"
#include "alcfit/encoder.hpp"
#include "alcfit/error.hpp"
#include "alcfit/fitter.hpp"
#include "alcfit/sample.hpp"
#include "alcfit/semantics.hpp"
#include "alcfit/solver.hpp"

namespace fs = std::filesystem;
using namespace alcfit;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

struct EncodingFlags {
  std::string ops = "neg,and,or,exists,forall";
  bool no_typed = false;
  bool no_templates = false;
  bool no_bans = false;
  int threshold = 10;

  void attach(CLI::App* cmd) {
    cmd->add_option("--ops", ops, "Operators: comma list of neg,and,or,exists,forall")->capture_default_str();
    cmd->add_flag("--no-typed", no_typed, "Plain name semantics instead of the type encoding");
    cmd->add_flag("--no-templates", no_templates, "Disable topology templates");
    cmd->add_flag("--no-pattern-bans", no_bans, "Disable redundant-pattern bans");
    cmd->add_option("--template-threshold", threshold, "Largest size covered by full topology templates")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  }
  EncodingOptions options() const {
    EncodingOptions o;
    o.typed = !no_typed;
    o.templates = !no_templates;
    o.pattern_bans = !no_bans;
    o.template_threshold = threshold;
    return o;
  }
};

struct SolverFlags {
  std::optional<std::string> backend;
  std::optional<unsigned> seed;
  std::optional<std::string> command;

  void attach(CLI::App* cmd) {
    cmd->add_option("--backend", backend, "Solver backend: cadical or external (env ALCFIT_BACKEND)");
    cmd->add_option("--seed", seed, "Solver seed (env ALCFIT_SEED)");
    cmd->add_option("--solver-cmd", command, "External solver command (env ALCFIT_SOLVER_CMD)");
  }
  SolverConfig config() const {
    SolverConfig c = solver_config_from_env();
    if (backend) c.backend = *backend;
    if (seed) c.seed = *seed;
    if (command) c.external_command = *command;
    return c;
  }
};

RenderStyle style_of(bool unicode) { return unicode ? RenderStyle::unicode : RenderStyle::ascii; }

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") std::cout << text;
  else write_text_file(path, text);
}

int cmd_fit(const std::string& manifest, const EncodingFlags& enc, const SolverFlags& sol, int max_size,
            const std::string& mode, std::optional<double> timeout, int horizon, const std::string& emit_dimacs,
            const std::string& report, int folds, unsigned cv_seed, bool unicode) {
  const Sample sample = load_sample(manifest);
  FitConfig cfg;
  cfg.ops = OperatorSet::parse(enc.ops);
  cfg.max_size = max_size;
  cfg.timeout_seconds = timeout;
  cfg.encoding = enc.options();
  cfg.solver = sol.config();
  cfg.time_horizon = horizon;
  if (mode == "exact") cfg.mode = FitMode::exact;
  else if (mode == "approx") cfg.mode = FitMode::approximate;
  else throw ConfigError("mode must be exact or approx");

  if (folds > 0) {
    const auto cv = cross_validate(sample, cfg, folds, cv_seed);
    for (std::size_t f = 0; f < cv.folds.size(); ++f) {
      const auto& fr = cv.folds[f];
      std::cout << "fold " << f + 1 << " status=" << to_string(fr.status) << " train=" << fr.train_accuracy
                << " test=" << fr.test_accuracy;
      if (fr.best) std::cout << " size=" << fr.best->node_count() << " concept=" << render_concept(*fr.best, style_of(unicode));
      std::cout << "\n";
    }
    std::cout << "mean test accuracy " << cv.mean_test_accuracy << ", mean size " << cv.mean_size << "\n";
    if (!report.empty()) write_text_file(report, cross_validation_json(cv));
    return 0;
  }

  const FitResult result = fit(sample, cfg);
  std::cout << summary_text(result, style_of(unicode));
  if (result.best) std::cout << render_concept(*result.best, style_of(unicode)) << "\n";
  if (!report.empty()) write_text_file(report, summary_json(result) + "\n");
  if (!emit_dimacs.empty() && result.best) {
    const Encoding e = build_encoding(sample, result.size(), cfg.ops, cfg.encoding);
    write_text_file(emit_dimacs, export_dimacs(e.cnf, e.vars.dimacs_comments(&sample.interpretation().elements())));
  }
  return exit_code(result.status);
}

int cmd_encode(const std::string& manifest, const EncodingFlags& enc, int k, const std::string& out) {
  const Sample sample = load_sample(manifest);
  const Encoding e = build_encoding(sample, k, OperatorSet::parse(enc.ops), enc.options());
  write_or_print(out, export_dimacs(e.cnf, e.vars.dimacs_comments(&sample.interpretation().elements())));
  std::cerr << "vars=" << e.cnf.num_vars() << " clauses=" << e.cnf.num_clauses();
  for (std::size_t g = 0; g < kClauseGroupCount; ++g)
    std::cerr << " " << to_string(static_cast<ClauseGroup>(g)) << "=" << e.cnf.count(static_cast<ClauseGroup>(g));
  std::cerr << "\n";
  return 0;
}

int cmd_verify(const std::string& manifest, const std::string& text, bool unicode) {
  const Sample sample = load_sample(manifest);
  const Concept c = parse_concept(text);
  const VerifyReport rep = verify(c, sample);
  std::cout << "concept " << render_concept(c, style_of(unicode)) << "\n"
            << "size " << size(c) << "\n"
            << "fits " << (rep.fits ? "yes" : "no") << "\n"
            << "coverage " << rep.coverage << "/" << sample.example_count() << "\n";
  if (!rep.misclassified.empty()) {
    std::cout << "misclassified";
    for (int e : rep.misclassified) std::cout << " " << sample.interpretation().element(e);
    std::cout << "\n";
  }
  return rep.fits ? 0 : 1;
}

Signature parse_signature(const std::string& text) {
  Signature sig;
  std::stringstream ss(text);
  for (std::string w; std::getline(ss, w, ',');) {
    if (w.empty()) continue;
    if (is_concept_name(w)) sig.concept_names.insert(w);
    else if (is_role_name(w)) sig.role_names.insert(w);
    else throw ConfigError("bad signature symbol '" + w + "'");
  }
  return sig;
}

int cmd_dualize(const std::string& manifest, const std::string& concept_text, const std::string& ops,
                const std::optional<std::string>& signature, const std::string& out_dir, const std::string& stem,
                bool unicode) {
  if (!concept_text.empty()) {
    std::cout << render_concept(dualize_concept(parse_concept(concept_text)), style_of(unicode)) << "\n";
  }
  if (!ops.empty()) std::cout << OperatorSet::parse(ops).dual().to_string() << "\n";
  if (!manifest.empty()) {
    const Sample sample = load_sample(manifest);
    const Signature sig = signature ? parse_signature(*signature) : sample.interpretation().signature();
    const Sample dual = dualize_sample(sample, sig);
    if (out_dir.empty()) {
      std::cout << save_facts(dual.interpretation());
    } else {
      std::cout << save_sample(dual, out_dir, stem).string() << "\n";
    }
  }
  return 0;
}

struct GenFlags {
  std::string generator;
  std::string out = ".";
  std::string stem;
  unsigned seed = 0;
  std::string sets;
  int k = 1;
  int n = 1;
  bool one_per_word = false;
  RandomSampleParams random;
  int elements = 19221;
  int names = 133;
  int types = 105;
};

int cmd_gen(const GenFlags& g) {
  std::optional<GeneratedSample> gen;
  if (g.generator == "hitting-set") {
    gen = gen_hitting_set_instance(parse_set_family(g.sets), g.k);
  } else if (g.generator == "depth") {
    gen = gen_depth_family(g.n, g.one_per_word, g.seed);
  } else if (g.generator == "mostgeneral") {
    gen = gen_mostgeneral_family(g.n);
  } else if (g.generator == "random") {
    RandomSampleParams p = g.random;
    p.seed = g.seed;
    gen = gen_random(p);
  } else if (g.generator == "types") {
    gen = gen_type_stand_in(g.elements, g.names, g.types, g.seed);
  } else {
    throw ConfigError("unknown generator '" + g.generator + "'");
  }
  const std::string stem = g.stem.empty() ? g.generator : g.stem;
  std::cout << write_generated(*gen, g.out, stem).string() << "\n";
  return 0;
}

int cmd_solve_dimacs(const std::string& path, unsigned seed, std::optional<double> timeout) {
  const Cnf cnf = parse_dimacs(read_text_file(path));
  SolverConfig cfg;
  cfg.seed = seed;
  auto session = make_session(cfg);
  session->add_cnf(cnf);
  SolveBudget budget;
  if (timeout)
    budget.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*timeout));
  const SolveOutcome out = session->solve({}, budget);
  std::cout << format_solver_output(out);
  return out.status == SolveStatus::sat ? 10 : out.status == SolveStatus::unsat ? 20 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded fitting of ALC concepts to positive and negative examples"};
  app.require_subcommand(1);

  // fit
  auto* fit_cmd = app.add_subcommand("fit", "Find a smallest fitting concept, or the best approximation");
  std::string manifest;
  EncodingFlags enc;
  SolverFlags sol;
  int max_size = 12;
  std::string mode = "exact";
  std::optional<double> timeout;
  int horizon = 0;
  std::string emit_dimacs, report;
  int folds = 0;
  unsigned cv_seed = 0;
  bool unicode = false;
  fit_cmd->add_option("manifest", manifest, "Sample manifest")->required();
  enc.attach(fit_cmd);
  sol.attach(fit_cmd);
  fit_cmd->add_option("--max-size", max_size, "Largest concept size to try")->capture_default_str()->check(CLI::PositiveNumber);
  fit_cmd->add_option("--mode", mode, "exact or approx")->capture_default_str()->check(CLI::IsMember({"exact", "approx"}));
  fit_cmd->add_option("--timeout", timeout, "Wall-clock budget in seconds")->check(CLI::NonNegativeNumber);
  fit_cmd->add_option("--horizon", horizon, "Approx mode: sizes the time budget is spread over (default max size)");
  fit_cmd->add_option("--emit-dimacs", emit_dimacs, "Write the encoding of the returned size as DIMACS");
  fit_cmd->add_option("--report", report, "Write a JSON run report");
  fit_cmd->add_option("--folds", folds, "Run stratified cross-validation with this many folds");
  fit_cmd->add_option("--cv-seed", cv_seed, "Shuffle seed for cross-validation");
  fit_cmd->add_flag("--unicode", unicode, "Print concepts with logic symbols");

  // encode
  auto* enc_cmd = app.add_subcommand("encode", "Write the size-k encoding as DIMACS");
  EncodingFlags enc2;
  int k = 1;
  std::string enc_out = "-";
  enc_cmd->add_option("manifest", manifest, "Sample manifest")->required();
  enc_cmd->add_option("-k,--size", k, "Concept size")->required()->check(CLI::PositiveNumber);
  enc_cmd->add_option("-o,--out", enc_out, "Output path, - for stdout")->capture_default_str();
  enc2.attach(enc_cmd);

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "Check a concept against a sample");
  std::string concept_text;
  ver_cmd->add_option("manifest", manifest, "Sample manifest")->required();
  ver_cmd->add_option("concept", concept_text, "Concept text")->required();
  ver_cmd->add_flag("--unicode", unicode, "Print concepts with logic symbols");

  // dualize
  auto* dual_cmd = app.add_subcommand("dualize", "Dualize a concept, an operator set or a sample");
  std::string dual_concept, dual_ops, dual_manifest, dual_out, dual_stem = "dual";
  std::optional<std::string> signature;
  dual_cmd->add_option("manifest", dual_manifest, "Sample manifest");
  dual_cmd->add_option("--concept", dual_concept, "Concept to dualize");
  dual_cmd->add_option("--ops", dual_ops, "Operator set to dualize");
  dual_cmd->add_option("--signature", signature, "Concept names to complement (default: those in the sample)");
  dual_cmd->add_option("--out", dual_out, "Directory for the dual sample (default: print facts)");
  dual_cmd->add_option("--stem", dual_stem, "File stem for the dual sample")->capture_default_str();
  dual_cmd->add_flag("--unicode", unicode, "Print concepts with logic symbols");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate benchmark samples");
  GenFlags g;
  gen_cmd->add_option("generator", g.generator, "hitting-set, depth, mostgeneral, random or types")
      ->required()
      ->check(CLI::IsMember({"hitting-set", "depth", "mostgeneral", "random", "types"}));
  gen_cmd->add_option("--out", g.out, "Output directory")->capture_default_str();
  gen_cmd->add_option("--stem", g.stem, "File stem (default: generator name)");
  gen_cmd->add_option("--seed", g.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--sets", g.sets, "hitting-set: family such as \"1,3;2,4\"");
  gen_cmd->add_option("--k", g.k, "hitting-set: hitting set size")->capture_default_str();
  gen_cmd->add_option("--n", g.n, "depth, mostgeneral: path length")->capture_default_str();
  gen_cmd->add_flag("--one-per-word", g.one_per_word, "depth: one example per word");
  gen_cmd->add_option("--elements", g.random.num_elements, "random: domain size")->capture_default_str();
  gen_cmd->add_option("--concepts", g.random.num_concept_names, "random: concept names")->capture_default_str();
  gen_cmd->add_option("--roles", g.random.num_role_names, "random: role names")->capture_default_str();
  gen_cmd->add_option("--density", g.random.edge_density, "random: edge probability")->capture_default_str();
  gen_cmd->add_option("--concept-density", g.random.concept_density, "random: membership probability")->capture_default_str();
  gen_cmd->add_option("--pos", g.random.num_pos, "random: positives")->capture_default_str();
  gen_cmd->add_option("--neg", g.random.num_neg, "random: negatives")->capture_default_str();
  gen_cmd->add_option("--type-elements", g.elements, "types: domain size")->capture_default_str();
  gen_cmd->add_option("--names", g.names, "types: concept names")->capture_default_str();
  gen_cmd->add_option("--types", g.types, "types: distinct types")->capture_default_str();

  // solve-dimacs
  auto* solve_cmd = app.add_subcommand("solve-dimacs", "Solve a DIMACS file; prints s/v lines, exits 10 or 20");
  std::string dimacs_path;
  unsigned solve_seed = 0;
  std::optional<double> solve_timeout;
  solve_cmd->add_option("file", dimacs_path, "DIMACS CNF file")->required();
  solve_cmd->add_option("--seed", solve_seed, "Solver seed");
  solve_cmd->add_option("--timeout", solve_timeout, "Wall-clock budget in seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*fit_cmd)
      return cmd_fit(manifest, enc, sol, max_size, mode, timeout, horizon, emit_dimacs, report, folds, cv_seed, unicode);
    if (*enc_cmd) return cmd_encode(manifest, enc2, k, enc_out);
    if (*ver_cmd) return cmd_verify(manifest, concept_text, unicode);
    if (*dual_cmd) {
      if (dual_manifest.empty() && dual_concept.empty() && dual_ops.empty())
        throw ConfigError("dualize needs a manifest, --concept or --ops");
      return cmd_dualize(dual_manifest, dual_concept, dual_ops, signature, dual_out, dual_stem, unicode);
    }
    if (*gen_cmd) return cmd_gen(g);
    if (*solve_cmd) return cmd_solve_dimacs(dimacs_path, solve_seed, solve_timeout);
  } catch (const ConfigError& e) {
    std::cerr << "alcfit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SoundnessError& e) {
    std::cerr << "alcfit: internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ParseError& e) {
    std::cerr << "alcfit: " << e.what() << "\n";
    return kExitData;
  } catch (const DataError& e) {
    std::cerr << "alcfit: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "alcfit: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
