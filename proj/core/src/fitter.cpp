#include "alcfit/fitter.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "alcfit/error.hpp"
#include "alcfit/semantics.hpp"

namespace alcfit {

const char* to_string(FitMode mode) { return mode == FitMode::exact ? "exact" : "approx"; }

const char* to_string(FitStatus status) {
  switch (status) {
    case FitStatus::fitted: return "fitted";
    case FitStatus::no_fit_within_bound: return "no_fit_within_bound";
    case FitStatus::approximate: return "approximate";
    case FitStatus::timed_out: return "timed_out";
  }
  return "?";
}

int exit_code(FitStatus status) {
  switch (status) {
    case FitStatus::fitted: return 0;
    case FitStatus::approximate: return 10;
    case FitStatus::no_fit_within_bound: return 20;
    case FitStatus::timed_out: return 30;
  }
  return 70;
}

void FitConfig::validate() const {
  if (max_size < 1) throw ConfigError("max size must be at least 1");
  if (encoding.template_threshold < 1) throw ConfigError("template threshold must be at least 1");
  if (timeout_seconds && *timeout_seconds < 0) throw ConfigError("timeout must be non-negative");
  if (time_horizon < 0) throw ConfigError("time horizon must be non-negative");
}

VerifyReport verify(const Concept& c, const Sample& sample) {
  VerifyReport r;
  const ElementSet ext = evaluate(c, sample.interpretation());
  for (int a : sample.positives())
    if (!ext.test(static_cast<std::size_t>(a))) r.misclassified.push_back(a);
  for (int b : sample.negatives())
    if (ext.test(static_cast<std::size_t>(b))) r.misclassified.push_back(b);
  r.coverage = static_cast<int>(sample.example_count() - r.misclassified.size());
  r.fits = r.misclassified.empty();
  return r;
}

namespace {

class Timer {
public:
  explicit Timer(const FitConfig& cfg) : start_(Clock::now()), cancel_(cfg.cancel) {
    if (cfg.timeout_seconds)
      deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*cfg.timeout_seconds));
  }
  std::optional<Clock::time_point> deadline() const { return deadline_; }
  bool expired() const {
    if (cancel_ && cancel_->load()) return true;
    return deadline_ && Clock::now() >= *deadline_;
  }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
  SolveBudget budget(std::optional<Clock::time_point> until) const { return SolveBudget{until, std::nullopt, cancel_}; }

private:
  Clock::time_point start_;
  std::optional<Clock::time_point> deadline_;
  const std::atomic<bool>* cancel_;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Concept checked_decode(const SolveOutcome& out, const Encoding& enc, OperatorSet ops) {
  Concept c = decode_model([&](int v) { return out.value(v); }, enc.vars);
  if (c.node_count() != enc.vars.k()) throw SoundnessError("decoded concept has the wrong size");
  if (!in_fragment(c, ops)) throw SoundnessError("decoded concept leaves the fragment");
  return c;
}

FitResult trivial_result(const Sample& sample, const Timer& timer) {
  FitResult r;
  r.status = FitStatus::fitted;
  r.best = Concept::top();
  r.examples = static_cast<int>(sample.example_count());
  r.trace.push_back({1, 0});
  r.seconds = timer.elapsed();
  return r;
}

}  // namespace

FitResult bounded_fit(const Sample& sample, const FitConfig& cfg) {
  cfg.validate();
  const Timer timer(cfg);
  if (sample.example_count() == 0) return trivial_result(sample, timer);

  FitResult result;
  result.examples = static_cast<int>(sample.example_count());
  for (int k = 1; k <= cfg.max_size; ++k) {
    if (timer.expired()) {
      result.status = FitStatus::timed_out;
      break;
    }
    SizeStats st;
    st.k = k;
    auto t0 = Clock::now();
    Encoding enc = build_encoding(sample, k, cfg.ops, cfg.encoding);
    auto session = make_session(cfg.solver);
    session->add_cnf(enc.cnf);
    st.encode_seconds = seconds_since(t0);
    st.vars = enc.vars.num_vars();
    st.clauses = enc.cnf.num_clauses();

    const SolveOutcome out = session->solve({}, timer.budget(timer.deadline()));
    st.outcome = out.status;
    st.solves = 1;
    st.solve_seconds = out.seconds;
    result.per_size.push_back(st);

    if (out.status == SolveStatus::unknown) {
      result.status = FitStatus::timed_out;
      break;
    }
    if (out.status == SolveStatus::sat) {
      Concept c = checked_decode(out, enc, cfg.ops);
      const VerifyReport rep = verify(c, sample);
      if (!rep.fits) throw SoundnessError("decoded concept " + render_concept(c) + " does not fit");
      result.status = FitStatus::fitted;
      result.best = c;
      result.coverage = rep.coverage;
      result.trace.push_back({k, rep.coverage});
      result.per_size.back().best_coverage = rep.coverage;
      break;
    }
  }
  result.seconds = timer.elapsed();
  return result;
}

FitResult approx_fit(const Sample& sample, const FitConfig& cfg) {
  cfg.validate();
  const Timer timer(cfg);
  if (sample.example_count() == 0) return trivial_result(sample, timer);

  FitResult result;
  const int total = static_cast<int>(sample.example_count());
  result.examples = total;
  const int horizon = cfg.time_horizon > 0 ? cfg.time_horizon : cfg.max_size;
  int m = 1;
  bool interrupted = false;

  auto record = [&](const Concept& c, int k) {
    const VerifyReport rep = verify(c, sample);
    if (rep.coverage < m) throw SoundnessError("decoded concept " + render_concept(c) + " misses the coverage bound");
    if (rep.coverage > result.coverage || !result.best) {
      result.best = c;
      result.coverage = rep.coverage;
      result.trace.push_back({k, rep.coverage});
    }
    m = rep.coverage + 1;
  };

  for (int k = 1; k <= cfg.max_size && !interrupted; ++k) {
    if (timer.expired()) {
      interrupted = true;
      break;
    }
    // Even share of what is left over the remaining sizes; unspent time rolls forward.
    std::optional<Clock::time_point> slice = timer.deadline();
    if (slice) {
      const int left = std::max(horizon, k) - k + 1;
      slice = Clock::now() + (*slice - Clock::now()) / left;
    }

    SizeStats st;
    st.k = k;
    auto t0 = Clock::now();
    Encoding enc = build_encoding(sample, k, cfg.ops, cfg.encoding, false);
    std::unique_ptr<SatSession> session;
    std::size_t fed = 0;
    // The counter writes into the Cnf; new clauses are forwarded to the session.
    CoverageCounter counter(sample, enc.vars);
    ClauseWriter writer(enc.vars, enc.cnf);
    auto sync = [&]() {
      session->reserve_vars(enc.vars.num_vars());
      for (; fed < enc.cnf.num_clauses(); ++fed) session->add_clause(enc.cnf.clause(fed), enc.cnf.group(fed));
    };
    auto fresh_session = [&]() {
      session = make_session(cfg.solver);
      fed = 0;
      sync();
    };
    counter.require(m, writer);
    enc.cnf.declare_vars(enc.vars.num_vars());
    fresh_session();
    st.encode_seconds = seconds_since(t0);

    while (true) {
      const SolveOutcome out = session->solve({}, timer.budget(slice));
      ++st.solves;
      st.solve_seconds += out.seconds;
      st.outcome = out.status;
      if (out.status == SolveStatus::unknown) {
        if (timer.expired()) interrupted = true;
        break;
      }
      if (out.status == SolveStatus::unsat) break;
      record(checked_decode(out, enc, cfg.ops), k);
      if (result.coverage == total) break;
      counter.require(m, writer);
      enc.cnf.declare_vars(enc.vars.num_vars());
      if (cfg.incremental) sync();
      else fresh_session();
    }
    st.vars = enc.vars.num_vars();
    st.clauses = enc.cnf.num_clauses();
    st.best_coverage = result.coverage;
    result.per_size.push_back(st);
    if (result.coverage == total) break;
  }

  if (!result.best) result.status = FitStatus::timed_out;
  else if (result.coverage == total) result.status = FitStatus::fitted;
  else result.status = FitStatus::approximate;
  result.seconds = timer.elapsed();
  return result;
}

FitResult fit(const Sample& sample, const FitConfig& cfg) {
  return cfg.mode == FitMode::exact ? bounded_fit(sample, cfg) : approx_fit(sample, cfg);
}

std::string summary_text(const FitResult& result, RenderStyle style) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  for (const auto& s : result.per_size)
    out << "k=" << s.k << " vars=" << s.vars << " clauses=" << s.clauses << " status=" << to_string(s.outcome)
        << " solves=" << s.solves << " encode=" << s.encode_seconds << "s solve=" << s.solve_seconds
        << "s best_m=" << s.best_coverage << "\n";
  out << "result status=" << to_string(result.status);
  if (result.best)
    out << " size=" << result.size() << " coverage=" << result.coverage << "/" << result.examples
        << " concept=" << render_concept(*result.best, style);
  out << " time=" << result.seconds << "s\n";
  return out.str();
}

std::string summary_json(const FitResult& result) {
  nlohmann::json j;
  j["status"] = to_string(result.status);
  j["examples"] = result.examples;
  j["coverage"] = result.coverage;
  j["seconds"] = result.seconds;
  if (result.best) {
    j["concept"] = render_concept(*result.best);
    j["size"] = result.size();
  } else {
    j["concept"] = nullptr;
  }
  j["sizes"] = nlohmann::json::array();
  for (const auto& s : result.per_size)
    j["sizes"].push_back({{"k", s.k},
                          {"vars", s.vars},
                          {"clauses", s.clauses},
                          {"status", to_string(s.outcome)},
                          {"solves", s.solves},
                          {"encode_seconds", s.encode_seconds},
                          {"solve_seconds", s.solve_seconds},
                          {"best_coverage", s.best_coverage}});
  j["trace"] = nlohmann::json::array();
  for (const auto& p : result.trace) j["trace"].push_back({{"k", p.k}, {"coverage", p.coverage}});
  return j.dump(2);
}

CrossValidationReport cross_validate(const Sample& sample, const FitConfig& cfg, int folds, unsigned seed) {
  cfg.validate();
  if (folds < 2) throw ConfigError("cross-validation needs at least 2 folds");
  if (static_cast<int>(sample.example_count()) < folds) throw ConfigError("fewer examples than folds");

  std::mt19937 rng(seed);
  auto pos = sample.positives();
  auto neg = sample.negatives();
  std::shuffle(pos.begin(), pos.end(), rng);
  std::shuffle(neg.begin(), neg.end(), rng);
  // Deal positives then negatives round-robin so every fold gets a share of both.
  std::vector<int> fold_of_pos(pos.size()), fold_of_neg(neg.size());
  for (std::size_t i = 0; i < pos.size(); ++i) fold_of_pos[i] = static_cast<int>(i % static_cast<std::size_t>(folds));
  for (std::size_t i = 0; i < neg.size(); ++i)
    fold_of_neg[i] = static_cast<int>((pos.size() + i) % static_cast<std::size_t>(folds));

  auto run_fold = [&](int f) {
    std::vector<int> train_p, train_n, test_p, test_n;
    for (std::size_t i = 0; i < pos.size(); ++i) (fold_of_pos[i] == f ? test_p : train_p).push_back(pos[i]);
    for (std::size_t i = 0; i < neg.size(); ++i) (fold_of_neg[i] == f ? test_n : train_n).push_back(neg[i]);
    const Sample train(sample.interpretation(), train_p, train_n);
    const Sample test(sample.interpretation(), test_p, test_n);
    FoldReport rep;
    const FitResult r = fit(train, cfg);
    rep.status = r.status;
    rep.best = r.best;
    rep.train_examples = static_cast<int>(train.example_count());
    rep.test_examples = static_cast<int>(test.example_count());
    if (r.best) {
      if (rep.train_examples > 0) rep.train_accuracy = static_cast<double>(verify(*r.best, train).coverage) / rep.train_examples;
      if (rep.test_examples > 0) rep.test_accuracy = static_cast<double>(verify(*r.best, test).coverage) / rep.test_examples;
    }
    return rep;
  };

  std::vector<std::future<FoldReport>> jobs;
  for (int f = 0; f < folds; ++f) jobs.push_back(std::async(std::launch::async, run_fold, f));
  CrossValidationReport report;
  for (auto& j : jobs) report.folds.push_back(j.get());
  double acc = 0.0, size = 0.0;
  int with_concept = 0;
  for (const auto& f : report.folds) {
    acc += f.test_accuracy;
    if (f.best) {
      size += f.best->node_count();
      ++with_concept;
    }
  }
  report.mean_test_accuracy = acc / folds;
  report.mean_size = with_concept ? size / with_concept : 0.0;
  return report;
}

std::string cross_validation_json(const CrossValidationReport& report) {
  nlohmann::json j;
  j["mean_test_accuracy"] = report.mean_test_accuracy;
  j["mean_size"] = report.mean_size;
  j["folds"] = nlohmann::json::array();
  for (const auto& f : report.folds) {
    nlohmann::json fj{{"status", to_string(f.status)},
                      {"train_examples", f.train_examples},
                      {"test_examples", f.test_examples},
                      {"train_accuracy", f.train_accuracy},
                      {"test_accuracy", f.test_accuracy}};
    if (f.best) {
      fj["concept"] = render_concept(*f.best);
      fj["size"] = f.best->node_count();
    } else {
      fj["concept"] = nullptr;
    }
    j["folds"].push_back(fj);
  }
  return j.dump(2);
}

}  // namespace alcfit
