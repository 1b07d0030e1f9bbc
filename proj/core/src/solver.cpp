#include "alcfit/solver.hpp"

#include <cadical.hpp>

#include <cerrno>
#include <csignal>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include "alcfit/error.hpp"
#include "alcfit/sample.hpp"

namespace alcfit {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::sat: return "sat";
    case SolveStatus::unsat: return "unsat";
    case SolveStatus::unknown: return "unknown";
  }
  return "?";
}

void SatSession::add_clause(std::span<const Lit> lits, ClauseGroup) {
  if (lits.empty()) throw std::logic_error("empty clause");
  for (Lit l : lits)
    if (l == 0 || std::abs(l) > num_vars()) throw std::logic_error("clause uses unallocated variable " + std::to_string(l));
  push_clause(lits);
  ++clauses_;
}

void SatSession::add_cnf(const Cnf& cnf) {
  reserve_vars(cnf.num_vars());
  for (std::size_t i = 0; i < cnf.num_clauses(); ++i) add_clause(cnf.clause(i), cnf.group(i));
}

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class BudgetTerminator : public CaDiCaL::Terminator {
public:
  explicit BudgetTerminator(const SolveBudget& b) : budget_(b) {}
  bool terminate() override {
    if (budget_.cancel && budget_.cancel->load(std::memory_order_relaxed)) return true;
    return budget_.deadline && Clock::now() >= *budget_.deadline;
  }

private:
  const SolveBudget& budget_;
};

class CadicalSession : public SatSession {
public:
  explicit CadicalSession(unsigned seed) {
    solver_.set("quiet", 1);
    solver_.set("seed", static_cast<int>(seed));
  }

  void reserve_vars(int n) override {
    if (n > vars_) {
      vars_ = n;
      solver_.reserve(n);
    }
  }
  int num_vars() const override { return vars_; }
  std::string backend_name() const override { return "cadical"; }

  SolveOutcome solve(std::span<const Lit> assumptions, const SolveBudget& budget) override {
    const auto start = Clock::now();
    SolveOutcome out;
    if (budget.conflicts) {
      if (*budget.conflicts <= 0) {
        out.seconds = seconds_since(start);
        return out;
      }
      solver_.limit("conflicts", static_cast<int>(std::min<std::int64_t>(*budget.conflicts, 2'000'000'000)));
    }
    for (Lit a : assumptions) {
      if (a == 0 || std::abs(a) > vars_) throw std::logic_error("assumption on unallocated variable");
      solver_.assume(a);
    }
    BudgetTerminator term(budget);
    const bool limited = budget.deadline || budget.cancel;
    if (limited) solver_.connect_terminator(&term);
    const int res = solver_.solve();
    if (limited) solver_.disconnect_terminator();
    out.seconds = seconds_since(start);
    if (res == 10) {
      out.status = SolveStatus::sat;
      out.model.assign(static_cast<std::size_t>(vars_) + 1, false);
      for (int v = 1; v <= vars_; ++v) out.model[static_cast<std::size_t>(v)] = solver_.val(v) > 0;
    } else if (res == 20) {
      out.status = SolveStatus::unsat;
    }
    return out;
  }

protected:
  void push_clause(std::span<const Lit> lits) override {
    for (Lit l : lits) solver_.add(l);
    solver_.add(0);
  }

private:
  CaDiCaL::Solver solver_;
  int vars_ = 0;
};

std::vector<std::string> split_command(const std::string& cmd) {
  std::istringstream in(cmd);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

class ExternalSession : public SatSession {
public:
  explicit ExternalSession(std::string command) : argv_(split_command(command)) {
    if (argv_.empty()) throw ConfigError("external backend needs a solver command");
  }

  void reserve_vars(int n) override { cnf_.declare_vars(n); }
  int num_vars() const override { return cnf_.num_vars(); }
  std::string backend_name() const override { return "external"; }

  SolveOutcome solve(std::span<const Lit> assumptions, const SolveBudget& budget) override {
    const auto start = Clock::now();
    Cnf query = cnf_;
    for (Lit a : assumptions) query.add({a}, ClauseGroup::fitting);
    query.declare_vars(cnf_.num_vars());

    const auto dir = std::filesystem::temp_directory_path();
    std::string tmpl = (dir / "alcfit-XXXXXX.cnf").string();
    const int fd = mkstemps(tmpl.data(), 4);
    if (fd < 0) throw std::runtime_error("cannot create temporary DIMACS file");
    close(fd);
    write_text_file(tmpl, export_dimacs(query));

    std::string output;
    bool finished = run(tmpl, budget, output);
    std::filesystem::remove(tmpl);

    SolveOutcome out = finished ? parse_solver_output(output, query.num_vars()) : SolveOutcome{};
    out.seconds = seconds_since(start);
    return out;
  }

protected:
  void push_clause(std::span<const Lit> lits) override { cnf_.add_clause(lits, ClauseGroup::syntax); }

private:
  bool run(const std::string& path, const SolveBudget& budget, std::string& output) {
    int pipefd[2];
    if (pipe(pipefd) != 0) throw std::runtime_error("pipe failed");
    const pid_t pid = fork();
    if (pid < 0) throw std::runtime_error("fork failed");
    if (pid == 0) {
      dup2(pipefd[1], STDOUT_FILENO);
      close(pipefd[0]);
      close(pipefd[1]);
      std::vector<char*> args;
      for (auto& a : argv_) args.push_back(a.data());
      std::string p = path;
      args.push_back(p.data());
      args.push_back(nullptr);
      execvp(args[0], args.data());
      _exit(127);
    }
    close(pipefd[1]);
    fcntl(pipefd[0], F_SETFL, O_NONBLOCK);
    bool killed = false;
    char buf[65536];
    while (true) {
      pollfd pfd{pipefd[0], POLLIN, 0};
      const int ready = poll(&pfd, 1, 50);
      if (ready > 0) {
        const ssize_t got = read(pipefd[0], buf, sizeof buf);
        if (got > 0) {
          output.append(buf, static_cast<std::size_t>(got));
          continue;
        }
        if (got == 0) break;
        if (errno != EAGAIN && errno != EINTR) break;
      }
      const bool cancel = budget.cancel && budget.cancel->load();
      if (cancel || (budget.deadline && Clock::now() >= *budget.deadline)) {
        kill(pid, SIGKILL);
        killed = true;
        break;
      }
    }
    close(pipefd[0]);
    int status = 0;
    waitpid(pid, &status, 0);
    if (!killed && WIFEXITED(status) && WEXITSTATUS(status) == 127)
      throw ConfigError("cannot run external solver '" + argv_[0] + "'");
    return !killed;
  }

  std::vector<std::string> argv_;
  Cnf cnf_;
};

}  // namespace

SolveOutcome parse_solver_output(const std::string& text, int num_vars) {
  SolveOutcome out;
  std::istringstream in(text);
  std::string line;
  bool sat = false, unsat = false;
  std::vector<bool> model(static_cast<std::size_t>(num_vars) + 1, false);
  while (std::getline(in, line)) {
    if (line.starts_with("s ")) {
      if (line.find("UNSATISFIABLE") != std::string::npos) unsat = true;
      else if (line.find("SATISFIABLE") != std::string::npos) sat = true;
    } else if (line.starts_with("v ")) {
      std::istringstream ls(line.substr(2));
      for (long lit; ls >> lit;)
        if (lit > 0 && lit <= num_vars) model[static_cast<std::size_t>(lit)] = true;
    }
  }
  if (sat) {
    out.status = SolveStatus::sat;
    out.model = std::move(model);
  } else if (unsat) {
    out.status = SolveStatus::unsat;
  }
  return out;
}

std::string format_solver_output(const SolveOutcome& outcome) {
  switch (outcome.status) {
    case SolveStatus::unsat: return "s UNSATISFIABLE\n";
    case SolveStatus::unknown: return "s UNKNOWN\n";
    case SolveStatus::sat: break;
  }
  std::string out = "s SATISFIABLE\n";
  std::string line = "v";
  for (std::size_t v = 1; v < outcome.model.size(); ++v) {
    line += ' ';
    if (!outcome.model[v]) line += '-';
    line += std::to_string(v);
    if (line.size() > 72) {
      out += line + "\n";
      line = "v";
    }
  }
  out += line + " 0\n";
  return out;
}

SolverConfig solver_config_from_env(SolverConfig base) {
  if (const char* b = std::getenv("ALCFIT_BACKEND"); b && *b) base.backend = b;
  if (const char* s = std::getenv("ALCFIT_SEED"); s && *s) base.seed = static_cast<unsigned>(std::strtoul(s, nullptr, 10));
  if (const char* c = std::getenv("ALCFIT_SOLVER_CMD"); c && *c) base.external_command = c;
  return base;
}

std::unique_ptr<SatSession> make_session(const SolverConfig& config) {
  if (config.backend == "cadical") return std::make_unique<CadicalSession>(config.seed);
  if (config.backend == "external") return std::make_unique<ExternalSession>(config.external_command);
  throw ConfigError("unknown solver backend '" + config.backend + "'");
}

}  // namespace alcfit
