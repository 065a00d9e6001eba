#include "holesat/runner.hpp"

#include "holesat/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <charconv>
#include <chrono>
#include <csignal>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <mutex>
#include <thread>

#include <fcntl.h>
#include <spawn.h>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

extern char **environ;

namespace holesat {

namespace fs = std::filesystem;

const char *to_string(CubeResult::Status s) {
  switch (s) {
  case CubeResult::Status::Sat:
    return "SAT";
  case CubeResult::Status::Unsat:
    return "UNSAT";
  case CubeResult::Status::Error:
    return "ERROR";
  case CubeResult::Status::Timeout:
    return "TIMEOUT";
  }
  return "?";
}

CampaignReport aggregate(std::vector<CubeResult> results) {
  CampaignReport r;
  std::sort(results.begin(), results.end(),
            [](const CubeResult &a, const CubeResult &b) { return a.index < b.index; });
  for (const CubeResult &c : results) {
    switch (c.status) {
    case CubeResult::Status::Sat:
      ++r.sat;
      break;
    case CubeResult::Status::Unsat:
      ++r.unsat;
      break;
    case CubeResult::Status::Timeout:
      ++r.timeout;
      break;
    case CubeResult::Status::Error:
      ++r.error;
      break;
    }
    r.total_seconds += c.seconds;
    r.max_seconds = std::max(r.max_seconds, c.seconds);
  }
  if (!results.empty())
    r.mean_seconds = r.total_seconds / static_cast<double>(results.size());
  bool all_verified = std::all_of(results.begin(), results.end(), [](const CubeResult &c) {
    return c.status == CubeResult::Status::Unsat && c.checked.value_or(true);
  });
  if (r.sat > 0)
    r.verdict = CampaignReport::Verdict::Sat;
  else if (!results.empty() && all_verified)
    r.verdict = CampaignReport::Verdict::Unsat;
  r.results = std::move(results);
  return r;
}

void write_csv(const CampaignReport &r, std::ostream &out) {
  out << "cube_index,status,seconds,exit_code,checked\n";
  char buf[32];
  for (const CubeResult &c : r.results) {
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, c.seconds, std::chars_format::fixed, 3);
    out << c.index << ',' << to_string(c.status) << ',' << std::string_view(buf, p - buf)
        << ',' << c.exit_code << ',';
    if (c.checked)
      out << (*c.checked ? "verified" : "rejected");
    out << '\n';
  }
  if (!out)
    throw IoFailure("failed writing campaign report");
}

std::string summary(const CampaignReport &r) {
  std::ostringstream s;
  s << "cubes=" << r.results.size() << " sat=" << r.sat << " unsat=" << r.unsat
    << " timeout=" << r.timeout << " error=" << r.error << " total=" << r.total_seconds
    << "s mean=" << r.mean_seconds << "s max=" << r.max_seconds << "s verdict="
    << (r.verdict == CampaignReport::Verdict::Unsat ? "UNSAT"
        : r.verdict == CampaignReport::Verdict::Sat ? "SAT"
                                                     : "UNKNOWN");
  return s.str();
}

namespace {

std::string substitute(std::string cmd, const std::string &cnf, const std::string &proof,
                       bool append_cnf) {
  auto repl = [&](const std::string &key, const std::string &val) {
    bool found = false;
    for (std::size_t p = cmd.find(key); p != std::string::npos; p = cmd.find(key, p + val.size())) {
      cmd.replace(p, key.size(), val);
      found = true;
    }
    return found;
  };
  bool had_cnf = repl("{cnf}", cnf);
  repl("{proof}", proof);
  if (!had_cnf && append_cnf)
    cmd += " " + cnf;
  return cmd;
}

pid_t spawn_shell(const std::string &cmd) {
  posix_spawn_file_actions_t fa;
  posix_spawn_file_actions_init(&fa);
  posix_spawn_file_actions_addopen(&fa, 0, "/dev/null", O_RDONLY, 0);
  posix_spawn_file_actions_addopen(&fa, 1, "/dev/null", O_WRONLY, 0);
  posix_spawn_file_actions_addopen(&fa, 2, "/dev/null", O_WRONLY, 0);
  posix_spawnattr_t at;
  posix_spawnattr_init(&at);
  posix_spawnattr_setflags(&at, POSIX_SPAWN_SETPGROUP);
  posix_spawnattr_setpgroup(&at, 0);
  const char *argv[] = {"/bin/sh", "-c", cmd.c_str(), nullptr};
  pid_t pid = -1;
  int rc = posix_spawn(&pid, "/bin/sh", &fa, &at, const_cast<char **>(argv), environ);
  posix_spawn_file_actions_destroy(&fa);
  posix_spawnattr_destroy(&at);
  if (rc != 0)
    throw IoFailure(std::string("posix_spawn failed: ") + std::strerror(rc));
  return pid;
}

// Waits until pid exits or the deadline passes; returns the raw status or
// nullopt on timeout (process group killed).
std::optional<int> wait_until(pid_t pid, std::chrono::steady_clock::time_point deadline) {
  int status = 0;
  while (true) {
    pid_t r = waitpid(pid, &status, WNOHANG);
    if (r == pid)
      return status;
    if (r < 0 && errno != EINTR)
      return -1;
    if (std::chrono::steady_clock::now() >= deadline) {
      kill(-pid, SIGKILL);
      waitpid(pid, &status, 0);
      return std::nullopt;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
}

struct Context {
  std::string base_body; // DIMACS clause lines of the base formula
  int num_vars = 0;
  std::size_t num_clauses = 0;
  fs::path dir;
  const CampaignOptions *opt = nullptr;
};

CubeResult solve_one(const Context &ctx, std::size_t index, const Cube &cube) {
  CubeResult res;
  res.index = index;
  const fs::path cnf = ctx.dir / ("cube_" + std::to_string(index) + ".cnf");
  const fs::path proof = ctx.dir / ("cube_" + std::to_string(index) + ".proof");
  {
    std::ofstream out(cnf, std::ios::binary);
    int nv = ctx.num_vars;
    for (int l : cube)
      nv = std::max(nv, std::abs(l));
    out << "p cnf " << nv << ' ' << ctx.num_clauses + cube.size() << '\n';
    out.write(ctx.base_body.data(), static_cast<std::streamsize>(ctx.base_body.size()));
    for (int l : cube)
      out << l << " 0\n";
    if (!out)
      throw IoFailure("cannot write subproblem " + cnf.string());
  }
  const bool checking = ctx.opt->checker.has_value();
  if (checking && mkfifo(proof.c_str(), 0600) != 0)
    throw IoFailure("mkfifo failed for " + proof.string());

  const auto t0 = std::chrono::steady_clock::now();
  const auto deadline =
      t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
               std::chrono::duration<double>(ctx.opt->timeout));
  pid_t checker = -1;
  if (checking)
    checker = spawn_shell(substitute(*ctx.opt->checker, cnf.string(), proof.string(), false));
  pid_t solver = spawn_shell(substitute(ctx.opt->solver, cnf.string(), proof.string(), true));
  std::optional<int> st = wait_until(solver, deadline);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (checking) {
    // a solver that never opened the pipe would leave the checker blocked
    int fd = open(proof.c_str(), O_WRONLY | O_NONBLOCK);
    if (fd >= 0)
      close(fd);
  }

  if (!st) {
    res.status = CubeResult::Status::Timeout;
    if (checker > 0) {
      kill(-checker, SIGKILL);
      waitpid(checker, nullptr, 0);
    }
  } else {
    res.exit_code = WIFEXITED(*st) ? WEXITSTATUS(*st) : 128 + WTERMSIG(*st);
    res.status = res.exit_code == 10   ? CubeResult::Status::Sat
                 : res.exit_code == 20 ? CubeResult::Status::Unsat
                                       : CubeResult::Status::Error;
    if (checker > 0) {
      std::optional<int> cs = wait_until(checker, deadline);
      if (res.status == CubeResult::Status::Unsat)
        res.checked = cs && WIFEXITED(*cs) && WEXITSTATUS(*cs) == 0;
      if (!cs && res.status == CubeResult::Status::Unsat)
        res.status = CubeResult::Status::Timeout;
    }
  }
  std::error_code ec;
  fs::remove(cnf, ec);
  fs::remove(proof, ec);
  return res;
}

} // namespace

CampaignReport run_campaign(const CnfFormula &base, const std::vector<Cube> &cubes,
                            const CampaignOptions &opt) {
  if (opt.solver.empty())
    throw PreconditionViolated("run_campaign: no solver command");
  Context ctx;
  ctx.opt = &opt;
  ctx.num_vars = base.num_vars;
  ctx.num_clauses = base.size();
  {
    std::ostringstream body;
    CnfFormula tmp = base;
    emit_dimacs(tmp, body);
    std::string s = body.str();
    ctx.base_body = s.substr(s.find('\n') + 1);
  }
  bool own_dir = false;
  if (opt.workdir) {
    ctx.dir = *opt.workdir;
    fs::create_directories(ctx.dir);
  } else {
    std::string tmpl = (fs::temp_directory_path() / "holesat-run-XXXXXX").string();
    if (!mkdtemp(tmpl.data()))
      throw IoFailure("mkdtemp failed");
    ctx.dir = tmpl;
    own_dir = true;
  }

  const std::vector<Cube> single{Cube{}};
  const std::vector<Cube> &work = cubes.empty() ? single : cubes;
  std::vector<CubeResult> results(work.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex fail_mu;
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= work.size())
        return;
      try {
        results[i] = solve_one(ctx, i, work[i]);
      } catch (const std::exception &e) {
        results[i] = CubeResult{i, CubeResult::Status::Error, 0, -1, std::nullopt};
        std::lock_guard<std::mutex> lk(fail_mu);
        failed = true;
        failure = e.what();
      }
    }
  };
  const int jobs = std::max(1, opt.jobs);
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back(worker);
  for (auto &t : pool)
    t.join();
  if (own_dir) {
    std::error_code ec;
    fs::remove_all(ctx.dir, ec);
  }

  CampaignReport report = aggregate(std::move(results));
  if (opt.report_csv) {
    std::ofstream out(*opt.report_csv);
    if (!out)
      throw IoFailure("cannot open report " + *opt.report_csv);
    write_csv(report, out);
  }
  if (failed)
    throw IoFailure("campaign infrastructure failure: " + failure);
  for (const CubeResult &c : report.results)
    if (c.status == CubeResult::Status::Error)
      throw SolverCrashed("solver exited with code " + std::to_string(c.exit_code) +
                          " on cube " + std::to_string(c.index));
  for (const CubeResult &c : report.results)
    if (c.checked && !*c.checked)
      throw CheckerRejected("checker rejected the proof of cube " + std::to_string(c.index));
  return report;
}

} // namespace holesat
