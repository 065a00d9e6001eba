#include "holesat/minisolver.hpp"

#include "holesat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace holesat {

namespace {

// internal literal: 2*var + negated, var 0-based
using Lit = int;
constexpr Lit kNoLit = -1;
constexpr int kNoReason = -1;

inline Lit from_dimacs(int l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }
inline int var_of(Lit l) { return l >> 1; }
inline Lit negate(Lit l) { return l ^ 1; }
inline bool is_neg(Lit l) { return l & 1; }

struct Clause {
  std::vector<Lit> lits;
  float act = 0;
  int lbd = 0;
  bool learnt = false;
  bool deleted = false;
};

struct Watcher {
  int cref;
  Lit blocker;
};

} // namespace

struct MiniSolver::Impl {
  SolverOptions opt;
  bool ok = true;

  std::vector<Clause> clauses;
  std::vector<int> free_slots;
  std::vector<int> learnts;
  std::vector<std::vector<Watcher>> watches; // by literal that must not become false

  std::vector<std::int8_t> assign; // per var: 1 true, -1 false, 0 unassigned
  std::vector<int> level, reason;
  std::vector<char> phase, seen;
  std::vector<double> activity;
  double var_inc = 1, cla_inc = 1;

  std::vector<int> heap, heap_pos;

  std::vector<Lit> trail;
  std::vector<int> trail_lim;
  std::size_t qhead = 0;

  std::vector<std::int8_t> model;
  std::uint64_t n_conflicts = 0, n_decisions = 0, n_props = 0;
  double max_learnts = 0;

  std::vector<Lit> learnt_buf, analyze_stack;

  int nvars() const { return static_cast<int>(assign.size()); }
  int decision_level() const { return static_cast<int>(trail_lim.size()); }

  std::int8_t value(Lit l) const {
    std::int8_t a = assign[var_of(l)];
    return is_neg(l) ? static_cast<std::int8_t>(-a) : a;
  }

  // --- heap on activity (max at top) ---
  bool heap_less(int a, int b) const { return activity[a] > activity[b]; }
  void heap_up(int i) {
    int v = heap[i];
    while (i > 0) {
      int p = (i - 1) / 2;
      if (!heap_less(v, heap[p]))
        break;
      heap[i] = heap[p];
      heap_pos[heap[i]] = i;
      i = p;
    }
    heap[i] = v;
    heap_pos[v] = i;
  }
  void heap_down(int i) {
    int v = heap[i];
    const int n = static_cast<int>(heap.size());
    while (2 * i + 1 < n) {
      int c = 2 * i + 1;
      if (c + 1 < n && heap_less(heap[c + 1], heap[c]))
        ++c;
      if (!heap_less(heap[c], v))
        break;
      heap[i] = heap[c];
      heap_pos[heap[i]] = i;
      i = c;
    }
    heap[i] = v;
    heap_pos[v] = i;
  }
  void heap_insert(int v) {
    if (heap_pos[v] >= 0)
      return;
    heap.push_back(v);
    heap_pos[v] = static_cast<int>(heap.size()) - 1;
    heap_up(heap_pos[v]);
  }
  int heap_pop() {
    int v = heap[0];
    heap_pos[v] = -1;
    int last = heap.back();
    heap.pop_back();
    if (!heap.empty()) {
      heap[0] = last;
      heap_pos[last] = 0;
      heap_down(0);
    }
    return v;
  }

  void ensure_vars(int n) {
    while (nvars() < n) {
      int v = nvars();
      assign.push_back(0);
      level.push_back(0);
      reason.push_back(kNoReason);
      phase.push_back(opt.default_phase ? 1 : 0);
      seen.push_back(0);
      activity.push_back(0);
      heap_pos.push_back(-1);
      watches.emplace_back();
      watches.emplace_back();
      heap_insert(v);
    }
  }

  void enqueue(Lit l, int from) {
    int v = var_of(l);
    assign[v] = is_neg(l) ? -1 : 1;
    level[v] = decision_level();
    reason[v] = from;
    trail.push_back(l);
  }

  int alloc(std::vector<Lit> lits, bool learnt) {
    int cref;
    if (!free_slots.empty()) {
      cref = free_slots.back();
      free_slots.pop_back();
      clauses[cref] = Clause{};
    } else {
      cref = static_cast<int>(clauses.size());
      clauses.emplace_back();
    }
    Clause &c = clauses[cref];
    c.lits = std::move(lits);
    c.learnt = learnt;
    watches[c.lits[0]].push_back({cref, c.lits[1]});
    watches[c.lits[1]].push_back({cref, c.lits[0]});
    return cref;
  }

  int propagate() {
    int confl = kNoReason;
    while (qhead < trail.size()) {
      const Lit fl = negate(trail[qhead++]);
      auto &ws = watches[fl];
      std::size_t i = 0, j = 0;
      ++n_props;
      while (i < ws.size()) {
        const Watcher w = ws[i];
        if (value(w.blocker) == 1) {
          ws[j++] = ws[i++];
          continue;
        }
        Clause &c = clauses[w.cref];
        ++i;
        if (c.lits[0] == fl)
          std::swap(c.lits[0], c.lits[1]);
        const Lit first = c.lits[0];
        const Watcher nw{w.cref, first};
        if (first != w.blocker && value(first) == 1) {
          ws[j++] = nw;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.lits.size(); ++k)
          if (value(c.lits[k]) != -1) {
            std::swap(c.lits[1], c.lits[k]);
            watches[c.lits[1]].push_back(nw);
            moved = true;
            break;
          }
        if (moved)
          continue;
        ws[j++] = nw;
        if (value(first) == -1) {
          confl = w.cref;
          qhead = trail.size();
          while (i < ws.size())
            ws[j++] = ws[i++];
        } else {
          enqueue(first, w.cref);
        }
      }
      ws.resize(j);
      if (confl != kNoReason)
        break;
    }
    return confl;
  }

  void bump_var(int v) {
    if ((activity[v] += var_inc) > 1e100) {
      for (double &a : activity)
        a *= 1e-100;
      var_inc *= 1e-100;
    }
    if (heap_pos[v] >= 0)
      heap_up(heap_pos[v]);
  }

  void bump_clause(Clause &c) {
    if ((c.act += static_cast<float>(cla_inc)) > 1e20f) {
      for (int cr : learnts)
        clauses[cr].act *= 1e-20f;
      cla_inc *= 1e-20;
    }
  }

  bool redundant(Lit l) const {
    const int r = reason[var_of(l)];
    if (r == kNoReason)
      return false;
    const Clause &c = clauses[r];
    for (std::size_t k = 1; k < c.lits.size(); ++k) {
      const int v = var_of(c.lits[k]);
      if (!seen[v] && level[v] > 0)
        return false;
    }
    return true;
  }

  // First-UIP clause into learnt_buf (asserting literal first); returns the
  // backjump level.
  int analyze(int confl, int &lbd) {
    learnt_buf.clear();
    learnt_buf.push_back(kNoLit);
    int path = 0;
    Lit p = kNoLit;
    int index = static_cast<int>(trail.size()) - 1;
    do {
      Clause &c = clauses[confl];
      if (c.learnt)
        bump_clause(c);
      for (std::size_t k = (p == kNoLit ? 0 : 1); k < c.lits.size(); ++k) {
        const Lit q = c.lits[k];
        const int v = var_of(q);
        if (seen[v] || level[v] == 0)
          continue;
        bump_var(v);
        seen[v] = 1;
        if (level[v] >= decision_level())
          ++path;
        else
          learnt_buf.push_back(q);
      }
      while (!seen[var_of(trail[index--])])
        ;
      p = trail[index + 1];
      confl = reason[var_of(p)];
      seen[var_of(p)] = 0;
      --path;
    } while (path > 0);
    learnt_buf[0] = negate(p);

    analyze_stack.assign(learnt_buf.begin() + 1, learnt_buf.end());
    std::size_t j = 1;
    for (std::size_t i = 1; i < learnt_buf.size(); ++i)
      if (!redundant(learnt_buf[i]))
        learnt_buf[j++] = learnt_buf[i];
    learnt_buf.resize(j);
    for (Lit l : analyze_stack)
      seen[var_of(l)] = 0;

    int bt = 0;
    if (learnt_buf.size() > 1) {
      std::size_t mi = 1;
      for (std::size_t i = 2; i < learnt_buf.size(); ++i)
        if (level[var_of(learnt_buf[i])] > level[var_of(learnt_buf[mi])])
          mi = i;
      std::swap(learnt_buf[1], learnt_buf[mi]);
      bt = level[var_of(learnt_buf[1])];
    }
    std::vector<int> &lv = analyze_stack; // reuse as level scratch
    lv.clear();
    for (Lit l : learnt_buf)
      lv.push_back(level[var_of(l)]);
    std::sort(lv.begin(), lv.end());
    lbd = static_cast<int>(std::unique(lv.begin(), lv.end()) - lv.begin());
    return bt;
  }

  void cancel_until(int lvl) {
    if (decision_level() <= lvl)
      return;
    for (int i = static_cast<int>(trail.size()) - 1; i >= trail_lim[lvl]; --i) {
      const int v = var_of(trail[i]);
      phase[v] = assign[v] > 0;
      assign[v] = 0;
      reason[v] = kNoReason;
      heap_insert(v);
    }
    qhead = static_cast<std::size_t>(trail_lim[lvl]);
    trail.resize(qhead);
    trail_lim.resize(lvl);
  }

  Lit pick_branch() {
    while (!heap.empty()) {
      int v = heap_pop();
      if (assign[v] == 0)
        return 2 * v + (phase[v] ? 0 : 1);
    }
    return kNoLit;
  }

  bool locked(int cref) const {
    const Clause &c = clauses[cref];
    const int v = var_of(c.lits[0]);
    return assign[v] != 0 && reason[v] == cref;
  }

  void reduce_db() {
    std::sort(learnts.begin(), learnts.end(), [&](int a, int b) {
      const Clause &x = clauses[a], &y = clauses[b];
      if ((x.lbd <= 2) != (y.lbd <= 2))
        return y.lbd <= 2;
      return x.act < y.act;
    });
    const std::size_t half = learnts.size() / 2;
    std::vector<int> keep;
    bool any = false;
    for (std::size_t i = 0; i < learnts.size(); ++i) {
      const int cr = learnts[i];
      Clause &c = clauses[cr];
      if (i < half && c.lbd > 2 && c.lits.size() > 2 && !locked(cr)) {
        c.deleted = true;
        any = true;
      } else {
        keep.push_back(cr);
      }
    }
    learnts.swap(keep);
    if (!any)
      return;
    for (auto &ws : watches)
      ws.erase(std::remove_if(ws.begin(), ws.end(),
                              [&](const Watcher &w) { return clauses[w.cref].deleted; }),
               ws.end());
    for (std::size_t cr = 0; cr < clauses.size(); ++cr)
      if (clauses[cr].deleted && !clauses[cr].lits.empty()) {
        clauses[cr].lits.clear();
        clauses[cr].lits.shrink_to_fit();
        free_slots.push_back(static_cast<int>(cr));
      }
  }

  bool add_clause(std::span<const int> in) {
    if (!ok)
      return false;
    cancel_until(0);
    std::vector<Lit> lits;
    lits.reserve(in.size());
    int maxv = 0;
    for (int l : in) {
      if (l == 0)
        throw PreconditionViolated("clause literal 0");
      maxv = std::max(maxv, std::abs(l));
      lits.push_back(from_dimacs(l));
    }
    ensure_vars(maxv);
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::size_t j = 0;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i + 1 < lits.size() && lits[i + 1] == negate(lits[i]))
        return true; // tautology
      const auto v = value(lits[i]);
      if (v == 1)
        return true;
      if (v == 0)
        lits[j++] = lits[i];
    }
    lits.resize(j);
    if (lits.empty())
      return ok = false;
    if (lits.size() == 1) {
      enqueue(lits[0], kNoReason);
      if (propagate() != kNoReason)
        ok = false;
      return ok;
    }
    alloc(std::move(lits), false);
    return true;
  }

  // 1 sat, -1 unsat, 0 restart
  int search(std::int64_t budget, const std::vector<Lit> &assumptions,
             std::uint64_t start_conflicts) {
    std::int64_t local = 0;
    while (true) {
      const int confl = propagate();
      if (confl != kNoReason) {
        ++n_conflicts;
        ++local;
        if (decision_level() == 0) {
          ok = false;
          return -1;
        }
        int lbd = 0;
        const int bt = analyze(confl, lbd);
        cancel_until(bt);
        if (learnt_buf.size() == 1) {
          enqueue(learnt_buf[0], kNoReason);
        } else {
          const int cr = alloc(learnt_buf, true);
          clauses[cr].lbd = lbd;
          learnts.push_back(cr);
          bump_clause(clauses[cr]);
          enqueue(learnt_buf[0], cr);
        }
        var_inc /= opt.var_decay;
        cla_inc /= opt.clause_decay;
        if (opt.conflict_budget >= 0 &&
            n_conflicts - start_conflicts >= static_cast<std::uint64_t>(opt.conflict_budget)) {
          cancel_until(0);
          throw ResourceLimit("conflict budget of " + std::to_string(opt.conflict_budget) +
                              " exhausted");
        }
        continue;
      }
      if (budget >= 0 && local >= budget) {
        cancel_until(0);
        return 0;
      }
      if (static_cast<double>(learnts.size()) - static_cast<double>(trail.size()) >= max_learnts)
        reduce_db();
      Lit next = kNoLit;
      while (decision_level() < static_cast<int>(assumptions.size())) {
        const Lit p = assumptions[decision_level()];
        const auto v = value(p);
        if (v == 1) {
          trail_lim.push_back(static_cast<int>(trail.size()));
        } else if (v == -1) {
          return -1;
        } else {
          next = p;
          break;
        }
      }
      if (next == kNoLit) {
        ++n_decisions;
        next = pick_branch();
        if (next == kNoLit) {
          model.assign(assign.begin(), assign.end());
          return 1;
        }
      }
      trail_lim.push_back(static_cast<int>(trail.size()));
      enqueue(next, kNoReason);
    }
  }

  bool probe(std::span<const int> lits) {
    if (!ok)
      return false;
    cancel_until(0);
    int maxv = 0;
    for (int l : lits)
      maxv = std::max(maxv, std::abs(l));
    ensure_vars(maxv);
    bool fine = propagate() == kNoReason;
    for (std::size_t i = 0; fine && i < lits.size(); ++i) {
      const Lit p = from_dimacs(lits[i]);
      const auto v = value(p);
      if (v == -1)
        fine = false;
      else if (v == 0) {
        trail_lim.push_back(static_cast<int>(trail.size()));
        enqueue(p, kNoReason);
        fine = propagate() == kNoReason;
      }
    }
    cancel_until(0);
    return fine;
  }

  SolveResult solve(std::span<const int> assumps) {
    model.clear();
    if (!ok)
      return SolveResult::Unsat;
    std::vector<Lit> as;
    int maxv = 0;
    for (int l : assumps) {
      maxv = std::max(maxv, std::abs(l));
      as.push_back(from_dimacs(l));
    }
    ensure_vars(maxv);
    std::size_t problem = 0;
    for (const Clause &c : clauses)
      if (!c.learnt && !c.deleted)
        ++problem;
    max_learnts = std::max(problem / 3.0, 2000.0);
    const std::uint64_t start = n_conflicts;
    double limit = opt.restart_first;
    int r = 0;
    while ((r = search(static_cast<std::int64_t>(limit), as, start)) == 0) {
      limit *= opt.restart_inc;
      max_learnts *= 1.05;
    }
    cancel_until(0);
    return r > 0 ? SolveResult::Sat : SolveResult::Unsat;
  }
};

MiniSolver::MiniSolver(SolverOptions opt) : impl_(std::make_unique<Impl>()) {
  impl_->opt = opt;
}
MiniSolver::~MiniSolver() = default;
MiniSolver::MiniSolver(MiniSolver &&) noexcept = default;
MiniSolver &MiniSolver::operator=(MiniSolver &&) noexcept = default;

void MiniSolver::ensure_vars(int n) { impl_->ensure_vars(n); }
bool MiniSolver::add_clause(std::span<const int> lits) { return impl_->add_clause(lits); }

bool MiniSolver::add_formula(const CnfFormula &f) {
  impl_->ensure_vars(f.num_vars);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!impl_->add_clause(f[i]))
      return false;
  return impl_->ok;
}

bool MiniSolver::propagate(std::span<const int> assumptions) {
  return impl_->probe(assumptions);
}

SolveResult MiniSolver::solve(std::span<const int> assumptions) {
  return impl_->solve(assumptions);
}

bool MiniSolver::value(int var) const {
  if (var < 1 || var > static_cast<int>(impl_->model.size()))
    return false;
  return impl_->model[var - 1] > 0;
}

std::vector<int> MiniSolver::model() const {
  std::vector<int> m;
  m.reserve(impl_->model.size());
  for (std::size_t v = 0; v < impl_->model.size(); ++v) {
    const int id = static_cast<int>(v) + 1;
    m.push_back(impl_->model[v] > 0 ? id : -id);
  }
  return m;
}

int MiniSolver::num_vars() const { return impl_->nvars(); }
std::uint64_t MiniSolver::conflicts() const { return impl_->n_conflicts; }
std::uint64_t MiniSolver::decisions() const { return impl_->n_decisions; }
std::uint64_t MiniSolver::propagations() const { return impl_->n_props; }

SolveResult solve(const CnfFormula &f, std::vector<int> *model,
                  std::span<const int> assumptions, SolverOptions opt) {
  MiniSolver s(opt);
  s.add_formula(f);
  SolveResult r = s.solve(assumptions);
  if (model) {
    model->clear();
    if (r == SolveResult::Sat)
      *model = s.model();
  }
  return r;
}

std::size_t enumerate_models(const CnfFormula &f, std::span<const int> projection,
                             const std::function<bool(const std::vector<int> &)> &visit,
                             SolverOptions opt) {
  MiniSolver s(opt);
  s.add_formula(f);
  std::size_t count = 0;
  std::vector<int> block;
  while (s.solve() == SolveResult::Sat) {
    ++count;
    std::vector<int> m = s.model();
    if (!visit(m))
      break;
    block.clear();
    for (int v : projection)
      block.push_back(s.value(v) ? -v : v);
    if (block.empty() || !s.add_clause(block))
      break;
  }
  return count;
}

} // namespace holesat
