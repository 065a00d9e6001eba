// holesat: command line front end for the encoder, cube generator, model
// decoder, internal solver and campaign runner.

#include <CLI11.hpp>

#include "holesat/encoder.hpp"
#include "holesat/errors.hpp"
#include "holesat/geometry.hpp"
#include "holesat/minisolver.hpp"
#include "holesat/partition.hpp"
#include "holesat/runner.hpp"
#include "holesat/signotope.hpp"
#include "holesat/verify.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace holesat;

namespace {

struct Output {
  std::ofstream file;
  std::ostream *os = &std::cout;
  explicit Output(const std::string &path) {
    if (path.empty() || path == "-")
      return;
    file.open(path, std::ios::binary);
    if (!file)
      throw IoFailure("cannot open " + path + " for writing");
    os = &file;
  }
  std::ostream &operator*() { return *os; }
};

std::ifstream open_in(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoFailure("cannot open " + path);
  return in;
}

std::vector<Target> make_targets(const std::vector<int> &holes, const std::vector<int> &gons) {
  std::vector<Target> t;
  for (int k : holes)
    t.push_back(Target::hole(k));
  for (int k : gons)
    t.push_back(Target::gon(k));
  return t;
}

void write_map(const EncodingConfig &cfg, const VarMap &vm, std::ostream &out) {
  out << "c holesat variable map\n";
  out << "n " << cfg.n << "\nvariant " << to_string(cfg.variant) << '\n';
  for (const Target &t : cfg.targets)
    out << "target " << (t.kind == Target::Kind::Hole ? "hole " : "gon ") << t.k << '\n';
  for (const auto &b : vm.blocks())
    out << "block " << b.name << ' ' << b.base + 1 << ' ' << b.count << '\n';
  for (int v = 1; v <= vm.num_vars(); ++v)
    out << v << ' ' << vm.describe(v) << '\n';
}

EncodingConfig read_map(const std::string &path) {
  auto in = open_in(path);
  EncodingConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "n")
      ls >> cfg.n;
    else if (key == "variant") {
      std::string v;
      ls >> v;
      cfg.variant = parse_variant(v);
    } else if (key == "target") {
      std::string kind;
      int k = 0;
      ls >> kind >> k;
      cfg.targets.push_back(kind == "hole" ? Target::hole(k) : Target::gon(k));
    } else if (!key.empty() && std::isdigit(static_cast<unsigned char>(key[0]))) {
      break;
    }
  }
  if (cfg.n < 3)
    throw IoFailure("map file " + path + " has no valid 'n' line");
  return cfg;
}

int cmd_encode(int n, const std::string &variant, const std::vector<int> &holes,
               const std::vector<int> &gons, const std::string &out, const std::string &map,
               bool stats) {
  EncodingConfig cfg{n, make_targets(holes, gons), parse_variant(variant)};
  CnfFormula f = encode(cfg);
  if (stats) {
    std::cout << "variables=" << f.num_vars << " clauses=" << f.size() << '\n';
    if (out.empty() && map.empty())
      return 0;
  }
  if (!map.empty()) {
    Output m(map);
    write_map(cfg, VarMap(cfg), *m);
  }
  if (!stats || !out.empty()) {
    Output o(out);
    emit_dimacs(f, *o);
  }
  return 0;
}

int cmd_cubes(int n, int len, const std::string &icnf, const std::string &out, bool negate,
              int start, const std::string &sbp, bool no_refine, bool count_only) {
  PartitionRules rules;
  if (start > 0)
    rules.start = start;
  if (sbp == "off")
    rules.sbp = PartitionRules::Sbp::Off;
  else if (sbp == "strict")
    rules.sbp = PartitionRules::Sbp::Strict;
  else if (sbp != "nonstrict")
    throw PreconditionViolated("--sbp must be off, strict or nonstrict");
  rules.refine = !no_refine;
  CubeSet cs = generate_cubes(n, len, rules);
  if (count_only) {
    std::cout << "cubes=" << cs.cubes.size() << " start=" << cs.start << '\n';
    return 0;
  }
  Output o(out);
  if (negate) {
    emit_dimacs(coverage_formula(cs), *o);
    return 0;
  }
  CnfFormula base;
  if (!icnf.empty()) {
    auto in = open_in(icnf);
    base = parse_dimacs(in);
  }
  emit_icnf(base, cs.cubes, *o);
  return 0;
}

int cmd_entail(int n, const std::string &out) {
  Output o(out);
  emit_dimacs(entailment_formula(n), *o);
  return 0;
}

int cmd_decode(const std::string &map, const std::string &model_path, bool check) {
  EncodingConfig cfg = read_map(map);
  auto in = open_in(model_path);
  OrientationAssignment a = decode_model(parse_model(in), cfg.n);
  std::cout << serialize(a);
  if (check) {
    WitnessReport r = check_witness(a, cfg.targets);
    for (const auto &e : r.entries)
      std::cout << "c " << e.target.k << (e.target.kind == Target::Kind::Hole ? "-hole " : "-gon ")
                << (e.present ? "present" : "absent") << '\n';
    return r.avoids_all() ? 0 : 1;
  }
  return 0;
}

void print_model(const std::vector<int> &model, std::ostream &out) {
  std::size_t col = 0;
  out << 'v';
  for (int l : model) {
    out << ' ' << l;
    if (++col % 10 == 0)
      out << "\nv";
  }
  out << " 0\n";
}

int cmd_solve(const std::string &cnf, const std::string &icnf, long long budget, bool quiet) {
  CnfFormula f;
  std::vector<Cube> cubes;
  if (!cnf.empty()) {
    auto in = open_in(cnf);
    f = parse_dimacs(in);
  }
  if (!icnf.empty()) {
    auto in = open_in(icnf);
    IcnfProblem p = parse_icnf(in);
    f.append(p.formula);
    cubes = std::move(p.cubes);
  }
  SolverOptions opt;
  opt.conflict_budget = budget;
  MiniSolver s(opt);
  s.add_formula(f);
  if (cubes.empty()) {
    SolveResult r = s.solve();
    if (r == SolveResult::Sat) {
      std::cout << "s SATISFIABLE\n";
      if (!quiet)
        print_model(s.model(), std::cout);
      return 10;
    }
    std::cout << "s UNSATISFIABLE\n";
    return 20;
  }
  bool any_sat = false;
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    SolveResult r = s.solve(cubes[i]);
    std::cout << "c cube " << i << ' ' << (r == SolveResult::Sat ? "SAT" : "UNSAT") << '\n';
    if (r == SolveResult::Sat) {
      any_sat = true;
      if (!quiet)
        print_model(s.model(), std::cout);
    }
  }
  std::cout << (any_sat ? "s SATISFIABLE\n" : "s UNSATISFIABLE\n");
  return any_sat ? 10 : 20;
}

int cmd_run(const std::string &cnf, const std::string &cubes_path, const CampaignOptions &opt,
            std::size_t sample, unsigned seed) {
  auto in = open_in(cnf);
  CnfFormula base = parse_dimacs(in);
  std::vector<Cube> cubes;
  if (!cubes_path.empty()) {
    auto cin = open_in(cubes_path);
    cubes = parse_cubes(cin);
  }
  if (sample > 0 && sample < cubes.size()) {
    std::mt19937 rng(seed);
    std::vector<Cube> picked;
    std::sample(cubes.begin(), cubes.end(), std::back_inserter(picked), sample, rng);
    cubes = std::move(picked);
  }
  CampaignReport r = run_campaign(base, cubes, opt);
  std::cout << summary(r) << '\n';
  if (!opt.report_csv)
    write_csv(r, std::cout);
  return r.verdict == CampaignReport::Verdict::Unsat ? 20
         : r.verdict == CampaignReport::Verdict::Sat ? 10
                                                     : 0;
}

int cmd_points(const std::string &path, const std::vector<int> &holes,
               const std::vector<int> &gons, bool layers) {
  PointSet s = read_points(path);
  std::cout << "points=" << s.size() << '\n';
  for (int k : holes)
    std::cout << k << "-holes=" << enumerate_holes(s, k) << '\n';
  for (int k : gons)
    std::cout << k << "-gons=" << enumerate_gons(s, k) << '\n';
  if (layers) {
    std::cout << "layers=";
    auto l = hull_layers(s);
    for (std::size_t i = 0; i < l.size(); ++i)
      std::cout << (i ? "," : "") << l[i];
    std::cout << '\n';
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"SAT encodings for empty hexagons and convex polygons"};
  app.require_subcommand(1);

  int n = 0, len = 0, start = 0;
  std::string variant = "T", out, map, icnf, cnf, model, sbp = "nonstrict";
  std::vector<int> holes, gons;
  bool stats = false, negate = false, check = false, quiet = false, no_refine = false,
       count_only = false, layers = false;
  long long budget = -1;

  auto *enc = app.add_subcommand("encode", "emit a DIMACS encoding");
  enc->add_option("--n", n, "number of points")->required();
  enc->add_option("--variant", variant, "T, O1, O2, O3 or O4");
  enc->add_option("--hole", holes, "forbid k-holes (repeatable)");
  enc->add_option("--gon", gons, "forbid k-gons (repeatable)");
  enc->add_option("--out", out, "output file (default stdout)");
  enc->add_option("--map", map, "write the variable map to this file");
  enc->add_flag("--stats", stats, "print variables=V clauses=C");

  auto *cub = app.add_subcommand("cubes", "generate a cube partition");
  cub->add_option("--n", n, "number of points")->required();
  cub->add_option("--len", len, "window length")->required();
  cub->add_option("--icnf", icnf, "base DIMACS to embed in the iCNF output");
  cub->add_option("--out", out, "output file (default stdout)");
  cub->add_flag("--negate", negate, "emit the coverage check formula instead");
  cub->add_option("--start", start, "window start (default centered)");
  cub->add_option("--sbp", sbp, "window filter: nonstrict, strict or off");
  cub->add_flag("--no-refine", no_refine, "skip the alternating-pattern split");
  cub->add_flag("--count", count_only, "print the cube count only");

  auto *ent = app.add_subcommand("entail", "emit the entailment check formula");
  ent->add_option("--n", n, "number of points")->required();
  ent->add_option("--out", out, "output file (default stdout)");

  auto *dec = app.add_subcommand("decode", "decode a solver model into orientations");
  dec->add_option("--map", map, "variable map written by encode --map")->required();
  dec->add_option("--model", model, "solver output with v lines")->required();
  dec->add_flag("--check", check, "report the encoded targets on the decoded assignment");

  auto *sol = app.add_subcommand("solve", "run the internal CDCL solver");
  sol->add_option("--cnf", cnf, "DIMACS input");
  sol->add_option("--icnf", icnf, "iCNF input; every cube is solved under assumptions");
  sol->add_option("--budget", budget, "conflict budget per call");
  sol->add_flag("--quiet", quiet, "omit v lines");

  CampaignOptions copt;
  std::string cubes_path, report;
  std::size_t sample = 0;
  unsigned seed = 1;
  auto *run = app.add_subcommand("run", "solve every cube with an external solver");
  run->add_option("--cnf", cnf, "base DIMACS")->required();
  run->add_option("--cubes", cubes_path, "cube file (iCNF a-lines)");
  run->add_option("--solver", copt.solver, "solver command, {cnf} and {proof} are expanded")
      ->required();
  run->add_option("--checker", copt.checker, "proof checker command reading {proof}");
  run->add_option("--jobs", copt.jobs, "parallel workers");
  run->add_option("--timeout", copt.timeout, "seconds per cube");
  run->add_option("--report", report, "CSV report path");
  run->add_option("--sample", sample, "solve a random sample of this many cubes");
  run->add_option("--seed", seed, "seed for --sample");

  std::string points;
  auto *pts = app.add_subcommand("points", "exhaustive hole/gon counts for a point file");
  pts->add_option("--file", points, "point file")->required();
  pts->add_option("--hole", holes, "count k-holes (repeatable)");
  pts->add_option("--gon", gons, "count k-gons (repeatable)");
  pts->add_flag("--layers", layers, "print convex hull layer sizes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enc) {
      if (holes.empty() && gons.empty())
        holes.push_back(6);
      return cmd_encode(n, variant, holes, gons, out, map, stats);
    }
    if (*cub)
      return cmd_cubes(n, len, icnf, out, negate, start, sbp, no_refine, count_only);
    if (*ent)
      return cmd_entail(n, out);
    if (*dec)
      return cmd_decode(map, model, check);
    if (*sol) {
      if (cnf.empty() && icnf.empty())
        throw PreconditionViolated("solve needs --cnf or --icnf");
      return cmd_solve(cnf, icnf, budget, quiet);
    }
    if (*run) {
      if (!report.empty())
        copt.report_csv = report;
      return cmd_run(cnf, cubes_path, copt, sample, seed);
    }
    if (*pts)
      return cmd_points(points, holes, gons, layers);
  } catch (const ResourceLimit &e) {
    std::cerr << "holesat: " << e.what() << '\n';
    return 0;
  } catch (const std::exception &e) {
    std::cerr << "holesat: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
