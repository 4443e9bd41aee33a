// betti: exact Betti tables of monomial ideals via iterated Morse deformation.
// Data goes to stdout, diagnostics to stderr. Exit 0 = success and all
// requested verifications passed, 1 = a verification or oracle diff failed,
// 2 = usage or input error.

#include <sys/wait.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <csignal>
#include <cstdint>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "betti/homology.hpp"
#include "betti/invariants.hpp"
#include "betti/io.hpp"
#include "betti/morse.hpp"
#include "betti/oracle.hpp"
#include "betti/random_ideal.hpp"

namespace {

using namespace betti;
using nlohmann::json;

struct Options {
  std::string input, graph, random_spec, bench_grid;
  std::string field_name = "rational", start_name = "lyubeznik", format_name = "text";
  std::uint64_t seed = 0;
  int reps = 10;
  int nvars = 0;
  double timeout = 0;
  bool multigraded = false, homology = false, oracle = false, verify = false, parallel = false;

  FieldSpec field;
  StartComplex start = StartComplex::lyubeznik;
  TableFormat format = TableFormat::text;
};

StartComplex parse_start(const std::string& name) {
  if (name == "lyubeznik") return StartComplex::lyubeznik;
  if (name == "taylor") return StartComplex::taylor;
  throw std::invalid_argument("start must be lyubeznik or taylor, got '" + name + "'");
}

std::vector<std::int64_t> parse_ints(const std::string& text, char sep) {
  std::vector<std::int64_t> out;
  std::istringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(std::stoll(part));
  return out;
}

// One grid cell or one --random request.
struct RandomSpec {
  int n = 0, r = 0, d = 0, count = 1;
};

RandomSpec parse_random_spec(const std::string& text, bool allow_count) {
  std::vector<std::int64_t> v;
  try {
    v = parse_ints(text, ',');
  } catch (const std::exception&) {
    throw std::invalid_argument("bad random spec '" + text + "' (want n,r,d[,count])");
  }
  if (v.size() < 3 || v.size() > (allow_count ? 4u : 3u))
    throw std::invalid_argument("bad random spec '" + text + "' (want n,r,d" +
                                (allow_count ? "[,count]" : "") + ")");
  RandomSpec s;
  s.n = static_cast<int>(v[0]);
  s.r = static_cast<int>(v[1]);
  s.d = static_cast<int>(v[2]);
  if (v.size() == 4) s.count = static_cast<int>(v[3]);
  if (s.n < 1 || s.r < 0 || s.d < 1 || s.count < 1)
    throw std::invalid_argument("bad random spec '" + text + "': need n>=1, r>=0, d>=1, count>=1");
  return s;
}

template <class Fn>
int with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.rational) return fn(RationalField{});
  return fn(PrimeField{spec.p});
}

std::string describe_mismatch(const BettiTable& engine, const BettiTable& oracle) {
  std::ostringstream out;
  out << "engine:\n" << render_table(engine, TableFormat::text);
  out << "oracle:\n" << render_table(oracle, TableFormat::text);
  return out.str();
}

// Returns 0 ok, 1 if an oracle diff or verification failed.
template <class Field>
int process_ideal(const MonomialIdeal& ideal, const Field& k, const Options& o,
                  std::optional<std::uint64_t> seed) {
  int rc = 0;
  MultigradedBetti mg;
  const BettiTable table =
      compute_betti_table(ideal, k, o.start, o.multigraded ? &mg : nullptr);

  if (o.oracle) {
    if (ideal.n_generators() > kOracleMaxGenerators)
      throw std::invalid_argument("--oracle supports at most " +
                                  std::to_string(kOracleMaxGenerators) + " generators");
    const BettiTable reference = oracle_betti_table(ideal, k);
    if (table == reference) {
      std::cerr << "oracle: tables agree\n";
    } else {
      std::cerr << "oracle: MISMATCH\n" << describe_mismatch(table, reference);
      rc = 1;
    }
    if (o.multigraded) {
      const MultigradedBetti reference_mg = oracle_multigraded(ideal, k);
      if (mg == reference_mg) {
        std::cerr << "oracle: multigraded tables agree\n";
      } else {
        std::cerr << "oracle: multigraded MISMATCH\n";
        rc = 1;
      }
    }
  }

  if (o.verify) {
    std::vector<std::string> violations = verify_vanishing(table, ideal);
    if (o.multigraded) {
      auto more = verify_vanishing(mg, ideal);
      violations.insert(violations.end(), more.begin(), more.end());
    }
    auto tail = check_degree_tail(table, ideal.max_generator_degree());
    violations.insert(violations.end(), tail.begin(), tail.end());
    if (ideal.n_generators() <= 20) {
      const BoundsCheck bounds = check_bounds(table, pr_invariants(ideal));
      if (!bounds.ok)
        violations.push_back("bounds violated: projdim=" + std::to_string(bounds.projdim) +
                             " vs p=" + std::to_string(bounds.p) +
                             ", reg=" + std::to_string(bounds.reg) +
                             " vs r=" + std::to_string(bounds.r));
    } else {
      std::cerr << "verify: skipping critical-set bounds (more than 20 generators)\n";
    }
    if (violations.empty()) {
      std::cerr << "verify: ok\n";
    } else {
      for (const auto& v : violations) std::cerr << "verify: " << v << '\n';
      rc = 1;
    }
  }

  if (o.format == TableFormat::json) {
    json line;
    if (seed) line["seed"] = *seed;
    line["ideal"] = render_ideal(ideal);
    line["table"] = json::parse(render_table(table, TableFormat::json));
    if (o.multigraded)
      line["multigraded"] = json::parse(render_multigraded(mg, TableFormat::json));
    std::cout << line.dump() << '\n';
  } else {
    std::cout << "# " << render_ideal(ideal);
    if (seed) std::cout << "  [seed=" << *seed << ']';
    std::cout << '\n' << render_table(table, o.format);
    if (o.multigraded) std::cout << render_multigraded(mg, o.format);
    std::cout << '\n';
  }
  return rc;
}

int run_homology(const Options& o) {
  NonfaceComplex complex = !o.graph.empty()
                               ? read_graph_file(o.graph, o.nvars ? std::optional<int>(o.nvars)
                                                                  : std::nullopt)
                               : read_nonfaces_file(o.input);
  return with_field(o.field, [&](auto k) {
    const auto dims = homology_dims(complex, k, o.start);
    int rc = 0;
    if (o.oracle) {
      if (complex.n > 20)
        throw std::invalid_argument("--oracle homology supports at most 20 vertices");
      const auto reference = reduced_cohomology(expand_face_list(complex), complex.n, k);
      if (dims == reference) {
        std::cerr << "oracle: homology agrees\n";
      } else {
        std::cerr << "oracle: homology MISMATCH\nengine: " << render_homology(dims, TableFormat::text)
                  << "oracle: " << render_homology(reference, TableFormat::text);
        rc = 1;
      }
    }
    std::cout << render_homology(dims, o.format);
    return rc;
  });
}

int run_ideals(const Options& o) {
  std::vector<std::pair<MonomialIdeal, std::optional<std::uint64_t>>> ideals;
  if (!o.input.empty()) {
    ideals.emplace_back(
        read_ideal_file(o.input, o.nvars ? std::optional<int>(o.nvars) : std::nullopt),
        std::nullopt);
  } else {
    const RandomSpec s = parse_random_spec(o.random_spec, true);
    for (int i = 0; i < s.count; ++i) {
      const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
      ideals.emplace_back(random_ideal(s.n, s.r, s.d, seed), seed);
    }
  }
  int rc = 0;
  for (const auto& [ideal, seed] : ideals)
    rc = std::max(rc, with_field(o.field, [&](auto k) { return process_ideal(ideal, k, o, seed); }));
  return rc;
}

// ---- bench ----

struct InstanceRow {
  int rep;
  std::string status;  // ok | timeout | crash
  double seconds;
};

struct CellReport {
  RandomSpec cell;
  std::vector<InstanceRow> rows;
};

double measure_inline(const MonomialIdeal& ideal, const Options& o, std::string& status) {
  const auto t0 = std::chrono::steady_clock::now();
  try {
    with_field(o.field, [&](auto k) {
      compute_betti_table(ideal, k, o.start);
      return 0;
    });
    status = "ok";
  } catch (const std::exception&) {
    status = "crash";
  }
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double measure_forked(const MonomialIdeal& ideal, const Options& o, std::string& status) {
  const auto t0 = std::chrono::steady_clock::now();
  const pid_t pid = fork();
  if (pid < 0) throw std::runtime_error("fork failed");
  if (pid == 0) {
    try {
      with_field(o.field, [&](auto k) {
        compute_betti_table(ideal, k, o.start);
        return 0;
      });
      _exit(0);
    } catch (...) {
      _exit(3);
    }
  }
  const auto deadline = t0 + std::chrono::duration<double>(o.timeout);
  int wstatus = 0;
  bool killed = false;
  for (;;) {
    const pid_t got = waitpid(pid, &wstatus, WNOHANG);
    if (got == pid) break;
    if (got < 0) throw std::runtime_error("waitpid failed");
    if (!killed && std::chrono::steady_clock::now() >= deadline) {
      kill(pid, SIGKILL);
      killed = true;
    }
    usleep(killed ? 2000 : 200);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (killed)
    status = "timeout";
  else if (WIFEXITED(wstatus) && WEXITSTATUS(wstatus) == 0)
    status = "ok";
  else
    status = "crash";
  return seconds;
}

CellReport run_cell(const RandomSpec& cell, const Options& o) {
  CellReport report{cell, {}};
  for (int rep = 0; rep < o.reps; ++rep) {
    InstanceRow row{rep, "crash", 0.0};
    try {
      const MonomialIdeal ideal =
          random_ideal(cell.n, cell.r, cell.d, o.seed + static_cast<std::uint64_t>(rep));
      row.seconds = o.timeout > 0 ? measure_forked(ideal, o, row.status)
                                  : measure_inline(ideal, o, row.status);
    } catch (const std::exception& e) {
      std::cerr << "bench: instance (" << cell.n << ',' << cell.r << ',' << cell.d << ") rep "
                << rep << " failed to generate: " << e.what() << '\n';
    }
    report.rows.push_back(row);
  }
  return report;
}

int run_bench(const Options& o) {
  std::vector<RandomSpec> cells;
  std::istringstream ss(o.bench_grid);
  std::string part;
  while (std::getline(ss, part, ';'))
    if (!part.empty()) cells.push_back(parse_random_spec(part, false));
  if (cells.empty()) throw std::invalid_argument("--bench grid is empty");

  bool parallel = o.parallel;
  if (parallel && o.timeout > 0) {
    std::cerr << "bench: --parallel is ignored when --timeout is set; running sequentially\n";
    parallel = false;
  }

  std::vector<CellReport> reports;
  if (parallel) {
    std::vector<std::future<CellReport>> futures;
    futures.reserve(cells.size());
    for (const auto& cell : cells)
      futures.push_back(std::async(std::launch::async, run_cell, cell, std::cref(o)));
    for (auto& f : futures) reports.push_back(f.get());
  } else {
    for (const auto& cell : cells) reports.push_back(run_cell(cell, o));
  }

  std::cout << "# random protocol: generators drawn uniformly without replacement from the "
               "degree-d monomials in n variables; draws comparable to a kept generator are "
               "discarded and redrawn; instance seed = --seed value + rep index\n";
  std::cout << "kind,n,r,d,rep,status,seconds,ok,timeout,crash,mean_s,median_s\n";
  std::cout.setf(std::ios::fixed);
  std::cout.precision(6);
  for (const auto& report : reports) {
    const auto& c = report.cell;
    std::vector<double> ok_times;
    int n_ok = 0, n_timeout = 0, n_crash = 0;
    for (const auto& row : report.rows) {
      std::cout << "instance," << c.n << ',' << c.r << ',' << c.d << ',' << row.rep << ','
                << row.status << ',' << row.seconds << ",,,,,\n";
      if (row.status == "ok") {
        ++n_ok;
        ok_times.push_back(row.seconds);
      } else if (row.status == "timeout") {
        ++n_timeout;
      } else {
        ++n_crash;
      }
    }
    std::sort(ok_times.begin(), ok_times.end());
    double mean = 0, median = 0;
    if (!ok_times.empty()) {
      for (double t : ok_times) mean += t;
      mean /= static_cast<double>(ok_times.size());
      const std::size_t h = ok_times.size() / 2;
      median = ok_times.size() % 2 ? ok_times[h] : (ok_times[h - 1] + ok_times[h]) / 2;
    }
    std::cout << "cell," << c.n << ',' << c.r << ',' << c.d << ",,,," << n_ok << ','
              << n_timeout << ',' << n_crash << ',' << mean << ',' << median << '\n';
  }
  return 0;
}

int run(const Options& o) {
  if (!o.bench_grid.empty()) {
    if (o.oracle || o.verify || o.multigraded || o.homology)
      std::cerr << "bench: --oracle/--verify/--multigraded/--homology are ignored\n";
    return run_bench(o);
  }
  if (o.timeout > 0) std::cerr << "note: --timeout only applies to --bench; ignored\n";
  if (o.homology) {
    if (o.input.empty() == o.graph.empty())
      throw std::invalid_argument("--homology needs exactly one of --input (nonfaces JSON) or --graph");
    if (!o.random_spec.empty())
      throw std::invalid_argument("--homology does not combine with --random");
    return run_homology(o);
  }
  if (!o.graph.empty())
    throw std::invalid_argument("--graph requires --homology");
  if (o.input.empty() == o.random_spec.empty())
    throw std::invalid_argument("need exactly one of --input or --random (see --help)");
  return run_ideals(o);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{
      "betti: minimal Betti tables of monomial ideals via iterated Morse deformation"};
  app.add_option("--input", o.input,
                 "ideal file (text: one monomial per line, or JSON {n, generators}); "
                 "with --homology: nonfaces JSON {n, nonfaces}");
  app.add_option("--random", o.random_spec, "random ideal spec n,r,d[,count]");
  app.add_option("--seed", o.seed, "base RNG seed (instance i uses seed+i)");
  app.add_option("--nvars", o.nvars, "force a larger ring for text/graph input");
  app.add_option("--field", o.field_name, "rational | prime:P (default rational)");
  app.add_option("--start", o.start_name, "lyubeznik | taylor (default lyubeznik)");
  app.add_flag("--multigraded", o.multigraded, "also report multigraded Betti numbers");
  app.add_flag("--homology", o.homology,
               "reduced homology of a simplicial complex given by minimal nonfaces");
  app.add_option("--graph", o.graph, "edge list file ('u v' per line); clique-complex homology");
  app.add_flag("--oracle", o.oracle, "cross-check against the brute-force rank oracle");
  app.add_flag("--verify", o.verify, "run subadditivity + bound checks on the result");
  app.add_option("--bench", o.bench_grid, "benchmark grid 'n,r,d[;n,r,d...]' (CSV to stdout)");
  app.add_option("--reps", o.reps, "instances per bench cell (default 10)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", o.format_name, "text | csv | json (default text)");
  app.add_option("--timeout", o.timeout, "per-instance bench timeout in seconds (forks)");
  app.add_flag("--parallel", o.parallel, "run bench cells concurrently (not with --timeout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    o.field = parse_field_spec(o.field_name);
    o.start = parse_start(o.start_name);
    o.format = parse_format(o.format_name);
    return run(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
