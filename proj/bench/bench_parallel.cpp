// Serial reference vs OpenMP kernels. Prints wall time for each pair and
// whether the two produced identical results.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include <CLI11.hpp>

#include "bestworst/construct.hpp"
#include "bestworst/mc_oracle.hpp"
#include "bestworst/search.hpp"

using namespace bestworst;

namespace {

template <typename F>
double seconds(F&& f, int repeats) {
  double best = 1e300;
  for (int k = 0; k < repeats; ++k) {
    const auto start = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

bool all_same = true;

void row(const char* name, double serial, double parallel, bool same) {
  all_same = all_same && same;
  std::printf("%-22s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
              same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel kernels"};
  std::uint64_t voters = 4000000;
  std::size_t profiles = 20000;
  std::string step_text = "1/20000";
  int repeats = 3;
  app.add_option("--voters", voters, "Voters for the sampling kernel");
  app.add_option("--profiles", profiles, "Profiles for the search kernel");
  app.add_option("--grid-step", step_text, "Grid spacing as p/q");
  app.add_option("--repeats", repeats, "Best of this many runs")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-22s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

  const Rule rule = validate_rule(Rational(1, 2), 8);
  const Profile p = ncne_max_dispersed(rule, default_config(8)).profile;

  McEstimate a, b;
  const double ts = seconds([&] { a = sample_scores_serial(rule, p, voters, 7); }, repeats);
  const double tp = seconds([&] { b = sample_scores(rule, p, voters, 7); }, repeats);
  row("sample_scores", ts, tp, a.first_counts == b.first_counts && a.last_counts == b.last_counts);

  const SearchSpec spec{Rational(1, 4), {}, profiles, 11};
  SearchTally sa, sb;
  const double ss = seconds([&] { sa = search_serial(spec); }, repeats);
  const double sp = seconds([&] { sb = search(spec); }, repeats);
  row("search", ss, sp, sa.ncne == sb.ncne && sa.not_equilibrium == sb.not_equilibrium);

  const Rational step = parse_rational(step_text);
  GridDeviation ga, gb;
  const double gs = seconds([&] { ga = grid_best_deviation_serial(rule, p, 2, step); }, repeats);
  const double gp = seconds([&] { gb = grid_best_deviation(rule, p, 2, step); }, repeats);
  row("grid_best_deviation", gs, gp, ga.max == gb.max && ga.argmax == gb.argmax);
  return all_same ? 0 : 1;
}
