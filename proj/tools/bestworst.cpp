// Command-line front end: certify profiles, build equilibrium families, sweep
// the negative-vote weight, and cross-check scores by simulation.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "bestworst/cli.hpp"

namespace {

using namespace bestworst;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Malformed, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int emit(const cli::CommandResult& result, const std::string& out_path) {
  if (!result.err.empty()) std::cerr << result.err;
  if (out_path.empty()) {
    std::cout << result.out;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return cli::kExitError;
    }
    out << result.out;
  }
  return result.exit_code;
}

std::vector<int> parse_counts(const std::string& text) {
  std::vector<int> counts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) counts.push_back(std::stoi(item));
  return counts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Best-worst voting rules on the Hotelling-Downs line"};
  app.require_subcommand(1);

  std::string out_path;
  std::string input_path = "-";
  std::string c_text = "0";
  std::vector<std::string> c_list;
  int m = 0;
  std::string family;
  std::string epsilon_text;
  std::string counts_text;
  std::uint64_t n_voters = 1000000;
  std::uint64_t seed = 1;
  std::string grid_step_text = "1/1000";

  auto* check = app.add_subcommand("check", "Certify a profile (exit 0: equilibrium, 1: not, 2: error)");
  check->add_option("input", input_path, "Profile JSON file, '-' for stdin");
  check->add_option("--out", out_path, "Write the certificate here instead of stdout");

  auto* construct = app.add_subcommand("construct", "Emit a constructed equilibrium and its certificate");
  construct->add_option("family_pos", family, "cne | m4 | m5 | max_dispersed | min_dispersed | family");
  construct->add_option("--family", family, "Same as the positional family");
  construct->add_option("--c", c_text, "Negative-vote weight as p/q")->required();
  construct->add_option("--m", m, "Number of candidates")->required();
  construct->add_option("--epsilon", epsilon_text, "Family parameter as p/q");
  construct->add_option("--counts", counts_text, "Configuration for max_dispersed, e.g. 2,1,1,2");
  construct->add_option("--out", out_path, "Output file");

  auto* sweep = app.add_subcommand("sweep", "CSV of one family across several c values");
  sweep->add_option("--m", m, "Number of candidates")->required();
  sweep->add_option("--family", family, "Family name")->required();
  sweep->add_option("--c", c_list, "Comma-separated p/q values")->required()->delimiter(',');
  sweep->add_option("--epsilon", epsilon_text, "Family parameter as p/q");
  sweep->add_option("--out", out_path, "Output file");

  auto* mc = app.add_subcommand("mc", "Monte Carlo check of the exact scores (exit 1 if any |z| > 4)");
  mc->add_option("input", input_path, "Profile JSON file, '-' for stdin");
  mc->add_option("--n", n_voters, "Number of sampled voters")->check(CLI::PositiveNumber);
  mc->add_option("--seed", seed, "RNG seed");
  mc->add_option("--out", out_path, "Output file");

  auto* grid = app.add_subcommand("grid", "Grid deviation search next to the exact supremum");
  grid->add_option("input", input_path, "Profile JSON file, '-' for stdin");
  grid->add_option("--grid-step", grid_step_text, "Grid spacing as p/q");
  grid->add_option("--out", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitError;
  }

  try {
    if (*check) return emit(cli::cmd_check(read_input(input_path)), out_path);
    if (*construct) {
      cli::ConstructRequest request{parse_rational(c_text), m, family, std::nullopt, std::nullopt};
      if (!epsilon_text.empty()) request.epsilon = parse_rational(epsilon_text);
      if (!counts_text.empty()) request.counts = parse_counts(counts_text);
      return emit(cli::cmd_construct(request), out_path);
    }
    if (*sweep) {
      std::vector<Rational> cs;
      for (const auto& text : c_list) cs.push_back(parse_rational(text));
      std::optional<Rational> epsilon;
      if (!epsilon_text.empty()) epsilon = parse_rational(epsilon_text);
      return emit(cli::cmd_sweep(m, family, cs, epsilon), out_path);
    }
    if (*mc) return emit(cli::cmd_mc(read_input(input_path), n_voters, seed), out_path);
    if (*grid) {
      return emit(cli::cmd_grid(read_input(input_path), parse_rational(grid_step_text)), out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitError;
  }
  return cli::kExitError;
}
