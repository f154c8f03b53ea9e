// Command-line front end for the tianji library. Exit codes are a stable
// contract: 0 success, 2 usage or validation error, 3 enumeration budget
// exceeded. Data goes to stdout, diagnostics to stderr.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tianji/tianji.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::vector<int> parse_lineup(const std::string& text, int n) {
  std::vector<int> image;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(pos, comma - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a bijection: lineup entry \"" + token +
                                  "\" is not an integer");
    }
    if (used != token.size())
      throw std::invalid_argument("not a bijection: lineup entry \"" + token +
                                  "\" is not an integer");
    image.push_back(value);
    pos = comma + 1;
  }
  if (static_cast<int>(image.size()) != n)
    throw std::invalid_argument("not a bijection: lineup has " + std::to_string(image.size()) +
                                " entries but n = " + std::to_string(n));
  return image;
}

void print_summary(std::ostream& out, const tianji::OutcomeSummary& s) {
  out << "n=" << s.n << " total=" << s.total << "\n"
      << "winning=" << s.winning << " (" << s.p_win.str() << ")\n"
      << "drawing=" << s.drawing << " (" << s.p_draw.str() << ")\n"
      << "losing=" << s.losing << " (" << s.p_loss.str() << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of the generalized Tian Ji horse-racing matchup"};
  app.require_subcommand(1);

  // TIANJI_FORMAT supplies the default output format; --format overrides.
  std::string default_format = "text";
  if (const char* env = std::getenv("TIANJI_FORMAT")) default_format = env;

  auto* cmd_eulerian = app.add_subcommand("eulerian", "Print an Eulerian row or a single entry");
  int eu_n = 0;
  long long eu_m = 0;
  bool eu_has_m = false;
  cmd_eulerian->add_option("n", eu_n, "Row number (permutation length)")->required();
  cmd_eulerian->add_option("m", eu_m, "Excedance count; omit for the full row")
      ->each([&](const std::string&) { eu_has_m = true; });

  auto* cmd_table = app.add_subcommand("table", "Outcome counts and percents for n = 1..max-n");
  int table_max_n = 10;
  std::string table_format = default_format;
  cmd_table->add_option("--max-n", table_max_n, "Largest n to tabulate");
  cmd_table->add_option("--format", table_format, "Output format: text, csv, json");

  auto* cmd_analyze = app.add_subcommand("analyze", "Classify one lineup or summarize all of them");
  int an_n = 0;
  std::string an_lineup;
  cmd_analyze->add_option("n", an_n, "Number of speed classes")->required();
  cmd_analyze->add_option("--lineup", an_lineup, "T's lineup as comma-separated classes, e.g. 3,1,2");

  auto* cmd_enumerate = app.add_subcommand("enumerate", "Brute-force scan over all n! lineups");
  int en_n = 0;
  int en_limit = tianji::kDefaultEnumerationLimit;
  bool en_histogram = false;
  cmd_enumerate->add_option("n", en_n, "Number of speed classes")->required();
  cmd_enumerate->add_flag("--histogram", en_histogram, "Print the race-win census instead");
  cmd_enumerate->add_option("--enum-limit", en_limit, "Largest n the scan will accept")
      ->check(CLI::PositiveNumber);

  auto* cmd_simulate = app.add_subcommand("simulate", "Monte Carlo estimate from random lineups");
  int si_n = 0;
  std::uint64_t si_samples = 100000;
  std::uint64_t si_seed = 0;
  cmd_simulate->add_option("n", si_n, "Number of speed classes")->required();
  cmd_simulate->add_option("--samples", si_samples, "Number of sampled lineups")
      ->check(CLI::PositiveNumber);
  cmd_simulate->add_option("--seed", si_seed, "Generator seed; same seed, same output");

  auto* cmd_figures = app.add_subcommand("figures", "Probability trend series for one parity");
  std::string fi_parity;
  int fi_max_n = 10;
  int fi_places = 4;
  std::string fi_format = default_format;
  cmd_figures->add_option("--parity", fi_parity, "odd or even")->required();
  cmd_figures->add_option("--max-n", fi_max_n, "Largest n in the series");
  cmd_figures->add_option("--places", fi_places, "Fractional digits in the rendering");
  cmd_figures->add_option("--format", fi_format, "Output format: text, csv, json");

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
    if (cmd_eulerian->parsed()) {
      tianji::EulerianRow row = tianji::eulerian_row_recurrence(eu_n);
      if (eu_has_m) {
        std::cout << row.at(eu_m) << "\n";
      } else {
        for (int m = 0; m < row.n; ++m) std::cout << (m > 0 ? " " : "") << row.counts[m];
        std::cout << "\n";
      }
    } else if (cmd_table->parsed()) {
      std::cout << tianji::render_table(table_max_n, tianji::parse_format(table_format));
    } else if (cmd_analyze->parsed()) {
      if (cmd_analyze->count("--lineup") > 0) {
        tianji::Permutation p(parse_lineup(an_lineup, an_n));
        tianji::MatchResult r = tianji::match_result(p);
        std::cout << "wins=" << r.t_wins << " losses=" << r.t_losses
                  << " result=" << tianji::to_string(r.match_class) << "\n";
      } else {
        print_summary(std::cout, tianji::count_outcomes(an_n));
      }
    } else if (cmd_enumerate->parsed()) {
      if (en_histogram) {
        std::vector<tianji::Int> histogram = tianji::wins_histogram(en_n, en_limit);
        for (std::size_t m = 0; m < histogram.size(); ++m)
          std::cout << (m > 0 ? " " : "") << histogram[m];
        std::cout << "\n";
      } else {
        print_summary(std::cout, tianji::enumerate_outcomes(en_n, en_limit));
      }
    } else if (cmd_simulate->parsed()) {
      tianji::MonteCarloEstimate e = tianji::monte_carlo_outcomes(si_n, si_samples, si_seed);
      tianji::OutcomeSummary exact = tianji::count_outcomes(si_n);
      std::cout << "n=" << e.n << " samples=" << e.samples << " seed=" << e.seed << "\n"
                << "wins=" << e.wins << " draws=" << e.draws << " losses=" << e.losses << "\n"
                << "estimate p_win=" << tianji::decimal_string(e.p_win, 6)
                << " p_draw=" << tianji::decimal_string(e.p_draw, 6)
                << " p_loss=" << tianji::decimal_string(e.p_loss, 6) << "\n"
                << "exact    p_win=" << tianji::decimal_string(exact.p_win, 6)
                << " p_draw=" << tianji::decimal_string(exact.p_draw, 6)
                << " p_loss=" << tianji::decimal_string(exact.p_loss, 6) << "\n";
    } else if (cmd_figures->parsed()) {
      tianji::TrendSeries series =
          tianji::figure_series(tianji::parse_parity(fi_parity), fi_max_n, fi_places);
      std::cout << tianji::render_figures(series, tianji::parse_format(fi_format));
    }
  } catch (const tianji::EnumerationLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
