#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <map>
#include <ostream>

#include "tcconf/cli.hpp"

namespace tcconf::cli {

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified higher topological complexity of surface configuration spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  const auto lower = [](std::string v) {
    for (auto& ch : v) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return v;
  };
  app.add_option("--genus", config.genus, "Genus values, e.g. 1,2,3")->delimiter(',');
  app.add_option("--points", config.points, "Numbers of points n")->delimiter(',');
  app.add_option("--stages", config.stages, "Values of s >= 2")->delimiter(',');
  const std::map<std::string, EvaluationRing> rings{{"b", EvaluationRing::BG}, {"e", EvaluationRing::EInfinity}};
  std::string ring = "b";
  app.add_option("--ring", ring, "Evaluation ring for certify: B (B_g) or E (E(g)_inf)")
      ->transform(lower)->check(CLI::IsMember(rings));
  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"text", OutputFormat::Text}};
  std::string format = "json";
  app.add_option("--format", format, "Output format: json, csv or text")
      ->transform(lower)->check(CLI::IsMember(formats));
  app.add_flag("--allow-large", config.allow_large, "Lift the basis and term limits (prints a warning)");
  app.add_option("--out", config.out_path, "Write the report to this file instead of stdout");
  app.add_option("--threads", config.threads, "OpenMP threads (0 keeps the default)");

  const std::map<std::string, SearchAlgebra> algebras{{"rp3", SearchAlgebra::Rp3},
                                                      {"surface", SearchAlgebra::Surface},
                                                      {"a", SearchAlgebra::AG},
                                                      {"b", SearchAlgebra::BG},
                                                      {"e", SearchAlgebra::EInfinity}};
  const std::map<std::string, SearchStrategy> strategies{{"greedy", SearchStrategy::Greedy},
                                                         {"exhaustive", SearchStrategy::ExhaustiveTiny}};

  auto* table = app.add_subcommand("table", "TC_s table with upper and certified lower bounds");
  auto* certify = app.add_subcommand("certify", "Zero-divisor certificate transcripts");
  auto* basis = app.add_subcommand("basis", "Dump the beta_1, beta_2 and beta_2' bases");
  basis->alias("dump-basis");
  auto* lemmas = app.add_subcommand("lemmas", "Check the product identities in A_g and E(g)_inf");
  auto* search = app.add_subcommand("search-zcl", "Search for zero-divisor cup-length lower bounds");
  std::string algebra = "rp3";
  std::string strategy = "greedy";
  search->add_option("--algebra", algebra, "rp3, surface, a, b or e")
      ->transform(lower)->check(CLI::IsMember(algebras));
  search->add_option("--strategy", strategy, "greedy or exhaustive (dimension <= 8)")
      ->transform(lower)->check(CLI::IsMember(strategies));
  auto* rp3 = app.add_subcommand("rp3", "Mod-2 zero-divisor cup length of RP^3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitGuard;
  }

  config.ring = rings.at(ring);
  config.format = formats.at(format);
  config.algebra = algebras.at(algebra);
  config.strategy = strategies.at(strategy);

  if (table->parsed()) config.command = Command::Table;
  if (certify->parsed()) config.command = Command::Certify;
  if (basis->parsed()) config.command = Command::Basis;
  if (lemmas->parsed()) config.command = Command::Lemmas;
  if (search->parsed()) config.command = Command::SearchZcl;
  if (rp3->parsed()) config.command = Command::Rp3;

  if (config.out_path.empty()) return run(config, out, err);
  std::ofstream file(config.out_path);
  if (!file) {
    err << "error: cannot open " << config.out_path << " for writing\n";
    return kExitGuard;
  }
  return run(config, file, err);
}

}  // namespace tcconf::cli
