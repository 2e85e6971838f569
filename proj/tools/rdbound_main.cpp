#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"

using rdbound::cli::Format;
using rdbound::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Resolvent degree bounds for PSU(2,q) and PSU(3,q)"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string family = "psu3";
  std::string format = "text";

  app.add_option("--ladder", cfg.ladder_path, "RD ladder file (overrides RDBOUND_LADDER)")->check(CLI::ExistingFile);
  app.add_flag("--paper-compat", cfg.paper_compat, "Use the reference-table mu values and RD(6) <= 1");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--jobs,-j", cfg.jobs, "Worker threads for table rows")->check(CLI::PositiveNumber);
  app.add_option("--oracle-max-order", cfg.oracle.max_order, "Largest group the oracle enumerates");

  auto family_opt = [&](CLI::App* sub) {
    sub->add_option("family", family, "psu2 (alias psl2) or psu3")
        ->required()
        ->check(CLI::IsMember({"psu2", "psl2", "psu3"}));
  };
  auto q_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--q", cfg.q, "Prime power q");
    if (required) o->required();
  };

  auto* bound = app.add_subcommand("bound", "Bound certificate for one group");
  family_opt(bound);
  q_opt(bound, true);
  bound->add_option("--max-degree,-K", cfg.max_degree, "Largest invariant degree searched");

  auto* table = app.add_subcommand("table", "Bounds for a range of q");
  family_opt(table);
  table->add_option("--q-min", cfg.q_min, "Smallest q");
  table->add_option("--q-max", cfg.q_max, "Largest q");
  table->add_option("--max-degree,-K", cfg.max_degree, "Largest invariant degree searched");

  auto* molien = app.add_subcommand("molien", "Molien series prefix of the selected representation");
  family_opt(molien);
  q_opt(molien, true);
  molien->add_option("--max-degree,-K", cfg.max_degree, "Number of coefficients");

  auto* power = app.add_subcommand("power-table", "PSU(3,q) class-type power distribution");
  q_opt(power, true);
  power->add_option("--k", cfg.power, "Exponent")->check(CLI::Range(2, 12));
  power->add_option("--source", cfg.source, "table (symbolic) or reps (computed)")
      ->check(CLI::IsMember({"table", "reps"}));

  auto* classes = app.add_subcommand("dump-classes", "Conjugacy class data");
  family_opt(classes);
  q_opt(classes, true);

  auto* chars = app.add_subcommand("dump-chars", "SL(2,q) character table");
  q_opt(chars, true);

  auto* rd = app.add_subcommand("rd-upper", "Upper bound on RD(n) from the ladder");
  rd->add_option("n", cfg.n, "Polynomial degree")->required()->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("target", cfg.target, "Suite")
      ->required()
      ->check(CLI::IsMember({"power-tables", "molien", "oracle", "chars", "spectra", "all"}));
  verify->add_option("--q-max", cfg.q_max, "Largest q checked");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rdbound::cli::kExitUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.family = rdbound::parse_family(family);
  static const std::map<std::string, Format> formats = {
      {"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};
  cfg.format = formats.at(format);
  return rdbound::cli::run(cfg, std::cout, std::cerr);
}
