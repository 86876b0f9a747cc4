#include <iostream>

#include <CLI11.hpp>

#include "gpw/commands.hpp"
#include "gpw/report.hpp"

namespace {

void add_stream_options(CLI::App* cmd, gpw::StreamOptions& opt) {
  cmd->add_option("--n", opt.n, "Carrier size")->check(CLI::Range(1, 64));
  cmd->add_option("--k", opt.k, "Number of operations")->check(CLI::PositiveNumber);
  cmd->add_option("--orders", opt.orders, "all, trivial or total");
  cmd->add_option("--dedup", opt.dedup, "labeled or iso");
  cmd->add_flag("--up-to", opt.up_to, "Enumerate carriers 1..n");
  cmd->add_option("--limit", opt.limit, "Stop after this many structures per carrier size");
  cmd->add_option("--jobs", opt.jobs, "OpenMP threads (0 = default)");
  cmd->add_flag("--text", [&opt](std::int64_t) { opt.format = gpw::Format::Text; }, "Plain-text report");
  cmd->add_flag("--no-timings", [&opt](std::int64_t) { opt.timings = false; }, "Omit the volatile block");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for finite ordered Gamma-semigroups"};
  app.set_version_flag("--version", gpw::tool_version());
  app.require_subcommand(1);

  std::string path;
  gpw::Format format = gpw::Format::Json;
  auto text_flag = [&format](std::int64_t) { format = gpw::Format::Text; };

  auto* validate = app.add_subcommand("validate", "Check the axioms of a GPS-JSON structure");
  validate->add_option("file", path, "GPS-JSON file")->required();
  validate->add_flag("--text", text_flag, "Plain-text report");

  auto* analyze = app.add_subcommand("analyze", "Predicates, ideals, relations and decomposition");
  analyze->add_option("file", path, "GPS-JSON file")->required();
  auto* as_json = analyze->add_flag("--json", "JSON report (default)");
  analyze->add_flag("--text", text_flag, "Plain-text report")->excludes(as_json);

  std::string theorems = "all";
  auto* check = app.add_subcommand("check", "Run theorem checks on one structure");
  check->add_option("file", path, "GPS-JSON file")->required();
  check->add_option("--theorems", theorems, "Comma-separated ids or 'all'");
  check->add_flag("--text", text_flag, "Plain-text report");

  gpw::CampaignOptions camp;
  auto* campaign = app.add_subcommand("campaign", "Enumerate structures and check every theorem on each");
  add_stream_options(campaign, camp);
  campaign->add_option("--theorems", camp.theorems, "Comma-separated ids or 'all'");

  gpw::SearchOptions srch;
  auto* search = app.add_subcommand("search", "Find structures satisfying a predicate expression");
  add_stream_options(search, srch);
  search->add_option("--expr", srch.expr, "Predicate expression, e.g. 'intra_regular & !ideals_chain'")->required();
  search->add_option("--mode", srch.mode, "first, all or count");

  gpw::RandomOptions rnd;
  auto* random = app.add_subcommand("random", "Print a random structure as GPS-JSON");
  random->add_option("--n", rnd.n, "Carrier size");
  random->add_option("--k", rnd.k, "Number of operations");
  random->add_option("--seed", rnd.seed, "Seed (default: $GPW_SEED, else 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gpw::kExitInput;
  }

  if (*validate) return gpw::cmd_validate(path, std::cout, std::cerr, format);
  if (*analyze) return gpw::cmd_analyze(path, std::cout, std::cerr, format);
  if (*check) return gpw::cmd_check(path, theorems, std::cout, std::cerr, format);
  if (*campaign) return gpw::cmd_campaign(camp, std::cout, std::cerr);
  if (*search) return gpw::cmd_search(srch, std::cout, std::cerr);
  if (*random) return gpw::cmd_random(rnd, std::cout, std::cerr);
  return gpw::kExitInput;
}
