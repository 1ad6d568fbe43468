#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "surfenum/cli.hpp"

int main(int argc, char** argv) {
  using namespace surfenum;

  CLI::App app{"Enumerate standard-position curve configurations on alternating link diagrams"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.guard_cap = guard_cap_from_env();
  std::string format = "json";
  std::string family = "all";
  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"text", OutputFormat::Text}};
  const std::map<std::string, FamilyFilter> families{
      {"all", FamilyFilter::All}, {"pppp", FamilyFilter::Pppp}, {"psps", FamilyFilter::Psps}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--pd", cfg.inline_pd, "Inline PD code instead of a file");
  };

  auto* validate = app.add_subcommand("validate", "Check alternating, reduced, prime and connected");
  validate->add_option("input", cfg.inputs, "PD file (text or JSON)");
  add_common(validate);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate candidate configurations and compare with bounds");
  enumerate->add_option("input", cfg.inputs, "PD file (text or JSON)");
  enumerate->add_option("-g,--genus", cfg.genus, "Surface genus")->capture_default_str();
  enumerate->add_option("--family", family, "Restrict to a pattern family")->check(CLI::IsMember({"all", "pppp", "psps"}));
  enumerate->add_flag("--general", cfg.general, "Use the budgeted general enumerator at genus 2");
  enumerate->add_option("--guard-cap", cfg.guard_cap, "Search node cap (env SURFENUM_GUARD_CAP)")
      ->check(CLI::PositiveNumber);
  enumerate->add_option("-j,--jobs", cfg.jobs, "Worker threads; 0 uses all cores")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--render", cfg.render_path, "Write an SVG drawing of the configurations");
  add_common(enumerate);

  auto* bounds = app.add_subcommand("bounds", "Print every bound exactly");
  bounds->add_option("input", cfg.inputs, "PD file to take n from");
  bounds->add_option("-n,--n", cfg.n, "Crossing number");
  bounds->add_option("-g,--g,--genus", cfg.genus, "Surface genus")->capture_default_str();
  add_common(bounds);

  auto* report = app.add_subcommand("report", "One CSV row per fixture in a directory");
  report->add_option("directory", cfg.inputs, "Fixture directory")->required();
  report->add_option("-j,--jobs", cfg.jobs, "Worker threads; 0 uses all cores")->check(CLI::NonNegativeNumber);
  add_common(report);
  format = "json";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_code::kSuccess : exit_code::kInputFailure;
  }

  if (report->parsed() && !report->count("--format")) format = "csv";
  cfg.format = formats.at(format);
  cfg.family = families.at(family);
  if (validate->parsed()) cfg.command = Command::Validate;
  if (enumerate->parsed()) cfg.command = Command::Enumerate;
  if (bounds->parsed()) cfg.command = Command::Bounds;
  if (report->parsed()) cfg.command = Command::Report;
  return run_command(cfg, std::cout, std::cerr);
}
