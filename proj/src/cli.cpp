#include "surfenum/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <omp.h>

#include "surfenum/bounds.hpp"
#include "surfenum/errors.hpp"
#include "surfenum/render.hpp"
#include "surfenum/serialize.hpp"
#include "surfenum/tubing.hpp"

namespace surfenum {

namespace fs = std::filesystem;

namespace {

struct Input {
  std::string name;
  std::string text;
};

std::optional<Input> read_input(const RunConfig& cfg, std::ostream& err) {
  if (!cfg.inline_pd.empty()) return Input{"inline", cfg.inline_pd};
  if (cfg.inputs.empty()) {
    err << "error: no input given\n";
    return std::nullopt;
  }
  std::ifstream in(cfg.inputs.front(), std::ios::binary);
  if (!in) {
    err << "error: cannot read " << cfg.inputs.front() << "\n";
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return Input{fs::path(cfg.inputs.front()).filename().string(), buf.str()};
}

// Parses and builds; reports the failure and returns nullopt on bad input.
std::optional<Diagram> load_diagram(const Input& input, std::ostream& err) {
  try {
    return build_diagram(parse_pd(input.text));
  } catch (const ParseError& e) {
    err << "parse error in " << input.name << ": " << e.what() << "\n";
  } catch (const StructureError& e) {
    err << "structure error in " << input.name << ": " << e.what() << "\n";
  }
  return std::nullopt;
}

std::string csv_flag(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : ""; }
std::string csv_flag(bool v) { return v ? "true" : "false"; }

std::string join_csv(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line;
}

// One corpus row; genus-2 columns stay empty for diagrams failing validation.
struct CorpusRow {
  std::vector<std::string> cells;
  bool pass = false;
};

CorpusRow corpus_row(const std::string& name, const Diagram& d, std::ostream& err) {
  const auto v = validate(d);
  CorpusRow row;
  auto& c = row.cells;
  c = {name, std::to_string(d.crossing_count()), csv_flag(v.alternating), csv_flag(v.reduced), csv_flag(v.prime),
       csv_flag(v.connected)};
  if (!v.ok()) {
    c.resize(report_csv_columns().size());
    const std::size_t first_pass = report_csv_columns().size() - 4;
    for (std::size_t i = first_pass; i < c.size(); ++i) c[i] = "false";
    return row;
  }
  const auto g = build_dual(d);
  EnumerationResult r;
  try {
    r = enumerate_genus2(g);
  } catch (const InternalError& e) {
    err << name << ": " << e.what() << "\n";
    c.resize(report_csv_columns().size());
    return row;
  }
  ObservedCounts obs{BigInt(r.pppp), BigInt(r.psps_pair), BigInt(r.total()), std::nullopt};
  const auto b = compare(d.crossing_count(), 2, obs);
  c.insert(c.end(), {std::to_string(r.pppp), std::to_string(r.psps_pair), std::to_string(r.total()),
                     b.closed_surface_upper_bound->str(), b.pppp_bound.str(), b.psps_bound.str(),
                     b.genus2_config_bound.str(), b.genus2_surface_bound.str(), b.tight_general_bound.str(),
                     csv_flag(b.pass_pppp), csv_flag(b.pass_psps), csv_flag(b.pass_genus2_config),
                     csv_flag(b.pass_genus2_surface)});
  row.pass = b.all_pass();
  return row;
}

Json summary_json(const std::string& name, const Diagram& d, const RunConfig& cfg, const char* mode,
                  const EnumerationResult* r, bool complete, unsigned long long visited) {
  Json j;
  j["type"] = "summary";
  j["schema_version"] = kSchemaVersion;
  j["diagram"] = name;
  j["n"] = d.crossing_count();
  j["genus"] = cfg.genus;
  j["mode"] = mode;
  j["family"] = cfg.family == FamilyFilter::All ? "all" : cfg.family == FamilyFilter::Pppp ? "pppp" : "psps";
  j["complete"] = complete;
  j["budget"] = to_json(budgets(cfg.genus));
  j["visited"] = visited;
  if (!r) return j;

  Json counts;
  counts["pppp"] = r->pppp;
  counts["psps_pair"] = r->psps_pair;
  counts["other"] = r->other;
  counts["total"] = r->total();
  j["counts"] = std::move(counts);
  BigInt tubed = 0;
  std::set<std::string> chis;
  for (const auto& c : r->configurations) {
    tubed += tubing_count(d, c);
    chis.insert(rational_string(euler_characteristic(c, false)));
  }
  j["tubed_surfaces"] = tubed.str();
  j["chi_values"] = std::vector<std::string>(chis.begin(), chis.end());
  Json pruned = Json::object();
  for (const auto& [prop, count] : r->pruned) pruned[std::to_string(prop)] = count;
  j["pruned"] = std::move(pruned);
  return j;
}

}  // namespace

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto input = read_input(cfg, err);
  if (!input) return exit_code::kInputFailure;
  const auto d = load_diagram(*input, err);
  if (!d) return exit_code::kInputFailure;
  const auto report = validate(*d);
  if (cfg.format == OutputFormat::Text) {
    out << to_text(report);
  } else if (cfg.format == OutputFormat::Csv) {
    out << "diagram,alternating,reduced,prime,connected\n"
        << join_csv({input->name, csv_flag(report.alternating), csv_flag(report.reduced), csv_flag(report.prime),
                     csv_flag(report.connected)})
        << "\n";
  } else {
    out << to_json(report).dump() << "\n";
  }
  return report.ok() ? exit_code::kSuccess : exit_code::kDomainFailure;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.genus < 2) {
    err << "error: genus must be at least 2\n";
    return exit_code::kDomainFailure;
  }
  const auto input = read_input(cfg, err);
  if (!input) return exit_code::kInputFailure;
  const auto d = load_diagram(*input, err);
  if (!d) return exit_code::kInputFailure;
  const auto report = validate(*d);
  if (!report.ok()) {
    err << "error: " << input->name << " is not a reduced prime alternating connected diagram\n" << to_text(report);
    return exit_code::kDomainFailure;
  }
  const auto g = build_dual(*d);
  const bool specialized = cfg.genus == 2 && !cfg.general;
  const char* mode = specialized ? "genus2" : "general";

  EnumerationResult r;
  try {
    if (specialized) {
      r = cfg.family == FamilyFilter::Pppp   ? enumerate_pppp(g)
          : cfg.family == FamilyFilter::Psps ? enumerate_psps_pairs(g)
                                             : enumerate_genus2(g);
    } else {
      EnumerationOptions opts;
      opts.jobs = cfg.jobs;
      opts.guard_cap = cfg.guard_cap;
      if (cfg.family == FamilyFilter::Pppp) opts.patterns = {"PPPP"};
      if (cfg.family == FamilyFilter::Psps) opts.patterns = {"PSPS"};
      r = enumerate_general(g, budgets(cfg.genus), opts);
    }
  } catch (const GuardAbort& e) {
    err << "guard abort: " << e.what() << "\n";
    auto summary = summary_json(input->name, *d, cfg, mode, nullptr, false, e.visited());
    out << summary.dump() << "\n";
    return exit_code::kGuardAbort;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::kDomainFailure;
  }

  ObservedCounts obs;
  if (specialized) {
    if (cfg.family != FamilyFilter::Psps) obs.pppp = BigInt(r.pppp);
    if (cfg.family != FamilyFilter::Pppp) obs.psps_pair = BigInt(r.psps_pair);
    if (cfg.family == FamilyFilter::All) obs.genus2_total = BigInt(r.total());
  } else {
    obs.general_total = BigInt(r.total());
  }
  const auto bounds = compare(d->crossing_count(), cfg.genus, obs);

  if (!cfg.render_path.empty()) {
    std::ofstream svg(cfg.render_path);
    if (!svg) {
      err << "error: cannot write " << cfg.render_path << "\n";
      return exit_code::kInputFailure;
    }
    svg << render_svg(g, r.configurations);
  }

  if (cfg.format == OutputFormat::Csv) {
    out << "diagram,n,genus,mode,pppp,psps_pair,other,total,tight_general_bound,all_pass\n"
        << join_csv({input->name, std::to_string(d->crossing_count()), std::to_string(cfg.genus), mode,
                     std::to_string(r.pppp), std::to_string(r.psps_pair), std::to_string(r.other),
                     std::to_string(r.total()), bounds.tight_general_bound.str(), csv_flag(bounds.all_pass())})
        << "\n";
  } else if (cfg.format == OutputFormat::Text) {
    for (const auto& c : r.configurations) {
      out << family_name(classify(c)) << ":";
      for (const auto& w : c.words_plus) out << " [" << serialize_word(w) << "]";
      out << " complexity " << complexity(c) << "\n";
    }
    out << "total " << r.total() << " (pppp " << r.pppp << ", psps_pair " << r.psps_pair << ", other " << r.other
        << ")\n"
        << to_text(bounds);
  } else {
    for (const auto& c : r.configurations) out << configuration_json(c, *d).dump() << "\n";
    auto summary = summary_json(input->name, *d, cfg, mode, &r, true, r.visited);
    summary["bounds"] = to_json(bounds);
    summary["pass"] = bounds.all_pass();
    out << summary.dump() << "\n";
  }
  return bounds.all_pass() ? exit_code::kSuccess : exit_code::kDomainFailure;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.genus < 2) {
    err << "error: genus must be at least 2\n";
    return exit_code::kDomainFailure;
  }
  long long n = 0;
  if (cfg.n) {
    n = *cfg.n;
  } else {
    const auto input = read_input(cfg, err);
    if (!input) return exit_code::kInputFailure;
    const auto d = load_diagram(*input, err);
    if (!d) return exit_code::kInputFailure;
    n = d->crossing_count();
  }
  if (n < 1) {
    err << "error: crossing number must be at least 1\n";
    return exit_code::kDomainFailure;
  }
  const auto report = compare(n, cfg.genus, {});
  if (cfg.format == OutputFormat::Text) {
    out << to_text(report);
  } else if (cfg.format == OutputFormat::Csv) {
    out << "n,genus,pppp_bound,psps_bound,genus2_config_bound,genus2_surface_bound,tight_exponent,tight_general_"
           "bound,stated_exponent,stated_constant,stated_general_bound\n"
        << join_csv({std::to_string(n), std::to_string(cfg.genus), report.pppp_bound.str(), report.psps_bound.str(),
                     report.genus2_config_bound.str(), report.genus2_surface_bound.str(),
                     std::to_string(report.tight_exponent), report.tight_general_bound.str(),
                     std::to_string(report.stated_exponent), report.stated_constant.str(),
                     report.stated_general_bound.str()})
        << "\n";
  } else {
    auto j = to_json(report);
    j["schema_version"] = kSchemaVersion;
    out << j.dump() << "\n";
  }
  return exit_code::kSuccess;
}

int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.inputs.empty()) {
    err << "error: report needs a fixture directory\n";
    return exit_code::kInputFailure;
  }
  const fs::path dir = cfg.inputs.front();
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    err << "error: " << dir.string() << " is not a directory\n";
    return exit_code::kInputFailure;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto ext = entry.path().extension().string();
    if (entry.is_regular_file() && (ext == ".pd" || ext == ".json")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });

  const int count = static_cast<int>(files.size());
  std::vector<std::optional<CorpusRow>> rows(count);
  std::vector<std::string> diagnostics(count);
  const int threads = cfg.jobs <= 0 ? omp_get_max_threads() : cfg.jobs;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int i = 0; i < count; ++i) {
    std::ostringstream diag;
    std::ifstream in(files[i], std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    const Input input{files[i].filename().string(), buf.str()};
    if (auto d = load_diagram(input, diag)) rows[i] = corpus_row(input.name, *d, diag);
    diagnostics[i] = diag.str();
  }

  bool unparsable = false;
  for (int i = 0; i < count; ++i) {
    err << diagnostics[i];
    if (!rows[i]) unparsable = true;
  }
  if (unparsable) return exit_code::kInputFailure;

  bool all_pass = true;
  if (cfg.format == OutputFormat::Json) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    auto& arr = doc["rows"] = Json::array();
    for (const auto& row : rows) {
      Json j;
      for (std::size_t k = 0; k < report_csv_columns().size(); ++k) j[report_csv_columns()[k]] = row->cells[k];
      arr.push_back(std::move(j));
      all_pass = all_pass && row->pass;
    }
    out << doc.dump() << "\n";
  } else {
    out << join_csv(report_csv_columns()) << "\n";
    for (const auto& row : rows) {
      out << join_csv(row->cells) << "\n";
      all_pass = all_pass && row->pass;
    }
  }
  return all_pass ? exit_code::kSuccess : exit_code::kDomainFailure;
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::Validate: return cmd_validate(cfg, out, err);
    case Command::Enumerate: return cmd_enumerate(cfg, out, err);
    case Command::Bounds: return cmd_bounds(cfg, out, err);
    case Command::Report: return cmd_report(cfg, out, err);
  }
  return exit_code::kInputFailure;
}

}  // namespace surfenum
