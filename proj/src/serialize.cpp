#include "surfenum/serialize.hpp"

#include <sstream>

#include "surfenum/tubing.hpp"

namespace surfenum {

namespace {

Json optional_big(const std::optional<BigInt>& v) { return v ? Json(v->str()) : Json(nullptr); }
Json optional_flag(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

std::string flag_text(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : "n/a"; }

}  // namespace

std::string rational_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Json to_json(const ValidationReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["alternating"] = r.alternating;
  j["reduced"] = r.reduced;
  j["prime"] = r.prime;
  j["connected"] = r.connected;
  j["valid"] = r.ok();
  j["failures"] = r.failures;
  return j;
}

std::string to_text(const ValidationReport& r) {
  std::ostringstream out;
  out << std::boolalpha << "alternating " << r.alternating << "\nreduced " << r.reduced << "\nprime " << r.prime
      << "\nconnected " << r.connected << "\n";
  for (const auto& f : r.failures) out << "failure: " << f << "\n";
  return out.str();
}

Json to_json(const EnumerationBudget& b) {
  Json j;
  j["genus"] = b.genus;
  j["max_punctures"] = b.max_punctures;
  j["max_curves"] = b.max_curves;
  j["max_word_length"] = b.max_word_length;
  j["max_compressions"] = b.max_compressions;
  return j;
}

Json configuration_json(const Configuration& cfg, const Diagram& d) {
  Json j;
  j["type"] = "configuration";
  j["schema_version"] = kSchemaVersion;
  j["family"] = std::string(family_name(classify(cfg)));
  auto& plus = j["words_plus"] = Json::array();
  for (const auto& w : cfg.words_plus) plus.push_back(serialize_word(w));
  auto& minus = j["words_minus"] = Json::array();
  for (const auto& w : cfg.words_minus) minus.push_back(serialize_word(w));
  j["p"] = cfg.puncture_count();
  j["s"] = cfg.saddle_letter_count();
  j["c"] = cfg.curve_count();
  j["complexity"] = complexity(cfg);
  j["chi"] = rational_string(euler_characteristic(cfg, false));
  j["tubings"] = tubing_count(d, cfg).str();
  return j;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["genus"] = r.genus;
  j["pppp_bound"] = r.pppp_bound.str();
  j["psps_bound"] = r.psps_bound.str();
  j["genus2_config_bound"] = r.genus2_config_bound.str();
  j["genus2_surface_bound"] = r.genus2_surface_bound.str();
  j["tight_exponent"] = r.tight_exponent;
  j["stated_exponent"] = r.stated_exponent;
  j["tight_general_bound"] = r.tight_general_bound.str();
  j["stated_general_bound"] = r.stated_general_bound.str();
  j["stated_constant"] = r.stated_constant.str();
  Json obs;
  obs["pppp"] = optional_big(r.observed.pppp);
  obs["psps_pair"] = optional_big(r.observed.psps_pair);
  obs["genus2_total"] = optional_big(r.observed.genus2_total);
  obs["general_total"] = optional_big(r.observed.general_total);
  j["observed"] = std::move(obs);
  j["closed_surface_upper_bound"] = optional_big(r.closed_surface_upper_bound);
  j["general_surface_upper_bound"] = optional_big(r.general_surface_upper_bound);
  Json pass;
  pass["pppp"] = optional_flag(r.pass_pppp);
  pass["psps"] = optional_flag(r.pass_psps);
  pass["genus2_config"] = optional_flag(r.pass_genus2_config);
  pass["genus2_surface"] = optional_flag(r.pass_genus2_surface);
  pass["general"] = optional_flag(r.pass_general);
  j["pass"] = std::move(pass);
  j["all_pass"] = r.all_pass();
  return j;
}

std::string to_text(const BoundReport& r) {
  std::ostringstream out;
  out << "n " << r.n << "\n"
      << "genus " << r.genus << "\n"
      << "pppp_bound " << r.pppp_bound << "\n"
      << "psps_bound " << r.psps_bound << "\n"
      << "genus2_config_bound " << r.genus2_config_bound << "\n"
      << "genus2_surface_bound " << r.genus2_surface_bound << "\n"
      << "tight_exponent " << r.tight_exponent << "\n"
      << "tight_general_bound " << r.tight_general_bound << "\n"
      << "stated_exponent " << r.stated_exponent << "\n"
      << "stated_constant " << r.stated_constant << "\n"
      << "stated_general_bound " << r.stated_general_bound << "\n";
  if (r.observed.genus2_total)
    out << "observed_genus2 " << *r.observed.genus2_total << "\n"
        << "closed_surface_upper_bound " << *r.closed_surface_upper_bound << "\n";
  if (r.observed.general_total) out << "observed_general " << *r.observed.general_total << "\n";
  out << "pass_pppp " << flag_text(r.pass_pppp) << "\n"
      << "pass_psps " << flag_text(r.pass_psps) << "\n"
      << "pass_genus2_config " << flag_text(r.pass_genus2_config) << "\n"
      << "pass_genus2_surface " << flag_text(r.pass_genus2_surface) << "\n"
      << "pass_general " << flag_text(r.pass_general) << "\n";
  return out.str();
}

const std::vector<std::string>& report_csv_columns() {
  static const std::vector<std::string> columns{
      "diagram",          "n",
      "alternating",      "reduced",
      "prime",            "connected",
      "pppp_count",       "psps_pair_count",
      "genus2_count",     "closed_surface_upper_bound",
      "pppp_bound",       "psps_bound",
      "genus2_config_bound", "genus2_surface_bound",
      "tight_general_bound", "pass_pppp",
      "pass_psps",        "pass_genus2_config",
      "pass_genus2_surface"};
  return columns;
}

}  // namespace surfenum
