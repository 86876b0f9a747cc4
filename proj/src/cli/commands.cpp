#include "gpw/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gpw/gps_json.hpp"
#include "gpw/report.hpp"

namespace gpw {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void emit(const json& report, Format format, std::ostream& out) {
  if (format == Format::Text)
    out << render_text(report);
  else
    out << report.dump(2) << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Loads and validates; prints the reason and returns nullopt on failure.
std::optional<Structure> load_or_report(const std::string& path, std::ostream& err) {
  try {
    return load_gps_file(path);
  } catch (const ValidationError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
  }
  return std::nullopt;
}

std::vector<EnumSpec> make_specs(const StreamOptions& opt) {
  EnumSpec spec;
  spec.n = opt.n;
  spec.k = opt.k;
  spec.order_mode = parse_order_mode(opt.orders);
  spec.dedup = parse_dedup(opt.dedup);
  spec.limit = opt.limit;
  spec.check();
  return opt.up_to ? sizes_up_to(spec) : std::vector<EnumSpec>{spec};
}

void warn_envelope(const std::vector<EnumSpec>& specs, std::ostream& err) {
  if (!specs.back().within_envelope())
    err << "warning: n=" << specs.back().n << ", k=" << specs.back().k
        << " is outside the supported envelope (n<=3 with k<=2, or n<=4 with k=1); proceeding\n";
}

void add_volatile(json& report, const StreamOptions& opt, double total_ms) {
  if (!opt.timings) return;
  report["volatile"] = {{"jobs", opt.jobs}, {"timings_ms", {{"total", total_ms}}}};
}

}  // namespace

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err, Format format) {
  json report = report_header("validate");
  report["path"] = path;
  try {
    const RawStructure raw = parse_gps(json::parse(read_file(path)));
    const ValidationReport v = validate(raw);
    report["validation"] = validation_json(v);
    if (v.ok) report["structure_digest"] = structure_digest(Structure::from_raw(raw));
    emit(report, format, out);
    return v.ok ? kExitOk : kExitInput;
  } catch (const json::parse_error& e) {
    report["error"] = std::string("invalid JSON: ") + e.what();
  } catch (const InputError& e) {
    report["error"] = e.what();
  }
  err << "error: " << path << ": " << report["error"].get<std::string>() << '\n';
  emit(report, format, out);
  return kExitInput;
}

int cmd_analyze(const std::string& path, std::ostream& out, std::ostream& err, Format format) {
  const auto s = load_or_report(path, err);
  if (!s) return kExitInput;
  const auto start = Clock::now();
  json report = report_header("analyze");
  report["structure_digest"] = structure_digest(*s);
  report["structure"] = to_gps_json(*s);
  report["analysis"] = analysis_json(*s);
  report["volatile"] = {{"timings_ms", {{"analysis", ms_since(start)}}}};
  emit(report, format, out);
  return kExitOk;
}

int cmd_check(const std::string& path, const std::string& theorems, std::ostream& out, std::ostream& err,
              Format format) {
  std::vector<TheoremId> ids;
  try {
    ids = parse_theorem_list(theorems);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  const auto s = load_or_report(path, err);
  if (!s) return kExitInput;
  for (TheoremId id : ids)
    if (!theorem_supported(id, s->size())) {
      err << "error: " << to_string(id) << " is not supported for n = " << s->size() << '\n';
      return kExitInput;
    }

  const auto start = Clock::now();
  const auto verdicts = check(*s, ids);
  json list = json::array();
  for (const auto& v : verdicts) list.push_back(verdict_json(v));
  const bool pass = aggregate_pass(verdicts);

  json report = report_header("check");
  report["structure_digest"] = structure_digest(*s);
  report["verdicts"] = std::move(list);
  report["pass"] = pass;
  report["volatile"] = {{"timings_ms", {{"check", ms_since(start)}}}};
  emit(report, format, out);
  return pass ? kExitOk : kExitViolation;
}

int cmd_campaign(const CampaignOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<EnumSpec> specs;
  std::vector<TheoremId> ids;
  try {
    specs = make_specs(opt);
    ids = parse_theorem_list(opt.theorems);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  warn_envelope(specs, err);

  const auto start = Clock::now();
  const CampaignResult result = run_campaign(specs, ids, opt.jobs);

  json report = report_header("campaign");
  report["spec"] = spec_json(specs.back(), opt.up_to);
  json names = json::array();
  for (TheoremId id : ids) names.push_back(to_string(id));
  report["spec"]["theorems"] = std::move(names);
  report["campaign"] = campaign_json(result);
  add_volatile(report, opt, ms_since(start));
  emit(report, opt.format, out);
  if (result.failure)
    err << "violation: " << to_string(result.failure->verdict.id) << " failed on structure #" << result.failure->index
        << '\n';
  return result.failure ? kExitViolation : kExitOk;
}

int cmd_search(const SearchOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<EnumSpec> specs;
  std::optional<PredicateExpr> expr;
  SearchMode mode{};
  try {
    specs = make_specs(opt);
    expr = PredicateExpr::parse(opt.expr);
    mode = parse_search_mode(opt.mode);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  warn_envelope(specs, err);

  const auto start = Clock::now();
  const SearchResult result = search(specs, *expr, mode, opt.jobs);

  json report = report_header("search");
  report["spec"] = spec_json(specs.back(), opt.up_to);
  report["spec"]["expr"] = expr->to_string();
  report["search"] = search_json(result);
  add_volatile(report, opt, ms_since(start));
  emit(report, opt.format, out);
  return result.count > 0 ? kExitOk : kExitExhausted;
}

int cmd_random(const RandomOptions& opt, std::ostream& out, std::ostream& err) {
  std::uint64_t seed = 0;
  if (opt.seed) {
    seed = *opt.seed;
  } else if (const char* env = std::getenv("GPW_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: GPW_SEED must be an unsigned integer\n";
      return kExitInput;
    }
  }
  if (opt.n < 1 || opt.n > kMaxCarrier || opt.k < 1) {
    err << "error: need 1 <= n <= " << kMaxCarrier << " and k >= 1\n";
    return kExitInput;
  }
  try {
    out << to_gps_json(random_structure(opt.n, opt.k, seed)).dump(2) << '\n';
  } catch (const SamplingBudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitExhausted;
  }
  return kExitOk;
}

}  // namespace gpw
