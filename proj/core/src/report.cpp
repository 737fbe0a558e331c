#include "balident/report.hpp"

#include <nlohmann/json.hpp>

#include <ctime>
#include <sstream>

namespace balident {

namespace {

using OrderedJson = nlohmann::ordered_json;

// Canonical parameter rendering order for reports.
const char* const kParamOrder[] = {"n", "j", "m", "q", "N", "order"};

OrderedJson params_json(const Params& params) {
  OrderedJson obj = OrderedJson::object();
  for (const char* name : kParamOrder) {
    auto it = params.find(name);
    if (it != params.end())
      obj[name] = it->second;
  }
  for (const auto& [name, value] : params) // anything off the canonical list
    if (!obj.contains(name))
      obj[name] = value;
  return obj;
}

OrderedJson limit_json(const std::optional<long long>& v) {
  return v ? OrderedJson(*v) : OrderedJson(nullptr);
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos)
    return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"')
      quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string params_compact(const Params& params) {
  std::string out;
  for (const char* name : kParamOrder) {
    auto it = params.find(name);
    if (it == params.end())
      continue;
    if (!out.empty())
      out += " ";
    out += std::string(name) + "=" + std::to_string(it->second);
  }
  return out;
}

} // namespace

RunSummary summarize(const std::vector<VerificationResult>& results) {
  RunSummary s;
  s.total = results.size();
  for (const VerificationResult& r : results)
    (r.pass ? s.passed : s.failed) += 1;
  return s;
}

std::string render_json(const RunConfig& config, const std::vector<VerificationResult>& results) {
  OrderedJson run = OrderedJson::object();
  std::vector<std::string> ids = config.ids;
  if (ids.empty())
    for (const IdentityDescriptor& d : registry())
      ids.push_back(d.id);
  run["ids"] = ids;
  run["n_max"] = limit_json(config.limits.n_max);
  run["j_max"] = limit_json(config.limits.j_max);
  run["m_max"] = limit_json(config.limits.m_max);
  run["q_max"] = limit_json(config.limits.q_max);
  run["N_max"] = limit_json(config.limits.big_n_max);
  run["series_order"] = config.series_order;
  run["parallel"] = config.parallelism;
  if (config.include_timestamp)
    run["timestamp"] = utc_timestamp();

  OrderedJson cases = OrderedJson::array();
  for (const VerificationResult& r : results) {
    OrderedJson c = OrderedJson::object();
    c["id"] = r.id;
    c["params"] = params_json(r.params);
    c["mode"] = std::string(to_string(r.mode));
    c["pass"] = r.pass;
    c["lhs"] = r.lhs;
    c["rhs"] = r.rhs;
    cases.push_back(std::move(c));
  }

  RunSummary s = summarize(results);
  OrderedJson summary = OrderedJson::object();
  summary["total"] = s.total;
  summary["passed"] = s.passed;
  summary["failed"] = s.failed;

  OrderedJson doc = OrderedJson::object();
  doc["run"] = std::move(run);
  doc["cases"] = std::move(cases);
  doc["summary"] = std::move(summary);
  return doc.dump(2) + "\n";
}

std::string render_csv(const std::vector<VerificationResult>& results) {
  std::string out = "id,n,j,m,q,N,order,mode,pass,lhs,rhs\n";
  const char* const cols[] = {"n", "j", "m", "q", "N", "order"};
  for (const VerificationResult& r : results) {
    out += csv_field(r.id);
    for (const char* col : cols) {
      auto it = r.params.find(col);
      out += ",";
      if (it != r.params.end())
        out += std::to_string(it->second);
    }
    out += "," + std::string(to_string(r.mode));
    out += r.pass ? ",true" : ",false";
    out += "," + csv_field(r.lhs);
    out += "," + csv_field(r.rhs);
    out += "\n";
  }
  return out;
}

std::string render_human(const std::vector<VerificationResult>& results) {
  std::ostringstream out;
  for (const VerificationResult& r : results) {
    if (r.pass)
      continue;
    out << "FAIL " << r.id << " [" << params_compact(r.params) << "] (" << to_string(r.mode)
        << ")\n";
    out << "  lhs: " << r.lhs << "\n";
    out << "  rhs: " << r.rhs << "\n";
  }
  RunSummary s = summarize(results);
  out << s.total << " cases, " << s.passed << " passed";
  if (s.failed > 0)
    out << ", " << s.failed << " FAILED";
  out << "\n";
  return out.str();
}

} // namespace balident
