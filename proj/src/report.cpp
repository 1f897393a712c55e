#include "gjms/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>

namespace gjms {

namespace {

double scale(double reference) { return std::max(std::abs(reference), 1e-14); }

const char* kindLabel(CheckKind kind) {
  switch (kind) {
    case CheckKind::LowerBound: return "lower-bound";
    case CheckKind::UpperBound: return "upper-bound";
    default: return "two-sided";
  }
}

std::string kindName(CheckKind kind) { return std::string("\"") + kindLabel(kind) + "\""; }

void appendEscaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace

std::string formatDouble(double x) {
  char buf[40];
  if (std::isnan(x)) return "\"nan\"";
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

CheckRecord makeRecord(const std::string& name, double computed, double reference,
                       double tolerance, CheckKind kind) {
  CheckRecord rec;
  rec.name = name;
  rec.computed = computed;
  rec.reference = reference;
  rec.tolerance = tolerance;
  rec.kind = kind;
  const double slack = tolerance * scale(reference);
  bool ok = false;
  switch (kind) {
    case CheckKind::TwoSided: ok = std::abs(computed - reference) <= slack; break;
    case CheckKind::LowerBound: ok = computed >= reference - slack; break;
    case CheckKind::UpperBound: ok = computed <= reference + slack; break;
  }
  rec.pass = std::isfinite(computed) && ok;
  return rec;
}

CheckRecord makeCheck(const std::string& name, double computed, double reference,
                      double tolerance) {
  return makeRecord(name, computed, reference, tolerance, CheckKind::TwoSided);
}

CheckRecord makeLowerBoundCheck(const std::string& name, double computed, double reference,
                                double tolerance) {
  return makeRecord(name, computed, reference, tolerance, CheckKind::LowerBound);
}

CheckRecord makeUpperBoundCheck(const std::string& name, double computed, double reference,
                                double tolerance) {
  return makeRecord(name, computed, reference, tolerance, CheckKind::UpperBound);
}

void Report::stampNow() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  timestamp = buf;
}

bool Report::allPass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string Report::toJson() const {
  std::string out = "{\n";
  auto key = [&out](const char* k) {
    out += "  \"";
    out += k;
    out += "\": ";
  };
  key("tool");
  appendEscaped(out, kToolName);
  out += ",\n";
  key("version");
  appendEscaped(out, kToolVersion);
  out += ",\n";
  key("command");
  appendEscaped(out, command);
  out += ",\n";
  key("timestamp");
  appendEscaped(out, timestamp);
  out += ",\n";
  key("params");
  char buf[160];
  std::snprintf(buf, sizeof(buf), "{\"n\": %d, \"m\": %d, \"alpha\": %s, \"eps\": %s}",
                params.n, params.m, formatDouble(params.alpha).c_str(),
                formatDouble(params.eps).c_str());
  out += buf;
  out += ",\n";
  key("seed");
  std::snprintf(buf, sizeof(buf), "%llu", static_cast<unsigned long long>(seed));
  out += buf;
  out += ",\n";
  key("checks");
  out += "[";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"name\": ";
    appendEscaped(out, c.name);
    out += ", \"computed\": " + formatDouble(c.computed);
    out += ", \"reference\": " + formatDouble(c.reference);
    out += ", \"tolerance\": " + formatDouble(c.tolerance);
    out += ", \"kind\": ";
    out += kindName(c.kind);
    out += ", \"pass\": ";
    out += c.pass ? "true" : "false";
    out += "}";
  }
  out += checks.empty() ? "]" : "\n  ]";
  out += ",\n";
  key("artifacts");
  out += "[";
  for (std::size_t i = 0; i < artifacts.size(); ++i) {
    if (i) out += ", ";
    appendEscaped(out, artifacts[i]);
  }
  out += "],\n";
  key("all_pass");
  out += allPass() ? "true" : "false";
  out += "\n}\n";
  return out;
}

std::string Report::toCsv() const {
  std::string out = "name,computed,reference,tolerance,kind,pass\n";
  for (const auto& c : checks) {
    out += c.name;
    out += ',' + formatDouble(c.computed);
    out += ',' + formatDouble(c.reference);
    out += ',' + formatDouble(c.tolerance);
    out += ',';
    out += kindLabel(c.kind);
    out += ',';
    out += c.pass ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace gjms
