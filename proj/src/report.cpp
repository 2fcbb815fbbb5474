#include "cvb/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace cvb {

namespace {

double ornan(std::optional<double> v) {
  return v ? *v : std::numeric_limits<double>::quiet_NaN();
}

// JSON has no nan/inf; those and absent fields become null.
std::string json_num(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return "null";
  return fmt15(*v);
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::violation: return "violation";
    case Status::precondition_failed: return "precondition_failed";
  }
  return "violation";
}

std::string fmt15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

ReportRow make_row(std::string id, std::string fn, std::optional<double> a,
                   std::optional<double> b, Enclosure enc, double tol) {
  ReportRow row{std::move(id), std::move(fn), a, b, enc.lower, enc.value, enc.upper,
                enc.holds(tol) ? Status::ok : Status::violation};
  return row;
}

ReportRow make_row(std::string id, std::string fn, std::optional<double> a,
                   std::optional<double> b, BoundPair pair, double tol) {
  ReportRow row{std::move(id),  std::move(fn), a, b, std::nullopt, pair.lhs, pair.rhs,
                pair.holds(tol) ? Status::ok : Status::violation};
  return row;
}

ReportRow make_row(std::string id, std::string fn, std::optional<double> a,
                   std::optional<double> b, GapReport gap, double tol) {
  // One-sided bound: the measured gap doubles as its own lower column so the
  // row still reads lower <= value <= upper.
  ReportRow row{std::move(id),
                std::move(fn),
                a,
                b,
                gap.lower ? *gap.lower : gap.gap,
                gap.gap,
                gap.upper,
                gap.holds(tol) ? Status::ok : Status::violation};
  return row;
}

ReportRow failed_row(std::string id, std::string fn, std::optional<double> a,
                     std::optional<double> b) {
  ReportRow row{std::move(id),  std::move(fn), a, b, std::nullopt, std::nullopt, std::nullopt,
                Status::precondition_failed};
  return row;
}

void write_text(std::ostream& out, std::span<const ReportRow> rows) {
  for (const ReportRow& r : rows) {
    out << r.inequality_id << "  " << (r.function.empty() ? "-" : r.function);
    if (r.a || r.b) out << "  [" << fmt15(ornan(r.a)) << ", " << fmt15(ornan(r.b)) << "]";
    out << "\n  lower=" << fmt15(ornan(r.lower)) << "  value=" << fmt15(ornan(r.value))
        << "  upper=" << fmt15(ornan(r.upper)) << "  slack_lower=" << fmt15(ornan(r.slack_lower()))
        << "  slack_upper=" << fmt15(ornan(r.slack_upper())) << "  status=" << to_string(r.status)
        << "\n";
  }
}

void write_csv(std::ostream& out, std::span<const ReportRow> rows) {
  out << "inequality_id,function,a,b,lower,value,upper,slack_lower,slack_upper,status\n";
  for (const ReportRow& r : rows) {
    out << r.inequality_id << ',' << r.function << ',' << fmt15(ornan(r.a)) << ','
        << fmt15(ornan(r.b)) << ',' << fmt15(ornan(r.lower)) << ',' << fmt15(ornan(r.value)) << ','
        << fmt15(ornan(r.upper)) << ',' << fmt15(ornan(r.slack_lower())) << ','
        << fmt15(ornan(r.slack_upper())) << ',' << to_string(r.status) << "\n";
  }
}

void write_json(std::ostream& out, std::span<const ReportRow> rows) {
  out << "{\"rows\":[";
  bool first = true;
  for (const ReportRow& r : rows) {
    if (!first) out << ',';
    first = false;
    out << "{\"inequality_id\":\"" << json_escape(r.inequality_id) << "\",\"function\":\""
        << json_escape(r.function) << "\",\"a\":" << json_num(r.a) << ",\"b\":" << json_num(r.b)
        << ",\"lower\":" << json_num(r.lower) << ",\"value\":" << json_num(r.value)
        << ",\"upper\":" << json_num(r.upper) << ",\"slack_lower\":" << json_num(r.slack_lower())
        << ",\"slack_upper\":" << json_num(r.slack_upper()) << ",\"status\":\""
        << to_string(r.status) << "\"}";
  }
  out << "]}\n";
}

}  // namespace cvb
