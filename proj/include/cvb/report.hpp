#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "cvb/enclosure.hpp"

namespace cvb {

enum class Status { ok, violation, precondition_failed };

const char* to_string(Status s);

/// One checked inequality instance. Absent numeric fields print as nan in
/// text/csv and null in json; slacks are derived from the stored bounds.
struct ReportRow {
  std::string inequality_id;
  std::string function;
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> lower;
  std::optional<double> value;
  std::optional<double> upper;
  Status status = Status::ok;

  std::optional<double> slack_lower() const {
    if (lower && value) return *value - *lower;
    return std::nullopt;
  }
  std::optional<double> slack_upper() const {
    if (upper && value) return *upper - *value;
    return std::nullopt;
  }
};

/// Row builders with the pass/fail verdict taken at absolute tolerance tol.
ReportRow make_row(std::string id, std::string fn, std::optional<double> a,
                   std::optional<double> b, Enclosure enc, double tol);
ReportRow make_row(std::string id, std::string fn, std::optional<double> a,
                   std::optional<double> b, BoundPair pair, double tol);
ReportRow make_row(std::string id, std::string fn, std::optional<double> a,
                   std::optional<double> b, GapReport gap, double tol);
ReportRow failed_row(std::string id, std::string fn, std::optional<double> a,
                     std::optional<double> b);

/// %.15g rendering used for every number the tool prints.
std::string fmt15(double v);

std::string json_escape(std::string_view s);

void write_text(std::ostream& out, std::span<const ReportRow> rows);
void write_csv(std::ostream& out, std::span<const ReportRow> rows);
void write_json(std::ostream& out, std::span<const ReportRow> rows);

}  // namespace cvb
