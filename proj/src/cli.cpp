#include "cvb/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <span>

#include "CLI11.hpp"
#include "cvb/convexity.hpp"
#include "cvb/deriv_bounds.hpp"
#include "cvb/hardy.hpp"
#include "cvb/hh.hpp"
#include "cvb/report.hpp"
#include "cvb/verify.hpp"

namespace cvb::cli {

namespace {

void emit_rows(const std::string& format, std::ostream& out, std::span<const ReportRow> rows) {
  if (format == "csv")
    write_csv(out, rows);
  else if (format == "json")
    write_json(out, rows);
  else
    write_text(out, rows);
}

int rows_exit_code(std::span<const ReportRow> rows) {
  int code = 0;
  for (const ReportRow& r : rows) {
    if (r.status == Status::precondition_failed) return 2;
    if (r.status == Status::violation) code = 1;
  }
  return code;
}

std::string opt_json(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return "null";
  return fmt15(*v);
}

void print_certificate(const ConvexityCertificate& cert, const std::string& format,
                       std::ostream& out) {
  if (format == "json") {
    out << "{\"verdict\":\"" << to_string(cert.verdict) << "\",\"level\":" << cert.level
        << ",\"grid\":" << cert.grid_size << ",\"tolerance\":" << fmt15(cert.tolerance)
        << ",\"max_violation\":" << fmt15(cert.max_violation)
        << ",\"witness_x\":" << opt_json(cert.witness_x)
        << ",\"witness_y\":" << opt_json(cert.witness_y) << "}\n";
    return;
  }
  out << "verdict=" << to_string(cert.verdict) << " level=" << cert.level
      << " grid=" << cert.grid_size << " tolerance=" << fmt15(cert.tolerance)
      << " max_violation=" << fmt15(cert.max_violation);
  if (cert.witness_x) out << " witness_x=" << fmt15(*cert.witness_x);
  if (cert.witness_y) out << " witness_y=" << fmt15(*cert.witness_y);
  out << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  double default_tol = defaults::kCheckTol;
  if (const char* env = std::getenv("CONVEX_BOUNDS_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != nullptr && *end == '\0' && std::isfinite(v) && v > 0.0)
      default_tol = v;
    else
      err << "warning: ignoring invalid CONVEX_BOUNDS_TOL value\n";
  }

  CLI::App app{"Certified numeric bounds for convex functions"};
  app.name("convex-bounds");
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"text", "csv", "json"};

  // ---- bound ----
  CLI::App* bound = app.add_subcommand("bound", "Two-sided brackets for integral quantities");
  bound->require_subcommand(1);

  std::string bi_expr, bi_format = "text";
  double bi_a = 0.0, bi_b = 0.0, bi_tol = default_tol;
  long bi_riemann = 0;
  bool bi_refined = false;
  double bi_composite = 0.0;
  int bi_max_depth = 20;
  CLI::App* bi = bound->add_subcommand("integral", "Bracket the integral mean on [a, b]");
  bi->add_option("-f,--function", bi_expr, "expression in x")->required();
  bi->add_option("-a", bi_a, "left endpoint")->required();
  bi->add_option("-b", bi_b, "right endpoint")->required();
  bi->add_option("--riemann", bi_riemann, "also bracket the n-term right Riemann sum")
      ->check(CLI::PositiveNumber);
  bi->add_flag("--refined", bi_refined, "also report the sharpened log-weighted upper half");
  bi->add_option("--composite", bi_composite, "refine until the bracket width is at most this")
      ->check(CLI::PositiveNumber);
  bi->add_option("--max-depth", bi_max_depth, "bisection levels to try for --composite")
      ->check(CLI::Range(0, 30));
  bi->add_option("--format", bi_format)->check(CLI::IsMember(formats));
  bi->add_option("--tol", bi_tol, "pass/fail tolerance")->check(CLI::PositiveNumber);

  std::string bs_expr, bs_variant = "eq29", bs_format = "text";
  double bs_tol = default_tol;
  CLI::App* bs = bound->add_subcommand("series", "Bracket the half-line integral by series");
  bs->add_option("-f,--function", bs_expr, "positive decreasing convex expression in x")
      ->required();
  bs->add_option("--variant", bs_variant, "eq29 (half-shifted) or eq210 (integer)")
      ->check(CLI::IsMember({"eq29", "eq210"}));
  bs->add_option("--format", bs_format)->check(CLI::IsMember(formats));
  bs->add_option("--tol", bs_tol)->check(CLI::PositiveNumber);

  std::string bm_expr, bm_format = "text";
  double bm_a = 0.0, bm_b = 0.0, bm_tol = default_tol;
  CLI::App* bm = bound->add_subcommand("moment", "Bracket the first moment about the midpoint");
  bm->add_option("-f,--function", bm_expr)->required();
  bm->add_option("-a", bm_a)->required();
  bm->add_option("-b", bm_b)->required();
  bm->add_option("--format", bm_format)->check(CLI::IsMember(formats));
  bm->add_option("--tol", bm_tol)->check(CLI::PositiveNumber);

  std::string bt_expr, bt_format = "text";
  double bt_a = 0.0, bt_b = 0.0, bt_tol = default_tol;
  CLI::App* bt = bound->add_subcommand("trapezoid-gap", "Bracket the trapezoid defect");
  bt->add_option("-f,--function", bt_expr)->required();
  bt->add_option("-a", bt_a)->required();
  bt->add_option("-b", bt_b)->required();
  bt->add_option("--format", bt_format)->check(CLI::IsMember(formats));
  bt->add_option("--tol", bt_tol)->check(CLI::PositiveNumber);

  std::string bn_expr, bn_variant = "both", bn_format = "text";
  double bn_a = 0.0, bn_b = 0.0, bn_tol = default_tol;
  CLI::App* bn = bound->add_subcommand("mean", "Derivative-anchored brackets around the mean");
  bn->add_option("-f,--function", bn_expr)->required();
  bn->add_option("-a", bn_a)->required();
  bn->add_option("-b", bn_b)->required();
  bn->add_option("--variant", bn_variant, "endpoint, midpoint or both")
      ->check(CLI::IsMember({"endpoint", "midpoint", "both"}));
  bn->add_option("--format", bn_format)->check(CLI::IsMember(formats));
  bn->add_option("--tol", bn_tol)->check(CLI::PositiveNumber);

  std::string bf_expr, bf_format = "text";
  double bf_a = 0.0, bf_b = 0.0, bf_tol = default_tol;
  double bf_c = 0.0;
  bool bf_c_set = false;
  CLI::App* bf = bound->add_subcommand("inflection", "Endpoint-average bound at a derivative switch point");
  bf->add_option("-f,--function", bf_expr)->required();
  bf->add_option("-a", bf_a)->required();
  bf->add_option("-b", bf_b)->required();
  bf->add_option("--c", bf_c, "switch point (located automatically when omitted)")
      ->each([&bf_c_set](const std::string&) { bf_c_set = true; });
  bf->add_option("--format", bf_format)->check(CLI::IsMember(formats));
  bf->add_option("--tol", bf_tol)->check(CLI::PositiveNumber);

  std::string bh_expr, bh_format = "text";
  double bh_a = 0.0, bh_b = 0.0, bh_tol = default_tol;
  CLI::App* bh = bound->add_subcommand("half-gap", "Bound the right-minus-left half integral surplus");
  bh->add_option("-f,--function", bh_expr)->required();
  bh->add_option("-a", bh_a)->required();
  bh->add_option("-b", bh_b)->required();
  bh->add_option("--format", bh_format)->check(CLI::IsMember(formats));
  bh->add_option("--tol", bh_tol)->check(CLI::PositiveNumber);

  std::string bl_format = "text";
  double bl_a = 0.0, bl_b = 0.0, bl_tol = default_tol;
  CLI::App* bl = bound->add_subcommand("logmean", "Weighted geometric/arithmetic bracket of (a+b)/2");
  bl->add_option("-a", bl_a)->required();
  bl->add_option("-b", bl_b)->required();
  bl->add_option("--format", bl_format)->check(CLI::IsMember(formats));
  bl->add_option("--tol", bl_tol)->check(CLI::PositiveNumber);

  // ---- hardy ----
  CLI::App* hardy = app.add_subcommand("hardy", "Weighted-norm quotients on the half line");
  hardy->require_subcommand(1);
  std::string hr_expr, hr_format = "text";
  double hr_alpha = 0.0, hr_p = 0.0, hr_tol = default_tol;
  CLI::App* hr = hardy->add_subcommand("ratio", "Bracket the weighted norm quotient");
  hr->add_option("-f,--function", hr_expr, "nonnegative non-increasing expression in x")
      ->required();
  hr->add_option("--alpha", hr_alpha)->required();
  hr->add_option("--p", hr_p)->required();
  hr->add_option("--format", hr_format)->check(CLI::IsMember(formats));
  hr->add_option("--tol", hr_tol)->check(CLI::PositiveNumber);

  // ---- product ----
  std::vector<std::string> pr_exprs;
  std::string pr_format = "text";
  double pr_a = 0.0, pr_b = 0.0, pr_tol = default_tol;
  double pr_p = 0.0, pr_q = 0.0;
  CLI::App* product = app.add_subcommand("product", "Bounds for products of convex factors");
  product->add_option("-f,--function", pr_exprs, "factor expression (repeatable)")->required();
  product->add_option("-a", pr_a)->required();
  product->add_option("-b", pr_b)->required();
  CLI::Option* opt_p = product->add_option("--p", pr_p, "conjugate exponent p");
  CLI::Option* opt_q = product->add_option("--q", pr_q, "conjugate exponent q");
  opt_p->needs(opt_q);
  opt_q->needs(opt_p);
  product->add_option("--format", pr_format)->check(CLI::IsMember(formats));
  product->add_option("--tol", pr_tol)->check(CLI::PositiveNumber);

  // ---- check ----
  CLI::App* check = app.add_subcommand("check", "Hypothesis certification");
  check->require_subcommand(1);
  std::string cc_expr, cc_format = "text";
  double cc_a = 0.0, cc_b = 0.0, cc_tol = defaults::kCertifyTol;
  int cc_level = 0, cc_grid = defaults::kGrid;
  CLI::App* cc = check->add_subcommand("convexity", "Certify convexity of f or a derivative");
  cc->add_option("-f,--function", cc_expr)->required();
  cc->add_option("-a", cc_a)->required();
  cc->add_option("-b", cc_b)->required();
  cc->add_option("--level", cc_level, "derivative order to certify (0, 1 or 2)")
      ->check(CLI::Range(0, 2));
  cc->add_option("--grid", cc_grid, "sample count")->check(CLI::Range(16, 100000));
  cc->add_option("--tol", cc_tol, "certification tolerance before magnitude scaling")
      ->check(CLI::PositiveNumber);
  cc->add_option("--format", cc_format)->check(CLI::IsMember({"text", "json"}));

  // ---- verify ----
  CLI::App* verify = app.add_subcommand("verify", "Randomized self-checks of every bound");
  verify->require_subcommand(1);
  std::string va_format = "text";
  long va_trials = 100;
  std::uint64_t va_seed = 0;
  int va_jobs = 0;
  double va_tol = default_tol;
  CLI::App* va = verify->add_subcommand("all", "Run every inequality on random draws");
  va->add_option("--trials", va_trials)->check(CLI::PositiveNumber);
  va->add_option("--seed", va_seed);
  va->add_option("--jobs", va_jobs, "worker threads (default: hardware)")
      ->check(CLI::Range(0, 1024));
  va->add_option("--tol", va_tol)->check(CLI::PositiveNumber);
  va->add_option("--format", va_format)->check(CLI::IsMember(formats));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  try {
    std::vector<ReportRow> rows;

    if (bi->parsed()) {
      FunctionSpec f = FunctionSpec::literal(bi_expr);
      Interval iv(bi_a, bi_b);
      rows.push_back(make_row("HH", bi_expr, bi_a, bi_b, hh(f, iv), bi_tol));
      if (bi_riemann > 0)
        rows.push_back(
            make_row("2.2", bi_expr, bi_a, bi_b, riemann_sandwich(f, iv, bi_riemann), bi_tol));
      if (bi_refined)
        rows.push_back(make_row("2.5", bi_expr, bi_a, bi_b, refined_rhh(f, iv), bi_tol));
      if (bi_composite > 0.0) {
        try {
          Enclosure enc = composite_hh(f, iv, bi_composite, bi_max_depth);
          rows.push_back(make_row("composite", bi_expr, bi_a, bi_b, enc, bi_tol));
        } catch (const TargetNotReachedError& e) {
          err << "composite: " << e.what() << " (achieved gap " << fmt15(e.achieved_gap) << ")\n";
          rows.push_back(failed_row("composite", bi_expr, bi_a, bi_b));
        }
      }
      emit_rows(bi_format, out, rows);
      return rows_exit_code(rows);
    }

    if (bs->parsed()) {
      FunctionSpec g = FunctionSpec::literal(bs_expr);
      bool half = bs_variant == "eq29";
      Enclosure enc =
          series_sandwich(g, half ? SeriesVariant::half_shift : SeriesVariant::integer);
      rows.push_back(make_row(half ? "2.9" : "2.10", bs_expr, 0.0, std::nullopt, enc, bs_tol));
      emit_rows(bs_format, out, rows);
      return rows_exit_code(rows);
    }

    if (bm->parsed()) {
      FunctionSpec f = FunctionSpec::literal(bm_expr);
      rows.push_back(
          make_row("5.1", bm_expr, bm_a, bm_b, moment_enclosure(f, Interval(bm_a, bm_b)), bm_tol));
      emit_rows(bm_format, out, rows);
      return rows_exit_code(rows);
    }

    if (bt->parsed()) {
      FunctionSpec f = FunctionSpec::literal(bt_expr);
      rows.push_back(make_row("5.3", bt_expr, bt_a, bt_b,
                              trapezoid_gap_enclosure(f, Interval(bt_a, bt_b)), bt_tol));
      emit_rows(bt_format, out, rows);
      return rows_exit_code(rows);
    }

    if (bn->parsed()) {
      FunctionSpec f = FunctionSpec::literal(bn_expr);
      Interval iv(bn_a, bn_b);
      if (bn_variant != "midpoint")
        rows.push_back(make_row("5.5", bn_expr, bn_a, bn_b, mean_enclosure_endpoint(f, iv), bn_tol));
      if (bn_variant != "endpoint")
        rows.push_back(make_row("5.6", bn_expr, bn_a, bn_b, mean_enclosure_midpoint(f, iv), bn_tol));
      emit_rows(bn_format, out, rows);
      return rows_exit_code(rows);
    }

    if (bf->parsed()) {
      FunctionSpec f = FunctionSpec::literal(bf_expr);
      std::optional<double> c;
      if (bf_c_set) c = bf_c;
      InflectionBound ib = inflection_hadamard(f, Interval(bf_a, bf_b), c);
      rows.push_back(make_row("4.1", bf_expr, bf_a, bf_b, ib.report, bf_tol));
      emit_rows(bf_format, out, rows);
      return rows_exit_code(rows);
    }

    if (bh->parsed()) {
      FunctionSpec f = FunctionSpec::literal(bh_expr);
      rows.push_back(
          make_row("5.7", bh_expr, bh_a, bh_b, half_interval_gap(f, Interval(bh_a, bh_b)), bh_tol));
      emit_rows(bh_format, out, rows);
      return rows_exit_code(rows);
    }

    if (bl->parsed()) {
      rows.push_back(make_row("5.14", "(a+b)/2", bl_a, bl_b, log_mean_bound(bl_a, bl_b), bl_tol));
      emit_rows(bl_format, out, rows);
      return rows_exit_code(rows);
    }

    if (hr->parsed()) {
      FunctionSpec f = FunctionSpec::literal(hr_expr);
      rows.push_back(make_row("3.1", hr_expr, 0.0, std::nullopt,
                              hardy_ratio(f, HardyParams{hr_alpha, hr_p}), hr_tol));
      emit_rows(hr_format, out, rows);
      return rows_exit_code(rows);
    }

    if (product->parsed()) {
      Interval iv(pr_a, pr_b);
      std::vector<FunctionSpec> us;
      std::string label;
      for (const std::string& text : pr_exprs) {
        us.push_back(FunctionSpec::literal(text, iv));
        if (!label.empty()) label += " | ";
        label += text;
      }
      if (opt_p->count() > 0) {
        if (us.size() != 2) {
          err << "error: conjugate-exponent mode takes exactly two factors\n";
          return 3;
        }
        rows.push_back(make_row("holder-pair", label, pr_a, pr_b,
                                holder_pair_bound(us[0], us[1], iv, pr_p, pr_q), pr_tol));
      } else {
        rows.push_back(make_row("3.6", label, pr_a, pr_b, holder_product_check(us, iv), pr_tol));
        rows.push_back(make_row("3.7", label, pr_a, pr_b, product_bound(us, iv), pr_tol));
      }
      emit_rows(pr_format, out, rows);
      return rows_exit_code(rows);
    }

    if (cc->parsed()) {
      FunctionSpec f = FunctionSpec::literal(cc_expr);
      ConvexityCertificate cert = certify(f, Interval(cc_a, cc_b), cc_level, cc_grid, cc_tol);
      print_certificate(cert, cc_format, out);
      return cert.convex_ok() ? 0 : 1;
    }

    if (va->parsed()) {
      VerifyOptions opts;
      opts.trials = va_trials;
      opts.seed = va_seed;
      opts.tol = va_tol;
      opts.jobs = va_jobs;
      VerifyResult res = verify_suite(opts);
      if (va_format == "csv")
        write_csv(out, res.rows);
      else if (va_format == "json")
        write_verify_json(out, opts, res);
      else
        write_verify_text(out, opts, res);
      if (res.all_ok) return 0;
      for (const InequalityStat& s : res.stats)
        if (s.preconditions > 0) return 2;
      return 1;
    }

    err << "error: no command selected\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cvb::cli
