#include "cvb/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

#include "cvb/deriv_bounds.hpp"
#include "cvb/hardy.hpp"
#include "cvb/hh.hpp"
#include "cvb/random_convex.hpp"
#include "cvb/rng.hpp"

namespace cvb {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  if (v < 0.0) return "(" + std::string(buf) + ")";
  return buf;
}

// Positive decreasing convex term function: a mix of decaying exponentials.
FunctionSpec random_decaying(CounterRng& rng) {
  std::string text = num(rng.uniform(0.2, 1.5)) + "*exp(" + num(-rng.uniform(0.3, 3.0)) + "*x)";
  if (rng.coin())
    text += " + " + num(rng.uniform(0.2, 1.5)) + "*exp(" + num(-rng.uniform(0.3, 3.0)) + "*x)";
  return FunctionSpec::literal(text);
}

// Nonnegative convex factor, kept strictly positive: c*(x-t)^2 + s.
FunctionSpec random_factor(CounterRng& rng, Interval iv) {
  double t = rng.uniform(iv.a - 0.5, iv.b + 0.5);
  std::string text = num(rng.uniform(0.1, 1.0)) + "*(x - " + num(t) + ")^2 + " +
                     num(rng.uniform(0.05, 1.0));
  return FunctionSpec::literal(text, iv);
}

// Nonnegative weight symmetric about the interval midpoint.
FunctionSpec random_weight(CounterRng& rng, Interval iv) {
  double m = iv.midpoint();
  std::string text = num(rng.uniform(0.1, 1.0)) + " + " + num(rng.uniform(0.0, 1.0)) + "*(x - " +
                     num(m) + ")^2";
  if (rng.coin()) text += " + " + num(rng.uniform(0.0, 0.5)) + "*(x - " + num(m) + ")^4";
  return FunctionSpec::literal(text, iv);
}

ReportRow run_one(const std::string& id, CounterRng& rng, double tol) {
  if (id == "HH") {
    FunctionSpec f = random_convex(rng, GeneratorClass::convex_f);
    return make_row(id, f.expr.source_text(), f.domain->a, f.domain->b, hh(f, *f.domain), tol);
  }
  if (id == "2.1") {
    FunctionSpec f = random_convex(rng, GeneratorClass::convex_f);
    double x = rng.uniform(f.domain->a, f.domain->b);
    double gap = reflection_gap(f, *f.domain, x);
    ReportRow row{id,  f.expr.source_text(),      f.domain->a, f.domain->b, 0.0, gap, std::nullopt,
                  gap >= -tol ? Status::ok : Status::violation};
    return row;
  }
  if (id == "2.2") {
    FunctionSpec f = random_convex(rng, GeneratorClass::convex_f);
    long n = rng.uniform_int(1, 64);
    return make_row(id, f.expr.source_text(), f.domain->a, f.domain->b,
                    riemann_sandwich(f, *f.domain, n), tol);
  }
  if (id == "fejer") {
    FunctionSpec f = random_convex(rng, GeneratorClass::convex_f);
    FunctionSpec g = random_weight(rng, *f.domain);
    return make_row(id, f.expr.source_text(), f.domain->a, f.domain->b,
                    fejer_upper(f, g, *f.domain), tol);
  }
  if (id == "2.5") {
    FunctionSpec f = random_convex(rng, GeneratorClass::convex_f);
    return make_row(id, f.expr.source_text(), f.domain->a, f.domain->b, refined_rhh(f, *f.domain),
                    tol);
  }
  if (id == "2.9") {
    FunctionSpec g = random_decaying(rng);
    return make_row(id, g.expr.source_text(), 0.0, std::nullopt,
                    series_sandwich(g, SeriesVariant::half_shift), tol);
  }
  if (id == "2.10") {
    FunctionSpec g = random_decaying(rng);
    Enclosure narrow = series_sandwich(g, SeriesVariant::half_shift);
    Enclosure wide = series_sandwich(g, SeriesVariant::integer);
    ReportRow row = make_row(id, g.expr.source_text(), 0.0, std::nullopt, wide, tol);
    // The half-shift bracket must nest inside this one.
    bool nested = wide.lower <= narrow.lower + tol && narrow.upper <= wide.upper + tol;
    if (!nested && row.status == Status::ok) row.status = Status::violation;
    return row;
  }
  if (id == "3.1") {
    FunctionSpec f = random_decaying(rng);
    double p = rng.uniform(1.6, 6.0);
    double alpha = rng.uniform(1.5 / p, 1.0 + 0.45 / p);
    return make_row(id, f.expr.source_text(), 0.0, std::nullopt,
                    hardy_ratio(f, HardyParams{alpha, p}), tol);
  }
  if (id == "3.6" || id == "3.7") {
    double a0 = rng.uniform(-1.5, 0.5);
    Interval iv(a0, a0 + rng.uniform(0.5, 2.0));
    long n = rng.uniform_int(2, 3);
    std::vector<FunctionSpec> us;
    std::string label;
    for (long k = 0; k < n; ++k) {
      us.push_back(random_factor(rng, iv));
      if (k) label += " | ";
      label += us.back().expr.source_text();
    }
    BoundPair pair = id == "3.6" ? holder_product_check(us, iv) : product_bound(us, iv);
    return make_row(id, label, iv.a, iv.b, pair, tol);
  }
  if (id == "lemma-3.2") {
    double a0 = rng.uniform(-1.5, 0.5);
    Interval iv(a0, a0 + rng.uniform(0.5, 2.0));
    FunctionSpec u = random_factor(rng, iv);
    long n = rng.uniform_int(2, 5);
    ConvexityCertificate cert = power_convexity(u, iv, n);
    ReportRow row{id,
                  u.expr.source_text(),
                  iv.a,
                  iv.b,
                  std::nullopt,
                  cert.max_violation,
                  std::nullopt,
                  cert.convex_ok() ? Status::ok : Status::violation};
    return row;
  }
  if (id == "holder-pair") {
    double a0 = rng.uniform(-1.5, 0.5);
    Interval iv(a0, a0 + rng.uniform(0.5, 2.0));
    FunctionSpec u = random_factor(rng, iv);
    FunctionSpec v = random_factor(rng, iv);
    double p = rng.uniform(1.2, 4.0);
    double q = p / (p - 1.0);
    return make_row(id, u.expr.source_text() + " | " + v.expr.source_text(), iv.a, iv.b,
                    holder_pair_bound(u, v, iv, p, q), tol);
  }
  if (id == "4.1") {
    FunctionSpec f = random_convex(rng, GeneratorClass::concave_convex_split);
    InflectionBound ib = inflection_hadamard(f, *f.domain);
    return make_row(id, f.expr.source_text(), f.domain->a, f.domain->b, ib.report, tol);
  }
  if (id == "5.1") {
    FunctionSpec f = random_convex(rng, GeneratorClass::convex_fprime);
    return make_row(id, f.expr.source_text(), f.domain->a, f.domain->b,
                    moment_enclosure(f, *f.domain), tol);
  }
  if (id == "5.3") {
    FunctionSpec f = random_convex(rng, GeneratorClass::convex_fsecond);
    return make_row(id, f.expr.source_text(), f.domain->a, f.domain->b,
                    trapezoid_gap_enclosure(f, *f.domain), tol);
  }
  if (id == "5.5") {
    FunctionSpec f = random_convex(rng, GeneratorClass::convex_fprime);
    return make_row(id, f.expr.source_text(), f.domain->a, f.domain->b,
                    mean_enclosure_endpoint(f, *f.domain), tol);
  }
  if (id == "5.6") {
    FunctionSpec f = random_convex(rng, GeneratorClass::convex_fprime);
    return make_row(id, f.expr.source_text(), f.domain->a, f.domain->b,
                    mean_enclosure_midpoint(f, *f.domain), tol);
  }
  if (id == "5.7") {
    FunctionSpec f = random_convex(rng, GeneratorClass::convex_fprime);
    return make_row(id, f.expr.source_text(), f.domain->a, f.domain->b,
                    half_interval_gap(f, *f.domain), tol);
  }
  if (id == "5.14") {
    double a = rng.uniform(0.05, 5.0);
    double b = a + rng.uniform(0.001, 5.0);
    return make_row(id, "(a+b)/2", a, b, log_mean_bound(a, b), tol);
  }
  throw ParameterError("unknown inequality id: " + id);
}

void fold_slack(InequalityStat& stat, const ReportRow& row) {
  ++stat.trials;
  if (row.status == Status::precondition_failed) {
    ++stat.preconditions;
    return;
  }
  if (row.status == Status::violation) ++stat.failures;
  if (auto s = row.slack_lower(); s && std::isfinite(*s)) stat.min_slack = std::min(stat.min_slack, *s);
  if (auto s = row.slack_upper(); s && std::isfinite(*s)) stat.min_slack = std::min(stat.min_slack, *s);
}

}  // namespace

const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids = {
      "HH",  "2.1", "2.2", "fejer",     "2.5", "2.9", "2.10", "3.1", "3.6", "lemma-3.2",
      "3.7", "holder-pair", "4.1", "5.1", "5.3", "5.5", "5.6", "5.7", "5.14"};
  return ids;
}

VerifyResult verify_suite(const VerifyOptions& opts) {
  if (opts.trials < 1) throw ParameterError("trials must be at least 1");
  if (!(opts.tol > 0.0)) throw ParameterError("tolerance must be positive");
  auto start = std::chrono::steady_clock::now();

  const std::vector<std::string>& ids = verify_ids();
  const long tasks = opts.trials * static_cast<long>(ids.size());
  std::vector<ReportRow> rows(static_cast<size_t>(tasks));

  int jobs = opts.jobs > 0 ? opts.jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = std::min<long>(jobs, tasks);

  std::atomic<long> cursor{0};
  auto worker = [&]() {
    for (;;) {
      long task = cursor.fetch_add(1);
      if (task >= tasks) return;
      long trial = task / static_cast<long>(ids.size());
      size_t idx = static_cast<size_t>(task % static_cast<long>(ids.size()));
      CounterRng rng(opts.seed, static_cast<std::uint64_t>(trial), idx);
      try {
        rows[static_cast<size_t>(task)] = run_one(ids[idx], rng, opts.tol);
      } catch (const Error& err) {
        ReportRow row = failed_row(ids[idx], err.what(), std::nullopt, std::nullopt);
        rows[static_cast<size_t>(task)] = row;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(jobs));
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  VerifyResult res;
  res.rows = std::move(rows);
  for (const std::string& id : ids) res.stats.push_back(InequalityStat{id});
  for (size_t task = 0; task < res.rows.size(); ++task)
    fold_slack(res.stats[task % ids.size()], res.rows[task]);
  res.all_ok = true;
  for (const InequalityStat& s : res.stats)
    if (s.failures > 0 || s.preconditions > 0) res.all_ok = false;
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

void write_verify_text(std::ostream& out, const VerifyOptions& opts, const VerifyResult& res) {
  out << "trials=" << opts.trials << " seed=" << opts.seed << " tol=" << fmt15(opts.tol) << "\n";
  for (const InequalityStat& s : res.stats) {
    out << "  " << s.id << ": trials=" << s.trials << " failures=" << s.failures
        << " preconditions=" << s.preconditions << " min_slack=" << fmt15(s.min_slack) << "\n";
  }
  out << (res.all_ok ? "ALL OK" : "FAILURES PRESENT") << " (" << fmt15(res.elapsed_seconds)
      << "s)\n";
}

void write_verify_json(std::ostream& out, const VerifyOptions& opts, const VerifyResult& res) {
  out << "{\"trials\":" << opts.trials << ",\"seed\":" << opts.seed
      << ",\"tol\":" << fmt15(opts.tol) << ",\"all_ok\":" << (res.all_ok ? "true" : "false")
      << ",\"elapsed_seconds\":" << fmt15(res.elapsed_seconds) << ",\"inequalities\":[";
  bool first = true;
  for (const InequalityStat& s : res.stats) {
    if (!first) out << ',';
    first = false;
    out << "{\"id\":\"" << json_escape(s.id) << "\",\"trials\":" << s.trials
        << ",\"failures\":" << s.failures << ",\"preconditions\":" << s.preconditions
        << ",\"min_slack\":" << (std::isfinite(s.min_slack) ? fmt15(s.min_slack) : "null") << "}";
  }
  out << "]}\n";
}

}  // namespace cvb
