#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "cvb/convexity.hpp"
#include "cvb/defaults.hpp"
#include "cvb/deriv_bounds.hpp"
#include "cvb/hardy.hpp"
#include "cvb/hh.hpp"
#include "cvb/jet.hpp"
#include "cvb/quadrature.hpp"
#include "cvb/verify.hpp"

namespace py = pybind11;
using namespace cvb;

namespace {

FunctionSpec spec(const std::string& src) { return FunctionSpec::literal(src); }

std::vector<FunctionSpec> specs(const std::vector<std::string>& srcs) {
  std::vector<FunctionSpec> out;
  out.reserve(srcs.size());
  for (const auto& s : srcs) out.push_back(spec(s));
  return out;
}

SeriesVariant variant_of(const std::string& name) {
  if (name == "half_shift") return SeriesVariant::half_shift;
  if (name == "integer") return SeriesVariant::integer;
  throw py::value_error("variant must be 'half_shift' or 'integer'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Certified numeric enclosures for convex functions";

  auto exc_base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", exc_base);
  py::register_exception<DomainError>(m, "DomainError", exc_base);
  py::register_exception<ParameterError>(m, "ParameterError", exc_base);
  auto exc_pre = py::register_exception<PreconditionError>(m, "PreconditionError", exc_base);
  py::register_exception<ConvexityError>(m, "ConvexityError", exc_pre);
  py::register_exception<NoSuchSplitError>(m, "NoSuchSplitError", exc_pre);
  py::register_exception<QuadratureError>(m, "QuadratureError", exc_base);
  py::register_exception<TargetNotReachedError>(m, "TargetNotReachedError", exc_base);

  py::class_<Enclosure>(m, "Enclosure")
      .def_readonly("lower", &Enclosure::lower)
      .def_readonly("value", &Enclosure::value)
      .def_readonly("upper", &Enclosure::upper)
      .def_property_readonly("slack_lower", &Enclosure::slack_lower)
      .def_property_readonly("slack_upper", &Enclosure::slack_upper)
      .def_property_readonly("gap", &Enclosure::gap)
      .def("holds", &Enclosure::holds, py::arg("tol") = defaults::kCheckTol)
      .def("__repr__", [](const Enclosure& e) {
        return "Enclosure(lower=" + fmt15(e.lower) + ", value=" + fmt15(e.value) +
               ", upper=" + fmt15(e.upper) + ")";
      });

  py::class_<GapReport>(m, "GapReport")
      .def_readonly("gap", &GapReport::gap)
      .def_readonly("lower", &GapReport::lower)
      .def_readonly("upper", &GapReport::upper)
      .def_property_readonly("slack_lower", &GapReport::slack_lower)
      .def_property_readonly("slack_upper", &GapReport::slack_upper)
      .def("holds", &GapReport::holds, py::arg("tol") = defaults::kCheckTol)
      .def("__repr__", [](const GapReport& g) {
        return "GapReport(gap=" + fmt15(g.gap) + ", upper=" + fmt15(g.upper) + ")";
      });

  py::class_<BoundPair>(m, "BoundPair")
      .def_readonly("lhs", &BoundPair::lhs)
      .def_readonly("rhs", &BoundPair::rhs)
      .def_property_readonly("slack", &BoundPair::slack)
      .def("holds", &BoundPair::holds, py::arg("tol") = defaults::kCheckTol)
      .def("__repr__", [](const BoundPair& b) {
        return "BoundPair(lhs=" + fmt15(b.lhs) + ", rhs=" + fmt15(b.rhs) + ")";
      });

  py::class_<ConvexityCertificate>(m, "ConvexityCertificate")
      .def_property_readonly(
          "verdict", [](const ConvexityCertificate& c) { return std::string(to_string(c.verdict)); })
      .def_readonly("level", &ConvexityCertificate::level)
      .def_readonly("grid_size", &ConvexityCertificate::grid_size)
      .def_readonly("tolerance", &ConvexityCertificate::tolerance)
      .def_readonly("max_violation", &ConvexityCertificate::max_violation)
      .def_readonly("witness_x", &ConvexityCertificate::witness_x)
      .def_readonly("witness_y", &ConvexityCertificate::witness_y)
      .def("convex_ok", &ConvexityCertificate::convex_ok)
      .def("concave_ok", &ConvexityCertificate::concave_ok)
      .def("__repr__", [](const ConvexityCertificate& c) {
        return std::string("ConvexityCertificate(verdict='") + to_string(c.verdict) +
               "', level=" + std::to_string(c.level) + ")";
      });

  m.def(
      "evaluate", [](const std::string& f, double x) { return eval_value(parse(f), x); },
      py::arg("f"), py::arg("x"), "Evaluate an expression at x.");

  m.def(
      "derivatives",
      [](const std::string& f, double x, int order) {
        Jet j = eval_jet(parse(f), x, order);
        std::vector<double> out;
        for (int k = 0; k <= order; ++k) out.push_back(j.c[static_cast<size_t>(k)]);
        return out;
      },
      py::arg("f"), py::arg("x"), py::arg("order") = 3,
      "Value and derivatives [f(x), f'(x), ...] up to the given order (max 3).");

  m.def(
      "integrate",
      [](const std::string& f, double a, double b, double tol) {
        return integrate(spec(f), Interval(a, b), tol).value;
      },
      py::arg("f"), py::arg("a"), py::arg("b"), py::arg("tol") = defaults::kFiniteTol);

  m.def(
      "integrate_half_line",
      [](const std::string& f, double tol) { return integrate_half_line(spec(f), tol).value; },
      py::arg("f"), py::arg("tol") = defaults::kHalfLineTol);

  m.def(
      "sum_series",
      [](const std::string& f, double offset, double tol) {
        return sum_series(spec(f), offset, tol);
      },
      py::arg("f"), py::arg("offset") = 0.0, py::arg("tol") = defaults::kSeriesTol,
      "Sum f(k - offset) over k = 1, 2, ...; offset must be 0 or 1/2.");

  m.def(
      "certify_convexity",
      [](const std::string& f, double a, double b, int level, int grid, double tol) {
        return certify(spec(f), Interval(a, b), level, grid, tol);
      },
      py::arg("f"), py::arg("a"), py::arg("b"), py::arg("level") = 0,
      py::arg("grid") = defaults::kGrid, py::arg("tol") = defaults::kCertifyTol);

  m.def(
      "find_split",
      [](const std::string& f, double a, double b) { return find_split(spec(f), Interval(a, b)); },
      py::arg("f"), py::arg("a"), py::arg("b"),
      "Point where f' switches from concave to convex.");

  m.def(
      "hh_enclosure",
      [](const std::string& f, double a, double b) { return hh(spec(f), Interval(a, b)); },
      py::arg("f"), py::arg("a"), py::arg("b"),
      "Midpoint / integral mean / endpoint average bracket for convex f.");

  m.def(
      "riemann_sandwich",
      [](const std::string& f, double a, double b, long n) {
        return riemann_sandwich(spec(f), Interval(a, b), n);
      },
      py::arg("f"), py::arg("a"), py::arg("b"), py::arg("n"));

  m.def(
      "refined_hh",
      [](const std::string& f, double a, double b) { return refined_rhh(spec(f), Interval(a, b)); },
      py::arg("f"), py::arg("a"), py::arg("b"),
      "Log-weighted mean between the plain mean and the endpoint average.");

  m.def(
      "fejer_upper",
      [](const std::string& f, const std::string& g, double a, double b) {
        return fejer_upper(spec(f), spec(g), Interval(a, b));
      },
      py::arg("f"), py::arg("weight"), py::arg("a"), py::arg("b"));

  m.def(
      "reflection_gap",
      [](const std::string& f, double a, double b, double x) {
        return reflection_gap(spec(f), Interval(a, b), x);
      },
      py::arg("f"), py::arg("a"), py::arg("b"), py::arg("x"));

  m.def(
      "composite_enclosure",
      [](const std::string& f, double a, double b, double target_gap, int max_depth) {
        return composite_hh(spec(f), Interval(a, b), target_gap, max_depth);
      },
      py::arg("f"), py::arg("a"), py::arg("b"), py::arg("target_gap"),
      py::arg("max_depth") = 20);

  m.def(
      "series_sandwich",
      [](const std::string& f, const std::string& variant) {
        return series_sandwich(spec(f), variant_of(variant));
      },
      py::arg("f"), py::arg("variant") = "half_shift",
      "Bracket the half-line integral of f between shifted series sums.");

  m.def(
      "hardy_ratio",
      [](const std::string& f, double alpha, double p) {
        return hardy_ratio(spec(f), HardyParams{alpha, p});
      },
      py::arg("f"), py::arg("alpha"), py::arg("p"));

  m.def(
      "holder_product_check",
      [](const std::vector<std::string>& fs, double a, double b) {
        auto us = specs(fs);
        return holder_product_check(us, Interval(a, b));
      },
      py::arg("factors"), py::arg("a"), py::arg("b"));

  m.def(
      "power_convexity",
      [](const std::string& f, double a, double b, long n) {
        return power_convexity(spec(f), Interval(a, b), n);
      },
      py::arg("f"), py::arg("a"), py::arg("b"), py::arg("n"));

  m.def(
      "product_bound",
      [](const std::vector<std::string>& fs, double a, double b) {
        auto us = specs(fs);
        return product_bound(us, Interval(a, b));
      },
      py::arg("factors"), py::arg("a"), py::arg("b"));

  m.def(
      "holder_pair_bound",
      [](const std::string& u, const std::string& v, double a, double b, double p, double q) {
        return holder_pair_bound(spec(u), spec(v), Interval(a, b), p, q);
      },
      py::arg("u"), py::arg("v"), py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"));

  m.def(
      "inflection_bound",
      [](const std::string& f, double a, double b, std::optional<double> c) {
        InflectionBound r = inflection_hadamard(spec(f), Interval(a, b), c);
        return py::make_tuple(r.c, r.report);
      },
      py::arg("f"), py::arg("a"), py::arg("b"), py::arg("c") = py::none(),
      "Returns (c, report) for the secant-vs-mean bound at the f' shape switch.");

  m.def(
      "moment_enclosure",
      [](const std::string& f, double a, double b) {
        return moment_enclosure(spec(f), Interval(a, b));
      },
      py::arg("f"), py::arg("a"), py::arg("b"));

  m.def(
      "trapezoid_gap_enclosure",
      [](const std::string& f, double a, double b) {
        return trapezoid_gap_enclosure(spec(f), Interval(a, b));
      },
      py::arg("f"), py::arg("a"), py::arg("b"));

  m.def(
      "mean_enclosure_endpoint",
      [](const std::string& f, double a, double b) {
        return mean_enclosure_endpoint(spec(f), Interval(a, b));
      },
      py::arg("f"), py::arg("a"), py::arg("b"));

  m.def(
      "mean_enclosure_midpoint",
      [](const std::string& f, double a, double b) {
        return mean_enclosure_midpoint(spec(f), Interval(a, b));
      },
      py::arg("f"), py::arg("a"), py::arg("b"));

  m.def(
      "half_interval_gap",
      [](const std::string& f, double a, double b) {
        return half_interval_gap(spec(f), Interval(a, b));
      },
      py::arg("f"), py::arg("a"), py::arg("b"));

  m.def("log_mean_bound", &log_mean_bound, py::arg("a"), py::arg("b"));

  m.def(
      "verify",
      [](long trials, std::uint64_t seed, double tol, int jobs) {
        VerifyOptions opts;
        opts.trials = trials;
        opts.seed = seed;
        opts.tol = tol;
        opts.jobs = jobs;
        VerifyResult res = verify_suite(opts);
        py::list stats;
        for (const auto& s : res.stats) {
          py::dict d;
          d["id"] = s.id;
          d["trials"] = s.trials;
          d["failures"] = s.failures;
          d["preconditions"] = s.preconditions;
          if (std::isfinite(s.min_slack))
            d["min_slack"] = s.min_slack;
          else
            d["min_slack"] = py::none();
          stats.append(d);
        }
        py::dict out;
        out["all_ok"] = res.all_ok;
        out["elapsed_seconds"] = res.elapsed_seconds;
        out["inequalities"] = stats;
        return out;
      },
      py::arg("trials") = 100, py::arg("seed") = 0, py::arg("tol") = defaults::kCheckTol,
      py::arg("jobs") = 0,
      "Run the randomized inequality suite; returns a summary dict.");
}
