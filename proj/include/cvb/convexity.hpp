#pragma once

#include <optional>

#include "cvb/defaults.hpp"
#include "cvb/errors.hpp"
#include "cvb/function_spec.hpp"
#include "cvb/interval.hpp"

namespace cvb {

enum class Verdict { Convex, Concave, Affine, Neither };

const char* to_string(Verdict v);

// Evidence produced by certify(). `level` says which derivative was examined
// (0: the function, 1: first derivative, 2: second derivative). On a Neither
// verdict, `witness_x`/`witness_y` hold a grid pair whose midpoint breaks the
// convexity (or concavity) test and `max_violation` is the defect magnitude.
struct ConvexityCertificate {
  Verdict verdict = Verdict::Neither;
  int level = 0;
  int grid_size = 0;
  double tolerance = 0.0;  // effective absolute tolerance after magnitude scaling
  double max_violation = 0.0;
  std::optional<double> witness_x;
  std::optional<double> witness_y;

  bool convex_ok() const { return verdict == Verdict::Convex || verdict == Verdict::Affine; }
  bool concave_ok() const { return verdict == Verdict::Concave || verdict == Verdict::Affine; }
};

// Samples the level-th derivative on a refined uniform grid and tests every
// coarse pair against its exact midpoint sample. The defect sign pattern,
// together with a sign check of the (level+2)-th derivative where available,
// decides the verdict. grid >= 16 and level in {0,1,2}.
ConvexityCertificate certify(const FunctionSpec& f, Interval iv, int level = 0,
                             int grid = defaults::kGrid, double tol = defaults::kCertifyTol);

struct NoSuchSplitError : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// A shape hypothesis (convex / concave at some level) failed certification.
/// Carries the certificate so callers can show the witness pair.
class ConvexityError : public PreconditionError {
public:
  ConvexityError(const std::string& what, ConvexityCertificate cert)
      : PreconditionError(what), certificate_(cert) {}
  const ConvexityCertificate& certificate() const noexcept { return certificate_; }

private:
  ConvexityCertificate certificate_;
};

// Locates the leftmost point c where f''' turns from nonpositive to
// nonnegative, so f' is concave on [a,c] and convex on [c,b]. Returns a (or b)
// when f''' never goes negative (or never goes positive). Throws
// NoSuchSplitError when the sign pattern of f''' is interleaved or a side
// fails its shape check.
double find_split(const FunctionSpec& f, Interval iv, int grid = defaults::kGrid,
                  double tol = defaults::kCertifyTol);

}  // namespace cvb
