#pragma once

#include "cvb/function_spec.hpp"
#include "cvb/rng.hpp"

namespace cvb {

// Draws an expression convex at the level named by `klass`, together with a
// bounded domain. Coefficient and width ranges are chosen so the convex_f
// family keeps a uniformly fast composite-refinement decay; see the notes at
// the coefficient draws in the implementation.
FunctionSpec random_convex(CounterRng& rng, GeneratorClass klass);

}  // namespace cvb
