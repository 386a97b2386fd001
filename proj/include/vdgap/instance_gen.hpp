#pragma once

// Random identity instances: gamma is drawn as a product of a few small ring
// elements, the alpha_i as distinct subproducts, and beta_i = gamma / alpha_i
// by exact division. Collisions trigger a redraw.

#include <cstdint>

#include "vdgap/identity.hpp"
#include "vdgap/multipoly.hpp"
#include "vdgap/quadint.hpp"
#include "vdgap/rng.hpp"

namespace vdgap {

IdentityInstance<BigInt> random_integer_instance(SplitMix64& rng, int m);
IdentityInstance<QuadInt> random_quadratic_instance(SplitMix64& rng, int m, std::int64_t d);
IdentityInstance<MultiPoly> random_poly_instance(SplitMix64& rng, int m, int arity);

}  // namespace vdgap
