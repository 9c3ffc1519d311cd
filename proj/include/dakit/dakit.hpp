#ifndef DAKIT_DAKIT_HPP
#define DAKIT_DAKIT_HPP

// Umbrella header: norms in the Drury-Arveson and radially weighted Besov
// spaces, iterated-logarithm cyclicity diagnostics for stable polynomials,
// and the disk/sphere quadrature used to verify the explicit inequalities.

#include "identities.hpp"
#include "multi_index.hpp"
#include "norms.hpp"
#include "quadrature.hpp"
#include "report.hpp"
#include "roots.hpp"
#include "sampling.hpp"
#include "series.hpp"
#include "series_io.hpp"
#include "transforms.hpp"
#include "verify.hpp"
#include "weights.hpp"

#endif
