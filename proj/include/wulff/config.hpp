#pragma once

namespace wulff {

// Relative tolerance for the bisection root-finders; defaults to 1e-12 and
// may be overridden through the WULFF_TOWERS_TOL environment variable.
double bisection_tolerance();

}  // namespace wulff
