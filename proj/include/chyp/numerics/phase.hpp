#pragma once

#include <span>

#include "chyp/numerics/complex.hpp"

namespace chyp {

// Continuous argument variation along a sampled path: the sum of principal
// argument increments between consecutive samples.
//
// Throws PreconditionError if any increment reaches pi/2 in magnitude (the
// path is under-sampled) or if a sample is numerically zero relative to the
// largest sample.
double unwrap_phase(std::span<const Complex<double>> samples);

}  // namespace chyp
