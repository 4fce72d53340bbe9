#include "chyp/numerics/phase.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "chyp/numerics/errors.hpp"

namespace chyp {

double unwrap_phase(std::span<const Complex<double>> samples) {
  double largest = 0.0;
  for (const auto& z : samples) largest = std::max(largest, abs(z));
  for (const auto& z : samples) {
    if (!(abs(z) > 1e-12 * largest)) throw PreconditionError("unwrap_phase: sample is zero");
  }
  double total = 0.0;
  for (std::size_t k = 1; k < samples.size(); ++k) {
    const double delta = arg(samples[k] * conj(samples[k - 1]));
    if (std::fabs(delta) >= std::numbers::pi / 2) {
      throw PreconditionError("unwrap_phase: increment of " + std::to_string(delta) +
                              " rad at sample " + std::to_string(k) + "; densify the path");
    }
    total += delta;
  }
  return total;
}

}  // namespace chyp
