#include "nfobs/sigmoid.hpp"

#include <algorithm>
#include <string>

#include "nfobs/types.hpp"

namespace nfobs {

double sigma_eval(const SigmoidSpec& s, int p, double x) {
  if (p < 0 || p > s.derivative_order_max || p > 4) {
    throw OrderError("sigmoid derivative order " + std::to_string(p) + " outside [0, " +
                     std::to_string(std::min(s.derivative_order_max, 4)) + "]");
  }
  return tanh_jet(s.gain, x)[static_cast<std::size_t>(p)];
}

}  // namespace nfobs
