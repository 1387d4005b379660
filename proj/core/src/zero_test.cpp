#include "unideal/zero_test.hpp"

#include <cmath>
#include <stdexcept>

namespace unideal {

std::uint64_t default_sample_size(std::uint64_t deg_bound) { return std::max<std::uint64_t>(100, 100 * deg_bound); }

ZeroTestResult random_zero_test(const std::function<Scalar(const std::vector<Scalar>&)>& eval, std::size_t n,
                                std::uint64_t deg_bound, std::size_t trials, const Field& field, Rng& rng,
                                std::uint64_t sample_size) {
  ZeroTestResult result;
  result.sample_size = sample_size == 0 ? default_sample_size(deg_bound) : sample_size;
  if (!field.has_at_least(result.sample_size + 1))
    throw std::invalid_argument("field " + field.name() + " is smaller than the sample set");
  const double per_trial = static_cast<double>(deg_bound) / static_cast<double>(result.sample_size);
  std::vector<Scalar> point(n);
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& x : point) x = field.from_int(static_cast<long long>(uniform_u64(rng, 1, result.sample_size)));
    ++result.trials_run;
    if (!eval(point).is_zero()) {
      result.nonzero = true;
      result.error_bound = 0.0;
      result.witness = point;
      return result;
    }
  }
  result.error_bound = std::pow(std::min(1.0, per_trial), static_cast<double>(trials));
  return result;
}

}  // namespace unideal
