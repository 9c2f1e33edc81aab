#include "etherdrift/numerics.hpp"

#include <vector>

namespace etherdrift::numerics {

double trapezoid(std::span<const double> samples, double spacing) {
    if (samples.size() < 2) return 0.0;
    std::vector<double> terms(samples.begin(), samples.end());
    terms.front() *= 0.5;
    terms.back() *= 0.5;
    return spacing * pairwise_sum<double>(terms);
}

}  // namespace etherdrift::numerics
