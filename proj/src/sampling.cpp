#include <algorithm>
#include <random>
#include <numeric>

#include "simpson/distribution.hpp"
#include "simpson/errors.hpp"

namespace simpson {

Dataset sample(const JointDistribution& joint, std::uint64_t total, std::uint64_t rng_seed) {
    if (total == 0) throw PreconditionError("sample size must be at least 1");

    const auto probs = joint.probs();
    std::vector<double> cumulative(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] > 0.0) last_positive = i;
    }

    std::mt19937_64 engine(rng_seed);
    std::vector<std::uint64_t> counts(probs.size(), 0);
    for (std::uint64_t draw = 0; draw < total; ++draw) {
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const std::size_t cell = it == cumulative.end()
                                     ? last_positive
                                     : static_cast<std::size_t>(it - cumulative.begin());
        ++counts[cell];
    }
    return Dataset(joint.n(), std::move(counts));
}

}  // namespace simpson
