#pragma once

#include <string>
#include <vector>

#include "simpson/decomposition.hpp"

namespace simpson {

inline constexpr double kPublishedTolerance = 5e-5;

/// One published four-decimal figure of the three-factor worked example
/// alongside its recomputed value.
struct PublishedValue {
    std::string quantity;  // e.g. "P(X1|A1,B=101)"
    double printed = 0.0;  // as printed
    double expected = 0.0; // printed value, or the formula value for a known misprint
    double computed = 0.0;
    bool known_misprint = false;

    bool deviates() const;
};

/// Seed of the worked example.
inline constexpr Quadruple kWorkedExampleSeed{0.8, 0.2, 0.6, 0.4};

/// Rebuilds the worked example (seed (0.8, 0.2, 0.6, 0.4), three factors)
/// through build -> assemble_joint -> conditional and pairs every published
/// figure with its recomputed value: the first split's eight masses, then
/// the per-cell success masses and conditionals for both arms.
std::vector<PublishedValue> reproduce_worked_example();

}  // namespace simpson
