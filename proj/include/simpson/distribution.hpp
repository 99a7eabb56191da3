#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "simpson/cell_index.hpp"
#include "simpson/chain_report.hpp"
#include "simpson/paradox_tree.hpp"

namespace simpson {

/// One full outcome (x, a, b1..bn). `b` holds b1 as its most significant bit.
struct Outcome {
    int x = 0;
    int a = 0;
    std::uint32_t b = 0;
};

/// Outcomes are laid out so that ascending index is lexicographic order of
/// (x, a, b1, ..., bn): index = x << (n+1) | a << n | b.
std::size_t outcome_index(int n, const Outcome& o);
Outcome outcome_at(int n, std::size_t index);
std::size_t outcome_count(int n);

inline constexpr int kMaxFactors = 24;
inline constexpr double kNormalizationTolerance = 1e-12;
inline constexpr double kZeroProbability = 1e-15;

/// Probability table over {0,1}^(n+2).
class JointDistribution {
public:
    /// Throws PreconditionError for negative/non-finite entries, a size other
    /// than 2^(n+2), or a total further than `tolerance` from one.
    JointDistribution(int n, std::vector<double> probs,
                      double tolerance = kNormalizationTolerance);

    int n() const noexcept { return n_; }
    /// Marginal P(A1).
    double p_treated() const noexcept { return p_treated_; }

    double operator[](const Outcome& o) const { return probs_[outcome_index(n_, o)]; }
    std::span<const double> probs() const noexcept { return probs_; }

    friend bool operator==(const JointDistribution&, const JointDistribution&) = default;

private:
    int n_;
    std::vector<double> probs_;
    double p_treated_ = 0.0;
};

/// Integer counts per outcome cell.
class Dataset {
public:
    Dataset(int n, std::vector<std::uint64_t> counts);

    int n() const noexcept { return n_; }
    std::uint64_t total() const noexcept { return total_; }
    std::uint64_t operator[](const Outcome& o) const { return counts_[outcome_index(n_, o)]; }
    std::span<const std::uint64_t> counts() const noexcept { return counts_; }

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    int n_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

struct EffectMeasures {
    double risk_difference = 0.0;
    double relative_risk = 0.0;
    double odds_ratio = 0.0;
};

/// p1 - p0, p1 / p0 and p1(1 - p0) / ((1 - p1) p0); both inputs strictly in (0, 1).
EffectMeasures effect_measures(double p1, double p0);

/// True when both arms of the root sum to one within 1e-9.
bool root_is_normalized(const ParadoxTree& tree);

/// Leaf masses are the conditionals given the arm, so each leaf s contributes
/// p_treated * (a, b) and (1 - p_treated) * (c, d). An unnormalized root is
/// rescaled per arm first; check root_is_normalized() to report that.
JointDistribution assemble_joint(const ParadoxTree& tree, double p_treated = 0.5);

/// P(X = success | A = arm, cell), where cell bit i is the value of factor
/// factor_order[i-1] (1-based factor numbers). Summed by brute force over
/// every full outcome.
double conditional(const JointDistribution& joint, bool success, bool arm,
                   const CellIndex& cell, std::span<const int> factor_order);

/// Same with the identity factor order.
double conditional(const JointDistribution& joint, bool success, bool arm,
                   const CellIndex& cell);

/// Checks the alternating chain for depths 0..max_depth when the factors
/// are introduced in `factor_order` (distinct 1-based factor numbers, at
/// least max_depth of them). Throws ZeroProbabilityError naming the first
/// cell whose conditioning event has probability <= 1e-15 in either arm.
ChainReport verify_chain(const JointDistribution& joint, std::span<const int> factor_order,
                         int max_depth);

/// Identity order, full depth.
ChainReport verify_chain(const JointDistribution& joint);

std::vector<int> identity_order(int n);

JointDistribution empirical_joint(const Dataset& data);

/// Sums out the deepest factor b_n.
JointDistribution marginalize_last(const JointDistribution& joint);

double total_variation(const JointDistribution& lhs, const JointDistribution& rhs);

/// Draws `total` outcomes i.i.d. from `joint`.
///
/// Algorithm (stable across versions and platforms): a std::mt19937_64
/// engine is seeded with `rng_seed`; each draw takes one 64-bit output u,
/// forms the uniform (u >> 11) * 2^-53 in [0, 1), and selects the first
/// cell, in outcome_index order, whose running cumulative probability
/// exceeds it. Draws past the final cumulative sum go to the last cell with
/// positive probability.
Dataset sample(const JointDistribution& joint, std::uint64_t total, std::uint64_t rng_seed);

/// One factor ordering found by detect().
struct Detection {
    std::vector<int> factor_order;
    ChainReport report;
    bool flips = false;
    std::vector<std::string> warnings;
};

inline constexpr int kMaxDetectFactors = 8;

/// Runs the chain check on every ordering of every non-empty subset of at
/// most `max_factors` factors, lexicographically. Returns orderings with at
/// least one direction flip, plus orderings whose chain was cut short by an
/// empty cell (with a warning; the report covers the depths before it).
std::vector<Detection> detect(const Dataset& data, int max_factors);

/// Kidney-stone treatment counts (700 patients); factor 1 = small stone.
Dataset kidney_stone_dataset();

}  // namespace simpson
