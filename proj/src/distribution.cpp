#include "simpson/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "simpson/errors.hpp"

namespace simpson {

std::size_t outcome_count(int n) { return std::size_t{1} << (n + 2); }

std::size_t outcome_index(int n, const Outcome& o) {
    return (static_cast<std::size_t>(o.x & 1) << (n + 1)) |
           (static_cast<std::size_t>(o.a & 1) << n) | o.b;
}

Outcome outcome_at(int n, std::size_t index) {
    return {static_cast<int>((index >> (n + 1)) & 1U), static_cast<int>((index >> n) & 1U),
            static_cast<std::uint32_t>(index & ((std::size_t{1} << n) - 1))};
}

namespace {

void check_factor_count(int n) {
    if (n < 0 || n > kMaxFactors) {
        throw PreconditionError("factor count " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxFactors) + "]");
    }
}

// Value of factor `factor` (1-based) in an outcome's b bits.
int factor_bit(int n, std::uint32_t b, int factor) {
    return static_cast<int>((b >> (n - factor)) & 1U);
}

void check_order(int n, std::span<const int> order, int max_depth) {
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int f : order) {
        if (f < 1 || f > n) {
            throw PreconditionError("factor " + std::to_string(f) + " outside 1.." +
                                    std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(f)]) {
            throw PreconditionError("factor " + std::to_string(f) + " repeated in order");
        }
        seen[static_cast<std::size_t>(f)] = true;
    }
    if (max_depth < 0 || max_depth > static_cast<int>(order.size())) {
        throw PreconditionError("depth " + std::to_string(max_depth) +
                                " exceeds the number of ordered factors");
    }
}

std::string describe_order(std::span<const int> order) {
    std::string out = "(";
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(order[i]);
    }
    return out + ")";
}

// Per-depth tallies over arbitrary nonnegative masses (probabilities or
// counts). `keys` holds each outcome's cell pattern under the current
// ordering prefix; `empty` receives the first cell whose arm mass does not
// exceed `threshold`.
DepthRecord tally_depth(int n, std::span<const double> masses,
                        std::span<const std::uint32_t> keys, int depth, double threshold,
                        std::optional<CellIndex>& empty) {
    const std::size_t cells = std::size_t{1} << depth;
    std::vector<double> success1(cells, 0.0), arm1(cells, 0.0);
    std::vector<double> success0(cells, 0.0), arm0(cells, 0.0);
    for (std::size_t i = 0; i < masses.size(); ++i) {
        const Outcome o = outcome_at(n, i);
        const std::uint32_t key = keys[i];
        auto& arm = o.a ? arm1 : arm0;
        auto& success = o.a ? success1 : success0;
        arm[key] += masses[i];
        if (o.x) success[key] += masses[i];
    }
    std::vector<CellComparison> comparisons;
    comparisons.reserve(cells);
    for (std::uint32_t k = 0; k < cells; ++k) {
        if (!(arm1[k] > threshold) || !(arm0[k] > threshold)) {
            empty = CellIndex(depth, k);
            return {};
        }
        comparisons.push_back({CellIndex(depth, k), success1[k] / arm1[k], success0[k] / arm0[k]});
    }
    return summarize_depth(depth, std::move(comparisons));
}

void extend_keys(int n, std::vector<std::uint32_t>& keys, int factor) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const Outcome o = outcome_at(n, i);
        keys[i] = (keys[i] << 1) | static_cast<std::uint32_t>(factor_bit(n, o.b, factor));
    }
}

}  // namespace

JointDistribution::JointDistribution(int n, std::vector<double> probs, double tolerance)
    : n_(n), probs_(std::move(probs)) {
    check_factor_count(n);
    if (probs_.size() != outcome_count(n)) {
        throw PreconditionError("expected " + std::to_string(outcome_count(n)) +
                                " probabilities, got " + std::to_string(probs_.size()));
    }
    double total = 0.0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        const double p = probs_[i];
        if (!std::isfinite(p) || p < 0.0) {
            throw PreconditionError("probability at outcome " + std::to_string(i) +
                                    " is negative or not finite");
        }
        total += p;
        if (outcome_at(n, i).a) p_treated_ += p;
    }
    if (std::abs(total - 1.0) > tolerance) {
        throw PreconditionError("probabilities sum to " + std::to_string(total) + ", not 1");
    }
}

Dataset::Dataset(int n, std::vector<std::uint64_t> counts) : n_(n), counts_(std::move(counts)) {
    check_factor_count(n);
    if (counts_.size() != outcome_count(n)) {
        throw PreconditionError("expected " + std::to_string(outcome_count(n)) +
                                " counts, got " + std::to_string(counts_.size()));
    }
    total_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
    if (total_ == 0) throw PreconditionError("dataset has no observations");
}

EffectMeasures effect_measures(double p1, double p0) {
    for (double p : {p1, p0}) {
        if (!(p > 0.0 && p < 1.0)) {
            throw PreconditionError("proportion " + std::to_string(p) + " outside (0, 1)");
        }
    }
    return {p1 - p0, p1 / p0, p1 * (1.0 - p0) / ((1.0 - p1) * p0)};
}

bool root_is_normalized(const ParadoxTree& tree) {
    const auto& q = tree.root().quad;
    return std::abs(q.a + q.b - 1.0) <= 1e-9 && std::abs(q.c + q.d - 1.0) <= 1e-9;
}

JointDistribution assemble_joint(const ParadoxTree& tree, double p_treated) {
    if (!(p_treated > 0.0 && p_treated < 1.0)) {
        throw PreconditionError("p_treated " + std::to_string(p_treated) + " outside (0, 1)");
    }
    const int n = tree.n();
    check_factor_count(n);
    const auto& root = tree.root().quad;
    double treated_scale = 1.0;
    double control_scale = 1.0;
    if (!root_is_normalized(tree)) {
        treated_scale = 1.0 / (root.a + root.b);
        control_scale = 1.0 / (root.c + root.d);
    }
    const double w1 = p_treated * treated_scale;
    const double w0 = (1.0 - p_treated) * control_scale;

    std::vector<double> probs(outcome_count(n), 0.0);
    for (const auto& leaf : tree.level(n)) {
        const std::uint32_t b = leaf.index.pattern();
        probs[outcome_index(n, {1, 1, b})] = w1 * leaf.quad.a;
        probs[outcome_index(n, {0, 1, b})] = w1 * leaf.quad.b;
        probs[outcome_index(n, {1, 0, b})] = w0 * leaf.quad.c;
        probs[outcome_index(n, {0, 0, b})] = w0 * leaf.quad.d;
    }
    return JointDistribution(n, std::move(probs));
}

std::vector<int> identity_order(int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    return order;
}

double conditional(const JointDistribution& joint, bool success, bool arm,
                   const CellIndex& cell, std::span<const int> factor_order) {
    const int n = joint.n();
    check_order(n, factor_order, cell.depth());
    double numerator = 0.0;
    double denominator = 0.0;
    const auto probs = joint.probs();
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const Outcome o = outcome_at(n, i);
        if (o.a != static_cast<int>(arm)) continue;
        bool inside = true;
        for (int pos = 1; pos <= cell.depth() && inside; ++pos) {
            inside = factor_bit(n, o.b, factor_order[static_cast<std::size_t>(pos - 1)]) ==
                     cell.bit(pos);
        }
        if (!inside) continue;
        denominator += probs[i];
        if (o.x == static_cast<int>(success)) numerator += probs[i];
    }
    if (!(denominator > kZeroProbability)) {
        throw ZeroProbabilityError("conditioning event A=" + std::to_string(arm) + ", cell " +
                                       cell.to_string() + " has zero probability",
                                   cell.to_string());
    }
    return numerator / denominator;
}

double conditional(const JointDistribution& joint, bool success, bool arm,
                   const CellIndex& cell) {
    const auto order = identity_order(joint.n());
    return conditional(joint, success, arm, cell,
                       std::span<const int>(order).first(static_cast<std::size_t>(cell.depth())));
}

ChainReport verify_chain(const JointDistribution& joint, std::span<const int> factor_order,
                         int max_depth) {
    const int n = joint.n();
    check_order(n, factor_order, max_depth);
    std::vector<std::uint32_t> keys(joint.probs().size(), 0);
    std::vector<DepthRecord> depths;
    for (int depth = 0; depth <= max_depth; ++depth) {
        if (depth > 0) extend_keys(n, keys, factor_order[static_cast<std::size_t>(depth - 1)]);
        std::optional<CellIndex> empty;
        auto record = tally_depth(n, joint.probs(), keys, depth, kZeroProbability, empty);
        if (empty) {
            const std::string where = describe_order(factor_order.first(
                                          static_cast<std::size_t>(depth))) +
                                      ":" + empty->to_string();
            throw ZeroProbabilityError("cell " + where + " has zero probability in an arm",
                                       where);
        }
        depths.push_back(std::move(record));
    }
    return make_report(std::move(depths));
}

ChainReport verify_chain(const JointDistribution& joint) {
    const auto order = identity_order(joint.n());
    return verify_chain(joint, order, joint.n());
}

JointDistribution empirical_joint(const Dataset& data) {
    std::vector<double> probs(data.counts().size());
    const double total = static_cast<double>(data.total());
    std::transform(data.counts().begin(), data.counts().end(), probs.begin(),
                   [total](std::uint64_t c) { return static_cast<double>(c) / total; });
    return JointDistribution(data.n(), std::move(probs));
}

JointDistribution marginalize_last(const JointDistribution& joint) {
    const int n = joint.n();
    if (n == 0) throw PreconditionError("no factor to marginalize");
    std::vector<double> probs(outcome_count(n - 1), 0.0);
    for (std::size_t i = 0; i < joint.probs().size(); ++i) {
        const Outcome o = outcome_at(n, i);
        probs[outcome_index(n - 1, {o.x, o.a, o.b >> 1})] += joint.probs()[i];
    }
    return JointDistribution(n - 1, std::move(probs));
}

double total_variation(const JointDistribution& lhs, const JointDistribution& rhs) {
    if (lhs.n() != rhs.n()) throw PreconditionError("distributions differ in factor count");
    double sum = 0.0;
    for (std::size_t i = 0; i < lhs.probs().size(); ++i) {
        sum += std::abs(lhs.probs()[i] - rhs.probs()[i]);
    }
    return 0.5 * sum;
}

std::vector<Detection> detect(const Dataset& data, int max_factors) {
    const int n = data.n();
    if (n > kMaxDetectFactors) {
        throw PreconditionError("detection enumerates orderings of at most " +
                                std::to_string(kMaxDetectFactors) + " factors");
    }
    if (max_factors < 0) throw PreconditionError("max_factors must be nonnegative");
    max_factors = std::min(max_factors, n);

    std::vector<double> masses(data.counts().size());
    std::transform(data.counts().begin(), data.counts().end(), masses.begin(),
                   [](std::uint64_t c) { return static_cast<double>(c); });

    std::vector<Detection> found;
    std::vector<int> order;
    std::vector<DepthRecord> depths;
    std::vector<std::vector<std::uint32_t>> keys{std::vector<std::uint32_t>(masses.size(), 0)};
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

    std::optional<CellIndex> empty;
    depths.push_back(tally_depth(n, masses, keys.back(), 0, 0.0, empty));
    if (empty) {
        return {{{}, make_report({}), false, {"an arm has no observations"}}};
    }

    // Depth-first over orderings: the prefix's depth records are shared by
    // all its extensions, so each step tallies only the newest depth.
    auto visit = [&](auto&& self) -> void {
        for (int f = 1; f <= n; ++f) {
            if (used[static_cast<std::size_t>(f)]) continue;
            order.push_back(f);
            used[static_cast<std::size_t>(f)] = true;
            keys.push_back(keys.back());
            extend_keys(n, keys.back(), f);
            const int depth = static_cast<int>(order.size());
            std::optional<CellIndex> hole;
            auto record = tally_depth(n, masses, keys.back(), depth, 0.0, hole);
            if (hole) {
                Detection d{order, make_report(depths), false, {}};
                d.flips = d.report.has_flip();
                d.warnings.push_back("ordering " + describe_order(order) + ": cell " +
                                     hole->to_string() + " is empty in an arm; chain stops at depth " +
                                     std::to_string(depth - 1));
                found.push_back(std::move(d));
            } else {
                depths.push_back(std::move(record));
                ChainReport report = make_report(depths);
                if (report.has_flip()) {
                    found.push_back({order, std::move(report), true, {}});
                }
                if (depth < max_factors) self(self);
                depths.pop_back();
            }
            keys.pop_back();
            used[static_cast<std::size_t>(f)] = false;
            order.pop_back();
        }
    };
    if (max_factors > 0) visit(visit);
    return found;
}

Dataset kidney_stone_dataset() {
    std::vector<std::uint64_t> counts(outcome_count(1), 0);
    auto put = [&](int x, int a, std::uint32_t small, std::uint64_t c) {
        counts[outcome_index(1, {x, a, small})] = c;
    };
    put(1, 1, 1, 234);
    put(0, 1, 1, 270 - 234);
    put(1, 1, 0, 55);
    put(0, 1, 0, 80 - 55);
    put(1, 0, 1, 81);
    put(0, 0, 1, 87 - 81);
    put(1, 0, 0, 192);
    put(0, 0, 0, 263 - 192);
    return Dataset(1, std::move(counts));
}

}  // namespace simpson
