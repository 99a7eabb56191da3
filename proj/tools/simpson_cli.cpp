// Command-line front end: construct | verify | sample | detect | render | demo.
//
// Exit codes: 0 success / chain holds, 1 chain does not hold (or demo found
// an unexplained deviation), 2 invalid input, 3 construction broke down at a
// cell, 4 zero-probability conditioning cell.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simpson/distribution.hpp"
#include "simpson/errors.hpp"
#include "simpson/io.hpp"
#include "simpson/paradox_tree.hpp"
#include "simpson/render.hpp"
#include "simpson/reproduction.hpp"

using namespace simpson;

namespace {

enum Exit : int { kOk = 0, kChainFails = 1, kInvalid = 2, kDegenerate = 3, kZeroCell = 4 };

std::string format_order(const std::vector<int>& order) {
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(order[i]);
    }
    return out.empty() ? "-" : out;
}

void print_report(const ChainReport& report) {
    std::printf("%-6s %-5s %-14s %s\n", "depth", "dir", "min_margin", "worst_cell");
    for (const auto& d : report.depths) {
        const char* dir = d.direction ? symbol(*d.direction) : "mixed";
        std::printf("%-6d %-5s %-14.6g %s\n", d.depth, dir, d.min_margin,
                    d.worst_cell.to_string().c_str());
    }
    std::printf("verdict: %s\n", report.verdict ? "alternating chain holds"
                                                : "alternating chain does not hold");
}

Quadruple seed_from(const std::vector<double>& values) {
    Quadruple seed{values[0], values[1], values[2], values[3]};
    for (double v : values) {
        if (!(v > 0.0)) throw PreconditionError("seed components must be strictly positive");
    }
    const Quadruple normalized = normalize_arms(seed);
    if (std::abs(seed.a + seed.b - 1.0) > 1e-9 || std::abs(seed.c + seed.d - 1.0) > 1e-9) {
        std::fprintf(stderr, "notice: seed normalized per arm to (%.17g, %.17g, %.17g, %.17g)\n",
                     normalized.a, normalized.b, normalized.c, normalized.d);
    }
    validate_seed(normalized);
    return normalized;
}

int run_construct(const std::vector<double>& seed_values, int n, double p_treated,
                  const std::string& out) {
    Quadruple seed;
    try {
        seed = seed_from(seed_values);
        if (!(p_treated > 0.0 && p_treated < 1.0)) {
            throw PreconditionError("--p-treated must lie in (0, 1)");
        }
    } catch (const PreconditionError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInvalid;
    }

    ParadoxTree tree;
    try {
        tree = build(seed, n);
    } catch (const DegenerateSeedError& e) {
        std::fprintf(stderr, "error: construction failed at cell %s: %s\n", e.cell().c_str(),
                     e.what());
        return kDegenerate;
    } catch (const PreconditionError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInvalid;
    }

    const ChainReport report = verify_alternation(tree);
    std::printf("constructed %d-factor distribution: %zu cells, %zu elementary reversals\n", n,
                tree.size(), tree.internal_count());
    print_report(report);
    if (!out.empty()) {
        io::write_file(out, io::to_json(assemble_joint(tree, p_treated), io::Provenance{seed}));
        std::printf("wrote %s\n", out.c_str());
    }
    return report.verdict ? kOk : kChainFails;
}

int run_verify(const std::string& in, const std::vector<int>& order_arg,
               std::optional<int> depth) {
    io::DistributionDocument doc{JointDistribution(0, {0.25, 0.25, 0.25, 0.25}), {}};
    try {
        doc = io::from_json(io::read_file(in));
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInvalid;
    }
    const auto order = order_arg.empty() ? identity_order(doc.joint.n()) : order_arg;
    try {
        const ChainReport report =
            verify_chain(doc.joint, order, depth.value_or(static_cast<int>(order.size())));
        std::printf("factor order: %s\n", format_order(order).c_str());
        print_report(report);
        return report.verdict ? kOk : kChainFails;
    } catch (const ZeroProbabilityError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kZeroCell;
    } catch (const PreconditionError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInvalid;
    }
}

int run_sample(const std::string& in, std::uint64_t total, std::uint64_t seed,
               const std::string& out) {
    try {
        const auto doc = io::from_json(io::read_file(in));
        const Dataset data = sample(doc.joint, total, seed);
        const std::string csv = io::to_csv(data);
        if (out.empty()) {
            std::cout << csv;
        } else {
            io::write_file(out, csv);
            std::printf("wrote %llu observations to %s\n",
                        static_cast<unsigned long long>(data.total()), out.c_str());
        }
        return kOk;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInvalid;
    }
}

void print_detections(const std::vector<Detection>& found) {
    std::size_t flipping = 0;
    for (const auto& d : found) {
        if (d.flips) ++flipping;
        std::printf("order %s%s\n", format_order(d.factor_order).c_str(),
                    d.flips ? "  [flip]" : "");
        for (const auto& depth : d.report.depths) {
            const char* dir = depth.direction ? symbol(*depth.direction) : "mixed";
            std::printf("  depth %d  %-5s min_margin %.6g\n", depth.depth, dir, depth.min_margin);
        }
        for (const auto& w : d.warnings) std::printf("  warning: %s\n", w.c_str());
    }
    std::printf("flipping orderings: %zu\n", flipping);
}

int run_detect(const std::string& in, std::optional<int> max_factors) {
    try {
        const Dataset data = io::from_csv(io::read_file(in));
        print_detections(detect(data, max_factors.value_or(data.n())));
        return kOk;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInvalid;
    }
}

int run_render(const std::vector<double>& seed_values, const std::string& out) {
    try {
        const Quadruple seed = seed_from(seed_values);
        render_decomposition(seed, out);
        std::printf("wrote %s\n", out.c_str());
        return kOk;
    } catch (const DegenerateSeedError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kDegenerate;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInvalid;
    }
}

int run_demo() {
    std::printf("Three-factor construction from seed (0.8, 0.2, 0.6, 0.4)\n\n");
    const auto rows = reproduce_worked_example();
    std::size_t unexplained = 0;
    std::printf("%-22s %9s %12s %10s  %s\n", "quantity", "published", "recomputed", "|diff|",
                "status");
    for (const auto& r : rows) {
        const char* status = "ok";
        if (r.known_misprint) {
            status = r.deviates() ? "DEVIATION (vs corrected)" : "misprint; corrected value matches";
        } else if (r.deviates()) {
            status = "DEVIATION";
        }
        if (r.deviates()) ++unexplained;
        std::printf("%-22s %9.4f %12.6f %10.2e  %s\n", r.quantity.c_str(), r.printed, r.computed,
                    std::abs(r.computed - r.expected), status);
    }
    std::printf("\n%zu of %zu published values deviate by more than %.0e\n\n", unexplained,
                rows.size(), kPublishedTolerance);

    const ChainReport chain = verify_alternation(build(kWorkedExampleSeed, 3));
    print_report(chain);

    std::printf("\nKidney-stone treatments (700 patients), factor 1 = small stone\n");
    const auto found = detect(kidney_stone_dataset(), 1);
    print_detections(found);

    std::size_t flipping = 0;
    for (const auto& d : found) flipping += d.flips ? 1 : 0;
    return (unexplained == 0 && chain.verdict && flipping == 1) ? kOk : kChainFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, verify, sample and detect multi-factor Simpson reversals"};
    app.require_subcommand(1);

    std::vector<double> seed;
    int n = 1;
    double p_treated = 0.5;
    std::string out;
    auto* construct = app.add_subcommand("construct", "Build an n-factor reversal distribution");
    construct->add_option("--seed", seed, "a,b,c,d: treated success/failure, control success/failure")
        ->delimiter(',')
        ->expected(4)
        ->required();
    construct->add_option("--n", n, "Number of stratifying factors")->check(CLI::Range(0, 24));
    construct->add_option("--p-treated", p_treated, "Marginal P(A1)");
    construct->add_option("--out", out, "Write the distribution as JSON");

    std::string in;
    std::vector<int> order;
    std::optional<int> depth;
    auto* verify = app.add_subcommand("verify", "Check the alternating chain of a distribution");
    verify->add_option("--in", in, "Distribution JSON")->required();
    verify->add_option("--order", order, "Factor order, e.g. 2,1,3")->delimiter(',');
    verify->add_option("--depth", depth, "Deepest level to check");

    std::uint64_t total = 0;
    std::uint64_t rng_seed = 0;
    auto* sample_cmd = app.add_subcommand("sample", "Draw a synthetic dataset");
    sample_cmd->add_option("--in", in, "Distribution JSON")->required();
    sample_cmd->add_option("--total", total, "Number of observations")
        ->required()
        ->check(CLI::PositiveNumber);
    sample_cmd->add_option("--rng-seed", rng_seed, "Generator seed");
    sample_cmd->add_option("--out", out, "Dataset CSV (stdout if omitted)");

    std::optional<int> max_factors;
    auto* detect_cmd = app.add_subcommand("detect", "Report factor orderings that reverse");
    detect_cmd->add_option("--in", in, "Dataset CSV")->required();
    detect_cmd->add_option("--max-factors", max_factors, "Longest ordering to try");

    auto* render = app.add_subcommand("render", "Draw one split as SVG");
    render->add_option("--seed", seed, "a,b,c,d")->delimiter(',')->expected(4)->required();
    render->add_option("--out", out, "SVG path")->required();

    auto* demo = app.add_subcommand("demo", "Reproduce the three-factor worked example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*construct) return run_construct(seed, n, p_treated, out);
        if (*verify) return run_verify(in, order, depth);
        if (*sample_cmd) return run_sample(in, total, rng_seed, out);
        if (*detect_cmd) return run_detect(in, max_factors);
        if (*render) return run_render(seed, out);
        if (*demo) return run_demo();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInvalid;
    }
    return kInvalid;
}
