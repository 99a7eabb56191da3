#include "simpson/reproduction.hpp"

#include <cmath>

#include "simpson/distribution.hpp"
#include "simpson/paradox_tree.hpp"

namespace simpson {

namespace {

struct Printed {
    const char* cell;
    double treated_mass;
    double treated_conditional;
    double control_mass;
    double control_conditional;
};

// Cells in the published column order: 1 before 0 at every level.
constexpr Printed kPrinted[] = {
    {"()", 0.8, 0.8, 0.6, 0.6},
    {"1", 0.0263, 0.2005, 0.2021, 0.3468},
    {"0", 0.7737, 0.8904, 0.3990, 0.9422},
    {"11", 0.0125, 0.1099, 0.0163, 0.0579},
    {"10", 0.0138, 0.7833, 0.1847, 0.6253},
    {"01", 0.0748, 0.4693, 0.0047, 0.2747},
    {"00", 0.6990, 0.9849, 0.3943, 0.9703},
    {"111", 0.0014, 0.0151, 0.0080, 0.0298},
    {"110", 0.0111, 0.5308, 0.0082, 0.7253},
    {"101", 0.0005, 0.2086, 0.0578, 0.3617},
    {"100", 0.0133, 0.8805, 0.1269, 0.9367},
    {"011", 0.0048, 0.0832, 0.0022, 0.1547},
    {"010", 0.0700, 0.6894, 0.0025, 0.8321},
    {"001", 0.0021, 0.2884, 0.0103, 0.4923},
    {"000", 0.6968, 0.9924, 0.3840, 0.9962},
};

// The two table entries contradicted by the accompanying prose, which gives
// c1 = 0.2010 and 0.3486 for the same cell.
struct Misprint {
    const char* quantity;
    double corrected;
};
constexpr Misprint kMisprints[] = {
    {"P(X1,B=1|A0)", 0.2010},
    {"P(X1|A0,B=1)", 0.3486},
};

PublishedValue make(std::string quantity, double printed, double computed) {
    PublishedValue v{std::move(quantity), printed, printed, computed, false};
    for (const auto& m : kMisprints) {
        if (v.quantity == m.quantity) {
            v.expected = m.corrected;
            v.known_misprint = true;
        }
    }
    return v;
}

std::string cell_label(const CellIndex& cell) {
    return cell.depth() == 0 ? "" : ",B=" + cell.to_string();
}

}  // namespace

bool PublishedValue::deviates() const { return !(std::abs(computed - expected) <= kPublishedTolerance); }

std::vector<PublishedValue> reproduce_worked_example() {
    const ParadoxTree tree = build(kWorkedExampleSeed, 3);
    const JointDistribution joint = assemble_joint(tree, 0.5);
    const double p_treated = joint.p_treated();
    const auto order = identity_order(3);

    std::vector<PublishedValue> rows;

    const Split first = decompose(kWorkedExampleSeed);
    const struct {
        const char* name;
        double printed;
        double computed;
    } split_masses[] = {
        {"a1", 0.0263, first.inner.a}, {"b1", 0.1047, first.inner.b},
        {"a2", 0.7737, first.outer.a}, {"b2", 0.0953, first.outer.b},
        {"c1", 0.2010, first.inner.c}, {"d1", 0.3755, first.inner.d},
        {"c2", 0.3990, first.outer.c}, {"d2", 0.0245, first.outer.d},
    };
    for (const auto& m : split_masses) rows.push_back(make(m.name, m.printed, m.computed));

    for (const auto& p : kPrinted) {
        const CellIndex cell = CellIndex::parse(p.cell);
        const auto prefix = std::span<const int>(order).first(static_cast<std::size_t>(cell.depth()));
        const std::string label = cell_label(cell);

        // Success mass within the arm, P(X1, cell | arm), summed from the joint.
        double treated_mass = 0.0;
        double control_mass = 0.0;
        for (std::size_t i = 0; i < joint.probs().size(); ++i) {
            const Outcome o = outcome_at(3, i);
            if (o.x != 1 || (o.b >> (3 - cell.depth())) != cell.pattern()) continue;
            (o.a ? treated_mass : control_mass) += joint.probs()[i];
        }
        treated_mass /= p_treated;
        control_mass /= 1.0 - p_treated;

        if (cell.depth() > 0) {
            rows.push_back(make("P(X1" + label + "|A1)", p.treated_mass, treated_mass));
        }
        rows.push_back(make("P(X1|A1" + label + ")", p.treated_conditional,
                            conditional(joint, true, true, cell, prefix)));
        if (cell.depth() > 0) {
            rows.push_back(make("P(X1" + label + "|A0)", p.control_mass, control_mass));
        }
        rows.push_back(make("P(X1|A0" + label + ")", p.control_conditional,
                            conditional(joint, true, false, cell, prefix)));
    }
    return rows;
}

}  // namespace simpson
