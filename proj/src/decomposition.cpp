#include "simpson/decomposition.hpp"

#include <cmath>
#include <sstream>

#include "simpson/errors.hpp"

namespace simpson {

namespace {

constexpr double kArmMassSlack = 1e-12;

std::string describe(const Quadruple& q) {
    std::ostringstream out;
    out.precision(17);
    out << "(" << q.a << ", " << q.b << ", " << q.c << ", " << q.d << ")";
    return out.str();
}

// Intersection of y = inner * x with the line of slope `outer` through
// (x0, y0); returns the point as (horizontal, vertical).
PlaneVector intersect(PlaneVector parent, double inner, double outer) {
    const double horizontal = (parent.vertical - outer * parent.horizontal) / (inner - outer);
    return {horizontal, inner * horizontal};
}

}  // namespace

const char* symbol(Direction d) noexcept { return d == Direction::greater ? ">" : "<"; }

void validate(const Quadruple& q) {
    for (double v : {q.a, q.b, q.c, q.d}) {
        if (!std::isfinite(v) || v <= kAxisTolerance) {
            throw PreconditionError("quadruple " + describe(q) +
                                    " has a mass that is not strictly positive");
        }
    }
    if (q.a + q.b > 1.0 + kArmMassSlack || q.c + q.d > 1.0 + kArmMassSlack) {
        throw PreconditionError("quadruple " + describe(q) + " has an arm with mass above one");
    }
    if (compare(q.treated(), q.control()) == std::partial_ordering::equivalent) {
        throw PreconditionError("quadruple " + describe(q) +
                                " has equal treated and control proportions");
    }
}

Direction direction_of(const Quadruple& q) {
    const auto order = compare(q.treated(), q.control());
    if (order == std::partial_ordering::greater) return Direction::greater;
    if (order == std::partial_ordering::less) return Direction::less;
    throw PreconditionError("quadruple " + describe(q) + " has no strict direction");
}

Quadruple normalize_arms(const Quadruple& q) {
    const double treated = q.a + q.b;
    const double control = q.c + q.d;
    if (!(treated > 0.0) || !(control > 0.0)) {
        throw PreconditionError("quadruple " + describe(q) + " has an empty arm");
    }
    return {q.a / treated, q.b / treated, q.c / control, q.d / control};
}

void validate_seed(const Quadruple& q) {
    validate(q);
    for (const auto& v : {q.treated(), q.control()}) {
        const double angle = std::atan2(v.vertical, v.horizontal);
        if (angle < kSeedAngleMargin || angle > kHalfPi - kSeedAngleMargin) {
            throw PreconditionError("seed " + describe(q) +
                                    " has an arm within 1e-6 rad of an axis");
        }
    }
}

AngleChoice choose_angles(Angle theta0, Angle eta0, Direction dir) {
    const double t0 = theta0.radians();
    const double e0 = eta0.radians();
    if (dir == Direction::greater) {
        if (!(t0 > e0)) {
            throw PreconditionError("direction '>' requires theta0 > eta0");
        }
        return {Angle(e0 / 4.0), Angle(e0 / 2.0), Angle(kPi / 4.0 + t0 / 2.0),
                Angle(3.0 * kPi / 8.0 + t0 / 4.0)};
    }
    if (!(t0 < e0)) {
        throw PreconditionError("direction '<' requires theta0 < eta0");
    }
    return {Angle(t0 / 2.0), Angle(t0 / 4.0), Angle(3.0 * kPi / 8.0 + e0 / 4.0),
            Angle(kPi / 4.0 + e0 / 2.0)};
}

SlopeSet compute_slopes(const Quadruple& q, const AnglePolicy& policy) {
    validate(q);
    const auto choice = policy(angle_of(q.treated()), angle_of(q.control()), direction_of(q));
    SlopeSet s{choice.theta1.tangent(), choice.theta2.tangent(), choice.eta1.tangent(),
               choice.eta2.tangent()};
    if (std::abs(s.inner_treated - s.outer_treated) < kSlopeSeparation ||
        std::abs(s.inner_control - s.outer_control) < kSlopeSeparation) {
        throw DegenerateSeedError("inner and outer slopes coincide for " + describe(q));
    }
    return s;
}

Split decompose(const Quadruple& q, const AnglePolicy& policy) {
    const SlopeSet s = compute_slopes(q, policy);
    const PlaneVector treated1 = intersect(q.treated(), s.inner_treated, s.outer_treated);
    const PlaneVector control1 = intersect(q.control(), s.inner_control, s.outer_control);

    Split split;
    split.inner = {treated1.vertical, treated1.horizontal, control1.vertical,
                   control1.horizontal};
    split.outer = {q.a - split.inner.a, q.b - split.inner.b, q.c - split.inner.c,
                   q.d - split.inner.d};

    const Direction parent = direction_of(q);
    for (const Quadruple* child : {&split.inner, &split.outer}) {
        for (double v : {child->a, child->b, child->c, child->d}) {
            if (!std::isfinite(v) || v <= kAxisTolerance) {
                throw DegenerateSeedError("child mass underflow splitting " + describe(q));
            }
        }
        const auto order = compare(child->treated(), child->control());
        const bool reversed = parent == Direction::greater
                                  ? order == std::partial_ordering::less
                                  : order == std::partial_ordering::greater;
        if (!reversed) {
            throw DegenerateSeedError("child " + describe(*child) +
                                      " does not reverse its parent " + describe(q));
        }
    }
    return split;
}

}  // namespace simpson
