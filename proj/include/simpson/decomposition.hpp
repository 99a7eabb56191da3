#pragma once

#include <functional>
#include <utility>

#include "simpson/geometry.hpp"

namespace simpson {

/// Four cell masses conditional on the treatment arm: treated success `a`,
/// treated failure `b`, control success `c`, control failure `d`.
struct Quadruple {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    PlaneVector treated() const noexcept { return {b, a}; }
    PlaneVector control() const noexcept { return {d, c}; }

    friend Quadruple operator+(const Quadruple& l, const Quadruple& r) {
        return {l.a + r.a, l.b + r.b, l.c + r.c, l.d + r.d};
    }
    friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

/// Which way the treated success proportion compares with the control one.
enum class Direction { greater, less };

constexpr Direction operator!(Direction d) noexcept {
    return d == Direction::greater ? Direction::less : Direction::greater;
}

const char* symbol(Direction d) noexcept;

/// Throws PreconditionError unless every mass exceeds kAxisTolerance, each
/// arm sums to at most one, and the two proportions differ.
void validate(const Quadruple& q);

/// Strict direction of a valid quadruple.
Direction direction_of(const Quadruple& q);

/// Rescale each arm to unit mass, (a, b) -> (a, b) / (a + b).
Quadruple normalize_arms(const Quadruple& q);

/// Seed-level check: validate() plus both arm angles at least
/// kSeedAngleMargin radians away from 0 and pi/2.
inline constexpr double kSeedAngleMargin = 1e-6;
void validate_seed(const Quadruple& q);

/// Angles of the four child vectors. theta* belong to the treated arm,
/// eta* to the control arm; index 1 is the inner child (through the origin
/// below the parent), index 2 the outer child.
struct AngleChoice {
    Angle theta1;
    Angle eta1;
    Angle theta2;
    Angle eta2;
};

/// Published angle picks: for `greater` theta1 = eta0/4, eta1 = eta0/2,
/// theta2 = pi/4 + theta0/2, eta2 = 3pi/8 + theta0/4; `less` mirrors them.
/// Throws PreconditionError when `dir` disagrees with theta0 vs eta0.
AngleChoice choose_angles(Angle theta0, Angle eta0, Direction dir);

/// Alternative angle picks can be injected here; only choose_angles ships.
using AnglePolicy = std::function<AngleChoice(Angle, Angle, Direction)>;

/// Tangents of the inner and outer lines for each arm.
struct SlopeSet {
    double inner_treated = 0.0;
    double outer_treated = 0.0;
    double inner_control = 0.0;
    double outer_control = 0.0;
};

inline constexpr double kSlopeSeparation = 1e-12;

SlopeSet compute_slopes(const Quadruple& q, const AnglePolicy& policy = choose_angles);

struct Split {
    Quadruple inner;  // child 1, labelled with bit 1
    Quadruple outer;  // child 2, labelled with bit 0
};

/// One elementary reversal: splits q into two children whose comparison
/// direction is the opposite of q's, with inner + outer == q.
///
/// Child 1 is the intersection of the ray y = inner * x with the line of
/// slope `outer` through the parent endpoint; child 2 is the remainder.
/// Throws DegenerateSeedError if a child mass drops to kAxisTolerance or
/// below, or if a child fails to reverse strictly.
Split decompose(const Quadruple& q, const AnglePolicy& policy = choose_angles);

}  // namespace simpson
