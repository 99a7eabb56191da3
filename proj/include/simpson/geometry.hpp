#pragma once

#include <compare>

namespace simpson {

/// A vector in the plane with the failure mass on the x-axis and the
/// success mass on the y-axis, i.e. (b, a) for the treated arm and (d, c)
/// for the control arm.
struct PlaneVector {
    double horizontal = 0.0;
    double vertical = 0.0;

    friend PlaneVector operator+(PlaneVector l, PlaneVector r) {
        return {l.horizontal + r.horizontal, l.vertical + r.vertical};
    }
    friend PlaneVector operator-(PlaneVector l, PlaneVector r) {
        return {l.horizontal - r.horizontal, l.vertical - r.vertical};
    }
    friend PlaneVector operator*(double k, PlaneVector v) {
        return {k * v.horizontal, k * v.vertical};
    }
    friend bool operator==(const PlaneVector&, const PlaneVector&) = default;
};

/// Components at or below this are treated as lying on an axis.
inline constexpr double kAxisTolerance = 1e-12;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2.0;

/// An angle strictly inside (0, pi/2).
class Angle {
public:
    /// Throws DomainError unless 0 < radians < pi/2.
    explicit Angle(double radians);

    double radians() const noexcept { return radians_; }
    double tangent() const;

    friend auto operator<=>(const Angle&, const Angle&) = default;

private:
    double radians_;
};

/// Throws DomainError naming the offending component unless both are finite
/// and strictly greater than kAxisTolerance.
void require_open_quadrant(const PlaneVector& v);

Angle angle_of(const PlaneVector& v);

/// vertical / (vertical + horizontal).
double proportion_of(const PlaneVector& v);

/// Orders the success proportions of two open-quadrant vectors through the
/// cross product v1.vertical * v2.horizontal - v2.vertical * v1.horizontal,
/// so `equivalent` is returned only on an exact tie.
std::partial_ordering compare(const PlaneVector& v1, const PlaneVector& v2);

}  // namespace simpson
