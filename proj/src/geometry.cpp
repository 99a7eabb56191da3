#include "simpson/geometry.hpp"

#include <cmath>
#include <string>

#include "simpson/errors.hpp"

namespace simpson {

namespace {

void check_component(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw DomainError(std::string(name) + " component is not finite");
    }
    if (value <= kAxisTolerance) {
        throw DomainError(std::string(name) + " component " + std::to_string(value) +
                          " is not strictly positive");
    }
}

}  // namespace

Angle::Angle(double radians) : radians_(radians) {
    if (!(radians > 0.0 && radians < kHalfPi)) {
        throw DomainError("angle " + std::to_string(radians) + " outside (0, pi/2)");
    }
}

double Angle::tangent() const { return std::tan(radians_); }

void require_open_quadrant(const PlaneVector& v) {
    check_component(v.horizontal, "horizontal");
    check_component(v.vertical, "vertical");
}

Angle angle_of(const PlaneVector& v) {
    require_open_quadrant(v);
    return Angle(std::atan2(v.vertical, v.horizontal));
}

double proportion_of(const PlaneVector& v) {
    require_open_quadrant(v);
    return v.vertical / (v.vertical + v.horizontal);
}

std::partial_ordering compare(const PlaneVector& v1, const PlaneVector& v2) {
    require_open_quadrant(v1);
    require_open_quadrant(v2);
    const double lhs = v1.vertical * v2.horizontal;
    const double rhs = v2.vertical * v1.horizontal;
    return lhs <=> rhs;
}

}  // namespace simpson
