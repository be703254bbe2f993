#include "gpulca/geo.hpp"

#include <cmath>
#include <numbers>

namespace gpulca {

namespace {
constexpr double kEarthRadiusKm = 6371.0;

double radians(double deg) { return deg * std::numbers::pi / 180.0; }
} // namespace

double great_circle_km(const GeoPoint& a, const GeoPoint& b) {
    const double phi1 = radians(a.lat_deg);
    const double phi2 = radians(b.lat_deg);
    const double dphi = radians(b.lat_deg - a.lat_deg);
    const double dlambda = radians(b.lon_deg - a.lon_deg);

    const double h = std::sin(dphi / 2) * std::sin(dphi / 2) +
                     std::cos(phi1) * std::cos(phi2) *
                         std::sin(dlambda / 2) * std::sin(dlambda / 2);
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

double great_circle_km(const Route& route) {
    return great_circle_km(route.from, route.to);
}

} // namespace gpulca
