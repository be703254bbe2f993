#pragma once

namespace gpulca {

struct GeoPoint {
    double lat_deg = 0.0;
    double lon_deg = 0.0;
};

struct Route {
    GeoPoint from;
    GeoPoint to;
};

/// Haversine great-circle distance, mean Earth radius 6371 km.
double great_circle_km(const GeoPoint& a, const GeoPoint& b);
double great_circle_km(const Route& route);

} // namespace gpulca
