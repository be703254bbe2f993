#include "gpulca/impact_vector.hpp"

#include <cmath>
#include <string>

#include "gpulca/error.hpp"

namespace gpulca {

ImpactVector::ImpactVector(const std::array<double, kCategoryCount>& values)
    : values_(values) {
    for (std::size_t i = 0; i < kCategoryCount; ++i) {
        const double v = values_[i];
        if (!std::isfinite(v))
            throw Error("impact vector: non-finite value for " +
                        std::string(category_id(static_cast<ImpactCategory>(i))));
        if (v < 0.0)
            throw Error("impact vector: negative value for " +
                        std::string(category_id(static_cast<ImpactCategory>(i))) +
                        " (negative values are forbidden under cut-off allocation)");
    }
}

ImpactVector ImpactVector::single(ImpactCategory cat, double value) {
    std::array<double, kCategoryCount> values{};
    values[index_of(cat)] = value;
    return ImpactVector(values);
}

ImpactVector vec_combine(std::span<const ImpactVector> parts) {
    if (parts.empty())
        throw Error("vec_combine: empty part list");
    std::array<double, kCategoryCount> sum{};
    for (const auto& part : parts)
        for (std::size_t i = 0; i < kCategoryCount; ++i)
            sum[i] += part.values()[i];
    return ImpactVector(sum);
}

ImpactVector vec_combine(std::initializer_list<ImpactVector> parts) {
    return vec_combine(std::span<const ImpactVector>(parts.begin(), parts.size()));
}

ImpactVector vec_scale(const ImpactVector& v, double k) {
    if (!std::isfinite(k))
        throw Error("vec_scale: non-finite scale factor");
    if (k < 0.0)
        throw Error("vec_scale: negative scale factor");
    std::array<double, kCategoryCount> scaled{};
    for (std::size_t i = 0; i < kCategoryCount; ++i)
        scaled[i] = v.values()[i] * k;
    return ImpactVector(scaled);
}

} // namespace gpulca
