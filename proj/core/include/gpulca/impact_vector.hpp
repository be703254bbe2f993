#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "gpulca/categories.hpp"

namespace gpulca {

/// One non-negative finite value per impact category, in the category's
/// canonical unit. Vectors are always complete (no sparse representation)
/// and immutable once built; every operation returns a new vector.
class ImpactVector {
public:
    /// Zero in every category.
    ImpactVector() : values_{} {}

    /// Validating constructor; rejects negative or non-finite entries.
    explicit ImpactVector(const std::array<double, kCategoryCount>& values);

    double operator[](ImpactCategory cat) const { return values_[index_of(cat)]; }
    const std::array<double, kCategoryCount>& values() const { return values_; }

    bool operator==(const ImpactVector&) const = default;

    static ImpactVector zero() { return ImpactVector{}; }

    /// Convenience for tests and synthetic data: zero everywhere except one
    /// category.
    static ImpactVector single(ImpactCategory cat, double value);

private:
    std::array<double, kCategoryCount> values_;
};

/// Category-wise sum of a non-empty list of vectors.
ImpactVector vec_combine(std::span<const ImpactVector> parts);
ImpactVector vec_combine(std::initializer_list<ImpactVector> parts);

/// Category-wise multiplication by a non-negative finite scalar.
ImpactVector vec_scale(const ImpactVector& v, double k);

/// A named vector; the building block of breakdown tables and stage lists.
struct LabeledImpact {
    std::string label;
    ImpactVector impacts;
};

} // namespace gpulca
