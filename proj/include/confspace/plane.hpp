// The explicit homeomorphism Conf_2(R^2) -> R^3 x S^1.
#pragma once

#include <array>
#include <stdexcept>

namespace confspace {

struct PlanarPair {
    std::array<double, 2> x{};
    std::array<double, 2> y{};
};

// (first point, log separation, unit separation direction).
struct ProductPoint {
    std::array<double, 2> a{};
    double t = 0.0;
    std::array<double, 2> u{};
};

struct DegeneratePairError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requires |x - y| >= 1e-300; throws DegeneratePairError below that.
ProductPoint pair_to_product(const PlanarPair& p);

// Requires u within 1e-12 of unit length; throws DegeneratePairError otherwise.
PlanarPair product_to_pair(const ProductPoint& q);

}  // namespace confspace
