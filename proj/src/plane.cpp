#include "confspace/plane.hpp"

#include <cmath>

namespace confspace {

ProductPoint pair_to_product(const PlanarPair& p) {
    double dx = p.x[0] - p.y[0];
    double dy = p.x[1] - p.y[1];
    double r = std::hypot(dx, dy);
    if (!(r >= 1e-300)) throw DegeneratePairError("points coincide (|x-y| < 1e-300)");
    ProductPoint q;
    q.a = p.x;
    q.t = std::log(r);
    q.u = {dx / r, dy / r};
    return q;
}

PlanarPair product_to_pair(const ProductPoint& q) {
    double norm = std::hypot(q.u[0], q.u[1]);
    if (!(std::abs(norm - 1.0) <= 1e-12))
        throw DegeneratePairError("direction is not a unit vector");
    double r = std::exp(q.t);
    PlanarPair p;
    p.x = q.a;
    p.y = {q.a[0] - r * q.u[0], q.a[1] - r * q.u[1]};
    return p;
}

}  // namespace confspace
