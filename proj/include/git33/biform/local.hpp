#ifndef GIT33_BIFORM_LOCAL_HPP
#define GIT33_BIFORM_LOCAL_HPP

#include "git33/biform/coord_change.hpp"

namespace git33 {

/// Local equation at a point: f(x, z) centered at the origin, and the change used.
struct LocalChart {
    BiPoly f;
    CoordChange g;
};

/// Moves p to the origin of the chart Y = W = 1 (translation, or swap of the pair when the
/// point lies on Y = 0 or W = 0) and dehomogenizes.
inline LocalChart local_expand(const BiForm& F, const SurfacePoint& p) {
    const SurfacePoint q = p.normalized();
    const CoordChange g = move_to_origin(q);
    const BiForm G = apply_coord_change(F.lift(Field::common(F.field(), q.field())), g);
    return {G.dehomogenize(), g};
}

} // namespace git33

#endif
