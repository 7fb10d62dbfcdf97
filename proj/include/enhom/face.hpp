#pragma once

#include "enhom/signs.hpp"
#include "enhom/tree.hpp"

namespace enhom {

/// A face of the j-th differential leaving tree t: the morphism
/// (tau_n,...,tau_{j+1}, d_i, id,...,id) together with its target tree.
struct FaceExtension {
    TreeMorphism morphism;
    LevelTree target;
};

/// Extend the face d_i at level j < n of t along the shuffle tau of the
/// fibers f_{j+1}^{-1}(i) and f_{j+1}^{-1}(i+1). The permutations above level
/// j+1 are the unique fiberwise order-preserving extensions. Throws on an
/// inadmissible face.
FaceExtension extend_face(const LevelTree& t, int j, int i, const Shuffle& tau);

/// The face d_i at the top level j = n (no shuffles involved).
FaceExtension top_face(const LevelTree& t, int i);

/// f_j with i and i+1 identified: the unique g with g o d_i = f_j.
Surjection restrict_map(const Surjection& f, int i);

} // namespace enhom
