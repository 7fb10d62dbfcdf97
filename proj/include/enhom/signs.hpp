#pragma once

#include "enhom/tree.hpp"

#include <map>
#include <vector>

namespace enhom {

/// A (p,q)-shuffle: a permutation of {0,...,p+q-1} increasing on the first p
/// and on the last q positions. perm[a] is the image of position a.
struct Shuffle {
    int p = 0;
    int q = 0;
    std::vector<int> perm;

    bool is_identity() const;
    auto operator<=>(const Shuffle&) const = default;
};

/// All (p,q)-shuffles; binomial(p+q,p) of them, the identity first. Ordered by
/// the ascending position set of the left block.
std::vector<Shuffle> enumerate_shuffles(int p, int q);

/// Koszul-style shuffle sign: a factor (-1)^{(d_a+1)(d_b+1)} for every pair
/// a < b with perm[a] > perm[b]. The degree shift by one is applied here, so
/// callers pass the plain degrees of the shuffled subtrees.
int shuffle_sign(const Shuffle& s, const std::vector<int>& left_degrees,
                 const std::vector<int>& right_degrees);

/// epsilon(A;B) = product over a in A, b in B with pos(a) > pos(b) of
/// (-1)^{d(a)d(b)}. Positions must be disjoint.
int eps_sets(const std::vector<int>& a_degrees, const std::vector<int>& a_positions,
             const std::vector<int>& b_degrees, const std::vector<int>& b_positions);

/// Planar edge labels 1..degree(t), assigned bottom to top and left to right:
/// each level-1 edge is followed immediately by all edges of the subtree above
/// it. labels[j-1][v] is the label of the edge below vertex v of level j.
std::vector<std::vector<int>> edge_labels(const LevelTree& t);

/// The sign exponent s_{j,i}: the label of the rightmost top edge of t_{j,i},
/// which for j = n is the label of the i-th leaf.
int s_exponent(const LevelTree& t, int j, int i);

/// Graded variant: adds the degrees of the X-elements labelling leaves weakly
/// to the left of the marked top edge.
int s_exponent(const LabeledTree& t, int j, int i);

/// epsilon(t_{n,i}; t_{n,i+1}) for the top face of a labeled tree.
int top_face_eps(const LabeledTree& t, int i);

} // namespace enhom
