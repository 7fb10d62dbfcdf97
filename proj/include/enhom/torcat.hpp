#pragma once

#include "enhom/homology.hpp"
#include "enhom/multicomplex.hpp"

namespace enhom {

/// The graded poset category [a]^pi: objects 0..a, Hom(i,j) of rank one in
/// degree d(pi^{i+1} u ... u pi^j) for i <= j, with composition twisted by
/// epsilon of the covered blocks. Blocks store (position, degree) pairs of
/// their elements in the ambient ordered set.
struct GradedPosetCategory {
    std::vector<std::vector<std::pair<int, int>>> blocks; // pi^1..pi^a

    int top() const { return static_cast<int>(blocks.size()); }
    /// degree of pi^{i+1} u ... u pi^j (0 <= i <= j <= a)
    int hom_degree(int i, int j) const;
    /// epsilon(pi^{i+1..j}; pi^{j+1..k}): the composition sign of
    /// xi_{jk} o xi_{ij}
    int compose_sign(int i, int j, int k) const;
    /// block degrees d(pi^1),...,d(pi^a)
    std::vector<int> block_degrees() const;
};

/// Tensor product of graded poset categories; objects are integer tuples.
struct TensorCategory {
    std::vector<GradedPosetCategory> factors;

    std::vector<int> bottom() const { return std::vector<int>(factors.size(), 0); }
    std::vector<int> top() const;
    int hom_degree(const std::vector<int>& p, const std::vector<int>& q) const;
    /// scalar of xi_{qr} o xi_{pq}: factorwise signs and the Koszul
    /// interchange across factors
    int compose_sign(const std::vector<int>& p, const std::vector<int>& q,
                     const std::vector<int>& r) const;
};

/// A chain 0 = p_0 < p_1 < ... < p_u = top in the object poset; the basis of
/// the normalized standard complex in homological degree u.
using ObjectChain = std::vector<std::vector<int>>;

struct NormalizedComplex {
    TensorCategory cat;
    std::vector<std::vector<ObjectChain>> chains; // per homological degree
    std::vector<std::map<ObjectChain, long>> index;
    ChainComplex complex; // with the differential d = sum (-1)^i d_i
};

/// The normalized standard complex computing Tor^C(R_top; L_0).
NormalizedComplex normalized_complex(const TensorCategory& C);

/// Tor ranks by homological degree.
std::vector<long> tor(const TensorCategory& C, const Ring& ring);

/// The contracting homotopy of C([a]^pi) for a >= 2: zero when p_1 = 1, else
/// (-1)^{d(pi^1)} eps(pi^1; pi^2..pi^{p_1}) times the chain with 1 inserted.
/// Satisfies bh + hb = id for b = -d, the sign with which the normalized
/// complex realizes the partial_2 columns.
std::optional<std::pair<i64, ObjectChain>> poset_homotopy(const GradedPosetCategory& cat,
                                                          const ObjectChain& chain);

/// The tensor category attached to a labeled 2-level tree: one factor [a_j]^pi
/// per bottom vertex j, with a_j = |f^{-1}(j)| and blocks phi^{-1}(k) for
/// f(k) = j.
TensorCategory category_of_2tree(const LabeledTree& t);

} // namespace enhom
