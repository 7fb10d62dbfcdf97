#pragma once

#include "enhom/functors.hpp"
#include "enhom/homology.hpp"

#include <functional>

namespace enhom {

/// A differential graded commutative algebra with an explicit finite basis.
/// Degrees/weights are per basis element; the differential and product are
/// column-backed so bar constructions can be stacked.
struct DGAlgebra {
    struct Elem {
        int degree = 0;
        int weight = 0;
        std::vector<int> arities; // tree shape accumulated by bar(); empty at level 0
    };
    std::vector<Elem> basis;
    std::function<std::vector<std::pair<int, i64>>(int)> diff;
    std::function<std::vector<std::pair<int, i64>>(int, int)> product;
    // products are only defined within these bounds for truncated bar algebras
    int max_degree = 1 << 28;
    int max_weight = 1 << 28;

    /// Checks d^2 = 0, the Leibniz rule, and graded commutativity on the
    /// stored basis (pairs within the truncation bounds); throws
    /// structural_error on failure.
    void validate() const;
};

/// View a (weight-graded) commutative algebra as a DG algebra in degree 0
/// with zero differential.
DGAlgebra dg_from_presentation(const AlgebraPresentation& A);

/// The reduced bar construction B(A): words [a_1,...,a_k], k >= 1, with
/// degree k + sum d(a_i), truncated at the given degree and weight. The
/// differential is the simplicial plus residual boundary; the product is the
/// Eilenberg-MacLane shuffle.
DGAlgebra bar(const DGAlgebra& A, int max_degree, int max_weight);

/// Homology of the weight-w part of B^n(A), reindexed by -n so it aligns with
/// E_n-homology. degree_cap < 0 builds the full (finite) weight piece.
HomologyResult iterated_bar_homology(const AlgebraPresentation& A, int n, const Ring& ring,
                                     int weight, int degree_cap = -1);

/// Dimension of B^n(A) in the given multidegree (arity tuple (r_1,...,r_n)),
/// within the weight bound.
long iterated_bar_dimension(const AlgebraPresentation& A, int n,
                            const std::vector<int>& arities, int max_weight);

} // namespace enhom
