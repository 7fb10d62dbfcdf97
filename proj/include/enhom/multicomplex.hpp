#pragma once

#include "enhom/epimodule.hpp"
#include "enhom/face.hpp"
#include "enhom/sparse.hpp"

#include <map>
#include <string>

namespace enhom {

/// One multidegree spot of an n-fold complex: the trees (and labellings) with
/// those arities, together with the functor basis at each.
struct Spot {
    std::vector<std::pair<LevelTree, Surjection>> objects; // phi empty when unlabeled
    std::vector<std::vector<Token>> tokens;                // per object
    std::vector<std::map<Token, long>> token_index;        // per object
    std::map<std::pair<LevelTree, Surjection>, long> object_index;
    std::vector<long> offsets; // per object
    long dim = 0;

    long index_of(const LevelTree& t, const Surjection& phi, const Token& tok) const;
};

/// The n-fold chain complex of a functor, populated for all spots with
/// degree(t) <= degree_bound. boundary(key, j) is the block
/// C_{(..,r_j,..)} -> C_{(..,r_j - 1,..)}.
class MultiComplex {
public:
    int n = 0;
    int degree_bound = 0;
    bool complete = false; // true when the functor support is exhausted
    std::map<std::vector<int>, Spot> spots; // key = (r_1,...,r_n)

    const Spot& spot(const std::vector<int>& key) const;
    const SparseMat& boundary(const std::vector<int>& key, int j) const;
    bool has_spot(const std::vector<int>& key) const { return spots.count(key) != 0; }

    /// partial_j o partial_j = 0 and partial_j partial_k + partial_k partial_j
    /// = 0 for j != k; throws structural_error naming the spot and pair on
    /// failure.
    void verify_anticommutation() const;

    std::map<std::pair<std::vector<int>, int>, SparseMat> bnd; // (key, j)
};

struct ChainComplex {
    std::vector<long> dims;      // dims[p], p = 0..top
    std::vector<SparseMat> bnd;  // bnd[p] : C_p -> C_{p-1}; bnd[0] has 0 rows
    int certified_max = -1;      // homology exact in degrees 0..certified_max

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
    /// sum of (-1)^p dims[p]
    long euler_characteristic() const;
    void verify_d_squared() const;
};

/// One signed summand of the differential partial_j at a tree: the face
/// morphism together with its total coefficient (-1)^{s_{j,i}} times the
/// shuffle or label sign.
struct FaceTerm {
    int i = 0;
    FaceExtension face;
    i64 coeff = 0;
};

/// All signed face terms of partial_j leaving t (every admissible i, every
/// shuffle). The labeled overload applies the graded sign conventions.
std::vector<FaceTerm> face_terms(const LevelTree& t, int j);
std::vector<FaceTerm> face_terms(const LabeledTree& t, int j);

/// The single face block d_i^j under F: the signed shuffle sum of F applied
/// to the extensions of d_i, as a matrix from the basis at t into the direct
/// sum over the target trees (one per shuffle), with labeled rows. The
/// (-1)^{s_{j,i}} factor of partial_j is NOT included. Throws on an
/// inadmissible face.
struct FaceBlock {
    std::vector<std::pair<LevelTree, Token>> row_labels;
    SparseMat matrix;
};
FaceBlock face_map_dij(const EpiModule& F, const LevelTree& t, int j, int i, int weight = -1);

/// Build C^{E_n}(F) over all trees of degree <= degree_bound; weight >= 0
/// restricts to the weight-homogeneous subcomplex. max_arity >= 0 caps the
/// tree arities (weight-w pieces of tensor functors need r_n <= w - 1 only).
MultiComplex build_multicomplex(const EpiModule& F, int degree_bound, int weight = -1,
                                int max_arity = -1);

/// Build C^{E_n,X}(F) over all pairs (t, phi) with degree(t) <= degree_bound.
MultiComplex build_multicomplex_X(const EpiModuleX& F, int degree_bound);

/// Collapse to the total complex; total degree of a spot is sum(r_i), so the
/// trivial tree sits in degree 0. Verifies anticommutation and d^2 = 0.
ChainComplex totalize(const MultiComplex& M);

/// {"dims": [...], "boundaries": [{"degree": p, "triplets": [[r,c,v],...]}]}
std::string chain_complex_to_json(const ChainComplex& C);
/// Matrix-market-style coordinate dump, one block per boundary matrix.
std::string chain_complex_to_matrix_market(const ChainComplex& C);

} // namespace enhom
