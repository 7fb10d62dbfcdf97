#pragma once

#include "enhom/surjection.hpp"

#include <optional>
#include <string>
#include <vector>

namespace enhom {

/// A finite ordered set of graded elements; only the degrees are stored.
struct GradedSet {
    std::vector<int> degrees;

    int size() const { return static_cast<int>(degrees.size()); }
    int degree(int i) const { return degrees[static_cast<size_t>(i)]; }
    int total_degree() const;

    auto operator<=>(const GradedSet&) const = default;
};

/// An n-level planar tree: a tower [r_n] -> ... -> [r_1] of order-preserving
/// surjections. maps()[j] is f_{j+2} : [r_{j+2}] -> [r_{j+1}], so the tower is
/// stored bottom-up. A 1-level tree is just the ordinal [r_1].
class LevelTree {
public:
    LevelTree() = default;
    /// 1-level tree [r1].
    static LevelTree single(int r1);
    /// n-level tree with all arities zero.
    static LevelTree trivial(int n);
    /// General constructor; n >= 2 requires n-1 maps, each in Delta-epi.
    LevelTree(int levels, std::vector<Surjection> maps, int r1_if_no_maps = 0);

    int levels() const { return levels_; }
    /// r_j for 1 <= j <= levels().
    int arity(int j) const { return arities_[static_cast<size_t>(j - 1)]; }
    /// (r_1, ..., r_n).
    const std::vector<int>& arities() const { return arities_; }
    /// f_j for 2 <= j <= levels().
    const Surjection& map(int j) const { return maps_[static_cast<size_t>(j - 2)]; }
    const std::vector<Surjection>& maps() const { return maps_; }

    /// Number of edges: sum of (r_i + 1).
    int degree() const;
    bool is_trivial() const;

    /// Composite f_{j+1} o ... o f_n : [r_n] -> [r_j]; identity for j = n.
    Surjection composite_to(int j) const;

    /// The (n-j)-level tree above vertex i of level j, for 1 <= j <= n-1.
    LevelTree fiber_subtree(int j, int i) const;
    /// Number of edges of t_{j,i}; for j = n this is 0.
    int fiber_degree(int j, int i) const;

    /// "n; r_1,...,r_n; f_2=[...]; ...".
    std::string serialize() const;
    static LevelTree parse(const std::string& text);

    auto operator<=>(const LevelTree&) const = default;

private:
    int levels_ = 0;
    std::vector<int> arities_;
    std::vector<Surjection> maps_;
};

/// An (X,n)-level tree: a tree plus a surjective labelling of its leaves by a
/// graded set X. Shipped constructors use the order-preserving phi(x_i) = i.
struct LabeledTree {
    LevelTree tree;
    GradedSet labels;
    Surjection phi; // X -> [r_n]

    LabeledTree() = default;
    LabeledTree(LevelTree t, GradedSet x, Surjection p);
    /// phi = identity-like labelling x_i -> i (requires |X| = r_n + 1).
    LabeledTree(LevelTree t, GradedSet x);

    /// Edge count plus total degree of X.
    int degree() const { return tree.degree() + labels.total_degree(); }
    /// Total X-degree sitting above vertex i of level j (j = n allowed).
    int fiber_label_degree(int j, int i) const;
    /// Edge + label degree of the fiber subtree t_{j,i}.
    int fiber_degree(int j, int i) const
    {
        return tree.fiber_degree(j, i) + fiber_label_degree(j, i);
    }

    auto operator<=>(const LabeledTree&) const = default;
};

/// A morphism of Epi_n: levelwise surjections, sigma_1 order-preserving,
/// sigma_i (i >= 2) order-preserving on every fiber of f_i, commuting with the
/// tower maps.
struct TreeMorphism {
    LevelTree source;
    LevelTree target;
    std::vector<Surjection> sigmas; // sigma_1, ..., sigma_n

    const Surjection& sigma(int i) const { return sigmas[static_cast<size_t>(i - 1)]; }
    Surjection& sigma(int i) { return sigmas[static_cast<size_t>(i - 1)]; }
    bool is_identity() const;

    auto operator<=>(const TreeMorphism&) const = default;
};

bool is_valid_morphism(const TreeMorphism& m);
TreeMorphism identity_morphism(const LevelTree& t);
/// g after f; throws structural_error when f.target != g.source.
TreeMorphism compose(const TreeMorphism& g, const TreeMorphism& f);

/// All n-level trees of degree <= max_degree, ordered lexicographically by
/// (r_1,...,r_n) and then by the value arrays of (f_2,...,f_n). max_arity >= 0
/// additionally caps every r_j (the top arity r_n dominates the rest).
std::vector<LevelTree> enumerate_trees(int n, int max_degree, int max_arity = -1);

/// All morphisms s -> t, ordered lexicographically by the value arrays of
/// (sigma_1,...,sigma_n).
std::vector<TreeMorphism> hom_set(const LevelTree& s, const LevelTree& t);

/// iota_n^k: append constant maps so a k-level tree becomes an n-level tree.
LevelTree iota(int k, int n, const LevelTree& t);
/// The canonical extension of a morphism along iota_n^k.
TreeMorphism iota_morphism(int k, int n, const TreeMorphism& m);

/// True when the face d_i at level j exists: j = 1, or f_j(i) = f_j(i+1).
bool face_admissible(const LevelTree& t, int j, int i);

/// Rebuild a tree from 1-fibre subtrees (inverse of taking all t_{1,i}).
LevelTree assemble_from_fibers(const std::vector<LevelTree>& fibers);

} // namespace enhom
