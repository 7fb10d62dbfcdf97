#pragma once

#include "enhom/epimodule.hpp"

#include <map>
#include <optional>
#include <string>

namespace enhom {

/// A finite-dimensional non-unital commutative algebra given by structure
/// constants, optionally with a positive weight grading.
struct AlgebraPresentation {
    int dim = 0;
    std::vector<int> weights; // empty = ungraded; otherwise one positive weight per basis element
    // products[u][v] = sparse expansion of e_u * e_v
    std::vector<std::vector<std::vector<std::pair<int, i64>>>> products;
    std::string name;

    bool weight_graded() const { return !weights.empty(); }
    int weight(int u) const { return weights[static_cast<size_t>(u)]; }
    int max_weight() const;

    /// Throws structural_error on violation of commutativity, associativity,
    /// or weight additivity.
    void validate() const;

    std::vector<std::pair<int, i64>> multiply(int u, int v) const
    {
        return products[static_cast<size_t>(u)][static_cast<size_t>(v)];
    }

    /// Augmentation ideal of k[x]/(x^m): basis x,...,x^{m-1}, weight i for x^i.
    static AlgebraPresentation truncated_polynomial(int m);
    /// d-dimensional algebra with all products zero, all weights 1.
    static AlgebraPresentation square_zero(int d);
    /// Augmentation ideal of a polynomial ring on `gens` variables, truncated
    /// above total weight max_weight (exact for weight-split computations up
    /// to that weight).
    static AlgebraPresentation polynomial(int gens, int max_weight);
    /// Quotient of polynomial(gens, max_weight) by the monomial ideal
    /// generated by the given exponent vectors.
    static AlgebraPresentation monomial_quotient(int gens,
                                                 const std::vector<std::vector<int>>& ideal_gens,
                                                 int max_weight);

    /// {"dim":…, "weights":[…], "products":[[u,v,[[w,c],…]],…]}
    static AlgebraPresentation from_json_text(const std::string& text);
    std::string to_json_text() const;

    /// Parse "trunc-poly:m", "square-zero:d", "poly:g" or "@file.json".
    static AlgebraPresentation named(const std::string& spec, int max_weight);
};

/// The functor L^n(A): t -> A^{(r_n + 1)} tensor basis; morphisms multiply
/// fiberwise along sigma_n.
class AlgebraModule : public EpiModule {
public:
    AlgebraModule(AlgebraPresentation a, int n) : alg_(std::move(a)), n_(n) { alg_.validate(); }
    int levels() const override { return n_; }
    std::vector<Token> basis(const LevelTree& t, int weight) const override;
    std::vector<std::pair<Token, i64>> act(const TreeMorphism& m, const Token& x) const override;
    bool weight_graded() const override { return alg_.weight_graded(); }
    const AlgebraPresentation& algebra() const { return alg_; }

private:
    AlgebraPresentation alg_;
    int n_;
};

/// Representable functor k[Epi_n(t0, -)]; finitely supported, so its total
/// complex is finite.
class RepresentableModule : public EpiModule {
public:
    explicit RepresentableModule(LevelTree t0) : t0_(std::move(t0)) {}
    int levels() const override { return t0_.levels(); }
    std::vector<Token> basis(const LevelTree& t, int weight) const override;
    std::vector<std::pair<Token, i64>> act(const TreeMorphism& m, const Token& x) const override;
    std::optional<int> support_degree() const override { return t0_.degree(); }
    const LevelTree& base_tree() const { return t0_; }
    const std::vector<TreeMorphism>& hom_from_base(const LevelTree& t) const;

private:
    LevelTree t0_;
    mutable std::map<LevelTree, std::vector<TreeMorphism>> hom_cache_;
};

/// Representable functor k[Epi_n^X((t0, phi0), -)].
class RepresentableModuleX : public EpiModuleX {
public:
    explicit RepresentableModuleX(LabeledTree base);
    int levels() const override { return base_.tree.levels(); }
    const GradedSet& labels() const override { return base_.labels; }
    std::vector<Token> basis(const LevelTree& t, const Surjection& phi) const override;
    std::vector<std::pair<Token, i64>> act(const TreeMorphism& m, const Surjection& phi_src,
                                           const Token& x) const override;
    std::optional<int> support_degree() const override { return base_.tree.degree(); }
    const LabeledTree& base() const { return base_; }

private:
    LabeledTree base_;
    mutable std::map<LevelTree, std::vector<TreeMorphism>> hom_cache_;
    const std::vector<TreeMorphism>& hom_from_base(const LevelTree& t) const;
};

/// The skyscraper functor: k at the trivial tree, 0 elsewhere. Equivalently
/// the cokernel of (d_0)_* between the contravariant representables of the
/// 2-leaf palm tree and the trivial tree.
class SkyscraperModule : public EpiModule {
public:
    explicit SkyscraperModule(int n) : n_(n) {}
    int levels() const override { return n_; }
    std::vector<Token> basis(const LevelTree& t, int weight) const override;
    std::vector<std::pair<Token, i64>> act(const TreeMorphism& m, const Token& x) const override;
    std::optional<int> support_degree() const override { return n_; }

private:
    int n_;
};

/// A generator of Delta-epi([n],[m]) codified by its fibers (A_0,...,A_m).
struct FiberTuple {
    std::vector<std::vector<int>> fibers;

    int source_index() const; // n
    int target_index() const { return static_cast<int>(fibers.size()) - 1; }
    static FiberTuple from_surjection(const Surjection& f);
    Surjection to_surjection() const;
    auto operator<=>(const FiberTuple&) const = default;
};

/// The contracting homotopy of the (graded) bar complex of a representable
/// Delta-epi module: zero when A_0 = {0}, else (+-1, (0, A_0', A_1,...,A_m))
/// with sign (-1)^{d(0)}. degrees[i] is the degree of i in [n] (empty =
/// ungraded).
std::optional<std::pair<i64, FiberTuple>> homotopy_h(const FiberTuple& g,
                                                     const std::vector<int>& degrees = {});

/// The (graded) differential b' = sum_i (-1)^i d_i on fiber tuples, with
/// d_i carrying the sign (-1)^{d(A_0)+...+d(A_i)} in the graded case.
std::vector<std::pair<i64, FiberTuple>> bar_bprime(const FiberTuple& g,
                                                   const std::vector<int>& degrees = {});

} // namespace enhom
