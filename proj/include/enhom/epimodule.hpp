#pragma once

#include "enhom/tree.hpp"
#include "enhom/util.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace enhom {

/// A basis element of a functor value; the meaning is functor-specific
/// (a morphism index for representables, a tensor tuple for algebra functors).
using Token = std::vector<int>;

/// A covariant functor Epi_n -> free k-modules, presented by a finite ordered
/// basis at every tree and the matrix action of morphisms, one basis column at
/// a time.
class EpiModule {
public:
    virtual ~EpiModule() = default;
    virtual int levels() const = 0;

    /// Basis tokens at t in the functor's canonical order. weight >= 0
    /// restricts to the weight-homogeneous part (weight-graded functors only).
    virtual std::vector<Token> basis(const LevelTree& t, int weight = -1) const = 0;

    /// Image of basis token x under F(m), as a combination of basis tokens of
    /// the target value.
    virtual std::vector<std::pair<Token, i64>> act(const TreeMorphism& m, const Token& x) const = 0;

    /// For finitely supported functors: a degree bound past which all values
    /// vanish, so complexes built up to it are complete.
    virtual std::optional<int> support_degree() const { return std::nullopt; }

    virtual bool weight_graded() const { return false; }
};

/// A covariant functor Epi_n^X -> free k-modules; objects are pairs (t, phi).
class EpiModuleX {
public:
    virtual ~EpiModuleX() = default;
    virtual int levels() const = 0;
    virtual const GradedSet& labels() const = 0;
    virtual std::vector<Token> basis(const LevelTree& t, const Surjection& phi) const = 0;
    /// m is a morphism of underlying trees; the source labelling phi_src
    /// determines the target labelling sigma_n o phi_src.
    virtual std::vector<std::pair<Token, i64>> act(const TreeMorphism& m, const Surjection& phi_src,
                                                   const Token& x) const = 0;
    virtual std::optional<int> support_degree() const { return std::nullopt; }
};

} // namespace enhom
