#pragma once

#include "enhom/util.hpp"

#include <compare>
#include <vector>

namespace enhom {

/// A map [n] -> [m] between the finite ordinals [n] = {0,...,n}, stored as its
/// value array. Most call sites require surjectivity; membership in the
/// order-preserving subcategory is a separate predicate.
class Surjection {
public:
    Surjection() = default;
    explicit Surjection(std::vector<int> values) : v_(std::move(values)) {}

    static Surjection identity(int source_size);
    /// The constant map onto [0].
    static Surjection constant(int source_size);
    /// d_i : [n] -> [n-1], collapsing i and i+1. source_size = n+1.
    static Surjection face(int source_size, int i);

    int source_size() const { return static_cast<int>(v_.size()); }
    /// Number of elements of the target, i.e. max value + 1.
    int target_size() const;
    int operator()(int i) const { return v_[static_cast<size_t>(i)]; }
    const std::vector<int>& values() const { return v_; }

    bool is_surjective() const;
    bool is_monotone() const;
    /// Order-preserving and surjective.
    bool in_delta_epi() const { return is_monotone() && is_surjective(); }

    /// Preimage of each target element, ascending.
    std::vector<std::vector<int>> preimages() const;
    /// For monotone maps: the half-open interval [first,last) of each fiber.
    std::vector<std::pair<int, int>> fiber_intervals() const;

    auto operator<=>(const Surjection&) const = default;

private:
    std::vector<int> v_;
};

/// Composition g after f.
Surjection compose(const Surjection& g, const Surjection& f);

/// All order-preserving surjections [n] -> [m], ordered lexicographically by
/// the composition (|f^{-1}(0)|,...,|f^{-1}(m)|) of fiber cardinalities.
/// Empty when m > n or either argument is negative in an incompatible way.
std::vector<Surjection> ordered_surjections(int n, int m);

/// All surjections [n] -> [m] (no monotonicity), lex by value array.
std::vector<Surjection> all_surjections(int n, int m);

} // namespace enhom
