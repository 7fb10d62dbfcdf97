#pragma once

#include "enhom/epimodule.hpp"
#include "enhom/sparse.hpp"

namespace enhom::testutil {

/// Full matrix of F(m) relative to the basis orders at source and target.
inline SparseMat act_matrix(const EpiModule& F, const TreeMorphism& m, int weight = -1)
{
    auto src = F.basis(m.source, weight);
    auto dst = F.basis(m.target, weight);
    std::map<Token, long> index;
    for (long i = 0; i < static_cast<long>(dst.size()); ++i)
        index[dst[static_cast<size_t>(i)]] = i;
    SparseMat mat(static_cast<long>(dst.size()), static_cast<long>(src.size()));
    for (long c = 0; c < static_cast<long>(src.size()); ++c)
        for (const auto& [tok, v] : F.act(m, src[static_cast<size_t>(c)]))
            mat.add(index.at(tok), c, v);
    return mat;
}

inline LevelTree example_tree14()
{
    return LevelTree(3, {Surjection({0, 0, 1}), Surjection({0, 0, 0, 1, 1, 2, 2, 2, 2})});
}

} // namespace enhom::testutil
