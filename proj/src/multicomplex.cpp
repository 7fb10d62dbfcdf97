#include "enhom/multicomplex.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace enhom {

long Spot::index_of(const LevelTree& t, const Surjection& phi, const Token& tok) const
{
    auto it = object_index.find({t, phi});
    if (it == object_index.end())
        throw structural_error("Spot: object not present");
    long o = it->second;
    const auto& ti = token_index[static_cast<size_t>(o)];
    auto jt = ti.find(tok);
    if (jt == ti.end())
        throw structural_error("Spot: token not present (weight not preserved?)");
    return offsets[static_cast<size_t>(o)] + jt->second;
}

const Spot& MultiComplex::spot(const std::vector<int>& key) const
{
    auto it = spots.find(key);
    if (it == spots.end())
        throw structural_error("MultiComplex: no such spot");
    return it->second;
}

const SparseMat& MultiComplex::boundary(const std::vector<int>& key, int j) const
{
    auto it = bnd.find({key, j});
    if (it == bnd.end())
        throw structural_error("MultiComplex: no such boundary block");
    return it->second;
}

namespace {

std::string key_str(const std::vector<int>& key)
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < key.size(); ++i)
        os << key[i] << (i + 1 < key.size() ? "," : "");
    os << ")";
    return os.str();
}

std::vector<int> lower_key(std::vector<int> key, int j)
{
    key[static_cast<size_t>(j - 1)] -= 1;
    return key;
}

std::vector<FaceTerm> face_terms_impl(const LevelTree& t, const LabeledTree* lt, int j)
{
    std::vector<FaceTerm> out;
    int n = t.levels();
    if (t.arity(j) == 0)
        return out;
    for (int i = 0; i + 1 <= t.arity(j); ++i) {
        if (!face_admissible(t, j, i))
            continue;
        int s_exp = lt ? s_exponent(*lt, j, i) : s_exponent(t, j, i);
        i64 base = (s_exp % 2 == 0) ? 1 : -1;
        if (j == n) {
            auto fe = top_face(t, i);
            i64 coeff = base;
            if (lt)
                coeff *= top_face_eps(*lt, i);
            out.push_back({i, std::move(fe), coeff});
        } else {
            auto fibers = t.map(j + 1).fiber_intervals();
            auto [a0, a1] = fibers[static_cast<size_t>(i)];
            auto [b0, b1] = fibers[static_cast<size_t>(i + 1)];
            std::vector<int> left, right;
            for (int v = a0; v < a1; ++v)
                left.push_back(lt ? lt->fiber_degree(j + 1, v) : t.fiber_degree(j + 1, v));
            for (int v = b0; v < b1; ++v)
                right.push_back(lt ? lt->fiber_degree(j + 1, v) : t.fiber_degree(j + 1, v));
            for (const auto& tau : enumerate_shuffles(a1 - a0, b1 - b0)) {
                auto fe = extend_face(t, j, i, tau);
                i64 coeff = base * shuffle_sign(tau, left, right);
                out.push_back({i, std::move(fe), coeff});
            }
        }
    }
    return out;
}

} // namespace

std::vector<FaceTerm> face_terms(const LevelTree& t, int j)
{
    return face_terms_impl(t, nullptr, j);
}

std::vector<FaceTerm> face_terms(const LabeledTree& t, int j)
{
    return face_terms_impl(t.tree, &t, j);
}

FaceBlock face_map_dij(const EpiModule& F, const LevelTree& t, int j, int i, int weight)
{
    if (!face_admissible(t, j, i))
        throw structural_error("face_map_dij: inadmissible face");
    int n = t.levels();
    std::vector<std::pair<TreeMorphism, i64>> terms;
    if (j == n) {
        auto fe = top_face(t, i);
        terms.emplace_back(std::move(fe.morphism), 1);
    } else {
        auto fibers = t.map(j + 1).fiber_intervals();
        auto [a0, a1] = fibers[static_cast<size_t>(i)];
        auto [b0, b1] = fibers[static_cast<size_t>(i + 1)];
        std::vector<int> left, right;
        for (int v = a0; v < a1; ++v)
            left.push_back(t.fiber_degree(j + 1, v));
        for (int v = b0; v < b1; ++v)
            right.push_back(t.fiber_degree(j + 1, v));
        for (const auto& tau : enumerate_shuffles(a1 - a0, b1 - b0)) {
            auto fe = extend_face(t, j, i, tau);
            terms.emplace_back(std::move(fe.morphism), shuffle_sign(tau, left, right));
        }
    }
    // rows: the functor bases of all distinct target trees, in tree order
    FaceBlock out;
    std::set<LevelTree> targets;
    for (const auto& [m, coeff] : terms)
        targets.insert(m.target);
    std::map<std::pair<LevelTree, Token>, long> index;
    for (const auto& tp : targets)
        for (const auto& tok : F.basis(tp, weight)) {
            index.emplace(std::make_pair(tp, tok), static_cast<long>(out.row_labels.size()));
            out.row_labels.emplace_back(tp, tok);
        }
    auto src = F.basis(t, weight);
    out.matrix = SparseMat(static_cast<long>(out.row_labels.size()), static_cast<long>(src.size()));
    for (long c = 0; c < static_cast<long>(src.size()); ++c)
        for (const auto& [m, coeff] : terms)
            for (const auto& [tok, val] : F.act(m, src[static_cast<size_t>(c)]))
                out.matrix.add(index.at({m.target, tok}), c, coeff * val);
    return out;
}

MultiComplex build_multicomplex(const EpiModule& F, int degree_bound, int weight, int max_arity)
{
    MultiComplex M;
    M.n = F.levels();
    M.degree_bound = degree_bound;
    auto support = F.support_degree();
    M.complete = support && *support <= degree_bound;

    Surjection no_phi;
    for (const auto& t : enumerate_trees(M.n, degree_bound, max_arity)) {
        auto key = t.arities();
        Spot& sp = M.spots[key];
        auto toks = F.basis(t, weight);
        long o = static_cast<long>(sp.objects.size());
        sp.objects.emplace_back(t, no_phi);
        sp.object_index.emplace(std::make_pair(t, no_phi), o);
        sp.token_index.emplace_back();
        auto& ti = sp.token_index.back();
        for (size_t k = 0; k < toks.size(); ++k)
            ti.emplace(toks[k], static_cast<long>(k));
        sp.offsets.push_back(sp.dim);
        sp.dim += static_cast<long>(toks.size());
        sp.tokens.push_back(std::move(toks));
    }

    for (auto& [key, sp] : M.spots) {
        for (int j = 1; j <= M.n; ++j) {
            if (key[static_cast<size_t>(j - 1)] == 0)
                continue;
            auto tkey = lower_key(key, j);
            // the target arity vector may admit no trees at all (e.g. when
            // r_n - 1 < r_{n-1}); the block is then a zero map to 0
            auto tit = M.spots.find(tkey);
            const Spot* tsp = tit == M.spots.end() ? nullptr : &tit->second;
            SparseMat mat(tsp ? tsp->dim : 0, sp.dim);
            for (long o = 0; o < static_cast<long>(sp.objects.size()); ++o) {
                const LevelTree& t = sp.objects[static_cast<size_t>(o)].first;
                long col0 = sp.offsets[static_cast<size_t>(o)];
                const auto& toks = sp.tokens[static_cast<size_t>(o)];
                for (const auto& term : face_terms(t, j)) {
                    for (size_t li = 0; li < toks.size(); ++li) {
                        for (const auto& [tok, val] : F.act(term.face.morphism, toks[li])) {
                            long row = tsp->index_of(term.face.target, no_phi, tok);
                            mat.add(row, col0 + static_cast<long>(li), term.coeff * val);
                        }
                    }
                }
            }
            M.bnd.emplace(std::make_pair(key, j), std::move(mat));
        }
    }
    return M;
}

MultiComplex build_multicomplex_X(const EpiModuleX& F, int degree_bound)
{
    MultiComplex M;
    M.n = F.levels();
    M.degree_bound = degree_bound;
    auto support = F.support_degree();
    M.complete = support && *support <= degree_bound;
    const GradedSet& X = F.labels();

    for (const auto& t : enumerate_trees(M.n, degree_bound)) {
        auto key = t.arities();
        Spot& sp = M.spots[key];
        for (const auto& phi : all_surjections(X.size() - 1, t.arity(M.n))) {
            auto toks = F.basis(t, phi);
            long o = static_cast<long>(sp.objects.size());
            sp.objects.emplace_back(t, phi);
            sp.object_index.emplace(std::make_pair(t, phi), o);
            sp.token_index.emplace_back();
            auto& ti = sp.token_index.back();
            for (size_t k = 0; k < toks.size(); ++k)
                ti.emplace(toks[k], static_cast<long>(k));
            sp.offsets.push_back(sp.dim);
            sp.dim += static_cast<long>(toks.size());
            sp.tokens.push_back(std::move(toks));
        }
    }

    for (auto& [key, sp] : M.spots) {
        for (int j = 1; j <= M.n; ++j) {
            if (key[static_cast<size_t>(j - 1)] == 0)
                continue;
            auto tkey = lower_key(key, j);
            auto tit = M.spots.find(tkey);
            const Spot* tsp = tit == M.spots.end() ? nullptr : &tit->second;
            SparseMat mat(tsp ? tsp->dim : 0, sp.dim);
            for (long o = 0; o < static_cast<long>(sp.objects.size()); ++o) {
                const auto& [t, phi] = sp.objects[static_cast<size_t>(o)];
                long col0 = sp.offsets[static_cast<size_t>(o)];
                const auto& toks = sp.tokens[static_cast<size_t>(o)];
                LabeledTree lt(t, X, phi);
                for (const auto& term : face_terms(lt, j)) {
                    Surjection phi_t = compose(term.face.morphism.sigma(M.n), phi);
                    for (size_t li = 0; li < toks.size(); ++li) {
                        for (const auto& [tok, val] : F.act(term.face.morphism, phi, toks[li])) {
                            long row = tsp->index_of(term.face.target, phi_t, tok);
                            mat.add(row, col0 + static_cast<long>(li), term.coeff * val);
                        }
                    }
                }
            }
            M.bnd.emplace(std::make_pair(key, j), std::move(mat));
        }
    }
    return M;
}

void MultiComplex::verify_anticommutation() const
{
    auto dim_of = [&](const std::vector<int>& key) -> long {
        auto it = spots.find(key);
        return it == spots.end() ? 0 : it->second.dim;
    };
    // composite partial_k o partial_j leaving `key`; zero map when a spot on
    // the way is empty
    auto composite = [&](const std::vector<int>& key, int j, int k) -> SparseMat {
        auto kj = lower_key(key, j);
        auto kjk = lower_key(kj, k);
        long rows = dim_of(kjk);
        if (rows == 0 || dim_of(kj) == 0)
            return SparseMat(rows, spots.at(key).dim);
        return boundary(kj, k) * boundary(key, j);
    };
    for (const auto& [key, sp] : spots) {
        for (int j = 1; j <= n; ++j) {
            if (key[static_cast<size_t>(j - 1)] == 0)
                continue;
            if (key[static_cast<size_t>(j - 1)] >= 2 && !composite(key, j, j).is_zero())
                throw structural_error("anticommutation: partial_" + std::to_string(j) +
                                       "^2 != 0 at spot " + key_str(key));
            for (int k = j + 1; k <= n; ++k) {
                if (key[static_cast<size_t>(k - 1)] == 0)
                    continue;
                if (!(composite(key, j, k) + composite(key, k, j)).is_zero())
                    throw structural_error("anticommutation: {partial_" + std::to_string(j) +
                                           ", partial_" + std::to_string(k) + "} != 0 at spot " +
                                           key_str(key));
            }
        }
    }
}

long ChainComplex::euler_characteristic() const
{
    long chi = 0;
    for (size_t p = 0; p < dims.size(); ++p)
        chi += (p % 2 == 0 ? 1 : -1) * dims[p];
    return chi;
}

void ChainComplex::verify_d_squared() const
{
    for (size_t p = 2; p < bnd.size(); ++p)
        if (!(bnd[p - 1] * bnd[p]).is_zero())
            throw structural_error("ChainComplex: d^2 != 0 at degree " + std::to_string(p));
}

ChainComplex totalize(const MultiComplex& M)
{
    M.verify_anticommutation();

    int top = M.degree_bound - M.n;
    ChainComplex C;
    C.dims.assign(static_cast<size_t>(top + 1), 0);
    std::map<std::vector<int>, long> spot_offset;
    for (const auto& [key, sp] : M.spots) {
        int p = 0;
        for (int r : key)
            p += r;
        spot_offset[key] = C.dims[static_cast<size_t>(p)];
        C.dims[static_cast<size_t>(p)] += sp.dim;
    }
    C.bnd.resize(static_cast<size_t>(top + 1));
    C.bnd[0] = SparseMat(0, C.dims[0]);
    for (int p = 1; p <= top; ++p)
        C.bnd[static_cast<size_t>(p)] =
            SparseMat(C.dims[static_cast<size_t>(p - 1)], C.dims[static_cast<size_t>(p)]);
    for (const auto& [entry, mat] : M.bnd) {
        const auto& [key, j] = entry;
        if (mat.rows() == 0 || mat.nnz() == 0)
            continue;
        int p = 0;
        for (int r : key)
            p += r;
        auto tkey = key;
        tkey[static_cast<size_t>(j - 1)] -= 1;
        long roff = spot_offset.at(tkey);
        long coff = spot_offset.at(key);
        auto& target = C.bnd[static_cast<size_t>(p)];
        for (const auto& [r, c, v] : mat.triplets())
            target.add(roff + r, coff + c, v);
    }
    C.verify_d_squared();
    C.certified_max = M.complete ? top : top - 1;
    return C;
}

std::string chain_complex_to_json(const ChainComplex& C)
{
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["dims"] = C.dims;
    j["certified_max"] = C.certified_max;
    auto bnds = nlohmann::ordered_json::array();
    for (size_t p = 1; p < C.bnd.size(); ++p) {
        nlohmann::ordered_json b;
        b["degree"] = p;
        b["rows"] = C.bnd[p].rows();
        b["cols"] = C.bnd[p].cols();
        auto trips = nlohmann::ordered_json::array();
        for (const auto& [r, c, v] : C.bnd[p].triplets())
            trips.push_back({r, c, v});
        b["triplets"] = std::move(trips);
        bnds.push_back(std::move(b));
    }
    j["boundaries"] = std::move(bnds);
    return j.dump(2);
}

std::string chain_complex_to_matrix_market(const ChainComplex& C)
{
    std::ostringstream os;
    for (size_t p = 1; p < C.bnd.size(); ++p) {
        const SparseMat& b = C.bnd[p];
        os << "%%MatrixMarket matrix coordinate integer general\n";
        os << "% boundary degree " << p << " -> " << p - 1 << "\n";
        os << b.rows() << " " << b.cols() << " " << b.nnz() << "\n";
        for (const auto& [r, c, v] : b.triplets())
            os << r + 1 << " " << c + 1 << " " << v << "\n";
    }
    return os.str();
}

} // namespace enhom
