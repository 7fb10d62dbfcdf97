#include "enhom/homology.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace enhom {

HomologyResult homology(const ChainComplex& C, const Ring& ring)
{
    HomologyResult H;
    H.ring = ring;
    H.certified_max = C.certified_max;
    int top = C.top_degree();
    H.betti.assign(static_cast<size_t>(top + 1), 0);
    H.torsion.assign(static_cast<size_t>(top + 1), {});

    std::vector<long> rk(static_cast<size_t>(top + 2), 0);
    std::vector<std::vector<mpz_class>> inv(static_cast<size_t>(top + 2));
    for (int p = 1; p <= top; ++p) {
        const SparseMat& b = C.bnd[static_cast<size_t>(p)];
        if (ring.kind == RingKind::Z) {
            inv[static_cast<size_t>(p)] = snf(b);
            rk[static_cast<size_t>(p)] = static_cast<long>(inv[static_cast<size_t>(p)].size());
        } else {
            rk[static_cast<size_t>(p)] = rank(b, ring);
        }
    }
    for (int p = 0; p <= top; ++p) {
        H.betti[static_cast<size_t>(p)] =
            C.dims[static_cast<size_t>(p)] - rk[static_cast<size_t>(p)] - rk[static_cast<size_t>(p + 1)];
        if (ring.kind == RingKind::Z)
            for (const auto& d : inv[static_cast<size_t>(p + 1)])
                if (d > 1)
                    H.torsion[static_cast<size_t>(p)].push_back(d);
    }
    return H;
}

long BettiTable::betti_by_degree(int p) const
{
    long total = 0;
    for (const auto& [key, b] : cells)
        if (key.first == p)
            total += b;
    return total;
}

std::string BettiTable::to_json() const
{
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["ring"] = ring.name();
    j["weighted"] = weighted;
    j["max_degree"] = max_degree;
    if (weighted) {
        j["max_weight"] = max_weight;
        j["degree_complete_max"] = degree_complete_max;
    } else {
        j["certified_max_degree"] = degree_complete_max;
    }
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [key, b] : cells) {
        nlohmann::ordered_json cell;
        cell["degree"] = key.first;
        if (weighted)
            cell["weight"] = key.second;
        cell["betti"] = b;
        auto it = torsion.find(key);
        if (it != torsion.end() && !it->second.empty()) {
            auto tor = nlohmann::ordered_json::array();
            for (const auto& d : it->second)
                tor.push_back(d.get_str());
            cell["torsion"] = std::move(tor);
        }
        if (b != 0 || (it != torsion.end() && !it->second.empty()))
            arr.push_back(std::move(cell));
    }
    j["cells"] = std::move(arr);
    auto by_degree = nlohmann::ordered_json::array();
    for (int p = 0; p <= max_degree; ++p)
        by_degree.push_back(betti_by_degree(p));
    j["betti_by_degree"] = std::move(by_degree);
    return j.dump(2);
}

std::string BettiTable::to_csv() const
{
    std::ostringstream os;
    if (!weighted) {
        os << "degree,betti,torsion\n";
        for (int p = 0; p <= max_degree; ++p) {
            os << p << "," << betti_by_degree(p) << ",";
            auto it = torsion.find({p, 0});
            if (it != torsion.end())
                for (size_t k = 0; k < it->second.size(); ++k)
                    os << it->second[k].get_str() << (k + 1 < it->second.size() ? ";" : "");
            os << "\n";
        }
        return os.str();
    }
    os << "degree";
    for (int w = 1; w <= max_weight; ++w)
        os << ",w" << w;
    os << "\n";
    for (int p = 0; p <= max_degree; ++p) {
        os << p;
        for (int w = 1; w <= max_weight; ++w) {
            os << ",";
            auto it = cells.find({p, w});
            long b = it == cells.end() ? 0 : it->second;
            os << b;
            auto jt = torsion.find({p, w});
            if (jt != torsion.end())
                for (const auto& d : jt->second)
                    os << "+" << d.get_str();
        }
        os << "\n";
    }
    return os.str();
}

namespace {

/* Weight piece of C^{E_n}(L^n(A)) as a finite complex: trees are capped at
 * top arity w-1 (each tensor factor has weight >= 1), so degree n*w exhausts
 * the support. */
ChainComplex weight_piece(const AlgebraModule& F, int n, int w, int degree_cap)
{
    int full = n * w;
    int bound = std::min(full, degree_cap);
    MultiComplex M = build_multicomplex(F, bound, w, w - 1);
    ChainComplex C = totalize(M);
    if (bound == full)
        C.certified_max = C.top_degree();
    return C;
}

} // namespace

ChainComplex en_weight_complex(const AlgebraPresentation& A, int n, int weight, int degree_cap)
{
    AlgebraModule F(A, n);
    return weight_piece(F, n, weight, degree_cap);
}

BettiTable en_homology(const AlgebraPresentation& A, int n, const Ring& ring, int max_degree,
                       int max_weight)
{
    BettiTable T;
    T.ring = ring;
    T.max_degree = max_degree;
    AlgebraModule F(A, n);
    if (A.weight_graded()) {
        if (max_weight <= 0)
            throw structural_error("en_homology: weight-graded algebra needs a weight bound");
        T.weighted = true;
        T.max_weight = max_weight;
        T.degree_complete_max =
            std::min(max_degree, max_weight / std::max(1, A.max_weight()) - 1);
        for (int w = 1; w <= max_weight; ++w) {
            ChainComplex C = weight_piece(F, n, w, max_degree + n + 1);
            HomologyResult H = homology(C, ring);
            int hi = std::min(max_degree, H.certified_max);
            for (int p = 0; p <= hi; ++p) {
                if (H.betti_at(p) != 0)
                    T.cells[{p, w}] = H.betti_at(p);
                if (ring.kind == RingKind::Z && !H.torsion[static_cast<size_t>(p)].empty())
                    T.torsion[{p, w}] = H.torsion[static_cast<size_t>(p)];
            }
        }
    } else {
        MultiComplex M = build_multicomplex(F, max_degree + n + 1);
        ChainComplex C = totalize(M);
        HomologyResult H = homology(C, ring);
        T.degree_complete_max = std::min(max_degree, H.certified_max);
        for (int p = 0; p <= std::min(max_degree, H.certified_max); ++p) {
            if (H.betti_at(p) != 0)
                T.cells[{p, 0}] = H.betti_at(p);
            if (ring.kind == RingKind::Z && !H.torsion[static_cast<size_t>(p)].empty())
                T.torsion[{p, 0}] = H.torsion[static_cast<size_t>(p)];
        }
    }
    return T;
}

HomologyResult bar_homology(const EpiModule& F, int degree_bound, const Ring& ring, int weight)
{
    if (F.levels() != 1)
        throw structural_error("bar_homology: expected a level-1 module");
    MultiComplex M = build_multicomplex(F, degree_bound + 1, weight);
    return homology(totalize(M), ring);
}

HomologyResult hochschild_oracle(const AlgebraPresentation& A, int max_degree, const Ring& ring,
                                 int weight)
{
    // reduced Hochschild complex of k + A with coefficients in k:
    // C_m = A^{(m)}, b = sum_{i=1}^{m-1} (-1)^i (multiply i, i+1);
    // HH_{m+1} corresponds to bar degree m = tuple length - 1.
    int top = max_degree + 1; // bar degree top; tuple lengths 1..top+1
    std::vector<std::vector<Token>> tuples(static_cast<size_t>(top + 2));
    std::vector<std::map<Token, long>> index(static_cast<size_t>(top + 2));
    for (int len = 1; len <= top + 1; ++len) {
        Token cur(static_cast<size_t>(len));
        auto rec = [&](auto&& self, int pos, int wsum) -> void {
            if (weight >= 0 && wsum > weight)
                return;
            if (pos == len) {
                if (weight < 0 || wsum == weight) {
                    index[static_cast<size_t>(len)][cur] =
                        static_cast<long>(tuples[static_cast<size_t>(len)].size());
                    tuples[static_cast<size_t>(len)].push_back(cur);
                }
                return;
            }
            for (int u = 0; u < A.dim; ++u) {
                cur[static_cast<size_t>(pos)] = u;
                self(self, pos + 1, wsum + (A.weight_graded() ? A.weight(u) : 0));
            }
        };
        rec(rec, 0, 0);
    }
    ChainComplex C;
    C.dims.assign(static_cast<size_t>(top + 1), 0);
    for (int m = 0; m <= top; ++m)
        C.dims[static_cast<size_t>(m)] = static_cast<long>(tuples[static_cast<size_t>(m + 1)].size());
    C.bnd.resize(static_cast<size_t>(top + 1));
    C.bnd[0] = SparseMat(0, C.dims[0]);
    for (int m = 1; m <= top; ++m) {
        int len = m + 1;
        SparseMat b(C.dims[static_cast<size_t>(m - 1)], C.dims[static_cast<size_t>(m)]);
        const auto& src = tuples[static_cast<size_t>(len)];
        for (long col = 0; col < static_cast<long>(src.size()); ++col) {
            const Token& t = src[static_cast<size_t>(col)];
            for (int i = 1; i <= len - 1; ++i) {
                i64 sgn = (i % 2 == 0) ? 1 : -1;
                for (const auto& [u, c] :
                     A.multiply(t[static_cast<size_t>(i - 1)], t[static_cast<size_t>(i)])) {
                    Token s;
                    s.reserve(static_cast<size_t>(len - 1));
                    for (int k = 0; k < i - 1; ++k)
                        s.push_back(t[static_cast<size_t>(k)]);
                    s.push_back(u);
                    for (int k = i + 1; k < len; ++k)
                        s.push_back(t[static_cast<size_t>(k)]);
                    b.add(index[static_cast<size_t>(len - 1)].at(s), col, sgn * c);
                }
            }
        }
        C.bnd[static_cast<size_t>(m)] = std::move(b);
    }
    C.verify_d_squared();
    // for weight pieces the complex is finite and complete: lengths beyond
    // weight are empty; otherwise the top degree is uncertified
    bool complete = weight >= 0 && top + 1 > weight;
    C.certified_max = complete ? top : top - 1;
    return homology(C, ring);
}

namespace {

QMat dense_from_columns(const std::vector<std::vector<mpq_class>>& cols, long rows)
{
    QMat m(rows, static_cast<long>(cols.size()));
    for (long c = 0; c < static_cast<long>(cols.size()); ++c)
        for (long r = 0; r < rows; ++r)
            m.at(r, c) = cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
    return m;
}

QMat dense_from_sparse(const SparseMat& s)
{
    QMat m(s.rows(), s.cols());
    for (const auto& [r, c, v] : s.triplets())
        m.at(r, c) = mpq_class(static_cast<long>(v));
    return m;
}

QMat hcat(const QMat& a, const QMat& b)
{
    QMat m(a.rows, a.cols + b.cols);
    for (long r = 0; r < a.rows; ++r) {
        for (long c = 0; c < a.cols; ++c)
            m.at(r, c) = a.at(r, c);
        for (long c = 0; c < b.cols; ++c)
            m.at(r, a.cols + c) = b.at(r, c);
    }
    return m;
}

QMat matmul(const QMat& a, const QMat& b)
{
    QMat m(a.rows, b.cols);
    for (long r = 0; r < a.rows; ++r)
        for (long k = 0; k < a.cols; ++k) {
            if (sgn(a.at(r, k)) == 0)
                continue;
            for (long c = 0; c < b.cols; ++c)
                if (sgn(b.at(k, c)) != 0)
                    m.at(r, c) += a.at(r, k) * b.at(k, c);
        }
    return m;
}

} // namespace

SpectralPage e2_spectral_page(const AlgebraPresentation& A, int pq_bound, int max_weight,
                              bool with_e2)
{
    if (!A.weight_graded())
        throw structural_error("e2_spectral_page: algebra must be weight-graded");
    SpectralPage page;
    page.pq_bound = pq_bound;
    Ring ring = Ring::rationals();
    AlgebraModule F(A, 2);

    // bar homology dimension table (degree, weight) for the prediction
    std::map<std::pair<int, int>, long> hbar;
    AlgebraModule F1(A, 1);
    for (int w = 1; w <= max_weight; ++w) {
        ChainComplex C = weight_piece(F1, 1, w, 1 * w);
        HomologyResult H = homology(C, ring);
        for (int p = 0; p <= H.certified_max; ++p)
            if (H.betti_at(p) != 0)
                hbar[{p, w}] = H.betti_at(p);
    }
    // prediction: E^1_{p,q} = sum over (l_0..l_q), sum l_i = p - q, of tensor factors
    {
        // conv[q][(l, w)] = dim of (q+1)-fold tensor power of Hbar at (l, w)
        std::map<std::pair<int, int>, long> cur = hbar;
        for (int q = 0; q <= pq_bound; ++q) {
            for (const auto& [key, dim] : cur) {
                int p = key.first + q;
                if (p <= pq_bound && dim != 0)
                    page.e1_predicted[{p, q}] += dim;
            }
            if (q == pq_bound)
                break;
            std::map<std::pair<int, int>, long> next;
            for (const auto& [k1, d1] : cur)
                for (const auto& [k2, d2] : hbar) {
                    int l = k1.first + k2.first;
                    int w = k1.second + k2.second;
                    if (w <= max_weight && l <= pq_bound)
                        next[{l, w}] += d1 * d2;
                }
            cur = std::move(next);
        }
    }

    // computed page, per weight; kernels are tracked through pq_bound + 1 so
    // that the incoming induced d_1 at the boundary rows is available
    int P = pq_bound;
    int margin = with_e2 ? 2 : 1; // induced-map ranks at the boundary rows need one extra
    for (int w = 1; w <= max_weight; ++w) {
        int degree_cap = 2 * P + 3 + 2 * margin;
        int arity_cap = std::min(w - 1, P + margin);
        MultiComplex M = build_multicomplex(F, std::min(2 * w, degree_cap), w, arity_cap);
        auto spot_dim = [&](int q, int p) -> long {
            std::vector<int> key = {q, p};
            return M.has_spot(key) ? M.spot(key).dim : 0;
        };
        auto d2_block = [&](int q, int p) -> SparseMat {
            std::vector<int> key = {q, p};
            if (!M.has_spot(key) || p == 0)
                return SparseMat(spot_dim(q, p - 1), spot_dim(q, p));
            return M.boundary(key, 2);
        };
        auto d1_block = [&](int q, int p) -> SparseMat {
            std::vector<int> key = {q, p};
            if (!M.has_spot(key) || q == 0)
                return SparseMat(spot_dim(q - 1, p), spot_dim(q, p));
            return M.boundary(key, 1);
        };

        // kernel bases of the vertical differential per (p, q); the E^1
        // dimensions alone only need ranks
        std::map<std::pair<int, int>, QMat> kernels;  // coordinates in C_{(q,p)}
        std::map<std::pair<int, int>, QMat> images;   // d2 image spanning sets
        int reach = with_e2 ? P + 1 : P;
        for (int q = 0; q <= reach; ++q)
            for (int p = 0; p <= reach; ++p) {
                long dim = spot_dim(q, p);
                if (dim == 0)
                    continue;
                SparseMat out = d2_block(q, p);
                SparseMat in = d2_block(q, p + 1);
                long kdim;
                if (with_e2) {
                    auto kb = kernel_basis_q(out);
                    kdim = static_cast<long>(kb.size());
                    kernels[{p, q}] = dense_from_columns(kb, dim);
                    images[{p, q}] = dense_from_sparse(in);
                } else {
                    kdim = dim - rank_q(out);
                }
                long e1 = kdim - rank_q(in);
                if (e1 != 0 && p <= P && q <= P)
                    page.e1[{p, q}] += e1;
            }

        if (!with_e2)
            continue;
        // induced d1 on E^1 and the E^2 dimensions
        std::map<std::pair<int, int>, QMat> z_coords;  // d1(kernel) in target kernel coords
        std::map<std::pair<int, int>, QMat> y_coords;  // image in own kernel coords
        std::map<std::pair<int, int>, long> rank_y;
        for (auto& [key, K] : kernels) {
            auto [p, q] = key;
            y_coords[key] = solve_dense(K, images.at(key));
            rank_y[key] = rank_dense(y_coords[key]);
            if (q >= 1 && kernels.count({p, q - 1})) {
                QMat w_img = matmul(dense_from_sparse(d1_block(q, p)), K);
                QMat z = solve_dense(kernels.at({p, q - 1}), w_img);
                z_coords[key] = z;
            }
        }
        for (auto& [key, K] : kernels) {
            auto [p, q] = key;
            if (p > P || q > P)
                continue;
            long e1_dim = K.cols - rank_y[key];
            long rk_out = 0;
            if (z_coords.count(key)) {
                auto down = std::make_pair(p, q - 1);
                rk_out = rank_dense(hcat(z_coords[key], y_coords[down])) - rank_y[down];
            }
            long rk_in = 0;
            auto up = std::make_pair(p, q + 1);
            if (z_coords.count(up))
                rk_in = rank_dense(hcat(z_coords[up], y_coords[key])) - rank_y[key];
            long e2 = e1_dim - rk_out - rk_in;
            if (e2 != 0)
                page.e2[key] += e2;
        }
    }

    // abutment: H^{E_2} Betti numbers through total degree 2*pq_bound
    BettiTable T = en_homology(A, 2, ring, 2 * pq_bound, max_weight);
    page.abutment.assign(static_cast<size_t>(2 * pq_bound + 1), 0);
    for (int p = 0; p <= 2 * pq_bound; ++p)
        page.abutment[static_cast<size_t>(p)] = T.betti_by_degree(p);
    return page;
}

} // namespace enhom
