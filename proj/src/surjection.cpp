#include "enhom/surjection.hpp"

#include <algorithm>

namespace enhom {

Surjection Surjection::identity(int source_size)
{
    std::vector<int> v(static_cast<size_t>(source_size));
    for (int i = 0; i < source_size; ++i)
        v[static_cast<size_t>(i)] = i;
    return Surjection(std::move(v));
}

Surjection Surjection::constant(int source_size)
{
    return Surjection(std::vector<int>(static_cast<size_t>(source_size), 0));
}

Surjection Surjection::face(int source_size, int i)
{
    std::vector<int> v(static_cast<size_t>(source_size));
    for (int j = 0; j < source_size; ++j)
        v[static_cast<size_t>(j)] = j <= i ? j : j - 1;
    return Surjection(std::move(v));
}

int Surjection::target_size() const
{
    int m = -1;
    for (int x : v_)
        m = std::max(m, x);
    return m + 1;
}

bool Surjection::is_surjective() const
{
    int t = target_size();
    if (t == 0)
        return false;
    std::vector<char> hit(static_cast<size_t>(t), 0);
    for (int x : v_) {
        if (x < 0)
            return false;
        hit[static_cast<size_t>(x)] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool Surjection::is_monotone() const
{
    for (size_t i = 1; i < v_.size(); ++i)
        if (v_[i] < v_[i - 1])
            return false;
    return true;
}

std::vector<std::vector<int>> Surjection::preimages() const
{
    std::vector<std::vector<int>> out(static_cast<size_t>(target_size()));
    for (int i = 0; i < source_size(); ++i)
        out[static_cast<size_t>(v_[static_cast<size_t>(i)])].push_back(i);
    return out;
}

std::vector<std::pair<int, int>> Surjection::fiber_intervals() const
{
    std::vector<std::pair<int, int>> out;
    int t = target_size();
    out.reserve(static_cast<size_t>(t));
    int pos = 0;
    for (int j = 0; j < t; ++j) {
        int first = pos;
        while (pos < source_size() && v_[static_cast<size_t>(pos)] == j)
            ++pos;
        out.emplace_back(first, pos);
    }
    return out;
}

Surjection compose(const Surjection& g, const Surjection& f)
{
    if (f.target_size() > g.source_size())
        throw structural_error("compose: target of f exceeds source of g");
    std::vector<int> v(static_cast<size_t>(f.source_size()));
    for (int i = 0; i < f.source_size(); ++i)
        v[static_cast<size_t>(i)] = g(f(i));
    return Surjection(std::move(v));
}

std::vector<Surjection> ordered_surjections(int n, int m)
{
    std::vector<Surjection> out;
    if (n < 0 || m < 0 || m > n)
        return out;
    for (const auto& comp : compositions(n + 1, m + 1)) {
        std::vector<int> v;
        v.reserve(static_cast<size_t>(n + 1));
        for (int j = 0; j <= m; ++j)
            v.insert(v.end(), static_cast<size_t>(comp[static_cast<size_t>(j)]), j);
        out.emplace_back(std::move(v));
    }
    return out;
}

std::vector<Surjection> all_surjections(int n, int m)
{
    std::vector<Surjection> out;
    if (n < 0 || m < 0 || m > n)
        return out;
    std::vector<int> v(static_cast<size_t>(n + 1), 0);
    while (true) {
        Surjection s(v);
        if (s.target_size() == m + 1 && s.is_surjective())
            out.push_back(s);
        int i = n;
        while (i >= 0 && v[static_cast<size_t>(i)] == m)
            v[static_cast<size_t>(i--)] = 0;
        if (i < 0)
            break;
        ++v[static_cast<size_t>(i)];
    }
    return out;
}

} // namespace enhom
