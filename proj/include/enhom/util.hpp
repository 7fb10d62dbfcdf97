#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace enhom {

using i64 = long long;

inline i64 binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    i64 r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/* All compositions of total into exactly parts summands, each >= min_part,
 * in lexicographic order. */
inline std::vector<std::vector<int>> compositions(int total, int parts, int min_part = 1)
{
    std::vector<std::vector<int>> out;
    if (parts == 0) {
        if (total == 0)
            out.push_back({});
        return out;
    }
    std::vector<int> cur(parts);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == parts - 1) {
            if (rest >= min_part) {
                cur[pos] = rest;
                out.push_back(cur);
            }
            return;
        }
        for (int v = min_part; rest - v >= min_part * (parts - 1 - pos); ++v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace enhom
