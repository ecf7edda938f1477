#pragma once

// Independent reference implementations used only by the tests. None of them
// call into the library beyond IncreasingTableau construction.

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "inctab/tableau.hpp"

namespace oracle {

using inctab::Grid;
using inctab::IncreasingTableau;

// Two-row rectangles with n columns and max entry M, by choosing the two rows
// as increasing sequences of {1..M} and filtering.
inline std::vector<Grid> two_row_by_rows(int n, int m) {
    std::vector<Grid> out;
    std::vector<std::vector<int>> subsets;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) != n) continue;
        std::vector<int> s;
        for (int v = 1; v <= m; ++v)
            if (mask >> (v - 1) & 1u) s.push_back(v);
        subsets.push_back(std::move(s));
    }
    for (const auto& a : subsets)
        for (const auto& b : subsets) {
            bool ok = true;
            for (int c = 0; c < n && ok; ++c) ok = a[c] < b[c];
            std::set<int> used(a.begin(), a.end());
            used.insert(b.begin(), b.end());
            ok = ok && static_cast<int>(used.size()) == m;
            if (ok) out.push_back({a, b});
        }
    return out;
}

// Large Schroeder numbers by their convolution recurrence; halves give the
// small ones.
inline std::vector<std::int64_t> small_schroeder(int count) {
    std::vector<std::int64_t> big{1};
    for (int n = 1; n <= count; ++n) {
        std::int64_t s = big[n - 1];
        for (int k = 0; k < n; ++k) s += big[k] * big[n - 1 - k];
        big.push_back(s);
    }
    std::vector<std::int64_t> small;
    for (int n = 1; n <= count; ++n) small.push_back(big[n] / 2);
    return small;
}

// K-Bender-Knuth involution t_i: swap i and i+1 in every box whose edge
// neighbours avoid the other value.
inline Grid bender_knuth(const Grid& g, int i) {
    Grid out = g;
    auto value = [&](int r, int c) -> int {
        if (r < 0 || r >= static_cast<int>(g.size()) || c < 0 || c >= static_cast<int>(g[r].size())) return 0;
        return g[r][c];
    };
    for (int r = 0; r < static_cast<int>(g.size()); ++r)
        for (int c = 0; c < static_cast<int>(g[r].size()); ++c) {
            const int v = g[r][c];
            if (v != i && v != i + 1) continue;
            const int other = v == i ? i + 1 : i;
            if (value(r - 1, c) == other || value(r + 1, c) == other || value(r, c - 1) == other ||
                value(r, c + 1) == other)
                continue;
            out[r][c] = other;
        }
    return out;
}

inline Grid promote_by_bender_knuth(const Grid& g) {
    int m = 0;
    for (const auto& row : g)
        for (int v : row) m = std::max(m, v);
    Grid cur = g;
    for (int i = 1; i < m; ++i) cur = bender_knuth(cur, i);
    return cur;
}

// Gaussian binomial coefficients as inversion counts of 0/1 words with b ones.
inline std::vector<std::int64_t> q_binomial_by_inversions(int a, int b) {
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(b * (a - b) + 1), 0);
    for (std::uint32_t mask = 0; mask < (1u << a); ++mask) {
        if (std::popcount(mask) != b) continue;
        int inv = 0, ones = 0;
        for (int pos = 0; pos < a; ++pos) {
            if (mask >> pos & 1u)
                ++ones;
            else
                inv += ones;
        }
        ++coeffs[inv];
    }
    return coeffs;
}

// Evaluates integer coefficients at exp(2 pi i / d) in floating point.
inline std::complex<double> eval_complex(const std::vector<std::int64_t>& coeffs, int d) {
    const std::complex<double> zeta = std::polar(1.0, 2.0 * 3.14159265358979323846 / d);
    std::complex<double> acc = 0, power = 1;
    for (auto c : coeffs) {
        acc += static_cast<double>(c) * power;
        power *= zeta;
    }
    return acc;
}

// Set partitions of {0..n-1} as restricted growth strings.
inline void set_partitions(int n, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> go = [&](int pos, int blocks) {
        if (pos == n) {
            emit(label);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            label[pos] = b;
            go(pos + 1, std::max(blocks, b + 1));
        }
    };
    if (n == 0)
        emit(label);
    else
        go(0, 0);
}

// a < b < c < d with a, c in one block and b, d in another.
inline bool crosses(const std::vector<int>& label) {
    const int n = static_cast<int>(label.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (label[a] == label[c] && label[b] == label[d] && label[a] != label[b]) return true;
    return false;
}

struct TypeBTally {
    int pairs;
    bool central;
    bool singleton_free;
    auto operator<=>(const TypeBTally&) const = default;
};

// Noncrossing partitions of 1..N, -1..-N (in that circular order) closed
// under negation.
inline std::map<TypeBTally, std::int64_t> typeb_by_set_partitions(int n) {
    std::map<TypeBTally, std::int64_t> table;
    const int size = 2 * n;
    auto negate = [n](int pos) { return pos < n ? pos + n : pos - n; };
    set_partitions(size, [&](const std::vector<int>& label) {
        std::map<int, int> image;
        for (int pos = 0; pos < size; ++pos) {
            auto [it, fresh] = image.emplace(label[pos], label[negate(pos)]);
            if (!fresh && it->second != label[negate(pos)]) return;
        }
        if (crosses(label)) return;
        int blocks = 0, fixed = 0;
        std::map<int, int> sizes;
        for (int v : label) ++sizes[v];
        for (auto [b, s] : sizes) {
            ++blocks;
            if (image[b] == b) ++fixed;
        }
        const bool singleton_free = std::none_of(sizes.begin(), sizes.end(), [](auto kv) { return kv.second == 1; });
        ++table[{(blocks - fixed) / 2, fixed > 0, singleton_free}];
    });
    return table;
}

// Random increasing tableau of a given shape: grow the shape by random
// nonempty antichains of addable corners.
inline Grid random_increasing(const std::vector<int>& shape, std::mt19937_64& rng) {
    Grid g(shape.size());
    int label = 0;
    auto filled = [&] {
        for (std::size_t r = 0; r < shape.size(); ++r)
            if (static_cast<int>(g[r].size()) < shape[r]) return false;
        return true;
    };
    while (!filled()) {
        std::vector<std::size_t> corners;
        for (std::size_t r = 0; r < shape.size(); ++r) {
            const auto len = g[r].size();
            if (static_cast<int>(len) >= shape[r]) continue;
            if (r == 0 || g[r - 1].size() > len) corners.push_back(r);
        }
        std::vector<std::size_t> chosen;
        while (chosen.empty())
            for (auto r : corners)
                if (rng() % 2) chosen.push_back(r);
        ++label;
        for (auto r : chosen) g[r].push_back(label);
    }
    return g;
}

inline std::vector<int> random_shape(std::mt19937_64& rng, int max_rows, int max_cols) {
    const int rows = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_rows));
    std::vector<int> parts;
    int cap = max_cols;
    for (int r = 0; r < rows; ++r) {
        const int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(cap));
        parts.push_back(len);
        cap = len;
    }
    return parts;
}

}  // namespace oracle
