#include "inctab/bijections.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "inctab/dynamics.hpp"

namespace inctab {

namespace {

void require_two_row_rectangle(const IncreasingTableau& t) {
    if (t.num_rows() != 2 || !t.is_rectangular())
        throw std::invalid_argument("expected a two-row rectangular tableau");
}

bool contains(const std::vector<int>& sorted, int v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

std::vector<int> without(const std::vector<int>& row, const std::set<int>& drop) {
    std::vector<int> out;
    for (int v : row)
        if (!drop.count(v)) out.push_back(v);
    return out;
}

// Values present in both rows of a two-row tableau.
std::set<int> doubled(const IncreasingTableau& t) {
    std::set<int> a;
    for (int v : t.rows()[0])
        if (contains(t.rows()[1], v)) a.insert(v);
    return a;
}

}  // namespace

SkewTableau as_skew(const IncreasingTableau& t) { return {t.shape(), PartitionShape{}, t.rows()}; }

SkewTableau rot_skew(const IncreasingTableau& t) {
    const int height = t.num_rows();
    const int width = t.row_length(1);
    const int m = t.max_entry();
    std::vector<int> outer(height, width), inner(height, 0);
    Grid rows(height);
    for (int r = 0; r < height; ++r) {
        const auto& src = t.rows()[height - 1 - r];
        inner[r] = width - static_cast<int>(src.size());
        for (auto it = src.rbegin(); it != src.rend(); ++it) rows[r].push_back(m + 1 - *it);
    }
    return {PartitionShape(outer), PartitionShape(inner), rows};
}

std::vector<int> reading_word(const SkewTableau& t) {
    std::vector<int> word;
    for (auto row = t.rows.rbegin(); row != t.rows.rend(); ++row) word.insert(word.end(), row->begin(), row->end());
    return word;
}

std::string render(const SkewTableau& t) {
    int max = 0;
    for (const auto& row : t.rows)
        for (int v : row) max = std::max(max, v);
    const std::size_t width = std::to_string(max).size();
    std::ostringstream os;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        std::string line;
        const int skip = t.inner.row_length(static_cast<int>(r) + 1);
        for (int c = 0; c < skip; ++c) line += std::string(width, '.') + ' ';
        for (int v : t.rows[r]) {
            const auto s = std::to_string(v);
            line += std::string(width - s.size(), ' ') + s + ' ';
        }
        line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

FlagSYT::FlagSYT(IncreasingTableau t) : t_(std::move(t)) {
    if (!t_.is_standard()) throw std::invalid_argument("flag tableau must be standard");
    if (t_.num_rows() < 2 || t_.row_length(1) != t_.row_length(2))
        throw std::invalid_argument("flag tableau needs two equal top rows");
    for (int r = 3; r <= t_.num_rows(); ++r)
        if (t_.row_length(r) != 1) throw std::invalid_argument("flag tableau rows below the second must have length 1");
    width_ = t_.row_length(1);
    tail_ = t_.num_rows() - 2;
}

FlagSYT to_flag(const IncreasingTableau& t) {
    require_two_row_rectangle(t);
    const auto a = doubled(t);
    const auto& bottom = t.rows()[1];
    std::set<int> b;
    for (std::size_t c = 0; c + 1 < bottom.size(); ++c)
        if (a.count(bottom[c])) b.insert(bottom[c + 1]);
    Grid rows{without(t.rows()[0], a), without(bottom, b)};
    for (int v : b) rows.push_back({v});
    return FlagSYT(IncreasingTableau::from_rows(std::move(rows)));
}

IncreasingTableau from_flag(const FlagSYT& s) {
    const auto& rows = s.tableau().rows();
    std::vector<int> bottom = rows[1];
    std::vector<int> tail;
    for (std::size_t r = 2; r < rows.size(); ++r) tail.push_back(rows[r][0]);
    bottom.insert(bottom.end(), tail.begin(), tail.end());
    std::sort(bottom.begin(), bottom.end());
    std::vector<int> top = rows[0];
    for (std::size_t c = 1; c < bottom.size(); ++c)
        if (std::find(tail.begin(), tail.end(), bottom[c]) != tail.end()) top.push_back(bottom[c - 1]);
    std::sort(top.begin(), top.end());
    return IncreasingTableau::from_rows({top, bottom});
}

Grid d_tableau(const IncreasingTableau& t) {
    require_two_row_rectangle(t);
    const auto a = doubled(t);
    const auto& top = t.rows()[0];
    std::set<int> c;
    for (std::size_t i = 1; i < top.size(); ++i)
        if (a.count(top[i])) c.insert(top[i - 1]);
    return {without(top, c), without(t.rows()[1], a)};
}

SkewTableau skew_flag(const IncreasingTableau& t) {
    const auto d = d_tableau(t);
    const auto a = doubled(t);
    const auto& top = t.rows()[0];
    std::vector<int> c;
    for (std::size_t i = 1; i < top.size(); ++i)
        if (a.count(top[i])) c.push_back(top[i - 1]);
    const int width = static_cast<int>(d[0].size());
    const int k = static_cast<int>(c.size());
    std::vector<int> outer(k + 2, width);
    std::vector<int> inner(k, width - 1);
    Grid rows;
    for (int v : c) rows.push_back({v});
    rows.push_back(d[0]);
    rows.push_back(d[1]);
    return {PartitionShape(outer), PartitionShape(inner), rows};
}

IncreasingTableau schensted_insert(const std::vector<int>& word) {
    std::set<int> seen;
    Grid rows;
    for (int x : word) {
        if (x <= 0) throw std::invalid_argument("insertion letters must be positive");
        if (!seen.insert(x).second) throw std::invalid_argument("repeated letter " + std::to_string(x));
        int carry = x;
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({carry});
                break;
            }
            auto it = std::upper_bound(rows[r].begin(), rows[r].end(), carry);
            if (it == rows[r].end()) {
                rows[r].push_back(carry);
                break;
            }
            std::swap(carry, *it);
        }
    }
    // Throws unless the letters are exactly {1..N}.
    return IncreasingTableau::from_rows(std::move(rows));
}

FlagSYT rectify_skew_flag(const IncreasingTableau& t) {
    return FlagSYT(schensted_insert(reading_word(skew_flag(t))));
}

FlagEvacuationWitness flag_evacuation_commutes(const IncreasingTableau& t) {
    auto lhs = k_evacuate(to_flag(t).tableau());
    auto rhs = to_flag(k_evacuate(t)).tableau();
    const bool same = lhs == rhs;
    return {std::move(lhs), std::move(rhs), same};
}

NCPartition::NCPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    for (auto& block : blocks_) {
        if (block.empty()) throw std::invalid_argument("empty block");
        std::sort(block.begin(), block.end());
        for (int v : block) {
            if (v < 1 || v > n_) throw std::invalid_argument("block element " + std::to_string(v) + " out of range");
            if (seen[v]) throw std::invalid_argument("element " + std::to_string(v) + " in two blocks");
            seen[v] = true;
        }
    }
    for (int v = 1; v <= n_; ++v)
        if (!seen[v]) throw std::invalid_argument("element " + std::to_string(v) + " in no block");
    std::sort(blocks_.begin(), blocks_.end());
}

bool NCPartition::has_singleton() const noexcept {
    return std::any_of(blocks_.begin(), blocks_.end(), [](const auto& b) { return b.size() == 1; });
}

bool NCPartition::is_noncrossing() const noexcept {
    // Blocks X, Y cross iff some a < b < c < d has a, c in X and b, d in Y.
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        for (std::size_t j = 0; j < blocks_.size(); ++j) {
            if (i == j) continue;
            const auto& x = blocks_[i];
            const auto& y = blocks_[j];
            for (std::size_t p = 0; p + 1 < x.size(); ++p) {
                // y meets the open interval (x[p], x[p+1]) and also lies outside [x[p], x[p+1]].
                const bool inside = std::any_of(y.begin(), y.end(), [&](int v) { return v > x[p] && v < x[p + 1]; });
                const bool outside = std::any_of(y.begin(), y.end(), [&](int v) { return v < x[p] || v > x[p + 1]; });
                if (inside && outside) return false;
            }
        }
    }
    return true;
}

std::string NCPartition::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        s += i ? ",{" : "{";
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) s += (j ? "," : "") + std::to_string(blocks_[i][j]);
        s += "}";
    }
    return s + "}";
}

NCPartition to_ncpartition(const IncreasingTableau& t) {
    require_two_row_rectangle(t);
    const auto& top = t.rows()[0];
    const int n = t.max_entry();
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    for (int v = 0; v <= n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int i : t.rows()[1]) {
        int s = 0;
        for (int v : top)
            if (v < i && !used[v]) s = v;
        if (s == 0) throw std::logic_error("no partner for " + std::to_string(i));
        used[s] = true;
        parent[find(i)] = find(s);
    }
    std::map<int, std::vector<int>> groups;
    for (int v = 1; v <= n; ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, members] : groups) blocks.push_back(std::move(members));
    return NCPartition(n, std::move(blocks));
}

IncreasingTableau from_ncpartition(const NCPartition& p) {
    if (p.has_singleton()) throw std::invalid_argument("partition has a singleton block");
    if (!p.is_noncrossing()) throw std::invalid_argument("partition is crossing");
    std::vector<int> top, bottom;
    for (const auto& block : p.blocks()) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i + 1 < block.size()) top.push_back(block[i]);
            if (i > 0) bottom.push_back(block[i]);
        }
    }
    std::sort(top.begin(), top.end());
    std::sort(bottom.begin(), bottom.end());
    return IncreasingTableau::from_rows({top, bottom});
}

NCPartition rotate_nc(const NCPartition& p) {
    auto blocks = p.blocks();
    const int n = p.ground_size();
    for (auto& block : blocks)
        for (int& v : block) v = v == 1 ? n : v - 1;
    return NCPartition(n, std::move(blocks));
}

namespace {

// Enumerates noncrossing set partitions of positions 0..size-1 with a stack
// of open blocks: joining a block closes every block opened after it. When
// `negation` is set, position p + size/2 must lie in the block paired with
// the block of p, and the pairing must be an involution.
struct NoncrossingSearch {
    int size;
    bool negation;
    std::function<void(const std::vector<int>&, int)> emit;

    std::vector<int> label{};
    std::vector<int> stack{};
    std::vector<int> pair_of{};
    int blocks = 0;

    void run(int pos) {
        if (pos == size) {
            emit(label, blocks);
            return;
        }
        // Candidate blocks: a fresh one, or any open block.
        for (int depth = static_cast<int>(stack.size()); depth >= 0; --depth) {
            const bool fresh = depth == static_cast<int>(stack.size());
            const int b = fresh ? blocks : stack[depth];
            const std::vector<int> saved_stack = stack;
            if (fresh) {
                stack.push_back(b);
                ++blocks;
                pair_of.push_back(-1);
            } else {
                stack.resize(static_cast<std::size_t>(depth) + 1);
            }
            std::vector<std::pair<int, int>> undo;
            const bool ok = !negation || pos < size / 2 || bind(label[pos - size / 2], b, undo);
            if (ok) {
                label.push_back(b);
                run(pos + 1);
                label.pop_back();
            }
            for (auto it = undo.rbegin(); it != undo.rend(); ++it) pair_of[it->first] = it->second;
            stack = saved_stack;
            if (fresh) {
                --blocks;
                pair_of.pop_back();
            }
        }
    }

    // Records that blocks a and b are negatives of each other.
    bool bind(int a, int b, std::vector<std::pair<int, int>>& undo) {
        auto set = [&](int x, int y) {
            if (pair_of[x] == y) return true;
            if (pair_of[x] != -1) return false;
            undo.emplace_back(x, pair_of[x]);
            pair_of[x] = y;
            return true;
        };
        return set(a, b) && set(b, a);
    }
};

}  // namespace

std::vector<NCPartition> enumerate_noncrossing(int n) {
    if (n < 1 || n > 14) throw std::invalid_argument("enumerate_noncrossing supports 1 <= n <= 14");
    std::vector<NCPartition> out;
    NoncrossingSearch search{n, false, [&](const std::vector<int>& label, int blocks) {
                                 std::vector<std::vector<int>> groups(blocks);
                                 for (int p = 0; p < n; ++p) groups[label[p]].push_back(p + 1);
                                 out.emplace_back(n, std::move(groups));
                             }};
    search.run(0);
    return out;
}

bool TypeBPartition::has_central_block() const noexcept {
    for (const auto& block : blocks)
        if (std::find(block.begin(), block.end(), -block.front()) != block.end()) return true;
    return false;
}

int TypeBPartition::pairs() const noexcept {
    const int total = static_cast<int>(blocks.size());
    return (total - (has_central_block() ? 1 : 0)) / 2;
}

bool TypeBPartition::has_singleton() const noexcept {
    return std::any_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() == 1; });
}

std::vector<TypeBPartition> enumerate_typeb(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("type-B brute force supports 1 <= N <= 8");
    std::vector<TypeBPartition> out;
    // Circular positions 0..2N-1 carry 1..N, -1..-N.
    auto value = [n](int pos) { return pos < n ? pos + 1 : -(pos - n + 1); };
    NoncrossingSearch search{2 * n, true, [&](const std::vector<int>& label, int blocks) {
                                 TypeBPartition p{n, std::vector<std::vector<int>>(blocks)};
                                 for (int pos = 0; pos < 2 * n; ++pos) p.blocks[label[pos]].push_back(value(pos));
                                 for (auto& block : p.blocks) std::sort(block.begin(), block.end());
                                 std::sort(p.blocks.begin(), p.blocks.end());
                                 out.push_back(std::move(p));
                             }};
    search.run(0);
    return out;
}

std::map<TypeBKey, std::int64_t> typeb_bruteforce(int n) {
    std::map<TypeBKey, std::int64_t> table;
    for (const auto& p : enumerate_typeb(n)) ++table[{p.pairs(), p.has_central_block(), !p.has_singleton()}];
    return table;
}

}  // namespace inctab
