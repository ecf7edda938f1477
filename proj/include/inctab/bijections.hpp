#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "inctab/tableau.hpp"

namespace inctab {

/// Filling of a skew shape outer/inner. rows[r] holds the entries of row
/// r + 1 in columns inner_r + 1 .. outer_r.
struct SkewTableau {
    PartitionShape outer;
    PartitionShape inner;
    Grid rows;

    auto operator<=>(const SkewTableau&) const = default;
};

/// Straight-shape tableaux as skew tableaux with empty inner shape.
SkewTableau as_skew(const IncreasingTableau& t);

/// 180-degree rotation inside the bounding rectangle of the shape, with
/// x sent to M + 1 - x.
SkewTableau rot_skew(const IncreasingTableau& t);

/// Row reading word: rows from bottom to top, each left to right.
std::vector<int> reading_word(const SkewTableau& t);

std::string render(const SkewTableau& t);

/// Standard tableau of flag shape (n-k, n-k, 1^k).
class FlagSYT {
public:
    explicit FlagSYT(IncreasingTableau t);

    const IncreasingTableau& tableau() const noexcept { return t_; }
    int n() const noexcept { return width_ + tail_; }
    int k() const noexcept { return tail_; }

    bool operator==(const FlagSYT&) const = default;

private:
    IncreasingTableau t_;
    int width_ = 0;
    int tail_ = 0;
};

/// F: drop the doubled values A from row 1 and their right neighbours B
/// from row 2, then hang B below the first column.
FlagSYT to_flag(const IncreasingTableau& t);
IncreasingTableau from_flag(const FlagSYT& s);

/// d(T): drop the doubled values from row 2 and their left neighbours C
/// from row 1. The entries skip the values of C, so the result is a plain
/// standard filling rather than an increasing tableau.
Grid d_tableau(const IncreasingTableau& t);

/// d(T) with C stacked in increasing order in the last column above it,
/// giving skew shape ((n-k)^{k+2}) / ((n-k-1)^k).
SkewTableau skew_flag(const IncreasingTableau& t);

/// Schensted row insertion P-symbol. Letters must be distinct positive
/// integers.
IncreasingTableau schensted_insert(const std::vector<int>& word);

/// Insertion of the reading word of skew_flag(t); equals to_flag(t).
FlagSYT rectify_skew_flag(const IncreasingTableau& t);

struct FlagEvacuationWitness {
    IncreasingTableau evacuated_flag;  // E(F(t))
    IncreasingTableau flag_of_evacuated;  // F(E(t))
    bool commutes = false;
};

FlagEvacuationWitness flag_evacuation_commutes(const IncreasingTableau& t);

/// Set partition of {1..N}; blocks are sorted and ordered by minimum.
class NCPartition {
public:
    NCPartition(int n, std::vector<std::vector<int>> blocks);

    int ground_size() const noexcept { return n_; }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
    std::size_t num_blocks() const noexcept { return blocks_.size(); }
    bool has_singleton() const noexcept;
    bool is_noncrossing() const noexcept;
    std::string str() const;

    auto operator<=>(const NCPartition&) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

/// pi: each row-2 entry i joins the largest unused row-1 entry below it.
NCPartition to_ncpartition(const IncreasingTableau& t);
/// Block minima go to row 1, maxima to row 2, other elements to both.
IncreasingTableau from_ncpartition(const NCPartition& p);

/// Clockwise rotation: i -> i - 1, 1 -> N.
NCPartition rotate_nc(const NCPartition& p);

/// All noncrossing partitions of {1..n}.
std::vector<NCPartition> enumerate_noncrossing(int n);

/// Negation-closed partition of ±{1..N}, noncrossing for the circular order
/// 1, ..., N, -1, ..., -N.
struct TypeBPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    bool has_central_block() const noexcept;
    int pairs() const noexcept;
    bool has_singleton() const noexcept;
};

/// Brute-force enumeration for N <= 8.
std::vector<TypeBPartition> enumerate_typeb(int n);

struct TypeBKey {
    int pairs = 0;
    bool central = false;
    bool singleton_free = false;
    auto operator<=>(const TypeBKey&) const = default;
};

/// Counts of enumerate_typeb(N) by (pairs, central block, no singletons).
std::map<TypeBKey, std::int64_t> typeb_bruteforce(int n);

}  // namespace inctab
