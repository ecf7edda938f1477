#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "inctab/tableau.hpp"

namespace inctab {

enum class Step : char { Up = 'U', Down = 'D', Horizontal = 'H' };

/// Small Schröder path: up (1,1), down (1,-1) and horizontal (2,0) steps,
/// never below the axis, no horizontal step on the axis, ending at height 0.
class SchroederPath {
public:
    explicit SchroederPath(std::vector<Step> steps);
    /// Parses a string over "UDH".
    static SchroederPath parse(std::string_view letters);

    const std::vector<Step>& steps() const noexcept { return steps_; }
    int horizontal_steps() const noexcept;
    /// Number of columns of the corresponding 2 x n tableau.
    int columns() const noexcept;
    std::string str() const;

    auto operator<=>(const SchroederPath&) const = default;

private:
    std::vector<Step> steps_;
};

/// Node heights of a small Schröder path: starts and ends at 0, moves by
/// -1, 0 or +1, and never stays level at height 0.
class HeightWord {
public:
    explicit HeightWord(std::vector<int> heights);
    /// Parses comma-separated integers ("0,1,1,0") or bare digits ("0110").
    static HeightWord parse(std::string_view text);

    const std::vector<int>& heights() const noexcept { return heights_; }
    std::size_t size() const noexcept { return heights_.size(); }
    int operator[](std::size_t i) const { return heights_.at(i); }
    std::string str() const;

    auto operator<=>(const HeightWord&) const = default;

private:
    std::vector<int> heights_;
};

/// Unique decomposition S = 0 w1 0 w3 (flavor A) or S = 0 w1 1 w2 0 w3
/// (flavor B): w1 is positive, ends in 1 and has no two consecutive 1s; w2
/// is positive; w3 is nonnegative.
struct WordFactorization {
    enum class Flavor { A, B };
    Flavor flavor = Flavor::A;
    std::vector<int> w1, w2, w3;

    std::vector<int> assemble() const;
    bool operator==(const WordFactorization&) const = default;
};

/// Letter j is U when j sits only in row 1, D when only in row 2, H when in both.
SchroederPath to_steps(const IncreasingTableau& t);
IncreasingTableau from_steps(const SchroederPath& path);

HeightWord height_word(const SchroederPath& path);
HeightWord height_word(const IncreasingTableau& t);
/// Letter i is the row-length difference of [T]_{i-1}.
HeightWord height_word_from_truncations(const IncreasingTableau& t);
SchroederPath steps_of(const HeightWord& word);
IncreasingTableau from_height_word(const HeightWord& word);

WordFactorization word_factorize(const HeightWord& word);

/// Height word of the K-promotion: w1⁻ 1 w3⁺ 0 for flavor A and
/// w1⁻ 1 w2 1 w3⁺ 0 for flavor B.
HeightWord word_promote(const HeightWord& word);

/// Row-length differences over the first M + 1 columns of the K-theory
/// growth diagram; row i holds a_{i,i} .. a_{i,M+1}.
class HeightGrowthDiagram {
public:
    explicit HeightGrowthDiagram(std::vector<std::vector<int>> rows);

    int max_entry() const noexcept { return static_cast<int>(rows_.size()) - 1; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    /// a_{ij}, 1 <= i <= j <= M + 1.
    int at(int i, int j) const;
    std::vector<int> first_row() const { return rows_.front(); }
    /// Column M + 1, top to bottom.
    std::vector<int> last_column() const;

private:
    std::vector<std::vector<int>> rows_;
};

HeightGrowthDiagram height_growth_diagram(const IncreasingTableau& t);

std::string render(const HeightGrowthDiagram& diagram);

}  // namespace inctab
