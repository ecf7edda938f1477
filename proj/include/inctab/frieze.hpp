#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inctab/tableau.hpp"

namespace inctab {

using FriezeRow = std::vector<std::int64_t>;

/// Finite window of a tropical frieze pattern. Row i (0-based) occupies
/// absolute columns i .. i + length - 1; its first and last entries are the
/// bounding zero diagonals. Every interior square
///     a  b
///     c  d
/// (a at (i, j), d at (i + 1, j + 1)) satisfies d = max(b + c, 0) - a.
class TropicalFrieze {
public:
    explicit TropicalFrieze(std::vector<FriezeRow> rows);

    std::size_t row_length() const noexcept { return rows_.empty() ? 0 : rows_.front().size(); }
    std::size_t depth() const noexcept { return rows_.size(); }
    const std::vector<FriezeRow>& rows() const noexcept { return rows_; }

    /// Entry at row i, absolute column j; nothing outside the window.
    std::optional<std::int64_t> at(std::size_t i, std::size_t j) const noexcept;

    /// Column j read top to bottom over the rows that reach it.
    std::vector<std::int64_t> column(std::size_t j) const;

    bool operator==(const TropicalFrieze&) const = default;

private:
    std::vector<FriezeRow> rows_;
};

/// `depth` rows (the seed included) generated from a row that starts and
/// ends with 0.
TropicalFrieze tropical_frieze_from_row(const FriezeRow& row, std::size_t depth);

/// First interior square violating the tropical relation, as (i, j) of its
/// upper-left entry.
std::optional<std::pair<std::size_t, std::size_t>> find_relation_violation(const TropicalFrieze& f);

/// Rows are the height words of P^0(t) .. P^M(t), each letter decreased by
/// one with the first and last letters dropped. Two-row rectangles only.
TropicalFrieze jdt_frieze(const IncreasingTableau& t);

/// Row i equals row i + length + 1 and the column between them, for every
/// row with a full period below it. Needs depth >= length + 2.
bool has_glide_symmetry(const TropicalFrieze& f);

struct RowConditions {
    bool endpoints_zero = false;     // (1)
    bool at_least_minus_one = false;  // (2)
    bool steps_at_most_one = false;   // (3)
    bool steps_exactly_one = false;   // (3')
    bool no_double_minus_one = false;  // (4)

    bool tableau_row() const noexcept {
        return endpoints_zero && at_least_minus_one && steps_at_most_one && no_double_minus_one;
    }
    bool standard_row() const noexcept { return endpoints_zero && at_least_minus_one && steps_exactly_one; }
    std::string str() const;
};

RowConditions classify_row(const FriezeRow& row);

struct PropagationReport {
    std::size_t depth = 0;
    bool seed_tableau_row = false;   // seed meets (1)(2)(3)(4)
    bool all_tableau_rows = false;   // every generated row meets them
    bool seed_standard_row = false;  // seed meets (1)(2)(3')
    bool all_standard_rows = false;
    std::int64_t max_step = 0;       // largest |difference| seen in any row
    /// Holds unless a hypothesis holds for the seed but fails on some row.
    bool closure_ok() const noexcept {
        return (!seed_tableau_row || all_tableau_rows) && (!seed_standard_row || all_standard_rows);
    }
};

/// Generates `depth` rows (default 2(length + 1) + 1) and classifies each.
PropagationReport check_propagation(const FriezeRow& row, std::optional<std::size_t> depth = std::nullopt);

/// First row of jdt_frieze for t.
FriezeRow frieze_row(const IncreasingTableau& t);
/// Inverse of frieze_row on rows meeting (1)(2)(3)(4).
IncreasingTableau tableau_from_frieze_row(const FriezeRow& row);

/// Offset rows, one per line.
std::string render(const TropicalFrieze& f);

}  // namespace inctab
