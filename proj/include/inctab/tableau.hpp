#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace inctab {

/// Row-major integer grid. Rows may be ragged; row lengths must be weakly
/// decreasing for the grid to describe a Young diagram.
using Grid = std::vector<std::vector<int>>;

/// A box of a Young diagram, 1-based (English coordinates).
struct BoxCoord {
    int row = 1;
    int col = 1;

    auto operator<=>(const BoxCoord&) const = default;
};

std::string to_string(const BoxCoord& box);

/// Integer partition stored as its row lengths. Trailing zero parts are
/// dropped on construction, so the empty partition has no parts.
class PartitionShape {
public:
    PartitionShape() = default;
    explicit PartitionShape(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int num_rows() const noexcept { return static_cast<int>(parts_.size()); }
    /// Length of the 1-based row `row`; 0 past the last row.
    int row_length(int row) const noexcept;
    int size() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }
    bool is_rectangle() const noexcept;

    bool contains(const BoxCoord& box) const noexcept;
    bool contains(const PartitionShape& other) const noexcept;

    /// Boxes of `*this` not in `inner`, row by row.
    std::vector<BoxCoord> boxes_outside(const PartitionShape& inner) const;

    auto operator<=>(const PartitionShape&) const = default;

private:
    std::vector<int> parts_;
};

std::string to_string(const PartitionShape& shape);

/// A named invariant violation found while validating a grid.
struct Diagnostic {
    std::string message;
    std::optional<BoxCoord> box;
};

class TableauError : public std::invalid_argument {
public:
    explicit TableauError(Diagnostic diag);
    const Diagnostic& diagnostic() const noexcept { return diag_; }

private:
    Diagnostic diag_;
};

/// First violated invariant of an increasing tableau, or nothing when the
/// grid is a valid increasing tableau. Checks in order: partition shape,
/// positivity, strict rows, strict columns, initial-segment entry set.
std::optional<Diagnostic> diagnose(const Grid& rows);

/// Filling of a Young diagram with strictly increasing rows and columns
/// whose entry set is {1, ..., M}. The number of repeats k = |shape| - M is
/// derived, never stored.
class IncreasingTableau {
public:
    /// Throws TableauError carrying the diagnostic on invalid input.
    static IncreasingTableau from_rows(Grid rows);

    const Grid& rows() const noexcept { return rows_; }
    PartitionShape shape() const;
    int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
    int row_length(int row) const noexcept;
    int max_entry() const noexcept { return max_; }
    int size() const noexcept;
    int repeats() const noexcept { return size() - max_; }
    bool is_standard() const noexcept { return repeats() == 0; }
    bool is_rectangular() const noexcept;
    int at(const BoxCoord& box) const;

    auto operator<=>(const IncreasingTableau& other) const { return rows_ <=> other.rows_; }
    bool operator==(const IncreasingTableau& other) const { return rows_ == other.rows_; }

private:
    IncreasingTableau(Grid rows, int max) : rows_(std::move(rows)), max_(max) {}

    Grid rows_;
    int max_ = 0;
};

/// Same as IncreasingTableau::from_rows.
IncreasingTableau validate(const Grid& rows);

/// Chain of Young diagrams [T]_0 ⊂ [T]_1 ⊂ ... ⊂ [T]_M where each step adds
/// a nonempty set of boxes, no two in one row or column.
class ShapeChain {
public:
    explicit ShapeChain(std::vector<PartitionShape> diagrams);

    const std::vector<PartitionShape>& diagrams() const noexcept { return diagrams_; }
    int length() const noexcept { return static_cast<int>(diagrams_.size()) - 1; }
    const PartitionShape& operator[](int j) const { return diagrams_.at(j); }

    auto operator<=>(const ShapeChain&) const = default;

private:
    std::vector<PartitionShape> diagrams_;
};

ShapeChain shape_chain(const IncreasingTableau& t);
IncreasingTableau from_chain(const ShapeChain& chain);

/// [T]_j: the boxes with entry at most j.
PartitionShape truncate(const IncreasingTableau& t, int j);

/// Rotate a rectangular tableau by 180 degrees and send x to M + 1 - x.
IncreasingTableau rot(const IncreasingTableau& t);

/// Sum of i in row 1 such that i + 1 appears in row 2. Two-row tableaux only.
int maj(const IncreasingTableau& t);

/// Major index of a standard tableau: sum of i with i + 1 in a strictly
/// lower row.
int major_index(const IncreasingTableau& t);

/// All of Inc_k(2 x n), ordered lexicographically by height word. Returns
/// an empty sequence when k is outside [0, n-1] (k = n would need every
/// value, including 1, in both rows).
std::vector<IncreasingTableau> enumerate_two_row(int n, int k);

/// All increasing tableaux of `shape` with maximum entry |shape| - k, by
/// depth-first extension of shape chains. Subsets of addable corners are
/// tried in increasing bitmask order (corners sorted by row), which fixes
/// the output order.
std::vector<IncreasingTableau> enumerate_shape(const PartitionShape& shape, int k);

/// Aligned text grid, one row per line.
std::string render(const IncreasingTableau& t);
std::string render(const PartitionShape& shape);

}  // namespace inctab
