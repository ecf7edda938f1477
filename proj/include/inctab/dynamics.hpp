#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "inctab/tableau.hpp"

namespace inctab {

/// K-promotion. Entry 1 is removed; then, in simultaneous rounds, every
/// empty box takes the least label among its neighbours below and to the
/// right and that label is removed from each of those neighbours carrying
/// it. Remaining empty boxes get M + 1 and all entries drop by one.
IncreasingTableau k_promote(const IncreasingTableau& t);

/// Inverse of k_promote: the mirror-image process. Every box holding M is
/// emptied, empty boxes take the largest label among their neighbours above
/// and to the left, leftover boxes get 0 and all entries rise by one.
IncreasingTableau k_promote_inv(const IncreasingTableau& t);

/// k_promote applied `times` times (negative counts use the inverse).
IncreasingTableau k_promote_pow(const IncreasingTableau& t, int times);

/// Boxes that are empty at some point during one K-promotion.
std::set<BoxCoord> flow_path(const IncreasingTableau& t);

/// K-evacuation: the tableau whose chain is ([P^{M-j}(t)]_j)_{0<=j<=M}.
IncreasingTableau k_evacuate(const IncreasingTableau& t);

/// rot ∘ k_evacuate ∘ rot. Rectangular tableaux only.
IncreasingTableau dual_k_evacuate(const IncreasingTableau& t);

/// K-theory growth diagram of t: row i (1-based) is the shape chain of
/// P^{i-1}(t), shifted i - 1 places right, for i = 1..M+1.
class GrowthDiagram {
public:
    explicit GrowthDiagram(std::vector<ShapeChain> rows);

    int max_entry() const noexcept { return static_cast<int>(rows_.size()) - 1; }
    const std::vector<ShapeChain>& rows() const noexcept { return rows_; }

    /// YD_{ij}, defined for i <= j <= M + i.
    const PartitionShape& at(int i, int j) const;
    bool defined(int i, int j) const noexcept;

    /// Column M + 1, top to bottom.
    std::vector<PartitionShape> central_column() const;

private:
    std::vector<ShapeChain> rows_;
};

GrowthDiagram growth_diagram(const IncreasingTableau& t);

/// Local rule of a growth-diagram square
///     lambda  mu
///     nu      xi
/// with nu ⊆ lambda ⊆ mu: returns xi. The boxes of lambda/nu act as holes
/// switching past the boxes of mu/lambda in one K-jeu de taquin step. The
/// same rule recovers lambda from (nu, xi, mu).
PartitionShape growth_local_rule(const PartitionShape& nu, const PartitionShape& lambda, const PartitionShape& mu);

/// First square (i, j) of the diagram whose lower-right corner disagrees with
/// growth_local_rule, or whose upper-left corner disagrees with the reversed
/// rule. Squares are indexed by their upper-left cell.
std::optional<std::pair<int, int>> find_local_rule_violation(const GrowthDiagram& diagram);

/// Triangular text layout, one diagram per cell written as its parts.
std::string render(const GrowthDiagram& diagram);

/// Iteration cap shared by the rank computations: 10 * maxv(t).
int rank_cap(const IncreasingTableau& t) noexcept;

/// Least r > 0 with P^r(t) = t. Throws std::runtime_error past rank_cap.
int promotion_rank(const IncreasingTableau& t);

/// Least r > 0 with (E* ∘ E)^r(t) = t. Rectangular tableaux only.
int evacuation_rank(const IncreasingTableau& t);

using TableauMap = std::function<IncreasingTableau(const IncreasingTableau&)>;

/// Orbit decomposition of a finite set under a permutation.
struct OrbitReport {
    std::vector<IncreasingTableau> representatives;  // least element of each orbit
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> orbit_of;  // per input element
    std::vector<std::size_t> rank;      // per input element: size of its orbit

    std::size_t total() const noexcept;
    /// Number of elements fixed by the m-th power of the step.
    std::size_t fixed_points(std::size_t m) const noexcept;
    bool sizes_divide(std::size_t group_order) const noexcept;
};

/// Throws std::logic_error if `step` leaves the set or is not injective on it.
OrbitReport orbits(std::span<const IncreasingTableau> elements, const TableauMap& step);

}  // namespace inctab
