#include "inctab/dynamics.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace inctab {

namespace {

constexpr int kEmpty = 0;

// Working copy of a tableau where kEmpty marks a hole.
struct Board {
    Grid cells;

    int rows() const { return static_cast<int>(cells.size()); }
    int len(int r) const { return r < rows() ? static_cast<int>(cells[r].size()) : 0; }
    bool inside(int r, int c) const { return r >= 0 && c >= 0 && r < rows() && c < len(r); }
};

// Swap holes and boxes labelled `label` wherever the two are edge-adjacent.
void switch_with(Board& board, int label) {
    std::vector<std::pair<int, int>> to_label, to_hole;
    for (int r = 0; r < board.rows(); ++r)
        for (int c = 0; c < board.len(r); ++c) {
            const int v = board.cells[r][c];
            if (v != kEmpty && v != label) continue;
            const int other = v == kEmpty ? label : kEmpty;
            bool touches = false;
            for (auto [nr, nc] : {std::pair{r - 1, c}, std::pair{r + 1, c}, std::pair{r, c - 1}, std::pair{r, c + 1}})
                if (board.inside(nr, nc) && board.cells[nr][nc] == other) touches = true;
            if (touches) (v == kEmpty ? to_label : to_hole).emplace_back(r, c);
        }
    for (auto [r, c] : to_label) board.cells[r][c] = label;
    for (auto [r, c] : to_hole) board.cells[r][c] = kEmpty;
}

// One K-promotion (forward) or its inverse (backward), recording every box
// that is ever a hole.
Board slide(const IncreasingTableau& t, bool forward, std::set<BoxCoord>* path) {
    Board board{t.rows()};
    const int m = t.max_entry();
    const int removed = forward ? 1 : m;
    for (auto& row : board.cells)
        for (int& v : row)
            if (v == removed) v = kEmpty;
    auto record = [&] {
        if (!path) return;
        for (int r = 0; r < board.rows(); ++r)
            for (int c = 0; c < board.len(r); ++c)
                if (board.cells[r][c] == kEmpty) path->insert(BoxCoord{r + 1, c + 1});
    };
    record();
    if (forward)
        for (int label = 2; label <= m; ++label) switch_with(board, label), record();
    else
        for (int label = m - 1; label >= 1; --label) switch_with(board, label), record();

    const int dir = forward ? 1 : -1;
    for (auto& row : board.cells)
        for (int& v : row) {
            if (v == kEmpty) v = forward ? m + 1 : 0;
            v -= dir;
        }
    return board;
}

}  // namespace

IncreasingTableau k_promote(const IncreasingTableau& t) {
    return IncreasingTableau::from_rows(slide(t, true, nullptr).cells);
}

IncreasingTableau k_promote_inv(const IncreasingTableau& t) {
    return IncreasingTableau::from_rows(slide(t, false, nullptr).cells);
}

IncreasingTableau k_promote_pow(const IncreasingTableau& t, int times) {
    IncreasingTableau cur = t;
    for (int i = 0; i < times; ++i) cur = k_promote(cur);
    for (int i = 0; i > times; --i) cur = k_promote_inv(cur);
    return cur;
}

std::set<BoxCoord> flow_path(const IncreasingTableau& t) {
    std::set<BoxCoord> path;
    slide(t, true, &path);
    return path;
}

IncreasingTableau k_evacuate(const IncreasingTableau& t) {
    const int m = t.max_entry();
    std::vector<IncreasingTableau> powers{t};
    for (int i = 1; i <= m; ++i) powers.push_back(k_promote(powers.back()));
    std::vector<PartitionShape> diagrams;
    for (int j = 0; j <= m; ++j) diagrams.push_back(truncate(powers[m - j], j));
    return from_chain(ShapeChain(std::move(diagrams)));
}

IncreasingTableau dual_k_evacuate(const IncreasingTableau& t) {
    if (!t.is_rectangular()) throw std::invalid_argument("dual K-evacuation requires a rectangular tableau");
    return rot(k_evacuate(rot(t)));
}

GrowthDiagram::GrowthDiagram(std::vector<ShapeChain> rows) : rows_(std::move(rows)) {
    const int m = max_entry();
    for (const auto& row : rows_)
        if (row.length() != m) throw std::invalid_argument("growth diagram rows must have length M + 1");
}

bool GrowthDiagram::defined(int i, int j) const noexcept {
    return i >= 1 && i <= max_entry() + 1 && j >= i && j <= max_entry() + i;
}

const PartitionShape& GrowthDiagram::at(int i, int j) const {
    if (!defined(i, j)) throw std::out_of_range("growth diagram index out of range");
    return rows_[i - 1][j - i];
}

std::vector<PartitionShape> GrowthDiagram::central_column() const {
    std::vector<PartitionShape> col;
    for (int i = 1; i <= max_entry() + 1; ++i) col.push_back(at(i, max_entry() + 1));
    return col;
}

GrowthDiagram growth_diagram(const IncreasingTableau& t) {
    std::vector<ShapeChain> rows;
    IncreasingTableau cur = t;
    for (int i = 0; i <= t.max_entry(); ++i) {
        rows.push_back(shape_chain(cur));
        cur = k_promote(cur);
    }
    return GrowthDiagram(std::move(rows));
}

PartitionShape growth_local_rule(const PartitionShape& nu, const PartitionShape& lambda, const PartitionShape& mu) {
    if (!lambda.contains(nu) || !mu.contains(lambda))
        throw std::invalid_argument("growth rule needs nu ⊆ lambda ⊆ mu");
    const auto holes = lambda.boxes_outside(nu);
    const auto labels = mu.boxes_outside(lambda);
    auto is_hole = [&](BoxCoord b) { return std::find(holes.begin(), holes.end(), b) != holes.end(); };
    auto is_label = [&](BoxCoord b) { return std::find(labels.begin(), labels.end(), b) != labels.end(); };

    std::vector<int> parts(mu.num_rows(), 0);
    for (int r = 1; r <= nu.num_rows(); ++r) parts[r - 1] = nu.row_length(r);
    auto add = [&](BoxCoord b) { parts[b.row - 1] = std::max(parts[b.row - 1], b.col); };
    for (const auto& h : holes)
        if (is_label({h.row + 1, h.col}) || is_label({h.row, h.col + 1})) add(h);
    for (const auto& l : labels)
        if (!is_hole({l.row - 1, l.col}) && !is_hole({l.row, l.col - 1})) add(l);
    return PartitionShape(std::move(parts));
}

std::optional<std::pair<int, int>> find_local_rule_violation(const GrowthDiagram& d) {
    const int m = d.max_entry();
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j + 1 <= m + i; ++j) {
            const auto& lambda = d.at(i, j);
            const auto& mu = d.at(i, j + 1);
            const auto& nu = d.at(i + 1, j);
            const auto& xi = d.at(i + 1, j + 1);
            if (growth_local_rule(nu, lambda, mu) != xi) return std::pair{i, j};
            if (growth_local_rule(nu, xi, mu) != lambda) return std::pair{i, j};
        }
    }
    return std::nullopt;
}

std::string render(const GrowthDiagram& d) {
    const int m = d.max_entry();
    std::vector<std::vector<std::string>> cells(m + 1);
    std::size_t width = 1;
    for (int i = 1; i <= m + 1; ++i)
        for (int j = i; j <= m + i; ++j) {
            const auto& shape = d.at(i, j);
            std::string s;
            if (shape.empty()) {
                s = "∅";
            } else {
                for (std::size_t p = 0; p < shape.parts().size(); ++p)
                    s += (p ? "," : "") + std::to_string(shape.parts()[p]);
            }
            width = std::max(width, s.size());
            cells[i - 1].push_back(std::move(s));
        }
    std::ostringstream os;
    for (int i = 1; i <= m + 1; ++i) {
        std::string line;
        for (int pad = 1; pad < i; ++pad) line += std::string(width + 1, ' ');
        for (std::size_t c = 0; c < cells[i - 1].size(); ++c) {
            const auto& s = cells[i - 1][c];
            // "∅" is one column wide but three bytes long.
            const std::size_t shown = s == "∅" ? 1 : s.size();
            line += s + std::string(width - shown + 1, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

int rank_cap(const IncreasingTableau& t) noexcept { return 10 * std::max(1, t.max_entry()); }

int promotion_rank(const IncreasingTableau& t) {
    IncreasingTableau cur = k_promote(t);
    for (int r = 1; r <= rank_cap(t); ++r) {
        if (cur == t) return r;
        cur = k_promote(cur);
    }
    throw std::runtime_error("promotion rank exceeds " + std::to_string(rank_cap(t)));
}

int evacuation_rank(const IncreasingTableau& t) {
    if (!t.is_rectangular()) throw std::invalid_argument("evacuation rank requires a rectangular tableau");
    IncreasingTableau cur = dual_k_evacuate(k_evacuate(t));
    for (int r = 1; r <= rank_cap(t); ++r) {
        if (cur == t) return r;
        cur = dual_k_evacuate(k_evacuate(cur));
    }
    throw std::runtime_error("evacuation rank exceeds " + std::to_string(rank_cap(t)));
}

std::size_t OrbitReport::total() const noexcept {
    std::size_t s = 0;
    for (auto n : sizes) s += n;
    return s;
}

std::size_t OrbitReport::fixed_points(std::size_t m) const noexcept {
    std::size_t count = 0;
    for (auto n : sizes)
        if (m % n == 0) count += n;
    return count;
}

bool OrbitReport::sizes_divide(std::size_t group_order) const noexcept {
    return std::all_of(sizes.begin(), sizes.end(), [&](std::size_t n) { return group_order % n == 0; });
}

OrbitReport orbits(std::span<const IncreasingTableau> elements, const TableauMap& step) {
    std::map<IncreasingTableau, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (!index.emplace(elements[i], i).second) throw std::logic_error("orbit input contains duplicates");

    constexpr auto unset = static_cast<std::size_t>(-1);
    OrbitReport report;
    report.orbit_of.assign(elements.size(), unset);
    report.rank.assign(elements.size(), 0);
    for (std::size_t seed = 0; seed < elements.size(); ++seed) {
        if (report.orbit_of[seed] != unset) continue;
        const std::size_t orbit = report.sizes.size();
        std::vector<std::size_t> members{seed};
        report.orbit_of[seed] = orbit;
        IncreasingTableau cur = step(elements[seed]);
        while (true) {
            auto it = index.find(cur);
            if (it == index.end()) throw std::logic_error("step leaves the set: " + render(cur));
            if (it->second == seed) break;
            if (report.orbit_of[it->second] != unset) throw std::logic_error("step is not a permutation of the set");
            report.orbit_of[it->second] = orbit;
            members.push_back(it->second);
            cur = step(cur);
        }
        std::size_t least = members.front();
        for (auto i : members) {
            report.rank[i] = members.size();
            if (elements[i] < elements[least]) least = i;
        }
        report.representatives.push_back(elements[least]);
        report.sizes.push_back(members.size());
    }
    return report;
}

}  // namespace inctab
