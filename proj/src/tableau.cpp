#include "inctab/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace inctab {

std::string to_string(const BoxCoord& box) {
    return "(" + std::to_string(box.row) + "," + std::to_string(box.col) + ")";
}

PartitionShape::PartitionShape(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t r = 0; r < parts_.size(); ++r) {
        if (parts_[r] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (r > 0 && parts_[r] > parts_[r - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int PartitionShape::row_length(int row) const noexcept {
    if (row < 1 || row > num_rows()) return 0;
    return parts_[row - 1];
}

int PartitionShape::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool PartitionShape::is_rectangle() const noexcept {
    return std::all_of(parts_.begin(), parts_.end(), [&](int p) { return p == parts_.front(); });
}

bool PartitionShape::contains(const BoxCoord& box) const noexcept {
    return box.row >= 1 && box.col >= 1 && box.col <= row_length(box.row);
}

bool PartitionShape::contains(const PartitionShape& other) const noexcept {
    if (other.num_rows() > num_rows()) return false;
    for (int r = 1; r <= other.num_rows(); ++r)
        if (other.row_length(r) > row_length(r)) return false;
    return true;
}

std::vector<BoxCoord> PartitionShape::boxes_outside(const PartitionShape& inner) const {
    std::vector<BoxCoord> out;
    for (int r = 1; r <= num_rows(); ++r)
        for (int c = inner.row_length(r) + 1; c <= row_length(r); ++c) out.push_back({r, c});
    return out;
}

std::string to_string(const PartitionShape& shape) {
    std::string s = "(";
    for (std::size_t i = 0; i < shape.parts().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(shape.parts()[i]);
    }
    return s + ")";
}

TableauError::TableauError(Diagnostic diag)
    : std::invalid_argument(diag.box ? diag.message + " at " + to_string(*diag.box) : diag.message),
      diag_(std::move(diag)) {}

std::optional<Diagnostic> diagnose(const Grid& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) return Diagnostic{"empty row " + std::to_string(r + 1), std::nullopt};
        if (r > 0 && rows[r].size() > rows[r - 1].size())
            return Diagnostic{"row lengths are not weakly decreasing",
                              BoxCoord{static_cast<int>(r + 1), static_cast<int>(rows[r - 1].size() + 1)}};
    }
    int max = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const BoxCoord box{static_cast<int>(r + 1), static_cast<int>(c + 1)};
            const int v = rows[r][c];
            if (v <= 0) return Diagnostic{"entry is not a positive integer", box};
            if (c > 0 && rows[r][c - 1] >= v) return Diagnostic{"row is not strictly increasing", box};
            if (r > 0 && rows[r - 1][c] >= v) return Diagnostic{"column is not strictly increasing", box};
            max = std::max(max, v);
        }
    }
    std::vector<bool> seen(static_cast<std::size_t>(max) + 1, false);
    for (const auto& row : rows)
        for (int v : row) seen[v] = true;
    for (int v = 1; v <= max; ++v)
        if (!seen[v])
            return Diagnostic{"entries are not an initial segment: " + std::to_string(v) + " is missing",
                              std::nullopt};
    return std::nullopt;
}

IncreasingTableau IncreasingTableau::from_rows(Grid rows) {
    if (auto diag = diagnose(rows)) throw TableauError(std::move(*diag));
    int max = 0;
    for (const auto& row : rows) max = std::max(max, row.back());
    return IncreasingTableau(std::move(rows), max);
}

IncreasingTableau validate(const Grid& rows) { return IncreasingTableau::from_rows(rows); }

PartitionShape IncreasingTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return PartitionShape(std::move(parts));
}

int IncreasingTableau::row_length(int row) const noexcept {
    if (row < 1 || row > num_rows()) return 0;
    return static_cast<int>(rows_[row - 1].size());
}

int IncreasingTableau::size() const noexcept {
    int s = 0;
    for (const auto& row : rows_) s += static_cast<int>(row.size());
    return s;
}

bool IncreasingTableau::is_rectangular() const noexcept {
    return std::all_of(rows_.begin(), rows_.end(), [&](const auto& row) { return row.size() == rows_.front().size(); });
}

int IncreasingTableau::at(const BoxCoord& box) const {
    if (box.row < 1 || box.row > num_rows() || box.col < 1 || box.col > row_length(box.row))
        throw std::out_of_range("box " + to_string(box) + " outside tableau");
    return rows_[box.row - 1][box.col - 1];
}

ShapeChain::ShapeChain(std::vector<PartitionShape> diagrams) : diagrams_(std::move(diagrams)) {
    if (diagrams_.empty() || !diagrams_.front().empty())
        throw std::invalid_argument("shape chain must start at the empty diagram");
    for (std::size_t j = 1; j < diagrams_.size(); ++j) {
        const auto& lo = diagrams_[j - 1];
        const auto& hi = diagrams_[j];
        if (!hi.contains(lo) || hi == lo)
            throw std::invalid_argument("shape chain is not strictly increasing at step " + std::to_string(j));
        // Added boxes must sit in distinct rows and columns.
        std::vector<int> cols;
        for (int r = 1; r <= hi.num_rows(); ++r) {
            const int added = hi.row_length(r) - lo.row_length(r);
            if (added > 1)
                throw std::invalid_argument("step " + std::to_string(j) + " adds two boxes to one row");
            if (added == 1) cols.push_back(hi.row_length(r));
        }
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) != cols.end())
            throw std::invalid_argument("step " + std::to_string(j) + " adds two boxes to one column");
    }
}

PartitionShape truncate(const IncreasingTableau& t, int j) {
    if (j < 0 || j > t.max_entry()) throw std::out_of_range("truncation index out of range");
    std::vector<int> parts;
    for (const auto& row : t.rows()) {
        const int len = static_cast<int>(std::upper_bound(row.begin(), row.end(), j) - row.begin());
        if (len == 0) break;
        parts.push_back(len);
    }
    return PartitionShape(std::move(parts));
}

ShapeChain shape_chain(const IncreasingTableau& t) {
    std::vector<PartitionShape> diagrams;
    diagrams.reserve(static_cast<std::size_t>(t.max_entry()) + 1);
    for (int j = 0; j <= t.max_entry(); ++j) diagrams.push_back(truncate(t, j));
    return ShapeChain(std::move(diagrams));
}

IncreasingTableau from_chain(const ShapeChain& chain) {
    const auto& top = chain.diagrams().back();
    Grid rows(top.num_rows());
    for (int r = 1; r <= top.num_rows(); ++r) rows[r - 1].assign(top.row_length(r), 0);
    for (int j = 1; j <= chain.length(); ++j)
        for (const auto& box : chain[j].boxes_outside(chain[j - 1])) rows[box.row - 1][box.col - 1] = j;
    return IncreasingTableau::from_rows(std::move(rows));
}

IncreasingTableau rot(const IncreasingTableau& t) {
    if (!t.is_rectangular()) throw std::invalid_argument("rot requires a rectangular tableau");
    const int m = t.max_entry();
    Grid rows(t.rows().rbegin(), t.rows().rend());
    for (auto& row : rows) {
        std::reverse(row.begin(), row.end());
        for (int& v : row) v = m + 1 - v;
    }
    return IncreasingTableau::from_rows(std::move(rows));
}

int maj(const IncreasingTableau& t) {
    if (t.num_rows() != 2) throw std::invalid_argument("maj requires a two-row tableau");
    const auto& top = t.rows()[0];
    const auto& bottom = t.rows()[1];
    int total = 0;
    for (int i : top)
        if (std::binary_search(bottom.begin(), bottom.end(), i + 1)) total += i;
    return total;
}

int major_index(const IncreasingTableau& t) {
    if (!t.is_standard()) throw std::invalid_argument("major index requires a standard tableau");
    std::vector<int> row_of(static_cast<std::size_t>(t.max_entry()) + 2, 0);
    for (int r = 0; r < t.num_rows(); ++r)
        for (int v : t.rows()[r]) row_of[v] = r;
    int total = 0;
    for (int i = 1; i < t.max_entry(); ++i)
        if (row_of[i + 1] > row_of[i]) total += i;
    return total;
}

namespace {

// Builds two-row tableaux letter by letter. Steps are tried in the order
// down, flat, up so the emitted words are lexicographic in height.
void two_row_dfs(int length, int flats_left, int height, std::vector<int>& top, std::vector<int>& bottom,
                 int letter, std::vector<IncreasingTableau>& out) {
    if (letter > length) {
        if (height == 0 && flats_left == 0) out.push_back(IncreasingTableau::from_rows({top, bottom}));
        return;
    }
    const int remaining = length - letter + 1;
    // Each remaining letter lowers the height by at most one.
    if (height > remaining || flats_left > remaining) return;
    if (height > 0) {
        bottom.push_back(letter);
        two_row_dfs(length, flats_left, height - 1, top, bottom, letter + 1, out);
        bottom.pop_back();
        if (flats_left > 0) {
            top.push_back(letter);
            bottom.push_back(letter);
            two_row_dfs(length, flats_left - 1, height, top, bottom, letter + 1, out);
            top.pop_back();
            bottom.pop_back();
        }
    }
    top.push_back(letter);
    two_row_dfs(length, flats_left, height + 1, top, bottom, letter + 1, out);
    top.pop_back();
}

struct ShapeSearch {
    const PartitionShape& target;
    int steps;
    std::vector<int> current;
    Grid fill;
    std::vector<IncreasingTableau> out;

    int remaining_boxes() const {
        int placed = std::accumulate(current.begin(), current.end(), 0);
        return target.size() - placed;
    }

    void run(int value) {
        const int boxes = remaining_boxes();
        const int steps_left = steps - value + 1;
        if (steps_left == 0) {
            if (boxes == 0) out.push_back(IncreasingTableau::from_rows(fill));
            return;
        }
        if (boxes < steps_left || boxes > steps_left * target.num_rows()) return;

        std::vector<int> corners;  // 0-based rows with an addable box inside the target
        for (int r = 0; r < target.num_rows(); ++r) {
            const bool fits = current[r] < target.parts()[r];
            const bool supported = r == 0 || current[r] < current[r - 1];
            if (fits && supported) corners.push_back(r);
        }
        const unsigned limit = 1u << corners.size();
        for (unsigned mask = 1; mask < limit; ++mask) {
            for (std::size_t i = 0; i < corners.size(); ++i) {
                if (!(mask >> i & 1u)) continue;
                const int r = corners[i];
                fill[r].push_back(value);
                ++current[r];
            }
            run(value + 1);
            for (std::size_t i = 0; i < corners.size(); ++i) {
                if (!(mask >> i & 1u)) continue;
                const int r = corners[i];
                fill[r].pop_back();
                --current[r];
            }
        }
    }
};

}  // namespace

std::vector<IncreasingTableau> enumerate_two_row(int n, int k) {
    if (n < 1) throw std::invalid_argument("enumerate_two_row requires n >= 1");
    std::vector<IncreasingTableau> out;
    if (k < 0 || k > n - 1) return out;
    std::vector<int> top, bottom;
    two_row_dfs(2 * n - k, k, 0, top, bottom, 1, out);
    return out;
}

std::vector<IncreasingTableau> enumerate_shape(const PartitionShape& shape, int k) {
    if (shape.empty()) throw std::invalid_argument("enumerate_shape requires a nonempty shape");
    if (k < 0 || k >= shape.size()) throw std::invalid_argument("enumerate_shape requires 0 <= k < |shape|");
    ShapeSearch search{shape, shape.size() - k, std::vector<int>(shape.num_rows(), 0), Grid(shape.num_rows()), {}};
    search.run(1);
    return std::move(search.out);
}

std::string render(const IncreasingTableau& t) {
    const int width = static_cast<int>(std::to_string(t.max_entry()).size());
    std::ostringstream os;
    for (const auto& row : t.rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ' ';
            const auto s = std::to_string(row[c]);
            os << std::string(width - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

std::string render(const PartitionShape& shape) {
    if (shape.empty()) return "∅\n";
    std::ostringstream os;
    for (int p : shape.parts()) {
        for (int c = 0; c < p; ++c) os << "[]";
        os << '\n';
    }
    return os.str();
}

}  // namespace inctab
