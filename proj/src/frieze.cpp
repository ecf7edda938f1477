#include "inctab/frieze.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "inctab/dynamics.hpp"
#include "inctab/paths.hpp"

namespace inctab {

TropicalFrieze::TropicalFrieze(std::vector<FriezeRow> rows) : rows_(std::move(rows)) {
    for (const auto& row : rows_) {
        if (row.size() != rows_.front().size()) throw std::invalid_argument("frieze rows must share one length");
        if (row.empty() || row.front() != 0 || row.back() != 0)
            throw std::invalid_argument("frieze rows must start and end with 0");
    }
}

std::optional<std::int64_t> TropicalFrieze::at(std::size_t i, std::size_t j) const noexcept {
    if (i >= rows_.size() || j < i || j >= i + row_length()) return std::nullopt;
    return rows_[i][j - i];
}

std::vector<std::int64_t> TropicalFrieze::column(std::size_t j) const {
    std::vector<std::int64_t> col;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (auto v = at(i, j)) col.push_back(*v);
    return col;
}

TropicalFrieze tropical_frieze_from_row(const FriezeRow& row, std::size_t depth) {
    if (row.empty() || row.front() != 0 || row.back() != 0)
        throw std::invalid_argument("seed row must start and end with 0");
    if (depth == 0) throw std::invalid_argument("depth must be positive");
    std::vector<FriezeRow> rows{row};
    const std::size_t len = row.size();
    while (rows.size() < depth) {
        const auto& up = rows.back();
        FriezeRow next(len, 0);
        // next[c] sits at absolute column i + 1 + c, under up[c + 1].
        for (std::size_t c = 1; c + 1 < len; ++c) next[c] = std::max(up[c + 1] + next[c - 1], std::int64_t{0}) - up[c];
        rows.push_back(std::move(next));
    }
    return TropicalFrieze(std::move(rows));
}

std::optional<std::pair<std::size_t, std::size_t>> find_relation_violation(const TropicalFrieze& f) {
    for (std::size_t i = 0; i + 1 < f.depth(); ++i) {
        for (std::size_t j = i; j + 1 < i + f.row_length(); ++j) {
            const auto a = f.at(i, j), b = f.at(i, j + 1), c = f.at(i + 1, j), d = f.at(i + 1, j + 1);
            if (!a || !b || !c || !d) continue;
            if (*d != std::max(*b + *c, std::int64_t{0}) - *a) return std::pair{i, j};
        }
    }
    return std::nullopt;
}

FriezeRow frieze_row(const IncreasingTableau& t) {
    const auto word = height_word(t).heights();
    FriezeRow row;
    for (std::size_t i = 1; i + 1 < word.size(); ++i) row.push_back(word[i] - 1);
    return row;
}

IncreasingTableau tableau_from_frieze_row(const FriezeRow& row) {
    std::vector<int> heights{0};
    for (auto v : row) heights.push_back(static_cast<int>(v) + 1);
    heights.push_back(0);
    return from_height_word(HeightWord(std::move(heights)));
}

TropicalFrieze jdt_frieze(const IncreasingTableau& t) {
    std::vector<FriezeRow> rows;
    IncreasingTableau cur = t;
    for (int i = 0; i <= t.max_entry(); ++i) {
        rows.push_back(frieze_row(cur));
        cur = k_promote(cur);
    }
    return TropicalFrieze(std::move(rows));
}

bool has_glide_symmetry(const TropicalFrieze& f) {
    const std::size_t len = f.row_length();
    const std::size_t period = len + 1;
    if (f.depth() < period + 1) throw std::invalid_argument("frieze too shallow to witness a full period");
    for (std::size_t i = 0; i + period < f.depth(); ++i) {
        if (f.rows()[i] != f.rows()[i + period]) return false;
        // Column i + len, rows i+1 .. i+len, read downward.
        for (std::size_t c = 0; c < len; ++c)
            if (f.at(i + 1 + c, i + len) != f.rows()[i][c]) return false;
    }
    return true;
}

std::string RowConditions::str() const {
    std::string s;
    auto add = [&](bool on, const char* name) {
        if (on) s += (s.empty() ? "" : ",") + std::string(name);
    };
    add(endpoints_zero, "1");
    add(at_least_minus_one, "2");
    add(steps_at_most_one, "3");
    add(steps_exactly_one, "3'");
    add(no_double_minus_one, "4");
    return "{" + s + "}";
}

RowConditions classify_row(const FriezeRow& row) {
    RowConditions c;
    c.endpoints_zero = !row.empty() && row.front() == 0 && row.back() == 0;
    c.at_least_minus_one = std::all_of(row.begin(), row.end(), [](auto v) { return v >= -1; });
    c.steps_at_most_one = true;
    c.steps_exactly_one = true;
    c.no_double_minus_one = true;
    for (std::size_t i = 1; i < row.size(); ++i) {
        const auto step = row[i] - row[i - 1];
        if (step < -1 || step > 1) c.steps_at_most_one = false;
        if (step != -1 && step != 1) c.steps_exactly_one = false;
        if (row[i] == -1 && row[i - 1] == -1) c.no_double_minus_one = false;
    }
    return c;
}

PropagationReport check_propagation(const FriezeRow& row, std::optional<std::size_t> depth) {
    PropagationReport report;
    report.depth = depth.value_or(2 * (row.size() + 1) + 1);
    const auto seed = classify_row(row);
    report.seed_tableau_row = seed.tableau_row();
    report.seed_standard_row = seed.standard_row();
    report.all_tableau_rows = true;
    report.all_standard_rows = true;
    const auto frieze = tropical_frieze_from_row(row, report.depth);
    for (const auto& r : frieze.rows()) {
        const auto c = classify_row(r);
        report.all_tableau_rows = report.all_tableau_rows && c.tableau_row();
        report.all_standard_rows = report.all_standard_rows && c.standard_row();
        for (std::size_t i = 1; i < r.size(); ++i) report.max_step = std::max(report.max_step, std::abs(r[i] - r[i - 1]));
    }
    return report;
}

std::string render(const TropicalFrieze& f) {
    std::size_t width = 1;
    for (const auto& row : f.rows())
        for (auto v : row) width = std::max(width, std::to_string(v).size());
    std::ostringstream os;
    for (std::size_t i = 0; i < f.depth(); ++i) {
        std::string line(i * (width + 1), ' ');
        for (std::size_t c = 0; c < f.row_length(); ++c) {
            const auto s = std::to_string(f.rows()[i][c]);
            if (c) line += ' ';
            line += std::string(width - s.size(), ' ') + s;
        }
        os << line << '\n';
    }
    return os.str();
}

}  // namespace inctab
