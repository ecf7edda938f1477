#include "inctab/paths.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "inctab/dynamics.hpp"

namespace inctab {

namespace {

void require_two_row_rectangle(const IncreasingTableau& t) {
    if (t.num_rows() != 2 || !t.is_rectangular())
        throw std::invalid_argument("expected a two-row rectangular tableau");
}

}  // namespace

SchroederPath::SchroederPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    int height = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        switch (steps_[i]) {
            case Step::Up: ++height; break;
            case Step::Down: --height; break;
            case Step::Horizontal:
                if (height == 0)
                    throw std::invalid_argument("horizontal step on the axis at step " + std::to_string(i + 1));
                break;
        }
        if (height < 0) throw std::invalid_argument("path falls below the axis at step " + std::to_string(i + 1));
    }
    if (height != 0) throw std::invalid_argument("path does not end on the axis");
    if (steps_.empty()) throw std::invalid_argument("empty path");
}

SchroederPath SchroederPath::parse(std::string_view letters) {
    std::vector<Step> steps;
    for (char ch : letters) {
        switch (std::toupper(static_cast<unsigned char>(ch))) {
            case 'U': steps.push_back(Step::Up); break;
            case 'D': steps.push_back(Step::Down); break;
            case 'H': steps.push_back(Step::Horizontal); break;
            default:
                if (!std::isspace(static_cast<unsigned char>(ch)))
                    throw std::invalid_argument(std::string("unknown step letter '") + ch + "'");
        }
    }
    return SchroederPath(std::move(steps));
}

int SchroederPath::horizontal_steps() const noexcept {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::Horizontal));
}

int SchroederPath::columns() const noexcept {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::Up)) + horizontal_steps();
}

std::string SchroederPath::str() const {
    std::string s;
    for (Step step : steps_) s += static_cast<char>(step);
    return s;
}

HeightWord::HeightWord(std::vector<int> heights) : heights_(std::move(heights)) {
    if (heights_.size() < 2) throw std::invalid_argument("height word needs at least two letters");
    if (heights_.front() != 0 || heights_.back() != 0)
        throw std::invalid_argument("height word must start and end with 0");
    for (std::size_t i = 0; i < heights_.size(); ++i) {
        if (heights_[i] < 0) throw std::invalid_argument("negative height at letter " + std::to_string(i + 1));
        if (i == 0) continue;
        const int diff = heights_[i] - heights_[i - 1];
        if (diff < -1 || diff > 1) throw std::invalid_argument("height jumps at letter " + std::to_string(i + 1));
        if (diff == 0 && heights_[i] == 0)
            throw std::invalid_argument("level step at height 0 at letter " + std::to_string(i + 1));
    }
}

HeightWord HeightWord::parse(std::string_view text) {
    std::vector<int> heights;
    if (text.find(',') != std::string_view::npos) {
        std::string token;
        std::istringstream is{std::string(text)};
        while (std::getline(is, token, ',')) heights.push_back(std::stoi(token));
    } else {
        for (char ch : text) {
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument(std::string("unexpected character '") + ch + "' in height word");
            heights.push_back(ch - '0');
        }
    }
    return HeightWord(std::move(heights));
}

std::string HeightWord::str() const {
    std::string s;
    for (std::size_t i = 0; i < heights_.size(); ++i) s += (i ? "," : "") + std::to_string(heights_[i]);
    return s;
}

std::vector<int> WordFactorization::assemble() const {
    std::vector<int> word{0};
    word.insert(word.end(), w1.begin(), w1.end());
    if (flavor == Flavor::B) {
        word.push_back(1);
        word.insert(word.end(), w2.begin(), w2.end());
    }
    word.push_back(0);
    word.insert(word.end(), w3.begin(), w3.end());
    return word;
}

SchroederPath to_steps(const IncreasingTableau& t) {
    require_two_row_rectangle(t);
    const auto& top = t.rows()[0];
    const auto& bottom = t.rows()[1];
    std::vector<Step> steps;
    for (int j = 1; j <= t.max_entry(); ++j) {
        const bool in_top = std::binary_search(top.begin(), top.end(), j);
        const bool in_bottom = std::binary_search(bottom.begin(), bottom.end(), j);
        steps.push_back(in_top && in_bottom ? Step::Horizontal : in_top ? Step::Up : Step::Down);
    }
    return SchroederPath(std::move(steps));
}

IncreasingTableau from_steps(const SchroederPath& path) {
    Grid rows(2);
    int j = 0;
    for (Step step : path.steps()) {
        ++j;
        if (step != Step::Down) rows[0].push_back(j);
        if (step != Step::Up) rows[1].push_back(j);
    }
    return IncreasingTableau::from_rows(std::move(rows));
}

HeightWord height_word(const SchroederPath& path) {
    std::vector<int> heights{0};
    for (Step step : path.steps())
        heights.push_back(heights.back() + (step == Step::Up ? 1 : step == Step::Down ? -1 : 0));
    return HeightWord(std::move(heights));
}

HeightWord height_word(const IncreasingTableau& t) { return height_word(to_steps(t)); }

HeightWord height_word_from_truncations(const IncreasingTableau& t) {
    require_two_row_rectangle(t);
    std::vector<int> heights;
    for (int i = 1; i <= t.max_entry() + 1; ++i) {
        const auto shape = truncate(t, i - 1);
        heights.push_back(shape.row_length(1) - shape.row_length(2));
    }
    return HeightWord(std::move(heights));
}

SchroederPath steps_of(const HeightWord& word) {
    std::vector<Step> steps;
    for (std::size_t i = 1; i < word.size(); ++i) {
        const int diff = word[i] - word[i - 1];
        steps.push_back(diff > 0 ? Step::Up : diff < 0 ? Step::Down : Step::Horizontal);
    }
    return SchroederPath(std::move(steps));
}

IncreasingTableau from_height_word(const HeightWord& word) { return from_steps(steps_of(word)); }

WordFactorization word_factorize(const HeightWord& word) {
    const auto& s = word.heights();
    // w1 ends at the first 1 followed by 0 or 1; a 1 followed by 2 is interior.
    std::size_t end1 = 1;
    while (!(s[end1] == 1 && s[end1 + 1] <= 1)) ++end1;
    WordFactorization f;
    f.w1.assign(s.begin() + 1, s.begin() + static_cast<long>(end1) + 1);
    if (s[end1 + 1] == 0) {
        f.flavor = WordFactorization::Flavor::A;
        f.w3.assign(s.begin() + static_cast<long>(end1) + 2, s.end());
        return f;
    }
    f.flavor = WordFactorization::Flavor::B;
    std::size_t zero = end1 + 2;
    while (s[zero] != 0) ++zero;
    f.w2.assign(s.begin() + static_cast<long>(end1) + 2, s.begin() + static_cast<long>(zero));
    f.w3.assign(s.begin() + static_cast<long>(zero) + 1, s.end());
    return f;
}

HeightWord word_promote(const HeightWord& word) {
    const auto f = word_factorize(word);
    std::vector<int> out;
    out.reserve(word.size());
    for (int x : f.w1) out.push_back(x - 1);
    out.push_back(1);
    if (f.flavor == WordFactorization::Flavor::B) {
        out.insert(out.end(), f.w2.begin(), f.w2.end());
        out.push_back(1);
    }
    for (int x : f.w3) out.push_back(x + 1);
    out.push_back(0);
    return HeightWord(std::move(out));
}

HeightGrowthDiagram::HeightGrowthDiagram(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    const std::size_t n = rows_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (rows_[i].size() != n - i) throw std::invalid_argument("height growth diagram must be triangular");
}

int HeightGrowthDiagram::at(int i, int j) const {
    const int last = max_entry() + 1;
    if (i < 1 || j < i || j > last) throw std::out_of_range("height growth diagram index out of range");
    return rows_[i - 1][j - i];
}

std::vector<int> HeightGrowthDiagram::last_column() const {
    std::vector<int> col;
    for (const auto& row : rows_) col.push_back(row.back());
    return col;
}

HeightGrowthDiagram height_growth_diagram(const IncreasingTableau& t) {
    require_two_row_rectangle(t);
    const int m = t.max_entry();
    std::vector<std::vector<int>> rows;
    IncreasingTableau cur = t;
    for (int i = 1; i <= m + 1; ++i) {
        const auto word = height_word(cur).heights();
        rows.emplace_back(word.begin(), word.begin() + (m + 2 - i));
        cur = k_promote(cur);
    }
    return HeightGrowthDiagram(std::move(rows));
}

std::string render(const HeightGrowthDiagram& d) {
    std::size_t width = 1;
    for (const auto& row : d.rows())
        for (int v : row) width = std::max(width, std::to_string(v).size());
    std::ostringstream os;
    for (std::size_t i = 0; i < d.rows().size(); ++i) {
        std::string line(i * (width + 1), ' ');
        for (std::size_t c = 0; c < d.rows()[i].size(); ++c) {
            const auto s = std::to_string(d.rows()[i][c]);
            if (c) line += ' ';
            line += std::string(width - s.size(), ' ') + s;
        }
        os << line << '\n';
    }
    return os.str();
}

}  // namespace inctab
