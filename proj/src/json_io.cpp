#include "inctab/json_io.hpp"

#include <cctype>
#include <charconv>

namespace inctab {

namespace {

Json tagged(std::string_view schema) { return Json{{"schema", std::string(schema)}}; }

void check_schema(const Json& j, std::string_view expected) {
    if (j.is_object() && j.contains("schema") && j["schema"] != std::string(expected))
        throw InputError("expected schema " + std::string(expected) + ", got " + j["schema"].dump());
}

Grid grid_from_json(const Json& rows) {
    if (!rows.is_array()) throw InputError("\"rows\" must be an array of integer arrays");
    Grid grid;
    for (const auto& row : rows) {
        if (!row.is_array()) throw InputError("\"rows\" must be an array of integer arrays");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw InputError("tableau entries must be integers, got " + v.dump());
            r.push_back(v.get<int>());
        }
        grid.push_back(std::move(r));
    }
    return grid;
}

int parse_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw InputError("not an integer: '" + std::string(s) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

}  // namespace

Json to_json(const IncreasingTableau& t) {
    Json j = tagged(kTableauSchema);
    j["rows"] = t.rows();
    return j;
}

IncreasingTableau tableau_from_json(const Json& j) {
    check_schema(j, kTableauSchema);
    if (j.is_array()) return IncreasingTableau::from_rows(grid_from_json(j));
    if (!j.is_object() || !j.contains("rows")) throw InputError("tableau JSON needs a \"rows\" field");
    return IncreasingTableau::from_rows(grid_from_json(j["rows"]));
}

IncreasingTableau parse_tableau(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw InputError("empty tableau input");
    if (text.front() == '{' || text.front() == '[') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw InputError(std::string("malformed JSON: ") + e.what());
        }
        return tableau_from_json(j);
    }
    Grid grid;
    for (auto row_text : split(text, ';')) {
        row_text = trim(row_text);
        std::vector<int> row;
        const bool separated = row_text.find_first_of(", ") != std::string_view::npos;
        if (separated) {
            std::string normalized(row_text);
            for (auto& c : normalized)
                if (c == ',') c = ' ';
            std::string_view rest = normalized;
            while (!(rest = trim(rest)).empty()) {
                const auto end = rest.find(' ');
                row.push_back(parse_int(rest.substr(0, end)));
                rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
            }
        } else {
            for (char c : row_text) {
                if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("unexpected character in tableau");
                row.push_back(c - '0');
            }
        }
        grid.push_back(std::move(row));
    }
    return IncreasingTableau::from_rows(grid);
}

Json to_json(const NCPartition& p) {
    Json j = tagged(kPartitionSchema);
    j["n"] = p.ground_size();
    j["blocks"] = p.blocks();
    return j;
}

NCPartition ncpartition_from_json(const Json& j) {
    check_schema(j, kPartitionSchema);
    if (!j.is_object() || !j.contains("n") || !j.contains("blocks"))
        throw InputError("partition JSON needs \"n\" and \"blocks\"");
    if (!j["n"].is_number_integer()) throw InputError("\"n\" must be an integer");
    return NCPartition(j["n"].get<int>(), grid_from_json(j["blocks"]));
}

Json to_json(const CSPReport& r) {
    Json j = tagged(kCspSchema);
    j["n"] = r.n;
    j["k"] = r.k;
    j["group"] = r.group;
    j["group_order"] = r.group_order;
    j["ok"] = r.ok;
    j["entries"] = Json::array();
    for (const auto& e : r.entries) {
        Json row{{"m", e.m}, {"fixed", e.fixed}, {"ok", e.ok}};
        row["f_value"] = e.root_value ? Json(e.root_value->str()) : Json(nullptr);
        if (e.closed_form) row["closed_form"] = e.closed_form->str();
        j["entries"].push_back(std::move(row));
    }
    return j;
}

Json to_json(const TropicalFrieze& f) {
    Json j = tagged(kFriezeSchema);
    j["rows"] = f.rows();
    return j;
}

Json to_json(const OrbitReport& r) {
    Json j = tagged(kOrbitSchema);
    j["orbits"] = Json::array();
    for (std::size_t i = 0; i < r.representatives.size(); ++i)
        j["orbits"].push_back({{"representative", r.representatives[i].rows()}, {"size", r.sizes[i]}});
    return j;
}

Json to_json(const GrowthDiagram& g) {
    Json j = tagged(kGrowthSchema);
    j["rows"] = Json::array();
    for (const auto& chain : g.rows()) {
        Json row = Json::array();
        for (const auto& shape : chain.diagrams()) row.push_back(shape.parts());
        j["rows"].push_back(std::move(row));
    }
    return j;
}

}  // namespace inctab
