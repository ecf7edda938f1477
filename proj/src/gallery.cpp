#include "inctab/gallery.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace inctab {

namespace {

// Transcribed from the published figures and worked examples. Keys hold the
// expected value of each computed quantity.
constexpr const char* kFixtures = R"json({
  "fig2": {
    "input": [[1,2,4],[3,4,5]],
    "promotion": [[1,3,4],[2,4,5]],
    "flow_path": [[1,1],[1,2],[1,3],[2,2],[2,3]]
  },
  "fig3": {
    "input": [[1,2,4,5,6],[2,3,6,7,8]],
    "k": 2,
    "flag": [[1,4,5],[2,6,8],[3],[7]],
    "path": "UHDUUHDD",
    "height_word": [0,1,1,0,1,2,2,1,0],
    "partition": [[1,2,3],[4,8],[5,6,7]]
  },
  "fig4": {
    "input": [[1,2,4,5,6],[2,3,6,7,8]],
    "growth": [
      [[],[1],[2,1],[2,2],[3,2],[4,2],[5,3],[5,4],[5,5]],
      [[],[1],[2,1],[3,1],[4,1],[5,2],[5,3],[5,4],[5,5]],
      [[],[1],[2],[3],[4,1],[4,2],[4,3],[5,4],[5,5]],
      [[],[1],[2],[3,1],[3,2],[3,3],[4,3],[5,4],[5,5]],
      [[],[1],[2,1],[2,2],[3,2],[4,2],[5,3],[5,4],[5,5]],
      [[],[1],[2,1],[3,1],[4,1],[5,2],[5,3],[5,4],[5,5]],
      [[],[1],[2],[3],[4,1],[4,2],[4,3],[5,4],[5,5]],
      [[],[1],[2],[3,1],[3,2],[3,3],[4,3],[5,4],[5,5]],
      [[],[1],[2,1],[2,2],[3,2],[4,2],[5,3],[5,4],[5,5]]
    ],
    "yd_5_8": [2,2]
  },
  "fig5": {
    "input": [[1,2,4,5,6],[2,3,6,7,8]],
    "height_growth": [
      [0,1,1,0,1,2,2,1,0],
      [0,1,1,2,3,3,2,1],
      [0,1,2,3,3,2,1],
      [0,1,2,2,1,0],
      [0,1,1,0,1],
      [0,1,1,2],
      [0,1,2],
      [0,1],
      [0]
    ]
  },
  "fig7": {
    "input": [[1,2,3,4,7],[4,5,6,7,8]],
    "flag": [[1,2,3],[4,6,7],[5],[8]],
    "d": [[1,2,7],[5,6,8]],
    "skew_flag": {"outer": [3,3,3,3], "inner": [2,2], "rows": [[3],[4],[1,2,7],[5,6,8]]},
    "rectification": [[1,2,3],[4,6,7],[5],[8]]
  },
  "ex-4row": {
    "input": [[1,2,4,7],[3,5,6,8],[5,7,8,10],[7,9,10,11]],
    "promotion_11": [[1,2,4,7],[3,4,6,8],[5,6,8,10],[7,9,10,11]],
    "promotion_rank": 33
  },
  "ex-3row": {
    "input": [[1,2,4],[3,4,6],[5,7,8]],
    "evacuation": [[1,2,4],[3,4,6],[5,7,8]],
    "rot": [[1,2,4],[3,5,6],[5,7,8]],
    "promotion_rank": 2
  },
  "ex-frieze": {
    "input": [[1,2,3,5],[4,5,6,7]],
    "frieze": [
      [0,1,2,1,1,0],
      [0,1,0,0,-1,0],
      [0,-1,0,0,1,0],
      [0,1,1,2,1,0],
      [0,0,1,0,-1,0],
      [0,1,0,0,1,0],
      [0,-1,0,1,0,0],
      [0,1,2,1,1,0]
    ]
  }
})json";

const Json& fixtures() {
    static const Json parsed = Json::parse(kFixtures);
    return parsed;
}

Json shapes_json(const ShapeChain& chain) {
    Json row = Json::array();
    for (const auto& shape : chain.diagrams()) row.push_back(shape.parts());
    return row;
}

using Builder = std::function<void(const IncreasingTableau&, Json&, std::ostringstream&)>;

const std::map<std::string, Builder, std::less<>>& builders() {
    static const std::map<std::string, Builder, std::less<>> table{
        {"fig2",
         [](const IncreasingTableau& t, Json& out, std::ostringstream& os) {
             const auto p = k_promote(t);
             out["promotion"] = p.rows();
             out["flow_path"] = Json::array();
             for (const auto& box : flow_path(t)) out["flow_path"].push_back({box.row, box.col});
             os << render(t) << "  |->\n" << render(p);
         }},
        {"fig3",
         [](const IncreasingTableau& t, Json& out, std::ostringstream& os) {
             const auto flag = to_flag(t);
             const auto path = to_steps(t);
             const auto word = height_word(t);
             const auto nc = to_ncpartition(t);
             out["k"] = t.repeats();
             out["flag"] = flag.tableau().rows();
             out["path"] = path.str();
             out["height_word"] = word.heights();
             out["partition"] = nc.blocks();
             os << render(t) << "flag:\n" << render(flag.tableau()) << "path: " << path.str() << "\nheight word: " << word.str()
                << "\npartition: " << nc.str() << '\n';
         }},
        {"fig4",
         [](const IncreasingTableau& t, Json& out, std::ostringstream& os) {
             const auto g = growth_diagram(t);
             out["growth"] = Json::array();
             for (const auto& chain : g.rows()) out["growth"].push_back(shapes_json(chain));
             out["yd_5_8"] = g.at(5, 8).parts();
             os << render(g);
         }},
        {"fig5",
         [](const IncreasingTableau& t, Json& out, std::ostringstream& os) {
             const auto h = height_growth_diagram(t);
             out["height_growth"] = h.rows();
             os << render(h);
         }},
        {"fig7",
         [](const IncreasingTableau& t, Json& out, std::ostringstream& os) {
             const auto flag = to_flag(t);
             const auto d = d_tableau(t);
             const auto skew = skew_flag(t);
             const auto rect = rectify_skew_flag(t);
             out["flag"] = flag.tableau().rows();
             out["d"] = d;
             out["skew_flag"] = {{"outer", skew.outer.parts()}, {"inner", skew.inner.parts()}, {"rows", skew.rows}};
             out["rectification"] = rect.tableau().rows();
             os << "F(T):\n" << render(flag.tableau()) << "d(T):\n" << render(SkewTableau{PartitionShape{}, PartitionShape{}, d}) << "skew flag:\n" << render(skew);
         }},
        {"ex-4row",
         [](const IncreasingTableau& t, Json& out, std::ostringstream& os) {
             const auto p = k_promote_pow(t, 11);
             out["promotion_11"] = p.rows();
             out["promotion_rank"] = promotion_rank(t);
             os << render(t) << "P^11:\n" << render(p) << "pr = " << out["promotion_rank"] << '\n';
         }},
        {"ex-3row",
         [](const IncreasingTableau& t, Json& out, std::ostringstream& os) {
             const auto e = k_evacuate(t);
             const auto r = rot(t);
             out["evacuation"] = e.rows();
             out["rot"] = r.rows();
             out["promotion_rank"] = promotion_rank(t);
             os << "E(T):\n" << render(e) << "rot(T):\n" << render(r) << "pr = " << out["promotion_rank"] << '\n';
         }},
        {"ex-frieze",
         [](const IncreasingTableau& t, Json& out, std::ostringstream& os) {
             const auto f = jdt_frieze(t);
             out["frieze"] = f.rows();
             os << render(f);
         }},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& gallery_ids() {
    static const std::vector<std::string> ids{"fig2", "fig3", "fig4", "fig5", "fig7", "ex-4row", "ex-3row", "ex-frieze"};
    return ids;
}

const Json& gallery_fixture(std::string_view id) {
    const auto& all = fixtures();
    const auto it = all.find(std::string(id));
    if (it == all.end()) throw InputError("unknown example id '" + std::string(id) + "'");
    return *it;
}

GalleryResult run_example(std::string_view id) {
    const Json& golden = gallery_fixture(id);
    const auto it = builders().find(id);
    GalleryResult result{std::string(id), {}, Json::object(), {}};
    const auto t = tableau_from_json(golden["input"]);
    std::ostringstream os;
    it->second(t, result.computed, os);
    result.rendered = os.str();
    for (const auto& [key, expected] : golden.items()) {
        if (key == "input") continue;
        if (!result.computed.contains(key)) {
            result.mismatches.push_back(key + ": not computed");
        } else if (result.computed[key] != expected) {
            result.mismatches.push_back(key + ": expected " + expected.dump() + ", got " + result.computed[key].dump());
        }
    }
    return result;
}

}  // namespace inctab
