#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "inctab/json_io.hpp"

namespace inctab {

/// Outcome of recomputing one worked example and diffing it against its
/// golden fixture.
struct GalleryResult {
    std::string id;
    std::string rendered;   // text layout of the recomputed artifact
    Json computed;          // same keys as the fixture
    std::vector<std::string> mismatches;  // "key: expected ..., got ..."

    bool ok() const noexcept { return mismatches.empty(); }
};

/// fig2, fig3, fig4, fig5, fig7, ex-4row, ex-3row, ex-frieze.
const std::vector<std::string>& gallery_ids();

/// Golden fixture for an id.
const Json& gallery_fixture(std::string_view id);

/// Throws InputError for unknown ids.
GalleryResult run_example(std::string_view id);

}  // namespace inctab
