#pragma once

// Named run configurations reproducing the standard renderings of each
// generator family: fig1/fig2 at c = 4 (cosh-sinh / sinh-cosh), fig3a/fig3b
// at c = 1/1000, and the two exp-family surfaces fig4a/fig4b.

#include <string_view>
#include <vector>

#include "flatsurf/run.hpp"

namespace flatsurf {

struct Preset {
    std::string name;
    std::string summary;
    RunConfig config;
};

const std::vector<Preset>& all_presets();

// nullptr when no preset has that name.
const Preset* find_preset(std::string_view name);

}  // namespace flatsurf
