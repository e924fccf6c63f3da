#include "flatsurf/presets.hpp"

namespace flatsurf {

namespace {

RunConfig base_config() {
    RunConfig c;
    // from_r1 so a preset written out as a config file parses back to the
    // bit-identical parameters.
    c.params = TorusParams::from_r1(0.6);
    c.grid = GridSpec{-2.0, 2.0, -2.5, 2.5, 400, 400};
    return c;
}

// The c = 1/1000 families vary on a length scale ~ 1/sqrt(c), hence the
// wide grid.
RunConfig slow_config() {
    RunConfig c = base_config();
    c.cfg.c = 1.0 / 1000.0;
    c.grid = GridSpec{-60.0, 60.0, -60.0, 60.0, 400, 400};
    return c;
}

std::vector<Preset> make_presets() {
    std::vector<Preset> out;

    {
        RunConfig c = base_config();
        c.cfg.c = 4.0;
        c.cfg.family = Family::cosh_sinh;
        out.push_back({"fig1", "cosh-sinh family, r1 = 3/5, c = 4", c});
    }
    {
        RunConfig c = base_config();
        c.cfg.c = 4.0;
        c.cfg.family = Family::sinh_cosh;
        out.push_back({"fig2", "sinh-cosh family, r1 = 3/5, c = 4", c});
    }
    {
        RunConfig c = slow_config();
        c.cfg.family = Family::cosh_sinh;
        out.push_back({"fig3a", "cosh-sinh family, r1 = 3/5, c = 1/1000", c});
    }
    {
        RunConfig c = slow_config();
        c.cfg.family = Family::sinh_cosh;
        out.push_back({"fig3b", "sinh-cosh family, r1 = 3/5, c = 1/1000", c});
    }
    {
        RunConfig c = slow_config();
        c.cfg.family = Family::exp;
        c.cfg.a1 = 1.0;
        c.cfg.b1 = 1.0;
        c.cfg.eps1 = 1;
        c.cfg.eps2 = 1;
        out.push_back({"fig4a", "exp family, r1 = 3/5, c = 1/1000, eps = (+1, +1)", c});
    }
    {
        RunConfig c = slow_config();
        c.cfg.family = Family::exp;
        c.cfg.a1 = 1.0;
        c.cfg.b1 = 1.0;
        c.cfg.eps1 = 1;
        c.cfg.eps2 = -1;
        out.push_back({"fig4b", "exp family, r1 = 3/5, c = 1/1000, eps = (+1, -1)", c});
    }
    return out;
}

}  // namespace

const std::vector<Preset>& all_presets() {
    static const std::vector<Preset> presets = make_presets();
    return presets;
}

const Preset* find_preset(std::string_view name) {
    for (const Preset& p : all_presets()) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

}  // namespace flatsurf
