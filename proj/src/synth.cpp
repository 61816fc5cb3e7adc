#include "hypercode/synth.hpp"

#include <map>
#include <random>
#include <set>

#include "hypercode/error.hpp"

namespace hypercode {

void SynthSpec::validate() const {
    std::set<std::string> names;
    for (const auto& p : patterns) {
        if (!names.insert(p.name).second) throw ConfigError("duplicate pattern name '" + p.name + "'");
        if (!p.members.respects(n)) throw DimensionError("pattern '" + p.name + "' exceeds n=" + std::to_string(n));
    }
    for (const auto& s : schedule) {
        for (const auto& name : s.patterns) {
            if (!names.contains(name)) {
                throw ConfigError("bin " + std::to_string(s.bin) + " schedules undefined pattern '" + name + "'");
            }
        }
    }
    if (!(noise_rate >= 0.0 && noise_rate <= 1.0)) throw ConfigError("noise_rate must lie in [0, 1]");
}

SpikeMatrix synth_generate(const SynthSpec& spec) {
    spec.validate();
    std::map<std::string, const Pattern*> by_name;
    for (const auto& p : spec.patterns) by_name[p.name] = &p.members;

    std::size_t width = 0;
    for (const auto& s : spec.schedule) width = std::max(width, s.bin + 1);

    SpikeMatrix m(spec.n, width);
    for (const auto& s : spec.schedule) {
        for (const auto& name : s.patterns) {
            for (Neuron v : by_name.at(name)->members()) m.set(v, s.bin, 1);
        }
    }

    if (spec.noise_rate > 0.0) {
        std::mt19937_64 rng(spec.seed);
        for (std::size_t bin = 0; bin < width; ++bin) {
            for (std::size_t v = 0; v < spec.n; ++v) {
                const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (u < spec.noise_rate) m.set(v, bin, m.at(v, bin) ? 0 : 1);
            }
        }
    }
    return m;
}

SynthSpec triad_spec() {
    SynthSpec spec;
    spec.n = 9;
    spec.patterns = {{"A", Pattern{0, 1, 2}}, {"B", Pattern{3, 4, 5}}, {"C", Pattern{6, 7, 8}}};
    spec.schedule = {{0, {"A"}}, {1, {"B"}}, {2, {"C"}}, {3, {"A", "B"}}, {4, {"B", "C"}}, {5, {"A", "C"}}};
    return spec;
}

}  // namespace hypercode
