#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypercode/codes.hpp"

namespace hypercode {

struct NamedPattern {
    std::string name;
    Pattern members;
};

struct ScheduledBin {
    std::size_t bin = 0;
    std::vector<std::string> patterns;
};

/// Planted cofiring scenario for fixtures and property tests.
struct SynthSpec {
    std::size_t n = 0;
    std::vector<NamedPattern> patterns;
    std::vector<ScheduledBin> schedule;
    double noise_rate = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// n x (max scheduled bin + 1) matrix. Each column is the union of its
/// scheduled patterns; then, visiting bins in order and neurons in order
/// within a bin, every cell is flipped when a draw from std::mt19937_64
/// (seeded with `seed`) mapped to [0, 1) via its top 53 bits is below
/// noise_rate. No draws are made when noise_rate is 0.
SpikeMatrix synth_generate(const SynthSpec& spec);

/// The fixture of the A/B/C triad: 9 neurons in three groups, bins A, B, C,
/// A+B, B+C, A+C.
SynthSpec triad_spec();

}  // namespace hypercode
