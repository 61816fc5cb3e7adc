#pragma once

#include <string>

#include "hypercode/codes.hpp"
#include "hypercode/hyperstructure.hpp"

namespace fixtures {

// 9 neurons: A = {0,1,2}, B = {3,4,5}, C = {6,7,8}; bins A, B, C, A+B, B+C, A+C.
inline const std::string kTriadMatrix =
    "1,0,0,1,0,1\n"
    "1,0,0,1,0,1\n"
    "1,0,0,1,0,1\n"
    "0,1,0,1,1,0\n"
    "0,1,0,1,1,0\n"
    "0,1,0,1,1,0\n"
    "0,0,1,0,1,1\n"
    "0,0,1,0,1,1\n"
    "0,0,1,0,1,1\n";

inline const hypercode::Pattern kA{0, 1, 2};
inline const hypercode::Pattern kB{3, 4, 5};
inline const hypercode::Pattern kC{6, 7, 8};

inline hypercode::OccurrenceLog triad_log() { return hypercode::parse_spike_matrix(kTriadMatrix); }

/// TRIAD without its last bin (A+C).
inline hypercode::OccurrenceLog triad_without_t6() {
    auto bins = triad_log().bins();
    bins.pop_back();
    return hypercode::OccurrenceLog(9, bins);
}

/// TRIAD followed by a seventh bin A+B+C.
inline hypercode::OccurrenceLog triad_with_t7() {
    auto bins = triad_log().bins();
    bins.push_back(hypercode::Bin{6, kA.united(kB).united(kC)});
    return hypercode::OccurrenceLog(9, bins);
}

inline hypercode::Hyperstructure triad(const hypercode::BuildConfig& cfg = {}) {
    return hypercode::build_hyperstructure(triad_log(), cfg);
}

/// Level-1 patterns {0,1}x3, {1,2}x2, {2,3}x1, {3,0}x1: a 4-cycle whose edges
/// enter the frequency filtration at 0, 1, 2, 2.
inline hypercode::OccurrenceLog four_cycle_log() {
    using hypercode::Bin;
    using hypercode::Pattern;
    return hypercode::OccurrenceLog(4, {Bin{0, Pattern{0, 1}}, Bin{1, Pattern{0, 1}}, Bin{2, Pattern{0, 1}},
                                        Bin{3, Pattern{1, 2}}, Bin{4, Pattern{1, 2}}, Bin{5, Pattern{2, 3}},
                                        Bin{6, Pattern{0, 3}}});
}

}  // namespace fixtures
