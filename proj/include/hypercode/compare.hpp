#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypercode/complex.hpp"
#include "hypercode/hyperstructure.hpp"

namespace hypercode {

enum class MapStatus { Bijective, InjectiveAToB, InjectiveBToA, Neither };

std::string to_string(MapStatus s);

struct LevelComparison {
    int level = 0;
    std::size_t size_a = 0;
    std::size_t size_b = 0;
    std::size_t shared = 0;
    double jaccard = 0.0;
    MapStatus map_status = MapStatus::Neither;
    std::vector<std::size_t> betti_a;
    std::vector<std::size_t> betti_b;
};

struct ComparisonReport {
    std::vector<LevelComparison> levels;
    std::optional<std::vector<std::size_t>> nerve_betti_a;
    std::optional<std::vector<std::size_t>> nerve_betti_b;
};

struct CompareOptions {
    bool with_nerve = false;
    int dim_cap = kDefaultDimCap;
};

/// Levelwise matching of bonds by canonical form. Throws UniverseError when
/// the two structures have different neuron counts.
ComparisonReport compare_levels(const Hyperstructure& a, const Hyperstructure& b, const CompareOptions& opts = {});

/// Aligned plain-text rendering of the report.
std::string render_table(const ComparisonReport& report);

}  // namespace hypercode
