#include "hypercode/compare.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "hypercode/error.hpp"
#include "hypercode/homology.hpp"
#include "hypercode/topology.hpp"

namespace hypercode {

std::string to_string(MapStatus s) {
    switch (s) {
        case MapStatus::Bijective: return "bijective";
        case MapStatus::InjectiveAToB: return "injective-only(A->B)";
        case MapStatus::InjectiveBToA: return "injective-only(B->A)";
        case MapStatus::Neither: return "neither";
    }
    return "neither";
}

namespace {

std::set<std::string> forms_at(const Hyperstructure& h, int level) {
    std::set<std::string> out;
    if (level > h.depth()) return out;
    for (const auto& b : h.level(level)) out.insert(canonical_form(h, level, b.id));
    return out;
}

std::vector<std::size_t> level_betti(const Hyperstructure& h, int level, int dim_cap) {
    if (level > h.depth()) return {};
    return betti_numbers(level_complex(h, level), dim_cap);
}

std::string join(const std::vector<std::size_t>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + ")";
}

}  // namespace

ComparisonReport compare_levels(const Hyperstructure& a, const Hyperstructure& b, const CompareOptions& opts) {
    if (a.n() != b.n()) {
        throw UniverseError("cannot compare hyperstructures over " + std::to_string(a.n()) + " and " +
                            std::to_string(b.n()) + " neurons");
    }
    ComparisonReport report;
    const int k = std::max(a.depth(), b.depth());
    for (int level = 1; level <= k; ++level) {
        auto fa = forms_at(a, level);
        auto fb = forms_at(b, level);
        std::vector<std::string> common;
        std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(common));

        LevelComparison row;
        row.level = level;
        row.size_a = fa.size();
        row.size_b = fb.size();
        row.shared = common.size();
        const auto unioned = row.size_a + row.size_b - row.shared;
        row.jaccard = unioned == 0 ? 1.0 : static_cast<double>(row.shared) / static_cast<double>(unioned);
        if (row.shared == row.size_a && row.shared == row.size_b) row.map_status = MapStatus::Bijective;
        else if (row.shared == row.size_a) row.map_status = MapStatus::InjectiveAToB;
        else if (row.shared == row.size_b) row.map_status = MapStatus::InjectiveBToA;
        else row.map_status = MapStatus::Neither;
        row.betti_a = level_betti(a, level, opts.dim_cap);
        row.betti_b = level_betti(b, level, opts.dim_cap);
        report.levels.push_back(std::move(row));
    }
    if (opts.with_nerve) {
        report.nerve_betti_a = betti_numbers(nerve(a), opts.dim_cap);
        report.nerve_betti_b = betti_numbers(nerve(b), opts.dim_cap);
    }
    return report;
}

std::string render_table(const ComparisonReport& report) {
    std::vector<std::vector<std::string>> cells{
        {"level", "size_a", "size_b", "shared", "jaccard", "map_status", "betti_a", "betti_b"}};
    for (const auto& row : report.levels) {
        char jac[32];
        std::snprintf(jac, sizeof jac, "%.4f", row.jaccard);
        cells.push_back({std::to_string(row.level), std::to_string(row.size_a), std::to_string(row.size_b),
                         std::to_string(row.shared), jac, to_string(row.map_status), join(row.betti_a),
                         join(row.betti_b)});
    }
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& r : cells)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());

    std::string out;
    for (const auto& r : cells) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c) out += "  ";
            out += r[c];
            if (c + 1 < r.size()) out.append(width[c] - r[c].size(), ' ');
        }
        out += '\n';
    }
    if (report.nerve_betti_a) {
        out += "nerve betti  A " + join(*report.nerve_betti_a) + "  B " + join(*report.nerve_betti_b) + "\n";
    }
    return out;
}

}  // namespace hypercode
