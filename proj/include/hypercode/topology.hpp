#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hypercode/complex.hpp"
#include "hypercode/hyperstructure.hpp"

namespace hypercode {

/// delta_i as data: each level-(i+1) bond mapped to its level-i constituents.
struct Correspondence {
    int from_level = 0;
    int to_level = 0;
    std::vector<std::vector<std::uint32_t>> map;  // indexed by from_level bond id
};

struct GluingEdge {
    BondId a = 0;
    BondId b = 0;  // a < b
    std::vector<std::uint32_t> overlap;
};

/// Level-i bonds joined when their level-j downsets intersect.
struct GluingGraph {
    int level = 0;
    int target = 0;
    std::size_t vertices = 0;
    std::vector<GluingEdge> edges;  // sorted by (a, b)

    bool adjacent(BondId a, BondId b) const;
    const GluingEdge* edge(BondId a, BondId b) const;
    std::vector<std::vector<BondId>> adjacency() const;
};

enum class NerveRule {
    /// Cliques of the gluing graph (flag complex).
    Pairwise,
    /// Vertex sets inducing a connected gluing subgraph, closed downward.
    Connected,
};

std::string to_string(NerveRule r);
NerveRule nerve_rule_from_string(const std::string& s);

struct NerveConfig {
    NerveRule rule = NerveRule::Pairwise;
    /// Levels contributing vertices and strata; empty means all.
    std::set<int> include_levels;
    /// Per level i, the gluing depths j < i to use; a missing entry means all.
    std::map<int, std::set<int>> include_j;
    std::int64_t clique_budget = 1'000'000;

    void validate() const;
};

struct Composite {
    std::vector<std::uint32_t> support;  // union of the level-j downsets
    std::vector<std::vector<std::uint32_t>> overlaps;  // one per adjacent pair
};

/// Label of a bond vertex, "<level>:<id>".
std::string bond_label(int level, BondId id);

/// Delta(C_i). Level 1 uses neurons as vertices; level i >= 2 uses the
/// level-(i-1) bonds, with uncovered ones as isolated vertices.
SimplicialComplex level_complex(const Hyperstructure& h, int i);

/// Requires 1 <= i and i + 1 <= k.
Correspondence delta_correspondence(const Hyperstructure& h, int i);

GluingGraph gluing_graph(const Hyperstructure& h, int i, int j);

/// Composite b_1 [] b_2 [] ... along level j. Each adjacent pair must glue.
Composite compose_bonds(const Hyperstructure& h, int i, const std::vector<BondId>& ids, int j);

/// Maximal cliques of an undirected graph (Bron-Kerbosch with pivoting).
/// Every vertex appears in at least one clique. Throws BudgetError after
/// `budget` cliques.
std::vector<std::vector<std::uint32_t>> maximal_cliques(const std::vector<std::vector<std::uint32_t>>& adjacency,
                                                        std::int64_t budget);

/// Nerve NH(C). Vertices are all bonds of the included levels ordered by
/// (level, id); each (i, j) stratum adds the simplices spanned by composable
/// bond sets. Every bond is at least an isolated vertex.
SimplicialComplex nerve(const Hyperstructure& h, const NerveConfig& cfg = {});

std::string to_dot(const GluingGraph& g);

}  // namespace hypercode
