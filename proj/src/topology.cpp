#include "hypercode/topology.hpp"

#include <algorithm>
#include <numeric>

#include "hypercode/error.hpp"

namespace hypercode {

namespace {

std::vector<std::uint32_t> intersect(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string join(const std::vector<std::uint32_t>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

bool GluingGraph::adjacent(BondId a, BondId b) const { return edge(a, b) != nullptr; }

const GluingEdge* GluingGraph::edge(BondId a, BondId b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{a, b},
                               [](const GluingEdge& e, const std::pair<BondId, BondId>& key) {
                                   return std::pair{e.a, e.b} < key;
                               });
    if (it == edges.end() || it->a != a || it->b != b) return nullptr;
    return &*it;
}

std::vector<std::vector<BondId>> GluingGraph::adjacency() const {
    std::vector<std::vector<BondId>> adj(vertices);
    for (const auto& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

std::string to_string(NerveRule r) { return r == NerveRule::Pairwise ? "pairwise" : "connected"; }

NerveRule nerve_rule_from_string(const std::string& s) {
    if (s == "pairwise") return NerveRule::Pairwise;
    if (s == "connected") return NerveRule::Connected;
    throw ConfigError("unknown nerve rule '" + s + "' (expected pairwise or connected)");
}

void NerveConfig::validate() const {
    if (clique_budget < 1) throw ConfigError("clique_budget must be >= 1");
    for (int l : include_levels) {
        if (l < 1) throw ConfigError("included level " + std::to_string(l) + " must be >= 1");
    }
    for (const auto& [i, js] : include_j) {
        if (i < 1) throw ConfigError("include_j level " + std::to_string(i) + " must be >= 1");
        for (int j : js) {
            if (j < 0 || j >= i) {
                throw ConfigError("gluing depth " + std::to_string(j) + " invalid for level " + std::to_string(i));
            }
        }
    }
}

std::string bond_label(int level, BondId id) { return std::to_string(level) + ":" + std::to_string(id); }

SimplicialComplex level_complex(const Hyperstructure& h, int i) {
    if (i < 1 || i > h.depth()) {
        throw RangeError("level " + std::to_string(i) + " outside 1.." + std::to_string(h.depth()));
    }
    if (i == 1) {
        std::vector<Pattern> supports;
        for (const auto& b : h.level(1)) supports.emplace_back(b.constituents);
        return generated_complex(supports, h.n());
    }
    const auto& below = h.level(i - 1);
    std::vector<std::string> labels;
    labels.reserve(below.size());
    for (const auto& b : below) labels.push_back(bond_label(i - 1, b.id));

    std::vector<bool> covered(below.size(), false);
    std::vector<Simplex> generators;
    for (const auto& b : h.level(i)) {
        generators.push_back(b.constituents);
        for (auto c : b.constituents) covered[c] = true;
    }
    for (std::size_t v = 0; v < below.size(); ++v) {
        if (!covered[v]) generators.push_back({static_cast<Vertex>(v)});
    }
    return SimplicialComplex(std::move(labels), std::move(generators));
}

Correspondence delta_correspondence(const Hyperstructure& h, int i) {
    if (i < 1 || i + 1 > h.depth()) {
        throw RangeError("correspondence delta_" + std::to_string(i) + " needs levels " + std::to_string(i) + " and " +
                         std::to_string(i + 1) + ", hyperstructure has " + std::to_string(h.depth()));
    }
    Correspondence c{i + 1, i, {}};
    for (const auto& b : h.level(i + 1)) c.map.push_back(boundary(h, i + 1, b.id));
    return c;
}

GluingGraph gluing_graph(const Hyperstructure& h, int i, int j) {
    if (i < 1 || i > h.depth() || j < 0 || j >= i) {
        throw RangeError("gluing graph needs 0 <= j < i <= " + std::to_string(h.depth()) + ", got i=" +
                         std::to_string(i) + " j=" + std::to_string(j));
    }
    const auto& bonds = h.level(i);
    std::vector<std::vector<std::uint32_t>> down;
    down.reserve(bonds.size());
    for (const auto& b : bonds) down.push_back(downset(h, i, b.id, j));

    GluingGraph g{i, j, bonds.size(), {}};
    for (BondId a = 0; a < bonds.size(); ++a) {
        for (BondId b = a + 1; b < bonds.size(); ++b) {
            auto overlap = intersect(down[a], down[b]);
            if (!overlap.empty()) g.edges.push_back(GluingEdge{a, b, std::move(overlap)});
        }
    }
    return g;
}

Composite compose_bonds(const Hyperstructure& h, int i, const std::vector<BondId>& ids, int j) {
    if (ids.empty()) throw CompositionError("cannot compose an empty list of bonds");
    if (i < 1 || i > h.depth() || j < 0 || j >= i) {
        throw RangeError("composition needs 0 <= j < i <= " + std::to_string(h.depth()));
    }
    Composite out;
    std::vector<std::uint32_t> previous = downset(h, i, ids.front(), j);
    out.support = previous;
    for (std::size_t k = 1; k < ids.size(); ++k) {
        auto current = downset(h, i, ids[k], j);
        auto overlap = intersect(previous, current);
        if (overlap.empty()) {
            throw CompositionError("bonds " + bond_label(i, ids[k - 1]) + " and " + bond_label(i, ids[k]) +
                                   " do not glue at level " + std::to_string(j));
        }
        out.overlaps.push_back(std::move(overlap));
        std::vector<std::uint32_t> merged;
        std::set_union(out.support.begin(), out.support.end(), current.begin(), current.end(),
                       std::back_inserter(merged));
        out.support = std::move(merged);
        previous = std::move(current);
    }
    return out;
}

namespace {

class CliqueSearch {
public:
    CliqueSearch(const std::vector<std::vector<std::uint32_t>>& adj, std::int64_t budget) : adj_(adj), budget_(budget) {}

    std::vector<std::vector<std::uint32_t>> run() {
        if (adj_.empty()) return {};
        std::vector<std::uint32_t> all(adj_.size());
        std::iota(all.begin(), all.end(), 0u);
        std::vector<std::uint32_t> r;
        expand(r, all, {});
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    std::vector<std::uint32_t> neighbours_in(std::uint32_t v, const std::vector<std::uint32_t>& set) const {
        std::vector<std::uint32_t> out;
        std::set_intersection(set.begin(), set.end(), adj_[v].begin(), adj_[v].end(), std::back_inserter(out));
        return out;
    }

    void expand(std::vector<std::uint32_t>& r, std::vector<std::uint32_t> p, std::vector<std::uint32_t> x) {
        if (p.empty() && x.empty()) {
            if (--budget_ < 0) throw BudgetError("maximal clique enumeration exceeded its budget");
            out_.push_back(r);
            std::sort(out_.back().begin(), out_.back().end());
            return;
        }
        // Pivot: vertex of P u X with most neighbours in P.
        std::uint32_t pivot = 0;
        std::size_t best = 0;
        bool have = false;
        for (const auto* set : {&p, &x}) {
            for (auto u : *set) {
                auto deg = neighbours_in(u, p).size();
                if (!have || deg > best) {
                    pivot = u;
                    best = deg;
                    have = true;
                }
            }
        }
        std::vector<std::uint32_t> candidates;
        std::set_difference(p.begin(), p.end(), adj_[pivot].begin(), adj_[pivot].end(),
                            std::back_inserter(candidates));
        for (auto v : candidates) {
            r.push_back(v);
            expand(r, neighbours_in(v, p), neighbours_in(v, x));
            r.pop_back();
            p.erase(std::lower_bound(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
    }

    const std::vector<std::vector<std::uint32_t>>& adj_;
    std::int64_t budget_;
    std::vector<std::vector<std::uint32_t>> out_;
};

std::vector<std::vector<std::uint32_t>> connected_components(const std::vector<std::vector<std::uint32_t>>& adj) {
    std::vector<std::int64_t> comp(adj.size(), -1);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t s = 0; s < adj.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::uint32_t> members{s};
        comp[s] = static_cast<std::int64_t>(out.size());
        for (std::size_t head = 0; head < members.size(); ++head) {
            for (auto w : adj[members[head]]) {
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> maximal_cliques(const std::vector<std::vector<std::uint32_t>>& adjacency,
                                                        std::int64_t budget) {
    return CliqueSearch(adjacency, budget).run();
}

SimplicialComplex nerve(const Hyperstructure& h, const NerveConfig& cfg) {
    cfg.validate();
    std::vector<int> levels;
    for (int l = 1; l <= h.depth(); ++l) {
        if (cfg.include_levels.empty() || cfg.include_levels.contains(l)) levels.push_back(l);
    }

    std::vector<std::string> labels;
    std::map<int, Vertex> offset;
    for (int l : levels) {
        offset[l] = static_cast<Vertex>(labels.size());
        for (const auto& b : h.level(l)) labels.push_back(bond_label(l, b.id));
    }

    std::vector<Simplex> generators;
    for (Vertex v = 0; v < labels.size(); ++v) generators.push_back({v});

    std::int64_t budget = cfg.clique_budget;
    for (int i : levels) {
        auto js = cfg.include_j.find(i);
        for (int j = 0; j < i; ++j) {
            if (js != cfg.include_j.end() && !js->second.contains(j)) continue;
            auto adj = gluing_graph(h, i, j).adjacency();
            std::vector<std::vector<std::uint32_t>> spans;
            if (cfg.rule == NerveRule::Pairwise) {
                spans = maximal_cliques(adj, budget);
                budget -= static_cast<std::int64_t>(spans.size());
            } else {
                // Any vertex set inducing a connected subgraph lies inside one
                // component, and a component is itself connected, so the
                // downward closure is generated by the components.
                spans = connected_components(adj);
            }
            for (auto& s : spans) {
                Simplex simplex;
                simplex.reserve(s.size());
                for (auto v : s) simplex.push_back(offset[i] + v);
                generators.push_back(std::move(simplex));
            }
        }
    }
    return SimplicialComplex(std::move(labels), std::move(generators));
}

std::string to_dot(const GluingGraph& g) {
    std::string out = "graph gluing_" + std::to_string(g.level) + "_" + std::to_string(g.target) + " {\n";
    for (std::size_t v = 0; v < g.vertices; ++v) {
        out += "  \"" + bond_label(g.level, static_cast<BondId>(v)) + "\";\n";
    }
    for (const auto& e : g.edges) {
        out += "  \"" + bond_label(g.level, e.a) + "\" -- \"" + bond_label(g.level, e.b) + "\" [label=\"" +
               join(e.overlap, ",") + "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace hypercode
