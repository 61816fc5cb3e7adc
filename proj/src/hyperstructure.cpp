#include "hypercode/hyperstructure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hypercode/error.hpp"

namespace hypercode {

std::string to_string(Decomposition d) {
    return d == Decomposition::ExactCover ? "exact-cover" : "subset-realization";
}

Decomposition decomposition_from_string(const std::string& s) {
    if (s == "exact-cover") return Decomposition::ExactCover;
    if (s == "subset-realization" || s == "subset") return Decomposition::SubsetRealization;
    throw ConfigError("unknown decomposition '" + s + "' (expected exact-cover or subset-realization)");
}

void BuildConfig::validate() const {
    if (max_level < 1) throw ConfigError("max_level must be >= 1");
    if (min_count < 1) throw ConfigError("min_count must be >= 1");
    if (cover_budget < 1) throw ConfigError("cover_budget must be >= 1");
}

Hyperstructure::Hyperstructure(std::size_t n, BuildConfig config, std::vector<std::vector<Bond>> levels)
    : n_(n), config_(config), levels_(std::move(levels)) {
    config_.validate();
    if (static_cast<int>(levels_.size()) > config_.max_level) {
        throw InvariantError("hyperstructure has more levels than max_level");
    }
    for (std::size_t li = 0; li < levels_.size(); ++li) {
        const int level = static_cast<int>(li) + 1;
        const auto& bonds = levels_[li];
        if (bonds.empty()) throw InvariantError("level " + std::to_string(level) + " is empty");
        const std::size_t below = level == 1 ? n_ : levels_[li - 1].size();
        std::map<std::vector<std::uint32_t>, BondId> seen;
        for (std::size_t b = 0; b < bonds.size(); ++b) {
            const Bond& bond = bonds[b];
            const std::string where = "bond " + std::to_string(level) + ":" + std::to_string(b);
            if (bond.id != b) throw InvariantError(where + " has id " + std::to_string(bond.id));
            if (bond.level != level) throw InvariantError(where + " records level " + std::to_string(bond.level));
            const auto& c = bond.constituents;
            if (c.empty()) throw InvariantError(where + " has no constituents");
            if (level >= 2 && c.size() < 2) throw InvariantError(where + " binds fewer than two bonds");
            if (!std::is_sorted(c.begin(), c.end()) || std::adjacent_find(c.begin(), c.end()) != c.end()) {
                throw InvariantError(where + " constituents are not strictly increasing");
            }
            if (c.back() >= below) throw InvariantError(where + " references a missing constituent");
            if (!seen.emplace(c, bond.id).second) throw InvariantError(where + " duplicates another bond");
            if (bond.count < 1 || static_cast<std::size_t>(bond.count) != bond.bins.size()) {
                throw InvariantError(where + " count disagrees with its bins");
            }
            if (std::adjacent_find(bond.bins.begin(), bond.bins.end(), std::greater_equal<>()) != bond.bins.end()) {
                throw InvariantError(where + " bins are not strictly increasing");
            }
        }
    }
}

std::size_t Hyperstructure::bond_count() const {
    std::size_t total = 0;
    for (const auto& l : levels_) total += l.size();
    return total;
}

const std::vector<Bond>& Hyperstructure::level(int l) const {
    if (l < 1 || l > depth()) {
        throw RangeError("level " + std::to_string(l) + " outside 1.." + std::to_string(depth()));
    }
    return levels_[static_cast<std::size_t>(l) - 1];
}

const Bond& Hyperstructure::bond(int l, BondId id) const {
    if (l < 1 || l > depth()) throw LookupError("no level " + std::to_string(l));
    const auto& bonds = levels_[static_cast<std::size_t>(l) - 1];
    if (id >= bonds.size()) throw LookupError("no bond " + std::to_string(id) + " at level " + std::to_string(l));
    return bonds[id];
}

namespace {

class CoverSearch {
public:
    CoverSearch(const Pattern& active, const std::vector<Pattern>& known, std::vector<std::size_t> candidates,
                std::int64_t budget)
        : active_(active), known_(known), candidates_(std::move(candidates)), budget_(budget) {}

    bool run() { return descend(0, 0); }
    std::vector<std::size_t> chosen() const { return chosen_; }

private:
    bool descend(std::size_t from, std::size_t covered) {
        if (covered == active_.size()) return true;
        for (std::size_t i = from; i < candidates_.size(); ++i) {
            if (--budget_ < 0) throw BudgetError("exact-cover search exceeded its node budget on " + active_.str());
            const Pattern& p = known_[candidates_[i]];
            if (covered + p.size() > active_.size()) continue;
            bool clash = std::any_of(chosen_.begin(), chosen_.end(),
                                     [&](std::size_t c) { return !known_[c].disjoint_from(p); });
            if (clash) continue;
            chosen_.push_back(candidates_[i]);
            if (descend(i + 1, covered + p.size())) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const Pattern& active_;
    const std::vector<Pattern>& known_;
    std::vector<std::size_t> candidates_;
    std::int64_t budget_;
    std::vector<std::size_t> chosen_;
};

}  // namespace

Realization realize_level1(const Pattern& active, const std::vector<Pattern>& known, Decomposition mode,
                           std::int64_t budget) {
    if (active.empty()) throw RangeError("cannot realize an empty active set");
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < known.size(); ++i) {
        if (!known[i].empty() && known[i].subset_of(active)) candidates.push_back(i);
    }
    if (candidates.empty()) return NewPattern{active};

    if (mode == Decomposition::SubsetRealization) return Cover{std::move(candidates)};

    std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
        if (known[a].size() != known[b].size()) return known[a].size() > known[b].size();
        return known[a] < known[b];
    });
    CoverSearch search(active, known, std::move(candidates), budget);
    if (!search.run()) return NewPattern{active};
    auto ids = search.chosen();
    std::sort(ids.begin(), ids.end());
    return Cover{std::move(ids)};
}

namespace {

class Builder {
public:
    Builder(std::size_t n, const BuildConfig& config) : n_(n), config_(config) {
        levels_.resize(static_cast<std::size_t>(config.max_level));
        index_.resize(levels_.size());
    }

    // Registers every level-1 pattern the log produces, discarding counts.
    void collect_dictionary(const OccurrenceLog& log) {
        for (const auto& bin : log.bins()) {
            if (bin.active.empty()) continue;
            auto r = realize_level1(bin.active, genuine_, config_.decomposition, config_.cover_budget);
            if (auto* fresh = std::get_if<NewPattern>(&r)) register_level1(fresh->pattern, false);
        }
        for (auto& b : levels_[0]) {
            b.count = 0;
            b.bins.clear();
        }
    }

    void process(const Bin& bin) {
        if (bin.active.empty()) return;
        auto r = realize_level1(bin.active, genuine_, config_.decomposition, config_.cover_budget);

        std::vector<std::uint32_t> realized;
        if (auto* cover = std::get_if<Cover>(&r)) {
            for (std::size_t g : cover->ids) realized.push_back(genuine_ids_[g]);
            std::sort(realized.begin(), realized.end());
            if (config_.keep_union_words && cover->ids.size() >= 2) {
                touch(0, register_level1(bin.active, true), bin.index);
            }
        } else {
            realized.push_back(register_level1(std::get<NewPattern>(r).pattern, false));
        }
        for (auto id : realized) touch(0, id, bin.index);

        for (std::size_t li = 1; li < levels_.size() && realized.size() >= 2; ++li) {
            register_bond(li, realized);
            std::vector<std::uint32_t> next;
            for (const auto& bond : levels_[li]) {
                if (std::includes(realized.begin(), realized.end(), bond.constituents.begin(),
                                  bond.constituents.end())) {
                    next.push_back(bond.id);
                }
            }
            for (auto id : next) touch(li, id, bin.index);
            realized = std::move(next);
        }
    }

    Hyperstructure finish() && {
        // Survivors after min_count pruning, cascading upward through orphans.
        std::vector<std::vector<std::int64_t>> remap(levels_.size());
        std::vector<std::vector<Bond>> out;
        for (std::size_t li = 0; li < levels_.size(); ++li) {
            remap[li].assign(levels_[li].size(), -1);
            std::vector<Bond> kept;
            for (auto& bond : levels_[li]) {
                if (bond.count < std::max<std::int64_t>(1, config_.min_count)) continue;
                if (li > 0) {
                    bool orphan = std::any_of(bond.constituents.begin(), bond.constituents.end(),
                                              [&](std::uint32_t c) { return remap[li - 1][c] < 0; });
                    if (orphan) continue;
                    for (auto& c : bond.constituents) c = static_cast<std::uint32_t>(remap[li - 1][c]);
                    std::sort(bond.constituents.begin(), bond.constituents.end());
                }
                remap[li][bond.id] = static_cast<std::int64_t>(kept.size());
                bond.id = static_cast<BondId>(kept.size());
                kept.push_back(std::move(bond));
            }
            if (kept.empty()) break;
            out.push_back(std::move(kept));
        }
        return Hyperstructure(n_, config_, std::move(out));
    }

private:
    BondId register_level1(const Pattern& p, bool union_word) {
        auto& index = index_[0];
        std::vector<std::uint32_t> key(p.members().begin(), p.members().end());
        if (auto it = index.find(key); it != index.end()) return it->second;
        auto id = static_cast<BondId>(levels_[0].size());
        levels_[0].push_back(Bond{id, 1, key, 0, {}});
        index.emplace(std::move(key), id);
        if (!union_word) {
            genuine_.push_back(p);
            genuine_ids_.push_back(id);
        }
        return id;
    }

    BondId register_bond(std::size_t li, const std::vector<std::uint32_t>& constituents) {
        auto& index = index_[li];
        if (auto it = index.find(constituents); it != index.end()) return it->second;
        auto id = static_cast<BondId>(levels_[li].size());
        levels_[li].push_back(Bond{id, static_cast<int>(li) + 1, constituents, 0, {}});
        index.emplace(constituents, id);
        return id;
    }

    void touch(std::size_t li, BondId id, BinIndex bin) {
        Bond& b = levels_[li][id];
        if (!b.bins.empty() && b.bins.back() == bin) return;
        ++b.count;
        b.bins.push_back(bin);
    }

    std::size_t n_;
    BuildConfig config_;
    std::vector<std::vector<Bond>> levels_;
    std::vector<std::map<std::vector<std::uint32_t>, BondId>> index_;
    // Level-1 patterns eligible as cover candidates (union words are not).
    std::vector<Pattern> genuine_;
    std::vector<BondId> genuine_ids_;
};

}  // namespace

Hyperstructure build_hyperstructure(const OccurrenceLog& log, const BuildConfig& config) {
    config.validate();
    Builder builder(log.n(), config);
    if (config.two_pass) builder.collect_dictionary(log);
    for (const auto& bin : log.bins()) builder.process(bin);
    return std::move(builder).finish();
}

const std::vector<std::uint32_t>& boundary(const Hyperstructure& h, int level, BondId id) {
    if (level < 2) throw LookupError("boundary is defined for levels >= 2, got " + std::to_string(level));
    return h.bond(level, id).constituents;
}

std::vector<std::uint32_t> downset(const Hyperstructure& h, int level, BondId id, int target) {
    const Bond& start = h.bond(level, id);
    if (target < 0 || target >= level) {
        throw RangeError("downset target " + std::to_string(target) + " must lie in 0.." + std::to_string(level - 1));
    }
    std::vector<std::uint32_t> current = start.constituents;  // ids at level-1 (neurons when level == 1)
    for (int l = level - 1; l > target; --l) {
        std::vector<std::uint32_t> next;
        for (auto c : current) {
            const auto& sub = h.bond(l, c).constituents;
            next.insert(next.end(), sub.begin(), sub.end());
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current = std::move(next);
    }
    return current;
}

namespace {

struct Nested {
    std::vector<std::uint32_t> atoms;
    std::vector<Nested> children;
};

std::strong_ordering compare_nested(const Nested& a, const Nested& b) {
    if (auto c = std::lexicographical_compare_three_way(a.atoms.begin(), a.atoms.end(), b.atoms.begin(),
                                                        b.atoms.end());
        c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.children.begin(), a.children.end(), b.children.begin(),
                                                  b.children.end(), compare_nested);
}

Nested expand(const Hyperstructure& h, int level, BondId id) {
    const Bond& bond = h.bond(level, id);
    Nested out;
    if (level == 1) {
        out.atoms = bond.constituents;
        return out;
    }
    for (auto c : bond.constituents) out.children.push_back(expand(h, level - 1, c));
    std::sort(out.children.begin(), out.children.end(),
              [](const Nested& a, const Nested& b) { return compare_nested(a, b) < 0; });
    return out;
}

void render(const Nested& n, std::string& out) {
    out += '{';
    bool first = true;
    for (auto a : n.atoms) {
        if (!first) out += ',';
        out += std::to_string(a);
        first = false;
    }
    for (const auto& c : n.children) {
        if (!first) out += ',';
        render(c, out);
        first = false;
    }
    out += '}';
}

}  // namespace

std::string canonical_form(const Hyperstructure& h, int level, BondId id) {
    std::string out;
    render(expand(h, level, id), out);
    return out;
}

}  // namespace hypercode
