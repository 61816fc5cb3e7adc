#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hypercode/codes.hpp"

namespace hypercode {

using BondId = std::uint32_t;

enum class Decomposition {
    /// An active set is realized by known level-1 patterns only when it is a
    /// disjoint union of them.
    ExactCover,
    /// Every known level-1 pattern contained in the active set is realized.
    SubsetRealization,
};

std::string to_string(Decomposition d);
Decomposition decomposition_from_string(const std::string& s);

struct BuildConfig {
    int max_level = 3;
    Decomposition decomposition = Decomposition::ExactCover;
    std::int64_t min_count = 1;
    /// Fix the level-1 dictionary over the whole log before detecting higher
    /// levels, making C_1 independent of bin order.
    bool two_pass = false;
    /// Also register the union of a multi-pattern cover as a level-1 pattern.
    bool keep_union_words = false;
    /// Node budget for the exact-cover search, per bin.
    std::int64_t cover_budget = 1'000'000;

    void validate() const;
    bool operator==(const BuildConfig&) const = default;
};

/// Element of C_level. For level 1 the constituents are neuron indices, above
/// that they are bond ids one level down.
struct Bond {
    BondId id = 0;
    int level = 1;
    std::vector<std::uint32_t> constituents;
    std::int64_t count = 0;
    std::vector<BinIndex> bins;

    bool operator==(const Bond&) const = default;
};

/// Leveled collection {C_1, ..., C_k} of bonds. Boundary maps are the
/// constituent lists. Immutable once built.
class Hyperstructure {
public:
    Hyperstructure() = default;
    /// Validates ids, referential integrity and count/bin agreement; throws
    /// InvariantError.
    Hyperstructure(std::size_t n, BuildConfig config, std::vector<std::vector<Bond>> levels);

    std::size_t n() const { return n_; }
    /// Number of populated levels (k).
    int depth() const { return static_cast<int>(levels_.size()); }
    const BuildConfig& config() const { return config_; }
    const std::vector<std::vector<Bond>>& levels() const { return levels_; }
    std::size_t bond_count() const;

    /// Bonds of level `l` (1-based). Throws RangeError.
    const std::vector<Bond>& level(int l) const;
    /// Throws LookupError for an unknown level or id.
    const Bond& bond(int l, BondId id) const;

    bool operator==(const Hyperstructure&) const = default;

private:
    std::size_t n_ = 0;
    BuildConfig config_;
    std::vector<std::vector<Bond>> levels_;
};

struct Cover {
    std::vector<std::size_t> ids;
    bool operator==(const Cover&) const = default;
};
struct NewPattern {
    Pattern pattern;
    bool operator==(const NewPattern&) const = default;
};
using Realization = std::variant<Cover, NewPattern>;

/// How a nonempty active set is realized by the known level-1 patterns.
///
/// Exact-cover candidates are the known patterns contained in `active`,
/// ordered by (size desc, members asc); the first disjoint cover found by a
/// depth-first search in that order wins, so the greedy choice is taken
/// whenever it succeeds. Cover ids are returned in ascending order.
Realization realize_level1(const Pattern& active, const std::vector<Pattern>& known, Decomposition mode,
                           std::int64_t budget = 1'000'000);

Hyperstructure build_hyperstructure(const OccurrenceLog& log, const BuildConfig& config = {});

/// Constituents of a bond at level >= 2.
const std::vector<std::uint32_t>& boundary(const Hyperstructure& h, int level, BondId id);

/// Iterated boundary down to `target`; target 0 gives the neuron support.
std::vector<std::uint32_t> downset(const Hyperstructure& h, int level, BondId id, int target);

/// Fully expanded nested neuron sets, recursively sorted, e.g. "{{0,1},{2,3}}".
std::string canonical_form(const Hyperstructure& h, int level, BondId id);

}  // namespace hypercode
