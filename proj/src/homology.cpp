#include "hypercode/homology.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "hypercode/error.hpp"
#include "hypercode/topology.hpp"

namespace hypercode {

namespace {

// Columns of the boundary map from `cols` (d-simplices) to `rows`
// ((d-1)-simplices, sorted).
std::vector<std::vector<std::uint32_t>> boundary_columns(const std::vector<Simplex>& rows,
                                                         const std::vector<Simplex>& cols) {
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(cols.size());
    for (const auto& s : cols) {
        std::vector<std::uint32_t> col;
        if (s.size() >= 2) {
            col.reserve(s.size());
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (k != drop) face.push_back(s[k]);
                auto it = std::lower_bound(rows.begin(), rows.end(), face);
                if (it == rows.end() || *it != face) throw InvariantError("boundary face missing from row set");
                col.push_back(static_cast<std::uint32_t>(it - rows.begin()));
            }
            std::sort(col.begin(), col.end());
        }
        out.push_back(std::move(col));
    }
    return out;
}

// Symmetric difference of two sorted index lists, written into `target`.
void add_column(std::vector<std::uint32_t>& target, const std::vector<std::uint32_t>& source) {
    std::vector<std::uint32_t> out;
    out.reserve(target.size() + source.size());
    std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                  std::back_inserter(out));
    target = std::move(out);
}

}  // namespace

std::size_t gf2_rank(std::vector<std::vector<std::uint32_t>> columns) {
    std::unordered_map<std::uint32_t, std::size_t> owner;  // lowest row -> reduced column
    std::size_t rank = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        auto& col = columns[j];
        std::sort(col.begin(), col.end());
        while (!col.empty()) {
            auto it = owner.find(col.back());
            if (it == owner.end()) break;
            add_column(col, columns[it->second]);
        }
        if (!col.empty()) {
            owner.emplace(col.back(), j);
            ++rank;
        }
    }
    return rank;
}

std::size_t BoundaryMatrix::rank() const { return gf2_rank(columns); }

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int d, int dim_cap) {
    if (d < 0) throw RangeError("boundary dimension must be non-negative");
    if (d > dim_cap) {
        throw RangeError("boundary dimension " + std::to_string(d) + " exceeds dimension cap " +
                         std::to_string(dim_cap));
    }
    BoundaryMatrix m;
    m.dim = d;
    m.cols = k.faces(d);
    if (d > 0) m.rows = k.faces(d - 1);
    m.columns = boundary_columns(m.rows, m.cols);
    return m;
}

std::vector<std::size_t> betti(const SimplicialComplex& k, int max_dim, int dim_cap) {
    if (max_dim < 0) throw RangeError("max_dim must be non-negative");
    const int top = std::min(max_dim + 1, k.dim());
    if (top > dim_cap) {
        throw RangeError("homology up to dimension " + std::to_string(max_dim) + " needs " + std::to_string(top) +
                         "-faces, beyond the dimension cap " + std::to_string(dim_cap));
    }
    std::vector<std::vector<Simplex>> faces(static_cast<std::size_t>(max_dim) + 2);
    for (int d = 0; d <= top; ++d) faces[static_cast<std::size_t>(d)] = k.faces(d);

    // rank[d] = rank of the boundary map from d-chains to (d-1)-chains
    std::vector<std::size_t> rank(faces.size(), 0);
    for (int d = 1; d <= top; ++d) {
        const auto du = static_cast<std::size_t>(d);
        rank[du] = gf2_rank(boundary_columns(faces[du - 1], faces[du]));
    }
    std::vector<std::size_t> out(static_cast<std::size_t>(max_dim) + 1);
    for (std::size_t d = 0; d < out.size(); ++d) out[d] = faces[d].size() - rank[d] - rank[d + 1];
    return out;
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& k, int dim_cap) {
    if (k.empty()) return {};
    const int top = k.dim() <= dim_cap ? k.dim() : dim_cap - 1;
    if (top < 0) return {};
    return betti(k, top, dim_cap);
}

std::int64_t euler_characteristic(const SimplicialComplex& k, int dim_cap) {
    std::int64_t chi = 0;
    for (int d = 0; d <= std::min(k.dim(), dim_cap); ++d) {
        auto f = static_cast<std::int64_t>(k.face_count(d));
        chi += (d % 2 == 0) ? f : -f;
    }
    return chi;
}

namespace {

bool filtration_less(const FilteredSimplex& a, const FilteredSimplex& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.simplex.size() != b.simplex.size()) return a.simplex.size() < b.simplex.size();
    return a.simplex < b.simplex;
}

}  // namespace

Filtration::Filtration(SimplicialComplex complex, std::vector<FilteredSimplex> simplices, int dim_cap)
    : complex_(std::move(complex)), simplices_(std::move(simplices)), dim_cap_(dim_cap) {
    std::sort(simplices_.begin(), simplices_.end(), filtration_less);
    std::map<Simplex, double> value;
    for (const auto& s : simplices_) {
        if (s.simplex.empty()) throw InvariantError("filtration contains the empty simplex");
        if (!value.emplace(s.simplex, s.value).second) throw InvariantError("filtration lists a simplex twice");
    }
    for (const auto& s : simplices_) {
        if (s.simplex.size() < 2) continue;
        for (const auto& face : subsets_of_size(s.simplex, s.simplex.size() - 1)) {
            auto it = value.find(face);
            if (it == value.end()) throw InvariantError("filtration is missing a face of a listed simplex");
            if (it->second > s.value) throw InvariantError("filtration is not monotone: a face enters after its coface");
        }
    }
}

int Filtration::max_reliable_dim() const {
    return complex_.dim() <= dim_cap_ ? complex_.dim() : dim_cap_ - 1;
}

std::vector<double> Filtration::values() const {
    std::vector<double> out;
    for (const auto& s : simplices_) {
        if (out.empty() || out.back() != s.value) out.push_back(s.value);
    }
    return out;
}

SimplicialComplex Filtration::sublevel(double theta) const {
    std::vector<Simplex> generators;
    for (const auto& s : simplices_) {
        if (s.value <= theta) generators.push_back(s.simplex);
    }
    return SimplicialComplex(complex_.labels(), std::move(generators));
}

std::size_t Barcode::count(int dim) const {
    return static_cast<std::size_t>(
        std::count_if(intervals.begin(), intervals.end(), [&](const Interval& i) { return i.dim == dim; }));
}

std::vector<Interval> Barcode::in_dim(int dim) const {
    std::vector<Interval> out;
    std::copy_if(intervals.begin(), intervals.end(), std::back_inserter(out),
                 [&](const Interval& i) { return i.dim == dim; });
    return out;
}

Filtration frequency_filtration(const Hyperstructure& h, int i, int dim_cap) {
    SimplicialComplex k = level_complex(h, i);
    const auto& bonds = h.level(i);
    std::int64_t c_max = 0;
    for (const auto& b : bonds) c_max = std::max(c_max, b.count);

    const int top = std::min(k.dim(), dim_cap);
    std::map<Simplex, double> value;
    auto offer = [&](const Simplex& generator, double v) {
        for (int d = 0; d <= std::min(top, static_cast<int>(generator.size()) - 1); ++d) {
            for (auto& face : subsets_of_size(generator, static_cast<std::size_t>(d) + 1)) {
                auto [it, fresh] = value.emplace(std::move(face), v);
                if (!fresh) it->second = std::min(it->second, v);
            }
        }
    };
    for (const auto& b : bonds) offer(b.constituents, static_cast<double>(c_max - b.count));

    if (i >= 2) {
        // Lower bonds in no level-i bond: own frequency, clamped into [0, c_max].
        for (const auto& lower : h.level(i - 1)) {
            Simplex v{lower.id};
            if (!value.contains(v)) value.emplace(v, static_cast<double>(c_max - std::min(lower.count, c_max)));
        }
    }

    std::vector<FilteredSimplex> simplices;
    simplices.reserve(value.size());
    for (auto& [s, v] : value) simplices.push_back(FilteredSimplex{s, v});
    return Filtration(std::move(k), std::move(simplices), dim_cap);
}

Barcode persistence(const Filtration& f, bool keep_zero) {
    const auto& order = f.simplices();
    std::map<Simplex, std::uint32_t> position;
    for (std::uint32_t idx = 0; idx < order.size(); ++idx) position.emplace(order[idx].simplex, idx);

    std::vector<std::vector<std::uint32_t>> columns(order.size());
    for (std::size_t j = 0; j < order.size(); ++j) {
        const auto& s = order[j].simplex;
        if (s.size() < 2) continue;
        for (const auto& face : subsets_of_size(s, s.size() - 1)) columns[j].push_back(position.at(face));
        std::sort(columns[j].begin(), columns[j].end());
    }

    std::vector<std::int64_t> owner(order.size(), -1);  // low row -> column
    std::vector<bool> paired(order.size(), false);
    Barcode out;
    const int reliable = f.max_reliable_dim();
    auto emit = [&](int dim, double birth, double death) {
        if (dim > reliable) return;
        if (!keep_zero && death == birth) return;
        out.intervals.push_back(Interval{dim, birth, death});
    };

    for (std::size_t j = 0; j < order.size(); ++j) {
        auto& col = columns[j];
        while (!col.empty() && owner[col.back()] >= 0) {
            add_column(col, columns[static_cast<std::size_t>(owner[col.back()])]);
        }
        if (col.empty()) continue;
        const auto low = col.back();
        owner[low] = static_cast<std::int64_t>(j);
        paired[low] = true;
        paired[j] = true;
        emit(order[low].dim(), order[low].value, order[j].value);
    }
    for (std::size_t j = 0; j < order.size(); ++j) {
        if (!paired[j]) emit(order[j].dim(), order[j].value, kInfinity);
    }

    std::sort(out.intervals.begin(), out.intervals.end(), [](const Interval& a, const Interval& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
    return out;
}

std::vector<LevelBarcode> barcode_sequence(const Hyperstructure& h, int dim_cap, bool keep_zero) {
    std::vector<LevelBarcode> out;
    for (int i = 1; i <= h.depth(); ++i) out.push_back(LevelBarcode{i, persistence(frequency_filtration(h, i, dim_cap), keep_zero)});
    return out;
}

}  // namespace hypercode
