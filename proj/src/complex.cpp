#include "hypercode/complex.hpp"

#include <algorithm>
#include <string>

#include "hypercode/error.hpp"

namespace hypercode {

bool is_face_of(const Simplex& face, const Simplex& simplex) {
    return std::includes(simplex.begin(), simplex.end(), face.begin(), face.end());
}

std::vector<Simplex> maximal_only(std::vector<Simplex> simplices) {
    for (auto& s : simplices) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    std::erase_if(simplices, [](const Simplex& s) { return s.empty(); });
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());

    // Larger simplices first so every kept candidate only needs checking
    // against those already kept.
    std::vector<std::size_t> order(simplices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return simplices[a].size() > simplices[b].size();
    });

    std::vector<std::size_t> kept;
    for (std::size_t idx : order) {
        const Simplex& s = simplices[idx];
        bool absorbed = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
            return simplices[k].size() > s.size() && is_face_of(s, simplices[k]);
        });
        if (!absorbed) kept.push_back(idx);
    }
    std::sort(kept.begin(), kept.end());

    std::vector<Simplex> out;
    out.reserve(kept.size());
    for (std::size_t k : kept) out.push_back(std::move(simplices[k]));
    return out;
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> generators)
    : labels_(std::move(labels)), maximal_(maximal_only(std::move(generators))) {
    for (const auto& s : maximal_) {
        if (s.back() >= labels_.size()) {
            throw DimensionError("simplex vertex " + std::to_string(s.back()) + " outside label table of size " +
                                 std::to_string(labels_.size()));
        }
    }
}

int SimplicialComplex::dim() const {
    std::size_t best = 0;
    for (const auto& s : maximal_) best = std::max(best, s.size());
    return static_cast<int>(best) - 1;
}

namespace {

void append_subsets(const Simplex& s, std::size_t k, std::vector<Simplex>& out) {
    if (k > s.size()) return;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        Simplex face(k);
        for (std::size_t i = 0; i < k; ++i) face[i] = s[pick[i]];
        out.push_back(std::move(face));
        // advance to the next k-combination in lexicographic order
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == s.size() - k + (i - 1)) --i;
        if (i == 0) return;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

std::vector<Simplex> subsets_of_size(const Simplex& s, std::size_t k) {
    std::vector<Simplex> out;
    if (k > 0) append_subsets(s, k, out);
    return out;
}

std::vector<Simplex> SimplicialComplex::faces(int d) const {
    std::vector<Simplex> out;
    if (d < 0) return out;
    const auto k = static_cast<std::size_t>(d) + 1;
    for (const auto& s : maximal_) append_subsets(s, k, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    if (s.empty()) return true;
    return std::any_of(maximal_.begin(), maximal_.end(), [&](const Simplex& m) { return is_face_of(s, m); });
}

}  // namespace hypercode
