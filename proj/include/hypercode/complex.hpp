#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hypercode {

using Vertex = std::uint32_t;
/// Strictly increasing vertex indices.
using Simplex = std::vector<Vertex>;

inline constexpr int kDefaultDimCap = 5;

/// Finite abstract simplicial complex stored by its maximal simplices.
///
/// Faces are implied and enumerated on demand. The vertex label table may be
/// larger than the vertex set: a label belongs to the complex only when some
/// maximal simplex contains it (isolated vertices are singleton maximal
/// simplices).
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Normalizes the generators: sorts each, drops empty ones and keeps only
    /// the inclusion-maximal simplices. Throws DimensionError on a vertex
    /// index outside the label table.
    SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> generators);

    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Simplex>& maximal() const { return maximal_; }
    bool empty() const { return maximal_.empty(); }

    /// Largest maximal simplex cardinality minus one; -1 when empty.
    int dim() const;

    /// All d-dimensional faces, lexicographically sorted.
    std::vector<Simplex> faces(int d) const;
    std::size_t face_count(int d) const { return faces(d).size(); }

    bool contains(const Simplex& s) const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<Simplex> maximal_;
};

/// Inclusion-maximal members of `simplices` (each sorted), in lexicographic
/// order with duplicates removed.
std::vector<Simplex> maximal_only(std::vector<Simplex> simplices);

bool is_face_of(const Simplex& face, const Simplex& simplex);

/// All k-element subsets of `s`, lexicographic.
std::vector<Simplex> subsets_of_size(const Simplex& s, std::size_t k);

}  // namespace hypercode
