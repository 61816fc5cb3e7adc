#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "hypercode/complex.hpp"
#include "hypercode/hyperstructure.hpp"

namespace hypercode {

/// d-th boundary operator over GF(2). Rows are the (d-1)-simplices, columns
/// the d-simplices, both in lexicographic order.
struct BoundaryMatrix {
    int dim = 0;
    std::vector<Simplex> rows;
    std::vector<Simplex> cols;
    std::vector<std::vector<std::uint32_t>> columns;  // sorted row indices

    std::size_t rank() const;
};

/// Throws RangeError when d exceeds dim_cap.
BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int d, int dim_cap = kDefaultDimCap);

/// Rank over GF(2) of a matrix given as sparse columns of row indices.
std::size_t gf2_rank(std::vector<std::vector<std::uint32_t>> columns);

/// beta_0..beta_max_dim over GF(2). Throws RangeError when a needed face
/// dimension exceeds dim_cap while the complex actually has such faces.
std::vector<std::size_t> betti(const SimplicialComplex& k, int max_dim, int dim_cap = kDefaultDimCap);

/// Betti numbers up to the complex's dimension, or up to dim_cap - 1 when the
/// complex is larger than the cap. Empty for the empty complex.
std::vector<std::size_t> betti_numbers(const SimplicialComplex& k, int dim_cap = kDefaultDimCap);

/// Sum of (-1)^d f_d over the faces up to dim_cap.
std::int64_t euler_characteristic(const SimplicialComplex& k, int dim_cap = kDefaultDimCap);

struct FilteredSimplex {
    Simplex simplex;
    double value = 0.0;

    int dim() const { return static_cast<int>(simplex.size()) - 1; }
};

/// Simplices of a complex (up to a dimension cap) with face-monotone values,
/// in filtration order (value, dimension, lexicographic).
class Filtration {
public:
    Filtration() = default;
    /// Throws InvariantError when a face is missing or enters after a coface.
    Filtration(SimplicialComplex complex, std::vector<FilteredSimplex> simplices, int dim_cap);

    const SimplicialComplex& complex() const { return complex_; }
    const std::vector<FilteredSimplex>& simplices() const { return simplices_; }
    int dim_cap() const { return dim_cap_; }
    /// Highest homology dimension whose bars are exact (the top enumerated
    /// dimension is unreliable when the complex was truncated).
    int max_reliable_dim() const;
    /// Distinct filtration values, ascending.
    std::vector<double> values() const;
    /// Subcomplex of simplices with value <= theta, as a complex.
    SimplicialComplex sublevel(double theta) const;

private:
    SimplicialComplex complex_;
    std::vector<FilteredSimplex> simplices_;
    int dim_cap_ = kDefaultDimCap;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Interval {
    int dim = 0;
    double birth = 0.0;
    double death = kInfinity;

    bool contains(double theta) const { return birth <= theta && theta < death; }
    bool operator==(const Interval&) const = default;
};

struct Barcode {
    std::vector<Interval> intervals;  // sorted by (dim, birth, death)

    std::size_t count(int dim) const;
    std::vector<Interval> in_dim(int dim) const;
};

/// Frequency filtration of Delta(C_i): value = c_max - count of the most
/// frequent generating bond containing the simplex.
Filtration frequency_filtration(const Hyperstructure& h, int i, int dim_cap = kDefaultDimCap);

/// Column reduction over GF(2) in filtration order.
Barcode persistence(const Filtration& f, bool keep_zero = false);

struct LevelBarcode {
    int level = 0;
    Barcode barcode;
};

std::vector<LevelBarcode> barcode_sequence(const Hyperstructure& h, int dim_cap = kDefaultDimCap,
                                           bool keep_zero = false);

}  // namespace hypercode
