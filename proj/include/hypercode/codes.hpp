#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "hypercode/complex.hpp"

namespace hypercode {

using Neuron = std::uint32_t;
using BinIndex = std::int64_t;

/// A binary word of length n; entry i is 1 when neuron i is active.
class Codeword {
public:
    Codeword() = default;
    explicit Codeword(std::vector<std::uint8_t> bits);

    std::size_t size() const { return bits_.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    std::string str() const;

    auto operator<=>(const Codeword&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Strictly increasing set of neuron indices. May be empty (the support of
/// the all-zero word).
class Pattern {
public:
    Pattern() = default;
    /// Sorts and removes duplicates.
    explicit Pattern(std::vector<Neuron> members);
    Pattern(std::initializer_list<Neuron> members);

    const std::vector<Neuron>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool respects(std::size_t n) const { return members_.empty() || members_.back() < n; }

    bool contains(Neuron v) const;
    bool subset_of(const Pattern& other) const;
    bool disjoint_from(const Pattern& other) const;
    Pattern united(const Pattern& other) const;

    std::string str() const;

    auto operator<=>(const Pattern&) const = default;

private:
    std::vector<Neuron> members_;
};

/// Set of distinct codewords sharing one length, kept in ascending order.
class Code {
public:
    explicit Code(std::size_t n) : n_(n) {}

    /// Returns false when the word was already present.
    bool insert(Codeword word);

    std::size_t n() const { return n_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    const std::vector<Codeword>& words() const { return words_; }
    std::vector<Pattern> supports() const;

private:
    std::size_t n_;
    std::vector<Codeword> words_;
};

struct Bin {
    BinIndex index = 0;
    Pattern active;

    bool operator==(const Bin&) const = default;
};

/// Time-ordered active sets. Empty bins are kept; they carry timing only.
class OccurrenceLog {
public:
    OccurrenceLog() = default;
    OccurrenceLog(std::size_t n, std::vector<Bin> bins);

    std::size_t n() const { return n_; }
    const std::vector<Bin>& bins() const { return bins_; }
    bool empty() const { return bins_.empty(); }

    /// Bins whose index appears in `keep` (which must be sorted).
    OccurrenceLog restricted_to(std::span<const BinIndex> keep) const;

    bool operator==(const OccurrenceLog&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Bin> bins_;
};

/// Dense neurons x bins 0/1 table.
class SpikeMatrix {
public:
    SpikeMatrix() = default;
    SpikeMatrix(std::size_t neurons, std::size_t bins);

    std::size_t neurons() const { return neurons_; }
    std::size_t bins() const { return bins_; }
    std::uint8_t at(std::size_t neuron, std::size_t bin) const { return cells_[neuron * bins_ + bin]; }
    void set(std::size_t neuron, std::size_t bin, std::uint8_t value);

    bool operator==(const SpikeMatrix&) const = default;

private:
    std::size_t neurons_ = 0;
    std::size_t bins_ = 0;
    std::vector<std::uint8_t> cells_;
};

struct SpikeEvent {
    Neuron neuron = 0;
    double time = 0.0;
};

Pattern support(const Codeword& word);
Codeword indicator(const Pattern& pattern, std::size_t n);

/// Rows are neurons, columns are bins, cells are 0 or 1, comma separated.
/// With `skip_header` the first line is ignored.
OccurrenceLog parse_spike_matrix(std::istream& in, bool skip_header = false);
OccurrenceLog parse_spike_matrix(const std::string& text, bool skip_header = false);

OccurrenceLog log_of_matrix(const SpikeMatrix& matrix);
/// Columns 0..(last bin index); bins absent from the log are all-zero.
SpikeMatrix matrix_of_log(const OccurrenceLog& log);
std::string render_matrix(const SpikeMatrix& matrix);

/// Two columns `neuron_id,timestamp`.
std::vector<SpikeEvent> parse_event_csv(std::istream& in, bool skip_header = false);

/// Bins are [k*dt, (k+1)*dt). Every bin from 0 to the last nonempty one is
/// emitted, empty or not; trailing empty bins are not produced.
OccurrenceLog bin_event_list(std::span<const SpikeEvent> events, double dt, std::size_t n);

Code code_of_log(const OccurrenceLog& log);

/// Complex generated by the patterns; vertex labels are the neuron ids 0..n-1.
SimplicialComplex generated_complex(std::span<const Pattern> patterns, std::size_t n);

}  // namespace hypercode
