#include "hypercode/codes.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "hypercode/error.hpp"

namespace hypercode {

Codeword::Codeword(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] > 1) throw ParseError("codeword entry " + std::to_string(i) + " is not 0 or 1");
    }
}

std::string Codeword::str() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) out.push_back(b ? '1' : '0');
    return out;
}

Pattern::Pattern(std::vector<Neuron> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Pattern::Pattern(std::initializer_list<Neuron> members) : Pattern(std::vector<Neuron>(members)) {}

bool Pattern::contains(Neuron v) const { return std::binary_search(members_.begin(), members_.end(), v); }

bool Pattern::subset_of(const Pattern& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

bool Pattern::disjoint_from(const Pattern& other) const {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a == *b) return false;
        if (*a < *b) ++a;
        else ++b;
    }
    return true;
}

Pattern Pattern::united(const Pattern& other) const {
    std::vector<Neuron> out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(out));
    return Pattern(std::move(out));
}

std::string Pattern::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(members_[i]);
    }
    return out + "}";
}

bool Code::insert(Codeword word) {
    if (word.size() != n_) {
        throw DimensionError("codeword of length " + std::to_string(word.size()) + " in a code of length " +
                             std::to_string(n_));
    }
    auto it = std::lower_bound(words_.begin(), words_.end(), word);
    if (it != words_.end() && *it == word) return false;
    words_.insert(it, std::move(word));
    return true;
}

std::vector<Pattern> Code::supports() const {
    std::vector<Pattern> out;
    out.reserve(words_.size());
    for (const auto& w : words_) out.push_back(support(w));
    return out;
}

OccurrenceLog::OccurrenceLog(std::size_t n, std::vector<Bin> bins) : n_(n), bins_(std::move(bins)) {
    for (std::size_t i = 0; i < bins_.size(); ++i) {
        if (i > 0 && bins_[i].index <= bins_[i - 1].index) {
            throw DimensionError("bin indices must be strictly increasing (bin " + std::to_string(bins_[i].index) +
                                 ")");
        }
        if (!bins_[i].active.respects(n_)) {
            throw DimensionError("bin " + std::to_string(bins_[i].index) + " references a neuron >= n=" +
                                 std::to_string(n_));
        }
    }
}

OccurrenceLog OccurrenceLog::restricted_to(std::span<const BinIndex> keep) const {
    std::vector<Bin> out;
    for (const auto& b : bins_) {
        if (std::binary_search(keep.begin(), keep.end(), b.index)) out.push_back(b);
    }
    return OccurrenceLog(n_, std::move(out));
}

SpikeMatrix::SpikeMatrix(std::size_t neurons, std::size_t bins)
    : neurons_(neurons), bins_(bins), cells_(neurons * bins, 0) {}

void SpikeMatrix::set(std::size_t neuron, std::size_t bin, std::uint8_t value) {
    cells_[neuron * bins_ + bin] = value ? 1 : 0;
}

Pattern support(const Codeword& word) {
    std::vector<Neuron> members;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i]) members.push_back(static_cast<Neuron>(i));
    }
    return Pattern(std::move(members));
}

Codeword indicator(const Pattern& pattern, std::size_t n) {
    if (!pattern.respects(n)) throw DimensionError("pattern " + pattern.str() + " exceeds n=" + std::to_string(n));
    std::vector<std::uint8_t> bits(n, 0);
    for (Neuron v : pattern.members()) bits[v] = 1;
    return Codeword(std::move(bits));
}

namespace {

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
    }
    return lines;
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> cells;
    if (line.empty()) return cells;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        cells.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

OccurrenceLog parse_spike_matrix(std::istream& in, bool skip_header) {
    auto lines = read_lines(in);
    std::size_t first = (skip_header && !lines.empty()) ? 1 : 0;
    // Trailing blank lines are padding unless every row is blank (zero bins).
    bool any_cells = std::any_of(lines.begin() + static_cast<std::ptrdiff_t>(first), lines.end(),
                                 [](const std::string& l) { return !trim(l).empty(); });
    while (any_cells && lines.size() > first && trim(lines.back()).empty()) lines.pop_back();

    std::size_t width = 0;
    std::vector<std::vector<std::uint8_t>> rows;
    for (std::size_t r = first; r < lines.size(); ++r) {
        auto cells = split_commas(lines[r]);
        std::vector<std::uint8_t> row;
        row.reserve(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            auto cell = trim(cells[c]);
            if (cell == "0") row.push_back(0);
            else if (cell == "1") row.push_back(1);
            else {
                throw ParseError("non-binary cell '" + std::string(cell) + "' at row " + std::to_string(r - first) +
                                 ", column " + std::to_string(c));
            }
        }
        if (rows.empty()) width = row.size();
        else if (row.size() != width) {
            throw DimensionError("ragged matrix: row " + std::to_string(r - first) + " has " +
                                 std::to_string(row.size()) + " cells, expected " + std::to_string(width));
        }
        rows.push_back(std::move(row));
    }

    SpikeMatrix matrix(rows.size(), width);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < width; ++c) matrix.set(r, c, rows[r][c]);
    return log_of_matrix(matrix);
}

OccurrenceLog parse_spike_matrix(const std::string& text, bool skip_header) {
    std::istringstream in(text);
    return parse_spike_matrix(in, skip_header);
}

OccurrenceLog log_of_matrix(const SpikeMatrix& matrix) {
    std::vector<Bin> bins;
    bins.reserve(matrix.bins());
    for (std::size_t c = 0; c < matrix.bins(); ++c) {
        std::vector<Neuron> active;
        for (std::size_t r = 0; r < matrix.neurons(); ++r) {
            if (matrix.at(r, c)) active.push_back(static_cast<Neuron>(r));
        }
        bins.push_back(Bin{static_cast<BinIndex>(c), Pattern(std::move(active))});
    }
    return OccurrenceLog(matrix.neurons(), std::move(bins));
}

SpikeMatrix matrix_of_log(const OccurrenceLog& log) {
    std::size_t width = log.empty() ? 0 : static_cast<std::size_t>(log.bins().back().index) + 1;
    if (!log.empty() && log.bins().front().index < 0) throw DimensionError("negative bin index");
    SpikeMatrix matrix(log.n(), width);
    for (const auto& bin : log.bins()) {
        for (Neuron v : bin.active.members()) matrix.set(v, static_cast<std::size_t>(bin.index), 1);
    }
    return matrix;
}

std::string render_matrix(const SpikeMatrix& matrix) {
    std::string out;
    out.reserve(matrix.neurons() * (2 * matrix.bins() + 1));
    for (std::size_t r = 0; r < matrix.neurons(); ++r) {
        for (std::size_t c = 0; c < matrix.bins(); ++c) {
            if (c) out += ',';
            out += matrix.at(r, c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

std::vector<SpikeEvent> parse_event_csv(std::istream& in, bool skip_header) {
    auto lines = read_lines(in);
    std::vector<SpikeEvent> events;
    for (std::size_t r = (skip_header && !lines.empty()) ? 1 : 0; r < lines.size(); ++r) {
        if (trim(lines[r]).empty()) continue;
        auto cells = split_commas(lines[r]);
        if (cells.size() != 2) {
            throw DimensionError("event row " + std::to_string(r) + " has " + std::to_string(cells.size()) +
                                 " cells, expected 2");
        }
        auto id_text = trim(cells[0]);
        auto time_text = std::string(trim(cells[1]));
        SpikeEvent ev;
        auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), ev.neuron);
        if (ec != std::errc() || ptr != id_text.data() + id_text.size()) {
            throw ParseError("bad neuron id '" + std::string(id_text) + "' on row " + std::to_string(r));
        }
        try {
            std::size_t used = 0;
            ev.time = std::stod(time_text, &used);
            if (used != time_text.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError("bad timestamp '" + time_text + "' on row " + std::to_string(r));
        }
        events.push_back(ev);
    }
    return events;
}

OccurrenceLog bin_event_list(std::span<const SpikeEvent> events, double dt, std::size_t n) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("bin width dt must be positive and finite");
    std::set<std::pair<BinIndex, Neuron>> cells;
    for (const auto& ev : events) {
        if (ev.neuron >= n) {
            throw DimensionError("neuron id " + std::to_string(ev.neuron) + " out of range for n=" + std::to_string(n));
        }
        if (!(ev.time >= 0.0) || !std::isfinite(ev.time)) {
            throw DimensionError("timestamp must be finite and non-negative");
        }
        cells.emplace(static_cast<BinIndex>(std::floor(ev.time / dt)), ev.neuron);
    }
    if (cells.empty()) return OccurrenceLog(n, {});

    BinIndex last = cells.rbegin()->first;
    std::vector<std::vector<Neuron>> active(static_cast<std::size_t>(last) + 1);
    for (const auto& [bin, neuron] : cells) active[static_cast<std::size_t>(bin)].push_back(neuron);

    std::vector<Bin> bins;
    bins.reserve(active.size());
    for (std::size_t b = 0; b < active.size(); ++b) {
        bins.push_back(Bin{static_cast<BinIndex>(b), Pattern(std::move(active[b]))});
    }
    return OccurrenceLog(n, std::move(bins));
}

Code code_of_log(const OccurrenceLog& log) {
    Code code(log.n());
    for (const auto& bin : log.bins()) {
        if (!bin.active.empty()) code.insert(indicator(bin.active, log.n()));
    }
    return code;
}

SimplicialComplex generated_complex(std::span<const Pattern> patterns, std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<Simplex> generators;
    generators.reserve(patterns.size());
    for (const auto& p : patterns) {
        if (!p.respects(n)) throw DimensionError("pattern " + p.str() + " exceeds n=" + std::to_string(n));
        generators.emplace_back(p.members().begin(), p.members().end());
    }
    return SimplicialComplex(std::move(labels), std::move(generators));
}

}  // namespace hypercode
