#include "hypercode/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hypercode/error.hpp"

namespace hypercode::io {

namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

template <typename T>
std::vector<T> array_of(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a JSON array");
    return j.get<std::vector<T>>();
}

}  // namespace

Json to_json(const OccurrenceLog& log) {
    Json bins = Json::array();
    for (const auto& b : log.bins()) bins.push_back(Json{{"index", b.index}, {"active", b.active.members()}});
    return Json{{"n", log.n()}, {"bins", std::move(bins)}};
}

OccurrenceLog log_from_json(const Json& j) {
    return guarded("log", [&] {
        std::vector<Bin> bins;
        for (const auto& b : j.at("bins")) {
            bins.push_back(Bin{b.at("index").get<BinIndex>(), Pattern(array_of<Neuron>(b.at("active")))});
        }
        return OccurrenceLog(j.at("n").get<std::size_t>(), std::move(bins));
    });
}

Json to_json(const BuildConfig& c) {
    return Json{{"max_level", c.max_level},
                {"decomposition", to_string(c.decomposition)},
                {"min_count", c.min_count},
                {"two_pass", c.two_pass},
                {"keep_union_words", c.keep_union_words},
                {"cover_budget", c.cover_budget}};
}

BuildConfig build_config_from_json(const Json& j) {
    return guarded("config", [&] {
        BuildConfig c;
        c.max_level = j.at("max_level").get<int>();
        c.decomposition = decomposition_from_string(j.at("decomposition").get<std::string>());
        c.min_count = j.at("min_count").get<std::int64_t>();
        c.two_pass = j.value("two_pass", false);
        c.keep_union_words = j.value("keep_union_words", false);
        c.cover_budget = j.value("cover_budget", c.cover_budget);
        c.validate();
        return c;
    });
}

Json to_json(const Hyperstructure& h) {
    Json levels = Json::array();
    for (const auto& level : h.levels()) {
        Json bonds = Json::array();
        for (const auto& b : level) {
            bonds.push_back(Json{{"id", b.id}, {"constituents", b.constituents}, {"count", b.count}, {"bins", b.bins}});
        }
        levels.push_back(std::move(bonds));
    }
    return Json{{"n", h.n()}, {"config", to_json(h.config())}, {"levels", std::move(levels)}};
}

Hyperstructure hyperstructure_from_json(const Json& j) {
    return guarded("hyperstructure", [&] {
        std::vector<std::vector<Bond>> levels;
        int level = 0;
        for (const auto& lj : j.at("levels")) {
            ++level;
            std::vector<Bond> bonds;
            for (const auto& bj : lj) {
                Bond b;
                b.id = bj.at("id").get<BondId>();
                b.level = level;
                b.constituents = array_of<std::uint32_t>(bj.at("constituents"));
                b.count = bj.at("count").get<std::int64_t>();
                b.bins = array_of<BinIndex>(bj.at("bins"));
                bonds.push_back(std::move(b));
            }
            levels.push_back(std::move(bonds));
        }
        try {
            return Hyperstructure(j.at("n").get<std::size_t>(), build_config_from_json(j.at("config")),
                                  std::move(levels));
        } catch (const InvariantError& e) {
            throw ParseError(std::string("inconsistent hyperstructure: ") + e.what());
        }
    });
}

Json to_json(const SimplicialComplex& k) {
    Json maximal = Json::array();
    for (const auto& s : k.maximal()) maximal.push_back(s);
    return Json{{"vertices", k.labels()}, {"maximal", std::move(maximal)}};
}

SimplicialComplex complex_from_json(const Json& j) {
    return guarded("complex", [&] {
        std::vector<Simplex> gens;
        for (const auto& s : j.at("maximal")) gens.push_back(array_of<Vertex>(s));
        return SimplicialComplex(array_of<std::string>(j.at("vertices")), std::move(gens));
    });
}

Json to_json(const Correspondence& c) {
    Json map = Json::array();
    for (std::size_t id = 0; id < c.map.size(); ++id) map.push_back(Json{{"bond", id}, {"image", c.map[id]}});
    return Json{{"from_level", c.from_level}, {"to_level", c.to_level}, {"map", std::move(map)}};
}

Json to_json(const ComparisonReport& r) {
    Json levels = Json::array();
    for (const auto& l : r.levels) {
        levels.push_back(Json{{"level", l.level},
                              {"size_a", l.size_a},
                              {"size_b", l.size_b},
                              {"shared", l.shared},
                              {"jaccard", l.jaccard},
                              {"map_status", to_string(l.map_status)},
                              {"betti_a", l.betti_a},
                              {"betti_b", l.betti_b}});
    }
    Json out{{"levels", std::move(levels)}};
    if (r.nerve_betti_a) {
        out["nerve_betti_a"] = *r.nerve_betti_a;
        out["nerve_betti_b"] = *r.nerve_betti_b;
    }
    return out;
}

SynthSpec synth_spec_from_json(const Json& j) {
    return guarded("synth spec", [&] {
        SynthSpec s;
        s.n = j.at("n").get<std::size_t>();
        for (const auto& p : j.at("patterns")) {
            s.patterns.push_back(NamedPattern{p.at("name").get<std::string>(), Pattern(array_of<Neuron>(p.at("members")))});
        }
        for (const auto& b : j.at("schedule")) {
            s.schedule.push_back(ScheduledBin{b.at("bin").get<std::size_t>(), array_of<std::string>(b.at("patterns"))});
        }
        s.noise_rate = j.value("noise_rate", 0.0);
        s.seed = j.value("seed", std::uint64_t{0});
        s.validate();
        return s;
    });
}

Json to_json(const SynthSpec& s) {
    Json patterns = Json::array();
    for (const auto& p : s.patterns) patterns.push_back(Json{{"name", p.name}, {"members", p.members.members()}});
    Json schedule = Json::array();
    for (const auto& b : s.schedule) schedule.push_back(Json{{"bin", b.bin}, {"patterns", b.patterns}});
    return Json{{"n", s.n},
                {"patterns", std::move(patterns)},
                {"schedule", std::move(schedule)},
                {"noise_rate", s.noise_rate},
                {"seed", s.seed}};
}

std::string format_real(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

std::string barcode_csv(const std::vector<LevelBarcode>& bars) {
    struct Row {
        int level;
        Interval iv;
    };
    std::vector<Row> rows;
    for (const auto& lb : bars)
        for (const auto& iv : lb.barcode.intervals) rows.push_back(Row{lb.level, iv});
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.level != b.level) return a.level < b.level;
        if (a.iv.dim != b.iv.dim) return a.iv.dim < b.iv.dim;
        if (a.iv.birth != b.iv.birth) return a.iv.birth < b.iv.birth;
        return a.iv.death < b.iv.death;
    });
    std::string out = "level,dim,birth,death\n";
    for (const auto& r : rows) {
        out += std::to_string(r.level) + "," + std::to_string(r.iv.dim) + "," + format_real(r.iv.birth) + "," +
               format_real(r.iv.death) + "\n";
    }
    return out;
}

std::vector<LevelBarcode> barcodes_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "level,dim,birth,death") throw ParseError("missing barcode CSV header");
    std::vector<LevelBarcode> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string level, dim, birth, death;
        if (!std::getline(row, level, ',') || !std::getline(row, dim, ',') || !std::getline(row, birth, ',') ||
            !std::getline(row, death)) {
            throw ParseError("barcode row '" + line + "' needs four fields");
        }
        try {
            int l = std::stoi(level);
            if (out.empty() || out.back().level != l) out.push_back(LevelBarcode{l, {}});
            out.back().barcode.intervals.push_back(
                Interval{std::stoi(dim), std::stod(birth), death == "inf" ? kInfinity : std::stod(death)});
        } catch (const std::logic_error&) {
            throw ParseError("barcode row '" + line + "' is not numeric");
        }
    }
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << contents;
    if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace hypercode::io
