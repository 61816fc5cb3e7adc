// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hypercode/compare.hpp"
#include "hypercode/homology.hpp"
#include "hypercode/io.hpp"
#include "hypercode/synth.hpp"
#include "hypercode/topology.hpp"
#include "oracles.hpp"

using namespace hypercode;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<oracle::VertexSet> as_oracle(const SimplicialComplex& k) {
    std::vector<oracle::VertexSet> out;
    for (const auto& s : k.maximal()) out.emplace_back(s.begin(), s.end());
    return out;
}

std::int64_t alternating_sum(const std::vector<std::size_t>& b) {
    std::int64_t s = 0;
    for (std::size_t d = 0; d < b.size(); ++d) s += (d % 2 ? -1 : 1) * static_cast<std::int64_t>(b[d]);
    return s;
}

std::int64_t alternating_faces(const SimplicialComplex& k) {
    std::int64_t s = 0;
    for (int d = 0; d <= k.dim(); ++d) s += (d % 2 ? -1 : 1) * static_cast<std::int64_t>(k.face_count(d));
    return s;
}

// Every complex seen by criteria 1-4, for the Euler check.
std::vector<SimplicialComplex> seen;

std::string c1(bool& ok) {
    auto t0 = Clock::now();
    auto h = fixtures::triad();
    auto b1 = betti(level_complex(h, 1), 2);
    auto b2 = betti(level_complex(h, 2), 1);
    double took = seconds_since(t0);
    seen.push_back(level_complex(h, 1));
    seen.push_back(level_complex(h, 2));
    ok = h.depth() == 2 && h.level(1).size() == 3 && h.level(2).size() == 3 &&
         b1 == std::vector<std::size_t>{3, 0, 0} && b2 == std::vector<std::size_t>{1, 1} && took < 1.0;
    return "sizes " + std::to_string(h.level(1).size()) + "," + std::to_string(h.depth() >= 2 ? h.level(2).size() : 0) +
           ", " + std::to_string(took) + " s";
}

std::string c2(bool& ok) {
    auto h = fixtures::triad();
    auto pair = nerve(h);
    NerveConfig cc;
    cc.rule = NerveRule::Connected;
    auto conn = nerve(h, cc);
    seen.push_back(pair);
    std::vector<Simplex> want{{0}, {1}, {2}, {3, 4, 5}};
    ok = pair.labels().size() == 6 && pair.maximal() == want && betti(pair, 2) == std::vector<std::size_t>{4, 0, 0} &&
         conn == pair;
    return std::to_string(pair.labels().size()) + " vertices, " + std::to_string(pair.maximal().size()) + " maximal";
}

std::string c3(bool& ok) {
    std::mt19937 rng(3003);
    auto t0 = Clock::now();
    int bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t nv = 1 + rng() % 8;
        std::vector<Simplex> gens;
        for (int g = 0, m = 1 + static_cast<int>(rng() % 6); g < m; ++g) {
            Simplex s;
            for (Vertex v = 0; v < nv; ++v)
                if (rng() % 2) s.push_back(v);
            while (s.size() > 4) s.erase(s.begin() + static_cast<std::ptrdiff_t>(rng() % s.size()));
            if (s.empty()) s.push_back(static_cast<Vertex>(rng() % nv));
            gens.push_back(s);
        }
        std::vector<std::string> labels;
        for (std::size_t v = 0; v < nv; ++v) labels.push_back(std::to_string(v));
        SimplicialComplex k(labels, gens);
        seen.push_back(k);
        if (betti(k, k.dim()) != oracle::dense_betti(as_oracle(k), k.dim())) ++bad;
    }
    double took = seconds_since(t0);
    ok = bad == 0 && took < 10.0;
    return std::to_string(bad) + " mismatches, " + std::to_string(took) + " s";
}

std::string c4(bool& ok) {
    std::mt19937 rng(4004);
    int bad = 0, checks = 0;
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + rng() % 9;
        std::vector<Bin> bins;
        for (int p = 0, m = 1 + static_cast<int>(rng() % 6); p < m; ++p) {
            std::vector<Neuron> members;
            for (Neuron v = 0; v < n; ++v)
                if (rng() % 3 == 0) members.push_back(v);
            while (members.size() > 5) members.erase(members.begin() + static_cast<std::ptrdiff_t>(rng() % members.size()));
            if (members.empty()) members.push_back(static_cast<Neuron>(rng() % n));
            for (int c = 0, reps = 1 + static_cast<int>(rng() % 5); c < reps; ++c)
                bins.push_back(Bin{0, Pattern(members)});
        }
        std::shuffle(bins.begin(), bins.end(), rng);
        for (std::size_t t = 0; t < bins.size(); ++t) bins[t].index = static_cast<BinIndex>(t);
        BuildConfig cfg;
        cfg.max_level = 1;
        auto h = build_hyperstructure(OccurrenceLog(n, bins), cfg);
        auto f = frequency_filtration(h, 1);
        auto bars = persistence(f);
        for (double theta : f.values()) {
            auto sub = f.sublevel(theta);
            seen.push_back(sub);
            auto want = betti(sub, sub.dim());
            for (int d = 0; d <= sub.dim(); ++d) {
                ++checks;
                std::size_t alive = 0;
                for (const auto& iv : bars.intervals)
                    if (iv.dim == d && iv.contains(theta)) ++alive;
                if (alive != want[static_cast<std::size_t>(d)]) ++bad;
            }
        }
    }
    ok = bad == 0;
    return std::to_string(bad) + " of " + std::to_string(checks) + " (level, dim) counts differ";
}

std::string c5(bool& ok) {
    int bad = 0;
    for (const auto& k : seen) {
        if (k.empty()) continue;
        if (alternating_sum(betti(k, k.dim())) != alternating_faces(k)) ++bad;
    }
    ok = bad == 0;
    return std::to_string(seen.size()) + " complexes, " + std::to_string(bad) + " failures";
}

std::string c6(bool& ok) {
    std::mt19937 rng(6006);
    int bad = 0;
    for (int trial = 0; trial < 20; ++trial) {
        SynthSpec s;
        s.n = 10 + rng() % 15;
        s.seed = rng();
        std::vector<Neuron> perm(s.n);
        for (Neuron v = 0; v < s.n; ++v) perm[v] = v;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::size_t count = 2 + rng() % 3, pos = 0;
        for (std::size_t p = 0; p < count; ++p) {
            std::size_t size = 1 + rng() % 3;
            s.patterns.push_back({"P" + std::to_string(p),
                                  Pattern(std::vector<Neuron>(perm.begin() + static_cast<std::ptrdiff_t>(pos),
                                                              perm.begin() + static_cast<std::ptrdiff_t>(pos + size)))});
            pos += size;
        }
        std::size_t bin = 0;
        for (const auto& p : s.patterns) s.schedule.push_back({bin++, {p.name}});
        std::set<std::set<Pattern>> planted2;
        for (int k = 0; k < 8; ++k) {
            std::size_t a = rng() % count, b = rng() % count;
            if (a == b) continue;
            s.schedule.push_back({bin++, {s.patterns[a].name, s.patterns[b].name}});
            planted2.insert({s.patterns[a].members, s.patterns[b].members});
        }
        auto h = build_hyperstructure(log_of_matrix(synth_generate(s)));
        std::set<Pattern> found1, planted1;
        for (const auto& p : s.patterns) planted1.insert(p.members);
        for (const auto& b : h.level(1))
            found1.insert(Pattern(std::vector<Neuron>(b.constituents.begin(), b.constituents.end())));
        std::set<std::set<Pattern>> found2;
        if (h.depth() >= 2) {
            for (const auto& b : h.level(2)) {
                std::set<Pattern> group;
                for (auto id : b.constituents) {
                    const auto& c = h.bond(1, id).constituents;
                    group.insert(Pattern(std::vector<Neuron>(c.begin(), c.end())));
                }
                found2.insert(group);
            }
        }
        // Equal sets means precision and recall are both 1.
        if (found1 != planted1 || found2 != planted2) ++bad;
    }
    ok = bad == 0;
    return std::to_string(bad) + " of 20 specs not recovered exactly";
}

std::string c7(bool& ok) {
    auto a = fixtures::triad();
    auto self = compare_levels(a, a);
    bool self_ok = !self.levels.empty();
    for (const auto& l : self.levels) self_ok = self_ok && l.map_status == MapStatus::Bijective && l.jaccard == 1.0;
    auto r = compare_levels(a, build_hyperstructure(fixtures::triad_without_t6()));
    bool drop_ok = r.levels.size() == 2 && r.levels[1].size_a == 3 && r.levels[1].size_b == 2 && r.levels[1].shared == 2;
    ok = self_ok && drop_ok;
    return std::string("self ") + (self_ok ? "ok" : "bad") + ", minus last bin " + (drop_ok ? "ok" : "bad");
}

std::string c8(bool& ok) {
    auto pipeline = [] {
        auto log = parse_spike_matrix(fixtures::kTriadMatrix);
        auto h = build_hyperstructure(log);
        return io::dump(io::to_json(log)) + io::dump(io::to_json(h)) + io::barcode_csv(barcode_sequence(h)) +
               io::dump(io::to_json(compare_levels(h, h)));
    };
    auto first = pipeline();
    auto second = pipeline();
    ok = first == second;
    return std::to_string(first.size()) + " bytes";
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<std::string(bool&)> run;
    };
    std::vector<Criterion> criteria{
        {"1 triad level sizes and Betti numbers", c1},
        {"2 triad nerve", c2},
        {"3 Betti numbers vs dense oracle", c3},
        {"4 barcodes vs sublevel Betti numbers", c4},
        {"5 Euler characteristic", c5},
        {"6 planted pattern recovery", c6},
        {"7 comparison", c7},
        {"8 determinism", c8},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        bool ok = false;
        std::string detail;
        try {
            detail = c.run(ok);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  %s  (%s)\n", ok ? "PASS" : "FAIL", c.name, detail.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
