#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "hypercode/codes.hpp"
#include "hypercode/error.hpp"
#include "hypercode/homology.hpp"

using namespace hypercode;

TEST_CASE("support of a codeword") {
    CHECK(support(Codeword({1, 0, 1, 1, 0, 1, 1, 1, 0, 0})) == Pattern{0, 2, 3, 5, 6, 7});
    CHECK(support(Codeword({0, 0, 0})).empty());
    CHECK(support(Codeword({1, 1, 1})) == Pattern{0, 1, 2});
    CHECK_THROWS_AS(Codeword({0, 2}), ParseError);
}

TEST_CASE("support inverts indicator for every pattern with n <= 12") {
    for (std::size_t n = 0; n <= 12; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<Neuron> members;
            for (Neuron v = 0; v < n; ++v)
                if (mask >> v & 1) members.push_back(v);
            Pattern p(members);
            REQUIRE(support(indicator(p, n)) == p);
        }
    }
}

TEST_CASE("pattern normalizes its members") {
    Pattern p{5, 1, 3, 1};
    CHECK(p.members() == std::vector<Neuron>{1, 3, 5});
    CHECK(p.respects(6));
    CHECK_FALSE(p.respects(5));
    CHECK(Pattern{1, 3}.subset_of(p));
    CHECK(Pattern{0, 2}.disjoint_from(p));
    CHECK(p.str() == "{1,3,5}");
}

TEST_CASE("parse_spike_matrix") {
    SUBCASE("identity") {
        auto log = parse_spike_matrix("1,0\n0,1");
        CHECK(log.n() == 2);
        CHECK(log.bins() == std::vector<Bin>{{0, Pattern{0}}, {1, Pattern{1}}});
    }
    SUBCASE("triad layout") {
        auto log = fixtures::triad_log();
        using fixtures::kA, fixtures::kB, fixtures::kC;
        CHECK(log.n() == 9);
        CHECK(log.bins() == std::vector<Bin>{{0, kA}, {1, kB}, {2, kC}, {3, kA.united(kB)}, {4, kB.united(kC)},
                                             {5, kA.united(kC)}});
    }
    SUBCASE("illegal cell names row and column") {
        try {
            parse_spike_matrix("1,2");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("row 0, column 1") != std::string::npos);
        }
    }
    SUBCASE("ragged rows") { CHECK_THROWS_AS(parse_spike_matrix("1,0\n1\n"), DimensionError); }
    SUBCASE("header and CRLF") {
        auto log = parse_spike_matrix("t1,t2\r\n1,0\r\n0,0\r\n", true);
        CHECK(log.n() == 2);
        CHECK(log.bins() == std::vector<Bin>{{0, Pattern{0}}, {1, Pattern{}}});
    }
    SUBCASE("empty input") {
        auto log = parse_spike_matrix("");
        CHECK(log.n() == 0);
        CHECK(log.empty());
    }
}

TEST_CASE("parse_spike_matrix inverts render_matrix on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 32)(rng);
        std::size_t cols = std::uniform_int_distribution<std::size_t>(0, 64)(rng);
        double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        SpikeMatrix m(rows, cols);
        std::bernoulli_distribution cell(density);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, cell(rng));
        auto log = parse_spike_matrix(render_matrix(m));
        REQUIRE(log.n() == rows);
        REQUIRE(matrix_of_log(log) == m);
    }
}

TEST_CASE("bin_event_list") {
    SUBCASE("half-open bins") {
        std::vector<SpikeEvent> ev{{0, 0.4}, {1, 0.6}};
        auto log = bin_event_list(ev, 0.5, 2);
        CHECK(log.bins() == std::vector<Bin>{{0, Pattern{0}}, {1, Pattern{1}}});
    }
    SUBCASE("boundary lands in the upper bin") {
        std::vector<SpikeEvent> ev{{0, 0.5}};
        CHECK(bin_event_list(ev, 0.5, 1).bins() == std::vector<Bin>{{0, Pattern{}}, {1, Pattern{0}}});
    }
    SUBCASE("duplicates collapse") {
        std::vector<SpikeEvent> ev{{0, 0.1}, {0, 0.2}};
        CHECK(bin_event_list(ev, 1.0, 1).bins() == std::vector<Bin>{{0, Pattern{0}}});
    }
    SUBCASE("no events") { CHECK(bin_event_list({}, 1.0, 3).empty()); }
    SUBCASE("errors") {
        std::vector<SpikeEvent> ev{{3, 0.1}};
        CHECK_THROWS_AS(bin_event_list(ev, 1.0, 3), DimensionError);
        CHECK_THROWS_AS(bin_event_list({}, 0.0, 3), ConfigError);
        CHECK_THROWS_AS(bin_event_list({}, -1.0, 3), ConfigError);
        std::vector<SpikeEvent> negative{{0, -0.1}};
        CHECK_THROWS_AS(bin_event_list(negative, 1.0, 1), DimensionError);
    }
}

TEST_CASE("bin_event_list ignores event order") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<SpikeEvent> ev;
        std::size_t n = 6;
        for (int k = 0; k < 40; ++k) {
            ev.push_back({static_cast<Neuron>(rng() % n), std::uniform_real_distribution<double>(0.0, 5.0)(rng)});
        }
        auto expected = bin_event_list(ev, 0.25, n);
        std::shuffle(ev.begin(), ev.end(), rng);
        REQUIRE(bin_event_list(ev, 0.25, n) == expected);
    }
}

TEST_CASE("parse_event_csv") {
    std::istringstream in("neuron_id,timestamp\n0,0.4\n1, 0.6\n");
    auto ev = parse_event_csv(in, true);
    REQUIRE(ev.size() == 2);
    CHECK(ev[1].neuron == 1);
    CHECK(ev[1].time == doctest::Approx(0.6));
    std::istringstream bad("0,abc\n");
    CHECK_THROWS_AS(parse_event_csv(bad), ParseError);
}

TEST_CASE("code_of_log") {
    SUBCASE("triad gives six words") {
        auto code = code_of_log(fixtures::triad_log());
        CHECK(code.size() == 6);
        // Enumerate the expected words independently from the fixture columns.
        std::vector<std::string> expected;
        std::istringstream rows(fixtures::kTriadMatrix);
        std::vector<std::string> lines;
        for (std::string l; std::getline(rows, l);) lines.push_back(l);
        for (std::size_t c = 0; c < 6; ++c) {
            std::string w;
            for (const auto& l : lines) w.push_back(l[2 * c]);
            expected.push_back(w);
        }
        std::sort(expected.begin(), expected.end());
        std::vector<std::string> got;
        for (const auto& w : code.words()) got.push_back(w.str());
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
    SUBCASE("duplicates are dropped") {
        OccurrenceLog log(2, {{0, Pattern{0}}, {1, Pattern{0}}});
        CHECK(code_of_log(log).size() == 1);
    }
    SUBCASE("empty bins contribute nothing") {
        OccurrenceLog log(3, {{0, Pattern{}}, {1, Pattern{}}});
        CHECK(code_of_log(log).empty());
    }
}

TEST_CASE("generated_complex") {
    SUBCASE("a simplex is contractible") {
        std::vector<Pattern> p{{0, 1, 2}};
        auto k = generated_complex(p, 3);
        CHECK(k.maximal().size() == 1);
        CHECK(betti(k, 2) == std::vector<std::size_t>{1, 0, 0});
    }
    SUBCASE("hollow triangle") {
        std::vector<Pattern> p{{0, 1}, {1, 2}, {0, 2}};
        CHECK(betti(generated_complex(p, 3), 1) == std::vector<std::size_t>{1, 1});
    }
    SUBCASE("faces are absorbed") {
        std::vector<Pattern> p{{0, 1}, {0, 1, 2}};
        CHECK(generated_complex(p, 3).maximal() == std::vector<Simplex>{{0, 1, 2}});
    }
    SUBCASE("pattern outside n") {
        std::vector<Pattern> p{{0, 5}};
        CHECK_THROWS_AS(generated_complex(p, 3), DimensionError);
    }
}

TEST_CASE("generated_complex never keeps comparable maximal simplices") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 10;
        std::vector<Pattern> patterns;
        for (int k = 0, m = static_cast<int>(rng() % 12); k < m; ++k) {
            std::vector<Neuron> members;
            for (Neuron v = 0; v < n; ++v)
                if (rng() % 3 == 0) members.push_back(v);
            patterns.emplace_back(members);
        }
        auto k = generated_complex(patterns, n);
        const auto& max = k.maximal();
        for (std::size_t a = 0; a < max.size(); ++a)
            for (std::size_t b = 0; b < max.size(); ++b)
                if (a != b) REQUIRE_FALSE(is_face_of(max[a], max[b]));
        for (const auto& p : patterns) {
            REQUIRE(k.contains(Simplex(p.members().begin(), p.members().end())));
        }
    }
}
