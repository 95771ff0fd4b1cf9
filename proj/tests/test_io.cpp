#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracle.hpp"
#include "srlc/io.hpp"

using namespace srlc;

TEST_CASE("text format", "[io]") {
    const auto k = parse_complex("# a circle\n3\n1 2\n2 3  # edge\n\n1 3\n");
    CHECK(k == SimplicialComplex::simplex_boundary(3));
    CHECK(emit_text(k) == "3\n1 2\n1 3\n2 3\n");
    CHECK(parse_complex("4\n").face_count() == 1);
    CHECK(parse_complex("2\nvoid\n").is_void());
    CHECK(emit_text(SimplicialComplex::void_complex(2)) == "2\nvoid\n");
}

TEST_CASE("text errors carry the line number", "[io]") {
    try {
        (void)parse_complex("3\n1 2\n2 9\n");
        FAIL("no error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_complex(""), InputError);
    CHECK_THROWS_AS(parse_complex("3\n1 x\n"), InputError);
    CHECK_THROWS_AS(parse_complex("65\n"), InputError);
    CHECK_THROWS_AS(parse_complex("2\nvoid\n1\n"), InputError);
}

TEST_CASE("json format", "[io]") {
    const auto k = parse_complex(R"({"vertices": 3, "facets": [[1,2],[2,3]]})");
    CHECK(k == SimplicialComplex::from_facets(3, std::vector<std::vector<int>>{{1, 2}, {2, 3}}));
    CHECK(emit_json(k) == "{\"facets\":[[1,2],[2,3]],\"vertices\":3}\n");
    CHECK(parse_complex(R"({"vertices": 2, "void": true})").is_void());
    CHECK_THROWS_AS(parse_complex(R"({"vertices": 2, "facets": [[3]]})"), InputError);
    CHECK_THROWS_AS(parse_complex(R"({"facets": []})"), InputError);
    CHECK_THROWS_AS(parse_complex("{oops"), InputError);
}

TEST_CASE("emit then parse is the identity", "[io][property]") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto k = oracle::random_complex(rng, n, 5);
        CHECK(parse_complex(emit_text(k)) == k);
        CHECK(parse_complex(emit_json(k)) == k);
        CHECK(emit_text(parse_complex(emit_text(k))) == emit_text(k));
    }
    const auto v = SimplicialComplex::void_complex(3);
    CHECK(parse_complex(emit_text(v)) == v);
    CHECK(parse_complex(emit_json(v)) == v);
}
