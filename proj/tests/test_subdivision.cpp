#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracle.hpp"
#include "srlc/cohomology.hpp"
#include "srlc/subdivision.hpp"

using namespace srlc;

namespace {

SimplicialComplex facets(int n, std::vector<std::vector<int>> f) { return SimplicialComplex::from_facets(n, f); }

std::vector<std::size_t> f_counts(const SimplicialComplex& k) {
    std::vector<std::size_t> out;
    for (Face f : k.faces()) {
        if (f.empty()) continue;
        const auto s = static_cast<std::size_t>(f.size());
        if (out.size() < s) out.resize(s, 0);
        ++out[s - 1];
    }
    return out;
}

/// Chains of the subdivision translated back to label vectors of the source faces.
std::set<std::vector<oracle::Labels>> chains_of(const Subdivision& sd) {
    std::set<std::vector<oracle::Labels>> out;
    for (Face f : sd.complex.faces()) {
        if (f.empty()) continue;
        std::vector<oracle::Labels> chain;
        for (Face g : sd.chain(f)) chain.push_back(g.labels());
        out.insert(chain);
    }
    return out;
}

}  // namespace

TEST_CASE("barycentric subdivision face counts", "[subdivision]") {
    CHECK(f_counts(barycentric(facets(2, {{1, 2}})).complex) == std::vector<std::size_t>{3, 2});
    CHECK(f_counts(barycentric(SimplicialComplex::full_simplex(3)).complex) == std::vector<std::size_t>{7, 12, 6});
    CHECK(f_counts(barycentric(facets(1, {{1}})).complex) == std::vector<std::size_t>{1});
    CHECK(barycentric(SimplicialComplex::empty_complex(2)).complex.face_count() == 1);
    CHECK_THROWS_AS(barycentric(SimplicialComplex::void_complex(2)), VoidComplexError);
}

TEST_CASE("labels follow the canonical order of source faces", "[subdivision]") {
    const auto sd = barycentric(facets(2, {{1, 2}}));
    CHECK(sd.source_face(1) == Face{1});
    CHECK(sd.source_face(2) == Face{2});
    CHECK(sd.source_face(3) == Face{1, 2});
    CHECK(sd.label_of(Face{1, 2}) == 3);
    CHECK(sd.label_of(Face{}) == 0);
}

TEST_CASE("subdivision with Σ removed", "[subdivision]") {
    const auto triangle = SimplicialComplex::full_simplex(3);
    CHECK(sd_minus(triangle, SimplicialComplex::empty_complex(3)).complex == barycentric(triangle).complex);
    CHECK(sd_minus(triangle, SimplicialComplex::void_complex(3)).complex == barycentric(triangle).complex);

    // Σ = closed edge {1,2}: what is left is a cone from b_3, two triangles
    const auto x = sd_minus(triangle, facets(3, {{1, 2}}));
    CHECK(f_counts(x.complex) == std::vector<std::size_t>{4, 5, 2});
    CHECK(reduced_cohomology_dims(x.complex, FieldSpec::rationals()) == std::vector<std::size_t>{0, 0, 0, 0});

    // Σ = Δ leaves only the augmentation
    CHECK(sd_minus(triangle, triangle).complex.face_count() == 1);
    CHECK_THROWS_AS(sd_minus(facets(3, {{1, 2}}), triangle), InputError);
}

TEST_CASE("collapse sweeps on small complexes", "[subdivision][collapse]") {
    SECTION("a circle has no free edge") {
        const auto s = collapse_sweep(SimplicialComplex::simplex_boundary(3), {1});
        CHECK(s.stuck);
        CHECK(s.stuck_dimension == 1);
        CHECK(s.obstruction.size() == 3);
        CHECK(s.removed_pairs.empty());
    }
    SECTION("a triangle collapses through its first edge") {
        const auto s = collapse_sweep(SimplicialComplex::full_simplex(3), {2});
        CHECK_FALSE(s.stuck);
        REQUIRE(s.removed_pairs.size() == 1);
        CHECK(s.removed_pairs[0] == CollapsePair{Face{1, 2}, Face{1, 2, 3}});
        CHECK(collapsed_below(s, 2));
        CHECK_FALSE(collapsed_below(s, 1));
    }
    SECTION("the cone left by an edge of Σ shrinks to the top barycenter") {
        const auto triangle = SimplicialComplex::full_simplex(3);
        const auto x = sd_minus(triangle, facets(3, {{1, 2}}));
        const auto s = collapse_sweep(x.complex, {2, 1});
        CHECK_FALSE(s.stuck);
        CHECK(s.removed_pairs.size() == 5);
        REQUIRE(s.current.facets().size() == 1);
        const Face last = s.current.facets()[0];
        REQUIRE(last.size() == 1);
        CHECK(x.source_face(last.min_label()) == Face{1, 2, 3});
    }
    SECTION("bad targets") {
        CHECK_THROWS_AS(collapse_sweep(SimplicialComplex::full_simplex(2), {}), InputError);
        CHECK_THROWS_AS(collapse_sweep(SimplicialComplex::full_simplex(2), {0}), InputError);
    }
    SECTION("replay rejects a step that is not elementary") {
        const auto k = SimplicialComplex::full_simplex(3);
        CHECK_FALSE(replay_collapse(k, {{Face{1}, Face{1, 2}}}).has_value());
        CHECK(replay_collapse(k, {{Face{1, 2}, Face{1, 2, 3}}}).has_value());
    }
}

TEST_CASE("subdivisions against brute-force chains", "[subdivision][property]") {
    std::mt19937_64 rng(4242);
    const FieldSpec q = FieldSpec::rationals();
    const FieldSpec f2 = FieldSpec::prime(2);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const auto k = oracle::random_complex(rng, n, 3);
        const auto kf = oracle::faces_of(k);
        const auto sd = barycentric(k);
        CHECK(chains_of(sd) == oracle::chains(kf));

        // Sd(K) has the cohomology of K
        for (const auto& field : {q, f2}) {
            const auto a = reduced_cohomology_dims(k, field);
            const auto b = reduced_cohomology_dims(sd.complex, field);
            for (int deg = -1; deg <= 5; ++deg) CHECK(oracle::betti_at(a, deg) == oracle::betti_at(b, deg));
        }

        // Sd(K − S): chains none of whose faces lie in S
        const auto s = oracle::random_subcomplex(rng, k);
        const auto sf = oracle::faces_of(s);
        std::set<std::vector<oracle::Labels>> expected;
        for (const auto& chain : oracle::chains(kf)) {
            bool avoids = true;
            for (const auto& f : chain) avoids = avoids && !sf.contains(f);
            if (avoids) expected.insert(chain);
        }
        const auto x = sd_minus(k, s);
        CHECK(chains_of(x) == expected);

        // monotone in S: a larger S leaves a smaller complex
        const auto bigger = intersection(k, SimplicialComplex::from_facets(
                                                n, [&] {
                                                    std::vector<VertexSet> g(s.facets().begin(), s.facets().end());
                                                    g.push_back(k.faces()[rng() % k.face_count()]);
                                                    return g;
                                                }()));
        CHECK(is_subcomplex(sd_minus(k, bigger).complex, x.complex));

        // collapses are sound and keep the cohomology
        if (x.complex.face_count() > 1 && x.complex.dim() >= 1) {
            std::vector<int> targets;
            for (int d = x.complex.dim(); d >= 1; --d) targets.push_back(d);
            const auto st = collapse_sweep(x.complex, targets);
            const auto replayed = replay_collapse(x.complex, st.removed_pairs);
            REQUIRE(replayed.has_value());
            CHECK(*replayed == st.current);
            const auto before = reduced_cohomology_dims(x.complex, q);
            const auto after = reduced_cohomology_dims(st.current, q);
            for (int deg = -1; deg <= 5; ++deg) CHECK(oracle::betti_at(before, deg) == oracle::betti_at(after, deg));
            CHECK(collapsed_below(st, targets.back()) == !st.stuck);
        }
    }
}
