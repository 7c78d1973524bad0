// Copyright 2026 The xsstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace xsstab;
using namespace xsstab::fixtures;

namespace {

LatticeModel tqd_model(size_t L, Boundary b, size_t layers, const std::vector<std::string> &cocycle) {
    LatticeSpec spec{L, L, b, layers, {}};
    for (const auto &c : cocycle) {
        spec.cocycle.push_back(CocycleTerm::parse(c));
    }
    return tqd(spec);
}

GeneratingSet triangle_group(const LatticeModel &m) {
    GeneratingSet T(m.gens.n);
    for (size_t i : m.triangle_gens) {
        T.add(m.gens.gens[i]);
    }
    for (size_t i : m.coupling_gens) {
        T.add(m.gens.gens[i]);
    }
    for (size_t i : m.boundary_gens) {
        T.add(m.gens.gens[i]);
    }
    return T;
}

}  // namespace

TEST(SixQubit, Structure) {
    auto cs = analyze(six_qubit());
    EXPECT_TRUE(cs.regular);
    EXPECT_EQ(cs.t, 3u);
    EXPECT_EQ(cs.d, 1u);
    EXPECT_EQ(basis_states(six_qubit())[0].f.str(), "(-1)^{x1 x2 x3}");
}

TEST(SixQubit, DenseStateMatchesReference) {
    auto fs = fixed_space(six_qubit());
    ASSERT_EQ(fs.size(), 1u);
    EXPECT_TRUE(same_state(fs[0], six_qubit_reference()));
}

TEST(Semion, TorusTwoByTwo) {
    auto m = doubled_semion(2, 2, Boundary::Torus);
    EXPECT_TRUE(is_admissible(m.gens).admissible);
    auto cs = analyze(m.gens);
    EXPECT_TRUE(cs.regular);
    EXPECT_EQ(cs.d, 4u);
    EXPECT_EQ(fixed_space(m.gens).size(), 4u);
}

TEST(Semion, OpenPatchesAreUnique) {
    for (size_t L : {2, 3}) {
        auto m = doubled_semion(L, L, Boundary::Open);
        EXPECT_TRUE(is_admissible(m.gens).admissible) << L;
        auto cs = analyze(m.gens);
        EXPECT_TRUE(cs.regular) << L;
        EXPECT_EQ(cs.d, 1u) << L;
    }
    EXPECT_EQ(doubled_semion(2, 2, Boundary::Open).gens.n, 29u);
}

TEST(Semion, BulkVertexShape) {
    auto m = doubled_semion(3, 3, Boundary::Torus);
    detail::TriangularLattice lat(3, 3, Boundary::Torus);
    for (size_t s = 0; s < lat.num_vertices(); s++) {
        const auto &g = m.gens.gens[m.vertex_gens[s]];
        auto st = lat.star(s);
        for (size_t p = 0; p < 12; p++) {
            EXPECT_EQ(g.xmask().get(st[p]), p < 6);
            EXPECT_EQ(g.b(st[p]), p < 6 ? 2 : 1) << "edge " << p + 1;
        }
        EXPECT_EQ(g.support().ones().size(), 12u);
    }
}

TEST(Semion, TorusVertexProductIsTriangleProduct) {
    auto m = doubled_semion(3, 3, Boundary::Torus);
    auto p = vertex_product(m, 1, 0);
    EXPECT_TRUE(p.is_diagonal());
    EXPECT_TRUE(contains(triangle_group(m), p));
}

TEST(Tqd, AllModelsAdmissible) {
    for (auto b : {Boundary::Torus, Boundary::Open}) {
        EXPECT_TRUE(is_admissible(tqd_model(2, b, 1, {"w1"}).gens).admissible);
        EXPECT_TRUE(is_admissible(tqd_model(3, b, 2, {"w12"}).gens).admissible);
        EXPECT_TRUE(is_admissible(tqd_model(2, b, 2, {"w1", "w2", "w12"}).gens).admissible);
        EXPECT_TRUE(is_admissible(tqd_model(2, b, 3, {"w123"}).gens).admissible);
    }
}

TEST(Tqd, W123TorusIsNotRegular) {
    auto m = tqd_model(2, Boundary::Torus, 3, {"w123"});
    EXPECT_FALSE(is_regular(m.gens));
}

TEST(Tqd, W123OpenIsRegular) {
    for (size_t L : {2, 4}) {
        auto m = tqd_model(L, Boundary::Open, 3, {"w123"});
        auto cs = analyze(m.gens);
        EXPECT_TRUE(cs.regular) << L;
        EXPECT_EQ(cs.d, 1u) << L;
    }
    EXPECT_EQ(tqd_model(4, Boundary::Open, 3, {"w123"}).gens.n, 339u);
}

TEST(Tqd, W12VertexGenerator) {
    auto m = tqd_model(3, Boundary::Torus, 2, {"w12"});
    detail::TriangularLattice lat(3, 3, Boundary::Torus);
    const size_t E = lat.num_edges();
    EXPECT_EQ(m.gens.n, 2 * E + m.num_ancillas);
    const int layer2[12] = {0, 0, 0, 3, 2, 3, 0, 0, 0, 3, 3, 0};
    for (size_t s = 0; s < lat.num_vertices(); s++) {
        const auto &g = m.gens.gens[m.vertex_gens[s * 2]];
        EXPECT_EQ(g.phase(), 0);
        BitVector edges(m.gens.n);
        auto st = lat.star(s);
        for (size_t p = 0; p < 12; p++) {
            EXPECT_EQ(g.xmask().get(st[p]), p < 6);
            EXPECT_EQ(g.b(st[p]), 0);
            EXPECT_FALSE(g.xmask().get(E + st[p]));
            EXPECT_EQ(g.b(E + st[p]), layer2[p]) << "edge " << p + 1;
            edges.set(st[p]);
            edges.set(E + st[p]);
        }
        for (size_t q : g.support().ones()) {
            if (!edges.get(q)) {
                EXPECT_GE(q, 2 * E);
                EXPECT_TRUE(g.xmask().get(q));
                EXPECT_EQ(g.b(q), 0);
            }
        }
        EXPECT_EQ(g.support().ones().size(), 15u);
    }
}

TEST(Tqd, W12TorusDegeneracy) {
    auto cs = analyze(tqd_model(3, Boundary::Torus, 2, {"w12"}).gens);
    EXPECT_TRUE(cs.regular);
    EXPECT_EQ(cs.d, 16u);
}

TEST(Tqd, TorusRelationForTwoLayers) {
    for (const auto &coc : std::vector<std::vector<std::string>>{{"w1"}, {"w12"}, {"w1", "w2", "w12"}}) {
        size_t K = coc.size() == 1 && coc[0] == "w1" ? 1 : 2;
        auto m = tqd_model(2, Boundary::Torus, K, coc);
        auto T = triangle_group(m);
        for (size_t l = 0; l < K; l++) {
            auto p = vertex_product(m, K, l);
            EXPECT_TRUE(p.is_diagonal());
            EXPECT_TRUE(contains(T, p)) << coc.back() << " layer " << l;
        }
    }
}

TEST(Tqd, W123TorusRelationHasSFactors) {
    auto m = tqd_model(2, Boundary::Torus, 3, {"w123"});
    bool odd = false;
    for (size_t l = 0; l < 3; l++) {
        auto p = vertex_product(m, 3, l);
        EXPECT_TRUE(p.is_diagonal());
        odd = odd || !p.has_even_sexp();
    }
    EXPECT_TRUE(odd);
}

TEST(Tqd, RejectsBadCocycles) {
    EXPECT_THROW(CocycleTerm::parse("w11"), std::invalid_argument);
    EXPECT_THROW(CocycleTerm::parse("x12"), std::invalid_argument);
    EXPECT_THROW(CocycleTerm::parse("w"), std::invalid_argument);
    EXPECT_THROW(tqd_model(2, Boundary::Torus, 2, {"w123"}), std::invalid_argument);
    EXPECT_THROW(tqd_model(1, Boundary::Torus, 1, {"w1"}), std::invalid_argument);
    EXPECT_EQ(CocycleTerm::parse("w12").str(), "w12");
    EXPECT_EQ(CocycleTerm::parse("w3").str(), "w3");
}

TEST(ReedMuller, BothVariantsHaveDimensionTwo) {
    auto rm = reed_muller_15();
    auto a = analyze(rm.xs), b = analyze(rm.pauli);
    EXPECT_EQ(a.d, 2u);
    EXPECT_EQ(b.d, 2u);
    auto fa = fixed_space(rm.xs), fb = fixed_space(rm.pauli);
    ASSERT_EQ(fa.size(), 2u);
    ASSERT_EQ(fb.size(), 2u);
    EXPECT_LT(projector_distance(fa, fb), 1e-8);
}

TEST(ReedMuller, WeightEightRowsSquareToIdentity) {
    auto rm = reed_muller_15();
    for (size_t j = 0; j < 4; j++) {
        const auto &g = rm.xs.gens[j];
        EXPECT_EQ(g.xmask().ones().size(), 8u);
        EXPECT_TRUE(square(g).is_identity());
        EXPECT_TRUE(has_plus_one_eigenvalue(g));
    }
    EXPECT_TRUE(is_admissible(rm.xs).admissible);
}

TEST(Sat, SingleClause) {
    auto r = decide_existence(sat_encode(3, {{0, 1, 2}}));
    ASSERT_TRUE(r.exists);
    EXPECT_EQ(r.witness.ones().size(), 1u);
}

TEST(Sat, FourClausesUnsatisfiable) {
    auto S = sat_encode(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    EXPECT_FALSE(decide_existence(S).exists);
    EXPECT_EQ(fixed_space(S).size(), 0u);
}

TEST(Sat, EmptyInstance) {
    auto r = decide_existence(sat_encode(5, {}));
    ASSERT_TRUE(r.exists);
    EXPECT_FALSE(r.witness.any());
}

TEST(Sat, MalformedClauses) {
    EXPECT_THROW(sat_encode(3, {{0, 0, 1}}), std::invalid_argument);
    EXPECT_THROW(sat_encode(3, {{0, 1, 3}}), std::invalid_argument);
}

TEST(Sat, AgreesWithBruteForce) {
    std::mt19937 rng(5);
    for (int it = 0; it < 300; it++) {
        size_t nv = 3 + rng() % 2;
        std::vector<std::array<size_t, 3>> cl;
        size_t m = rng() % 6;
        for (size_t c = 0; c < m; c++) {
            std::array<size_t, 3> t;
            do {
                t = {rng() % nv, rng() % nv, rng() % nv};
            } while (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]);
            cl.push_back(t);
        }
        auto sol = solve_one_in_three(nv, cl);
        auto r = decide_existence(sat_encode(nv, cl));
        ASSERT_EQ(r.exists, sol.has_value());
        if (r.exists) {
            for (const auto &c : cl) {
                EXPECT_EQ(r.witness.get(c[0]) + r.witness.get(c[1]) + r.witness.get(c[2]), 1);
            }
        }
    }
}
