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

namespace {

XSOperator op(int s, const char *a, const char *b) {
    return XSOperator::from_strings(s, a, b);
}

Monomial mono(std::initializer_list<uint32_t> v) {
    return Monomial::of(v);
}

/// Pairs {j, k} as a pair-form bit vector on t variables.
BitVector pairs(size_t t, std::initializer_list<std::pair<size_t, size_t>> ps) {
    BitVector v(num_pairs(t));
    for (auto [j, k] : ps) {
        v.flip(pair_index(j, k));
    }
    return v;
}

DenseState state_of(const PhasePolynomial &f, const BitMatrix &W) {
    size_t t = W.num_cols(), n = t + W.num_rows();
    DenseState v(n);
    for (uint64_t x = 0; x < (uint64_t{1} << t); x++) {
        BitVector xv = BitVector::from_u64(t, x);
        v.amp[to_index(xv.concat(W * xv))] += alpha_power(f.evaluate(xv));
    }
    v.normalize();
    return v;
}

}  // namespace

TEST(Analyze, SixQubit) {
    CodeStructure cs = analyze(six_qubit());
    EXPECT_EQ(cs.t, 3u);
    EXPECT_EQ(cs.d, 1u);
    ASSERT_EQ(cs.mu_list.size(), 1u);
    EXPECT_TRUE(cs.mu_list[0].none());
    EXPECT_TRUE(cs.regular);
}

TEST(Analyze, TwoQubitXX) {
    GeneratingSet S(2, {op(0, "11", "00")});
    CodeStructure cs = analyze(S);
    EXPECT_EQ(cs.d, 2u);
    ASSERT_EQ(cs.lambda_list.size(), 2u);
    EXPECT_EQ(cs.lambda_list[0].str(), "00");
    EXPECT_EQ(cs.lambda_list[1].str(), "01");
    EXPECT_EQ(fixed_space(S).size(), 2u);
}

TEST(Analyze, DoubledSemionTorus) {
    auto m = doubled_semion(2, 2, Boundary::Torus);
    EXPECT_EQ(analyze(m.gens).d, 4u);
    EXPECT_EQ(fixed_space(m.gens).size(), 4u);
}

TEST(Analyze, NoStateThrows) {
    auto S = sat_encode(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    EXPECT_THROW(analyze(S), NoStabilizedState);
}

TEST(ExtractPhase, SixQubitCubic) {
    CodeStructure cs = analyze(six_qubit());
    PhasePolynomial f = extract_phase(cs, cs.mu_list[0]);
    ASSERT_EQ(f.terms().size(), 1u);
    EXPECT_EQ(f.coeff(mono({0, 1, 2})), 4);
    EXPECT_EQ(f.str(), "(-1)^{x1 x2 x3}");
    EXPECT_TRUE(fixtures::same_state(dense_state(basis_states(six_qubit())[0]), fixtures::six_qubit_reference()));
}

TEST(ExtractPhase, PlusState) {
    GeneratingSet S(1, {op(0, "1", "0")});
    auto b = basis_states(S);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_TRUE(b[0].f.is_zero());
}

TEST(ExtractPhase, ThreeQubitAmplitudesMatchDense) {
    std::mt19937 rng(20);
    for (int it = 0; it < 100; it++) {
        GeneratingSet S = fixtures::random_regular_group(rng, 3);
        auto fs = fixed_space(S);
        auto states = basis_states(S);
        ASSERT_EQ(states.size(), fs.size());
        for (const auto &b : states) {
            DenseState v = dense_state(b);
            EXPECT_TRUE(is_stabilized(S, v));
            for (uint64_t x = 0; x < (uint64_t{1} << b.t()); x++) {
                BitVector xv = BitVector::from_u64(b.t(), x);
                BitVector s = b.structure->basis_string(xv, b.mu);
                EXPECT_NEAR(std::abs(v.amp[to_index(s)]), std::pow(2.0, -double(b.t()) / 2), 1e-12);
            }
        }
    }
}

TEST(ExtractPhase, BasisSpansFixedSpace) {
    std::mt19937 rng(21);
    for (int it = 0; it < 100; it++) {
        GeneratingSet S = fixtures::random_regular_group(rng, 9);
        std::vector<DenseState> dense;
        for (const auto &b : basis_states(S)) {
            dense.push_back(dense_state(b));
        }
        auto fs = fixed_space(S);
        ASSERT_EQ(dense.size(), fs.size());
        EXPECT_LT(projector_distance(dense, fs), 1e-8);
    }
}

TEST(CompleteStabilizers, SixQubit) {
    auto S = six_qubit();
    CodeStructure cs = analyze(S);
    GeneratingSet full = complete_stabilizers(S, cs, cs.mu_list[0]);
    EXPECT_EQ(full.size(), S.size() + 3);
    for (size_t j = S.size(); j < full.size(); j++) {
        EXPECT_TRUE(ZTypeOperator::from_xs(full.gens[j]).has_value());
    }
    EXPECT_EQ(analyze(full).d, 1u);
}

TEST(CompleteStabilizers, BellStates) {
    GeneratingSet S(2, {op(0, "11", "00")});
    CodeStructure cs = analyze(S);
    GeneratingSet even = complete_stabilizers(S, cs, cs.mu_list[0]);
    ASSERT_EQ(even.size(), 2u);
    EXPECT_EQ(even.gens[1], op(0, "00", "22"));
    GeneratingSet odd = complete_stabilizers(S, cs, cs.mu_list[1]);
    ASSERT_EQ(odd.size(), 2u);
    EXPECT_EQ(odd.gens[1], op(4, "00", "22"));
    auto fe = fixed_space(even), fo = fixed_space(odd);
    ASSERT_EQ(fe.size(), 1u);
    ASSERT_EQ(fo.size(), 1u);
    EXPECT_NEAR(std::abs(fe[0].amp[0b00]), std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(std::abs(fe[0].amp[0b11]), std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(std::abs(fo[0].amp[0b01]), std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(std::abs(fo[0].amp[0b10]), std::sqrt(0.5), 1e-12);
}

TEST(CompleteStabilizers, EachBasisStateUnique) {
    std::mt19937 rng(22);
    for (int it = 0; it < 60; it++) {
        GeneratingSet S = fixtures::random_regular_group(rng, 8);
        auto cs = std::make_shared<const CodeStructure>(analyze(S));
        for (size_t k = 0; k < cs->d; k++) {
            GeneratingSet full = complete_stabilizers(S, *cs, cs->mu_list[k]);
            auto fs = fixed_space(full);
            ASSERT_EQ(fs.size(), 1u);
            EXPECT_TRUE(fixtures::same_state(fs[0], dense_state(basis_state(cs, k))));
        }
    }
}

TEST(Derivative, Examples) {
    PhasePolynomial cubic(3);
    cubic.add(mono({0, 1, 2}), 4);
    EXPECT_EQ(fh_map(0, cubic), pairs(3, {{1, 2}}));
    PhasePolynomial iq(3);
    iq.add(mono({0, 2}), 2);
    EXPECT_TRUE(fh_map(1, iq).none());
    PhasePolynomial iq12(2);
    iq12.add(mono({0, 1}), 2);
    EXPECT_EQ(fh_map(0, iq12), pairs(2, {{0, 1}}));
}

TEST(AmplitudeCondition, SixQubit) {
    PhasePolynomial f(3);
    f.add(mono({0, 1, 2}), 4);
    BitMatrix W = BitMatrix::from_strings({"110", "011", "101"});
    EXPECT_TRUE(check_amplitude(f, W));
    EXPECT_EQ(amplitude_condition(W).Gamma.dim(), 3u);
}

TEST(AmplitudeCondition, EmptyW) {
    BitMatrix W(0, 3);
    PhasePolynomial cubic(3);
    cubic.add(mono({0, 1, 2}), 4);
    EXPECT_FALSE(check_amplitude(cubic, W));
    PhasePolynomial iq(3);
    iq.add(mono({0, 1}), 2);
    EXPECT_FALSE(check_amplitude(iq, W));
    PhasePolynomial ok(3);
    ok.add(mono({0}), 2);
    ok.add(mono({1}), 5);
    ok.add(mono({0, 1}), 4);
    ok.add(mono({1, 2}), 4);
    EXPECT_TRUE(check_amplitude(ok, W));
}

TEST(AmplitudeCondition, AllPairsMakeConditionTrivial) {
    std::mt19937 rng(23);
    size_t t = 4;
    std::vector<std::string> rows;
    for (size_t j = 0; j < t; j++) {
        for (size_t k = j + 1; k < t; k++) {
            std::string r(t, '0');
            r[j] = r[k] = '1';
            rows.push_back(r);
        }
    }
    BitMatrix W = BitMatrix::from_strings(rows);
    for (int it = 0; it < 100; it++) {
        EXPECT_TRUE(check_amplitude(fixtures::random_phase(rng, t), W));
    }
}

TEST(StabilizersFromAmplitude, SixQubit) {
    PhasePolynomial f(3);
    f.add(mono({0, 1, 2}), 4);
    GeneratingSet S = stabilizers_from_amplitude(f, BitMatrix::from_strings({"110", "011", "101"}));
    auto fs = fixed_space(S);
    ASSERT_EQ(fs.size(), 1u);
    EXPECT_TRUE(fixtures::same_state(fs[0], fixtures::six_qubit_reference()));
}

TEST(StabilizersFromAmplitude, TrivialPhaseGivesPauliGroup) {
    std::mt19937 rng(24);
    for (int it = 0; it < 30; it++) {
        size_t t = 1 + rng() % 4;
        BitMatrix W = fixtures::random_matrix(rng, rng() % 4, t);
        GeneratingSet S = stabilizers_from_amplitude(PhasePolynomial(t), W);
        for (const auto &g : S.gens) {
            EXPECT_TRUE(g.has_even_sexp());
            EXPECT_EQ(g.phase() % 4, 0);
        }
        auto fs = fixed_space(S);
        ASSERT_EQ(fs.size(), 1u);
        EXPECT_TRUE(fixtures::same_state(fs[0], state_of(PhasePolynomial(t), W)));
    }
}

TEST(StabilizersFromAmplitude, RandomRoundTrip) {
    std::mt19937 rng(25);
    int done = 0;
    while (done < 200) {
        size_t t = 1 + rng() % 5;
        BitMatrix W = fixtures::random_matrix(rng, rng() % (11 - t), t);
        PhasePolynomial f = fixtures::random_phase(rng, t);
        if (!check_amplitude(f, W)) {
            continue;
        }
        done++;
        GeneratingSet S = stabilizers_from_amplitude(f, W);
        EXPECT_TRUE(is_admissible(S).admissible);
        auto fs = fixed_space(S);
        ASSERT_EQ(fs.size(), 1u);
        EXPECT_TRUE(fixtures::same_state(fs[0], state_of(f, W)));
    }
}

TEST(StabilizersFromAmplitude, RejectsInvalidPhase) {
    PhasePolynomial f(2);
    f.add(mono({0, 1}), 1);
    EXPECT_THROW(stabilizers_from_amplitude(f, BitMatrix(0, 2)), std::invalid_argument);
}

TEST(Regularize, NonRegularExample) {
    GeneratingSet S(4, {op(6, "0000", "1111"), op(0, "1100", "0000")});
    GeneratingSet R = regularize(S);
    EXPECT_TRUE(is_regular(R));
    for (const auto &g : {op(0, "1100", "0000"), op(4, "0000", "2200"), op(0, "0000", "0020"),
                          op(0, "0000", "0002")}) {
        EXPECT_TRUE(contains(R, g)) << g.str();
    }
    auto fr = fixed_space(R);
    ASSERT_EQ(fr.size(), 1u);
    DenseState expected(4);
    expected.amp[0b0001] = expected.amp[0b0010] = std::sqrt(0.5);
    EXPECT_TRUE(fixtures::same_state(fr[0], expected));
    EXPECT_TRUE(fixtures::same_state(fr[0], fixed_space(S)[0]));
}

TEST(Regularize, RegularInputKeepsState) {
    auto S = six_qubit();
    CodeStructure cs = analyze(S);
    GeneratingSet full = complete_stabilizers(S, cs, cs.mu_list[0]);
    GeneratingSet R = regularize(full);
    EXPECT_TRUE(is_regular(R));
    EXPECT_TRUE(fixtures::same_state(fixed_space(R)[0], fixtures::six_qubit_reference()));
}

TEST(Regularize, RandomNonRegularGroups) {
    std::mt19937 rng(26);
    for (int it = 0; it < 50; it++) {
        GeneratingSet S = fixtures::random_nonregular_unique(rng);
        GeneratingSet R = regularize(S);
        EXPECT_TRUE(is_regular(R));
        auto fr = fixed_space(R);
        ASSERT_EQ(fr.size(), 1u);
        EXPECT_TRUE(fixtures::same_state(fr[0], fixed_space(S)[0]));
    }
}

TEST(Regularize, RejectsDegenerateCodes) {
    EXPECT_THROW(regularize(GeneratingSet(2, {op(0, "11", "00")})), std::domain_error);
}
