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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "support.hpp"

using namespace xsstab;
using namespace xsstab::fixtures;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

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

std::vector<GeneratingSet> random_instances(size_t count) {
    std::mt19937 rng(20260101);
    std::vector<GeneratingSet> out;
    while (out.size() < count) {
        out.push_back(random_regular_group(rng, 10));
    }
    return out;
}

Outcome six_qubit_end_to_end() {
    Outcome o;
    auto S = six_qubit();
    auto cs = analyze(S);
    o.require(cs.t == 3 && cs.d == 1, "t or d");
    auto st = basis_states(S);
    o.require(st.size() == 1, "basis size");
    o.require(st[0].f.str() == "(-1)^{x1 x2 x3}", "phase " + st[0].f.str());
    o.require(same_state(dense_state(st[0]), six_qubit_reference()), "dense state");
    return o;
}

Outcome six_qubit_entropy() {
    Outcome o;
    auto psi = basis_states(six_qubit())[0];
    o.require(entropy(psi, Bipartition(6, {0, 1, 3})) == 2, "symbolic entropy");
    auto ev = reduced_spectrum(six_qubit_reference(), {0, 1, 3});
    size_t nonzero = 0;
    for (double e : ev) {
        if (std::abs(e) > 1e-9) {
            nonzero++;
            o.require(std::abs(e - 0.25) < 1e-9, "spectrum not flat");
        }
    }
    o.require(nonzero == 4, "rank of rho");
    return o;
}

Outcome six_qubit_cuts() {
    Outcome o;
    auto psi = basis_states(six_qubit())[0];
    auto ref = six_qubit_reference();
    for (size_t a = 0; a < 6; a++) {
        for (size_t b = a + 1; b < 6; b++) {
            o.require(entropy(psi, Bipartition(6, {a, b})) == 2, "symbolic cut");
            o.require(std::abs(entropy_dense(ref, {a, b}) - 2) < 1e-9, "dense cut");
        }
    }
    return o;
}

Outcome sat_boundary() {
    Outcome o;
    std::mt19937 rng(4242);
    int agree = 0, sat = 0;
    for (int it = 0; it < 200; it++) {
        size_t nv = 3 + rng() % 14;
        size_t m = rng() % (2 * nv);
        std::vector<std::array<size_t, 3>> cl;
        for (size_t c = 0; c < m; c++) {
            std::array<size_t, 3> t;
            do {
                t = {rng() % nv, rng() % nv, rng() % nv};
            } while (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]);
            cl.push_back(t);
        }
        auto brute = solve_one_in_three(nv, cl);
        auto r = decide_existence(sat_encode(nv, cl));
        bool ok = r.exists == brute.has_value();
        if (ok && r.exists) {
            for (const auto &c : cl) {
                ok = ok && r.witness.get(c[0]) + r.witness.get(c[1]) + r.witness.get(c[2]) == 1;
            }
        }
        agree += ok;
        sat += brute.has_value();
    }
    o.require(agree == 200, std::to_string(agree) + "/200 agree");
    o.detail = o.ok ? "200/200, " + std::to_string(sat) + " satisfiable" : o.detail;
    return o;
}

Outcome model_regularity() {
    Outcome o;
    o.require(is_regular(doubled_semion(4, 4, Boundary::Torus).gens), "semion torus");
    LatticeSpec spec{4, 4, Boundary::Torus, 3, {CocycleTerm::parse("w123")}};
    o.require(!is_regular(tqd(spec).gens), "w123 torus");
    spec.boundary = Boundary::Open;
    o.require(is_regular(tqd(spec).gens), "w123 open");
    return o;
}

Outcome semion_degeneracy() {
    Outcome o;
    auto m = doubled_semion(2, 2, Boundary::Torus);
    size_t d = analyze(m.gens).d;
    size_t dense = fixed_space(m.gens).size();
    o.require(d == 4 && dense == 4, "symbolic " + std::to_string(d) + " dense " + std::to_string(dense));
    return o;
}

Outcome reed_muller() {
    Outcome o;
    auto rm = reed_muller_15();
    auto a = fixed_space(rm.xs), b = fixed_space(rm.pauli);
    o.require(a.size() == 2 && b.size() == 2, "dimensions");
    o.require(analyze(rm.xs).d == 2 && analyze(rm.pauli).d == 2, "symbolic d");
    if (o.ok) {
        double dist = projector_distance(a, b);
        o.require(dist < 1e-8, "projector distance " + std::to_string(dist));
    }
    return o;
}

Outcome oracle_equivalence(const std::vector<GeneratingSet> &inst) {
    Outcome o;
    std::mt19937 rng(77);
    for (const auto &S : inst) {
        auto cs = std::make_shared<const CodeStructure>(analyze(S));
        o.require(cs->regular, "not regular");
        o.require(fixed_space(S).size() == cs->d, "degeneracy");
        for (size_t k = 0; k < cs->d && k < 4; k++) {
            BasisState psi;
            psi.structure = cs;
            psi.mu = cs->mu_list[k];
            psi.f = extract_phase(*cs, psi.mu);
            auto v = dense_state(psi);
            o.require(is_stabilized(S, v), "basis state not stabilized");
            o.require(std::abs(overlap(simulate(synthesize(psi)), v) - 1) < 1e-9, "circuit overlap");
            for (int r = 0; r < 50; r++) {
                Pauli p = r % 2 ? random_supported_pauli(rng, *cs) : random_pauli(rng, S.n);
                o.require(std::abs(expectation(psi, p) - expectation_dense(v, p)) < 1e-9, "expectation");
            }
        }
        if (!o.ok) {
            break;
        }
    }
    return o;
}

Outcome hamiltonian_suite(const std::vector<GeneratingSet> &inst) {
    Outcome o;
    for (const auto &S : inst) {
        size_t d = analyze(S).d;
        auto hc = check_hamiltonian(build(S), 10);
        o.require(hc.max_commutator < 1e-10, "commutator " + std::to_string(hc.max_commutator));
        o.require(hc.max_idempotence_error < 1e-10, "idempotence");
        o.require(hc.ground_dimension == d, "ground dimension");
        if (!o.ok) {
            break;
        }
    }
    return o;
}

bool completion_exists(const DenseState &v, const BitVector &x) {
    size_t n = v.n;
    for (uint64_t bits = 0; bits < (uint64_t{1} << (2 * n)); bits++) {
        XSOperator g(n);
        g.xmask() = x;
        for (size_t q = 0; q < n; q++) {
            g.set_b(q, int((bits >> (2 * q)) & 3));
        }
        for (int s = 0; s < 8; s++) {
            g.set_phase(s);
            if (distance(apply(g, v), v) < 1e-9) {
                return true;
            }
        }
    }
    return false;
}

Outcome amplitude_round_trip() {
    Outcome o;
    std::mt19937 rng(31);
    int positive = 0, negative = 0, searched = 0;
    while (positive < 300) {
        size_t t = 1 + rng() % 5;
        BitMatrix W = random_matrix(rng, rng() % (11 - t), t);
        PhasePolynomial f = random_phase(rng, t);
        if (!check_amplitude(f, W)) {
            continue;
        }
        positive++;
        auto fs = fixed_space(stabilizers_from_amplitude(f, W));
        o.require(fs.size() == 1 && same_state(fs[0], state_of(f, W)), "round trip");
        if (positive <= 20 && t + W.num_rows() <= 6) {
            BitVector e = BitVector::from_u64(t, 1);
            o.require(completion_exists(state_of(f, W), e.concat(W * e)), "no completion for a valid amplitude");
        }
    }
    while (negative < 40) {
        size_t t = 2 + rng() % 2, rows = rng() % (7 - t);
        BitMatrix W(rows, t);
        for (size_t r = 0; r < rows; r++) {
            if (rng() % 4) {
                W.set(r, rng() % t, true);
            }
        }
        PhasePolynomial f = random_phase(rng, t);
        if (amplitude_condition(W).Gamma.dim() != 0) {
            continue;
        }
        if (check_amplitude(f, W)) {
            continue;
        }
        negative++;
        auto v = state_of(f, W);
        for (size_t h = 0; h < t; h++) {
            if (!fh_map(h, f).any()) {
                continue;
            }
            BitVector e = BitVector::from_u64(t, uint64_t{1} << h);
            BitVector col = e.concat(W * e);
            o.require(!completion_exists(v, col), "a completion stabilizes a state failing the check");
            searched++;
        }
    }
    o.detail = o.ok ? "300 round trips, " + std::to_string(searched) + " exhausted completion searches" : o.detail;
    return o;
}

Outcome regularization() {
    Outcome o;
    GeneratingSet S(4);
    S.add(XSOperator::from_strings(6, "0000", "1111"));
    S.add(XSOperator::from_strings(0, "1100", "0000"));
    std::vector<GeneratingSet> cases{S};
    std::mt19937 rng(12);
    for (int i = 0; i < 20; i++) {
        cases.push_back(random_nonregular_unique(rng));
    }
    for (const auto &G : cases) {
        auto t0 = std::chrono::steady_clock::now();
        auto R = regularize(G);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.require(secs < 1.0, "regularize too slow");
        o.require(is_regular(R), "output not regular");
        auto a = fixed_space(G), b = fixed_space(R);
        o.require(a.size() == 1 && b.size() == 1 && same_state(a[0], b[0]), "state changed");
    }
    return o;
}

}  // namespace

int main() {
    std::vector<GeneratingSet> instances;
    struct Criterion {
        int id;
        std::string name;
        double budget;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all{
        {1, "six-qubit example end to end", 1, six_qubit_end_to_end},
        {2, "six-qubit entropy of {1,2,4}", 1, six_qubit_entropy},
        {3, "Schmidt profile of 2-vs-4 cuts", 1, six_qubit_cuts},
        {4, "1-in-3-SAT boundary", 30, sat_boundary},
        {5, "regularity of lattice models at 4x4", 10, model_regularity},
        {6, "doubled semion degeneracy", 60, semion_degeneracy},
        {7, "Reed-Muller 15 code spaces", 300, reed_muller},
        {8, "oracle equivalence on 500 random sets", 600,
         [&] {
             instances = random_instances(500);
             return oracle_equivalence(instances);
         }},
        {9, "Hamiltonian suite on the same sets", 600,
         [&] {
             if (instances.empty()) {
                 instances = random_instances(500);
             }
             return hamiltonian_suite(instances);
         }},
        {10, "amplitude characterization round trip", 300, amplitude_round_trip},
        {11, "regularization", 21, regularization},
    };
    int failures = 0;
    for (const auto &c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && secs > c.budget) {
            o.ok = false;
            o.detail = "over budget";
        }
        failures += !o.ok;
        std::printf("%s %2d %-42s %8.3fs (budget %gs)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    c.budget, o.detail.empty() ? "" : "  ", o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
