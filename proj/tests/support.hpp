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


#ifndef XSSTAB_TESTS_SUPPORT_HPP
#define XSSTAB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "xsstab/xsstab.hpp"

namespace xsstab::fixtures {

/// Relabels qubits: qubit k of g becomes qubit perm[k].
inline XSOperator relabel(const XSOperator &g, const std::vector<size_t> &perm) {
    XSOperator h(g.num_qubits());
    h.set_phase(g.phase());
    BitVector a(g.num_qubits());
    for (size_t k = 0; k < perm.size(); k++) {
        a.set(perm[k], g.xmask().get(k));
        h.set_b(perm[k], g.b(k));
    }
    h.xmask() = a;
    return h;
}

inline GeneratingSet relabel(const GeneratingSet &S, const std::vector<size_t> &perm) {
    GeneratingSet out(S.n);
    for (const auto &g : S.gens) {
        out.add(relabel(g, perm));
    }
    return out;
}

/// Random phase on t variables: any linear Z8 term, even quadratic, and (-1) cubic terms.
inline PhasePolynomial random_phase(std::mt19937 &rng, size_t t) {
    PhasePolynomial f(t);
    for (uint32_t a = 0; a < t; a++) {
        f.add(Monomial::of({a}), int(rng() % 8));
        for (uint32_t b = a + 1; b < t; b++) {
            f.add(Monomial::of({a, b}), 2 * int(rng() % 4));
            for (uint32_t c = b + 1; c < t; c++) {
                if (rng() % 3 == 0) {
                    f.add(Monomial::of({a, b, c}), 4);
                }
            }
        }
    }
    return f;
}

inline BitMatrix random_matrix(std::mt19937 &rng, size_t rows, size_t cols) {
    BitMatrix W(rows, cols);
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) {
            W.set(i, j, rng() & 1);
        }
    }
    return W;
}

/// Random admissible regular generating set on at most max_n qubits. Starts from the unique-state
/// generators of a random (f, W), drops some diagonal ones so d > 1 can occur, mixes generators and
/// relabels qubits.
inline GeneratingSet random_regular_group(std::mt19937 &rng, size_t max_n) {
    while (true) {
        size_t t = 1 + rng() % std::min<size_t>(4, max_n - 1);
        size_t n = t + 1 + rng() % (max_n - t);
        BitMatrix W = random_matrix(rng, n - t, t);
        PhasePolynomial f = random_phase(rng, t);
        if (!check_amplitude(f, W)) {
            continue;
        }
        GeneratingSet base = stabilizers_from_amplitude(f, W);
        GeneratingSet out(n);
        for (size_t j = 0; j < base.gens.size(); j++) {
            if (j >= t && rng() % 2) {
                continue;
            }
            out.add(base.gens[j]);
        }
        for (int k = 0; k < 2; k++) {
            size_t i = rng() % out.gens.size(), j = rng() % out.gens.size();
            if (i != j) {
                out.gens[i] = multiply(out.gens[i], out.gens[j]);
            }
        }
        std::vector<size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        return relabel(out, perm);
    }
}

/// Random admissible non-regular set on 3..6 qubits fixing exactly one state (rejection sampled).
inline GeneratingSet random_nonregular_unique(std::mt19937 &rng) {
    while (true) {
        size_t n = 3 + rng() % 4;
        GeneratingSet S(n);
        for (size_t j = 1 + rng() % 2; j > 0; j--) {
            XSOperator g(n);
            for (size_t k = 0; k < n; k++) {
                if (rng() % 2) {
                    g.xmask().set(k);
                }
                g.set_b(k, 2 * int(rng() % 2 * (rng() % 2)));
            }
            S.add(g);
        }
        for (size_t j = 1 + rng() % 3; j > 0; j--) {
            XSOperator g(n);
            g.set_phase(int(rng() % 8));
            for (size_t k = 0; k < n; k++) {
                g.set_b(k, rng() % 3 == 0 ? int(rng() % 4) : 0);
            }
            S.add(g);
        }
        if (!is_admissible(S) || is_regular(S) || !decide_existence(S)) {
            continue;
        }
        if (fixed_space(S).size() == 1) {
            return S;
        }
    }
}

inline Pauli random_pauli(std::mt19937 &rng, size_t n) {
    uint64_t mask = (uint64_t{1} << n) - 1;
    return Pauli(int(rng() % 4), BitVector::from_u64(n, rng() & mask), BitVector::from_u64(n, rng() & mask));
}

/// Random Pauli whose X part lies in the support space of cs, so the expectation can be nonzero.
inline Pauli random_supported_pauli(std::mt19937 &rng, const CodeStructure &cs) {
    Pauli p = random_pauli(rng, cs.n);
    BitVector x(cs.n);
    for (size_t j = 0; j < cs.t; j++) {
        if (rng() & 1) {
            x ^= cs.support_column(j);
        }
    }
    p.x = x;
    return p;
}

/// Up to global phase.
inline bool same_state(const DenseState &a, const DenseState &b, double tol = 1e-9) {
    return std::abs(overlap(a, b) - 1) < tol;
}

inline DenseState six_qubit_reference() {
    DenseState v(6);
    for (uint64_t x = 0; x < 8; x++) {
        bool x1 = x & 1, x2 = x & 2, x3 = x & 4;
        uint64_t idx = x | uint64_t(x1 ^ x2) << 3 | uint64_t(x2 ^ x3) << 4 | uint64_t(x1 ^ x3) << 5;
        v.amp[idx] = (x1 && x2 && x3) ? -1.0 : 1.0;
    }
    v.normalize();
    return v;
}

inline GeneratingSet gens_from(size_t n, std::initializer_list<std::pair<int, std::vector<std::string>>> list) {
    GeneratingSet S(n);
    for (const auto &[s, f] : list) {
        S.add(XSOperator::from_factors(s, f));
    }
    return S;
}

}  // namespace xsstab::fixtures

#endif
