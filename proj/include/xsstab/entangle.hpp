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

#ifndef XSSTAB_ENTANGLE_HPP
#define XSSTAB_ENTANGLE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "xsstab/codespace.hpp"
#include "xsstab/gf2.hpp"
#include "xsstab/pauli.hpp"
#include "xsstab/phase_polynomial.hpp"

namespace xsstab {

/// Qubit subset A (0-based) and its complement.
struct Bipartition {
    size_t n = 0;
    std::vector<size_t> A;
    std::vector<size_t> B;

    Bipartition() = default;
    Bipartition(size_t n, std::vector<size_t> a) : n(n), A(std::move(a)) {
        std::sort(A.begin(), A.end());
        A.erase(std::unique(A.begin(), A.end()), A.end());
        std::vector<bool> in_a(n, false);
        for (size_t q : A) {
            if (q >= n) {
                throw std::invalid_argument("Bipartition: qubit index out of range");
            }
            in_a[q] = true;
        }
        for (size_t q = 0; q < n; q++) {
            if (!in_a[q]) {
                B.push_back(q);
            }
        }
        if (A.empty() || B.empty()) {
            throw std::invalid_argument("Bipartition: both parts must be nonempty");
        }
    }
    bool in_a(size_t q) const {
        return std::binary_search(A.begin(), A.end(), q);
    }
};

struct PauliTableau {
    size_t n = 0;
    std::vector<Pauli> rows;

    GeneratingSet to_generating_set() const {
        GeneratingSet S(n);
        for (const auto &r : rows) {
            S.add(r.to_xs());
        }
        return S;
    }
};

/// Diagonal unitary |b> -> alpha^(phase(R b + shift)) |b>, where R only reads qubits of one party.
struct LocalDiagonal {
    BitMatrix readout;
    BitVector shift;
    PhasePolynomial phase;

    int exponent_on(const BitVector &b) const {
        return phase.evaluate((readout * b) ^ shift);
    }
    BitVector support() const {
        BitVector s(readout.num_cols());
        for (const auto &r : readout.rows()) {
            s |= r;
        }
        return s;
    }
};

struct ReductionCertificate {
    PauliTableau pauli_state;
    /// The Pauli state as sum_y fP(y) |N y + offset>.
    BitMatrix support_matrix;
    BitVector support_offset;
    PhasePolynomial pauli_phase;
    LocalDiagonal alice;
    LocalDiagonal bob;
    /// Rank r of C1: the number of Alice-side variables visible to Bob.
    size_t shared_rank = 0;
};

namespace detail {

/// Selects rows of M (indices in `candidates`) that extend `current` to a larger independent set.
inline std::vector<size_t> greedy_rows(const BitMatrix &M, const std::vector<size_t> &candidates,
                                       std::vector<BitVector> &current) {
    std::vector<size_t> picked;
    for (size_t q : candidates) {
        AffineSpace span = AffineSpace::linear(M.num_cols(), current);
        if (!span.in_span(M.row(q))) {
            current.push_back(M.row(q));
            picked.push_back(q);
        }
    }
    return picked;
}

/// Support matrix of a basis state: row q lists the x variables feeding qubit q.
inline BitMatrix support_matrix(const BasisState &psi) {
    const CodeStructure &cs = *psi.structure;
    std::vector<BitVector> cols;
    for (size_t j = 0; j < cs.t; j++) {
        cols.push_back(cs.support_column(j));
    }
    return BitMatrix::from_columns(cols, cs.n);
}

}  // namespace detail

/// Writes psi = (D_A x D_B) |phi> with phi a Pauli stabilizer state.
inline ReductionCertificate bipartite_reduce(const BasisState &psi, const Bipartition &cut) {
    const CodeStructure &cs = *psi.structure;
    size_t n = cs.n, t = cs.t;
    if (cut.n != n) {
        throw std::invalid_argument("bipartite_reduce: cut is for a different qubit count");
    }
    BitMatrix M = detail::support_matrix(psi);
    BitVector c = cs.lambda_of(psi.mu);

    std::vector<BitVector> current;
    std::vector<size_t> qa = detail::greedy_rows(M, cut.A, current);
    std::vector<size_t> qb = detail::greedy_rows(M, cut.B, current);
    size_t k = qa.size();
    if (k + qb.size() != t) {
        throw std::logic_error("bipartite_reduce: support matrix is not injective");
    }
    BitMatrix R = BitMatrix::from_rows(current, t);
    BitMatrix Rinv = inverse(R);

    // Bob's rows in the (u, v) coordinates.
    std::vector<BitVector> c1_rows, c2_rows;
    for (size_t q : cut.B) {
        BitVector coeff = Rinv.left_multiply(M.row(q));
        c1_rows.push_back(coeff.slice(0, k));
        c2_rows.push_back(coeff.slice(k, t - k));
    }
    for (size_t q : cut.A) {
        BitVector coeff = Rinv.left_multiply(M.row(q));
        if (coeff.slice(k, t - k).any()) {
            throw std::logic_error("bipartite_reduce: Alice row depends on v");
        }
    }
    BitMatrix C1 = BitMatrix::from_rows(c1_rows, k);
    std::vector<BitVector> K = kernel(C1);
    std::vector<BitVector> F = complete_basis(K, k);
    size_t r = F.size();
    std::vector<BitVector> tinv_cols = F;
    tinv_cols.insert(tinv_cols.end(), K.begin(), K.end());
    BitMatrix Tinv = BitMatrix::from_columns(tinv_cols, k);
    BitMatrix T = inverse(Tinv);

    BitMatrix block = BitMatrix::identity(t);
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k; j++) {
            block.set(i, j, Tinv.get(i, j));
        }
    }
    BitMatrix L = Rinv * block;
    PhasePolynomial g = compose_linear(psi.f, L);

    ReductionCertificate cert;
    cert.shared_rank = r;
    PhasePolynomial fP(t), hA(k), hB(r + t - k);
    auto bob_index = [&](uint32_t var) -> uint32_t {
        if (var < r) {
            return var;
        }
        if (var >= k) {
            return uint32_t(r + (var - k));
        }
        throw std::logic_error("bipartite_reduce: local phase depends on a variable hidden from Bob");
    };
    auto to_bob = [&](const Monomial &m) {
        std::vector<uint32_t> v;
        for (uint32_t x : m.vars()) {
            v.push_back(bob_index(x));
        }
        return Monomial(v);
    };
    auto all_alice = [&](const Monomial &m) {
        for (uint32_t x : m.vars()) {
            if (x >= k) {
                return false;
            }
        }
        return true;
    };
    for (const auto &[m, coef] : g.terms()) {
        size_t deg = m.degree();
        int local = 0;
        if (deg == 1) {
            local = coef & 1;
        } else if (deg == 2) {
            local = coef & 2;
        } else if (deg == 3) {
            local = coef;
        }
        if (deg > 0) {
            fP.add(m, coef - local);
        }
        if (local == 0) {
            continue;
        }
        if (all_alice(m)) {
            hA.add(m, local);
        } else {
            hB.add(to_bob(m), local);
        }
    }

    // Alice reads w = T u with u_i = b[qa_i] + c[qa_i].
    cert.alice.readout = BitMatrix(k, n);
    cert.alice.shift = BitVector(k);
    for (size_t i = 0; i < k; i++) {
        for (size_t j : T.row(i).ones()) {
            cert.alice.readout.row(i).flip(qa[j]);
            if (c.get(qa[j])) {
                cert.alice.shift.flip(i);
            }
        }
    }
    cert.alice.phase = hA;

    // Bob reads v_j = b[qb_j] + c[qb_j] and recovers w_<r from r rows where D1 = C1 F is invertible.
    size_t nb = r + t - k;
    cert.bob.readout = BitMatrix(nb, n);
    cert.bob.shift = BitVector(nb);
    for (size_t j = 0; j < t - k; j++) {
        cert.bob.readout.row(r + j).set(qb[j]);
        cert.bob.shift.set(r + j, c.get(qb[j]));
    }
    if (r > 0) {
        BitMatrix Fm = BitMatrix::from_columns(F, k);
        BitMatrix D1 = C1 * Fm;
        std::vector<BitVector> picked_rows;
        std::vector<size_t> sel = detail::greedy_rows(D1, [&] {
            std::vector<size_t> idx(cut.B.size());
            std::iota(idx.begin(), idx.end(), size_t(0));
            return idx;
        }(), picked_rows);
        BitMatrix Dsel = BitMatrix::from_rows(picked_rows, r);
        BitMatrix E = inverse(Dsel);
        for (size_t i = 0; i < r; i++) {
            BitVector row(n);
            bool sh = false;
            for (size_t s : E.row(i).ones()) {
                size_t bi = sel[s];
                size_t q = cut.B[bi];
                // bit_q + c_q + c2 . v, with v_j = bit(qb_j) + c(qb_j).
                row.flip(q);
                sh ^= c.get(q);
                for (size_t j : c2_rows[bi].ones()) {
                    row.flip(qb[j]);
                    sh ^= c.get(qb[j]);
                }
            }
            cert.bob.readout.row(i) = row;
            cert.bob.shift.set(i, sh);
        }
    }
    cert.bob.phase = hB;

    // Pauli stabilizers of sum_y fP(y) |N y + c>.
    BitMatrix N = M * L;
    cert.support_matrix = N;
    cert.support_offset = c;
    cert.pauli_phase = fP;
    cert.pauli_state.n = n;
    BitMatrix NT = N.transpose();
    for (size_t j = 0; j < t; j++) {
        int lj = (fP.coeff(Monomial::of({uint32_t(j)})) / 2) % 4;
        BitVector kappa(t);
        kappa.set(j, lj & 1);
        for (size_t b = 0; b < t; b++) {
            if (b != j && fP.coeff(Monomial::of({uint32_t(j), uint32_t(b)})) == 4) {
                kappa.set(b);
            }
        }
        auto sol = solve_affine(NT, kappa);
        if (!sol) {
            throw std::logic_error("bipartite_reduce: support matrix is not injective");
        }
        Pauli row;
        row.z = sol->offset();
        row.x = N.column(j);
        row.phase = (lj + 2 * int(row.z.dot(c))) % 4;
        cert.pauli_state.rows.push_back(row);
    }
    std::vector<BitVector> ncols;
    for (size_t j = 0; j < t; j++) {
        ncols.push_back(N.column(j));
    }
    for (const auto &z : orthogonal_complement(ncols, n)) {
        Pauli row;
        row.x = BitVector(n);
        row.z = z;
        row.phase = 2 * int(z.dot(c));
        cert.pauli_state.rows.push_back(row);
    }
    return cert;
}

/// Entanglement entropy in bits of a stabilizer state: rank of the rows restricted to B, minus |B|.
inline size_t tableau_entropy(const PauliTableau &tab, const Bipartition &cut) {
    std::vector<BitVector> rows;
    size_t nb = cut.B.size();
    for (const auto &r : tab.rows) {
        BitVector v(2 * nb);
        for (size_t i = 0; i < nb; i++) {
            v.set(i, r.x.get(cut.B[i]));
            v.set(nb + i, r.z.get(cut.B[i]));
        }
        rows.push_back(v);
    }
    size_t rk = rank(BitMatrix::from_rows(rows, 2 * nb));
    return rk - nb;
}

inline size_t entropy(const BasisState &psi, const Bipartition &cut) {
    return tableau_entropy(bipartite_reduce(psi, cut).pauli_state, cut);
}

/// Entropy of every cut with 1 <= |A| <= max_subset_size, A listed in lexicographic order.
inline std::map<std::vector<size_t>, size_t> schmidt_profile(const BasisState &psi, size_t max_subset_size) {
    size_t n = psi.n();
    if (max_subset_size >= n) {
        max_subset_size = n - 1;
    }
    std::map<std::vector<size_t>, size_t> out;
    std::vector<size_t> A;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (!A.empty()) {
            out[A] = entropy(psi, Bipartition(n, A));
        }
        if (A.size() == max_subset_size) {
            return;
        }
        for (size_t q = start; q < n; q++) {
            A.push_back(q);
            rec(q + 1);
            A.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace xsstab

#endif
