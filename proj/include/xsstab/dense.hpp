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

#ifndef XSSTAB_DENSE_HPP
#define XSSTAB_DENSE_HPP

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "xsstab/xs_group.hpp"

namespace xsstab {

using cdouble = std::complex<double>;

/// Raised when a dense computation would exceed the configured qubit limit.
class DenseLimitExceeded : public std::runtime_error {
   public:
    explicit DenseLimitExceeded(const std::string &what) : std::runtime_error(what) {}
};

inline constexpr size_t kDefaultDenseLimit = 15;

/// alpha^k for k in Z8, computed once.
inline cdouble alpha_power(int k) {
    static const std::array<cdouble, 8> table = [] {
        std::array<cdouble, 8> t{};
        const double r = std::sqrt(0.5);
        t[0] = {1, 0};
        t[1] = {r, r};
        t[2] = {0, 1};
        t[3] = {-r, r};
        t[4] = {-1, 0};
        t[5] = {-r, -r};
        t[6] = {0, -1};
        t[7] = {r, -r};
        return t;
    }();
    return table[size_t(((k % 8) + 8) % 8)];
}

/// State vector on n qubits. Basis index bit k holds qubit k.
struct DenseState {
    size_t n = 0;
    std::vector<cdouble> amp;

    DenseState() = default;
    explicit DenseState(size_t n) : n(n), amp(size_t(1) << n, cdouble(0)) {}

    static DenseState basis(size_t n, uint64_t index) {
        DenseState s(n);
        s.amp[index] = 1;
        return s;
    }

    double norm() const {
        double acc = 0;
        for (const auto &a : amp) {
            acc += std::norm(a);
        }
        return std::sqrt(acc);
    }
    void normalize() {
        double nm = norm();
        if (nm == 0) {
            throw std::domain_error("cannot normalize the zero vector");
        }
        for (auto &a : amp) {
            a /= nm;
        }
    }
};

inline void check_dense_limit(size_t n, size_t limit) {
    if (n > limit) {
        throw DenseLimitExceeded("dense computation on " + std::to_string(n) + " qubits exceeds the limit of " +
                                 std::to_string(limit));
    }
}

inline uint64_t to_index(const BitVector &x) {
    if (x.size() > 63) {
        throw DenseLimitExceeded("basis index does not fit in 64 bits");
    }
    return x.to_u64();
}

inline DenseState apply(const XSOperator &g, const DenseState &v) {
    if (g.num_qubits() != v.n) {
        throw std::invalid_argument("apply: qubit counts differ");
    }
    DenseState out(v.n);
    uint64_t a = to_index(g.xmask());
    for (uint64_t x = 0; x < v.amp.size(); x++) {
        if (v.amp[x] != cdouble(0)) {
            out.amp[x ^ a] += alpha_power(g.phase_on_u64(x)) * v.amp[x];
        }
    }
    return out;
}

inline cdouble inner(const DenseState &a, const DenseState &b) {
    cdouble acc = 0;
    for (size_t k = 0; k < a.amp.size(); k++) {
        acc += std::conj(a.amp[k]) * b.amp[k];
    }
    return acc;
}

/// |<a|b>| for normalized inputs; equals 1 iff the states agree up to global phase.
inline double overlap(const DenseState &a, const DenseState &b) {
    return std::abs(inner(a, b)) / (a.norm() * b.norm());
}

inline double distance(const DenseState &a, const DenseState &b) {
    double acc = 0;
    for (size_t k = 0; k < a.amp.size(); k++) {
        acc += std::norm(a.amp[k] - b.amp[k]);
    }
    return std::sqrt(acc);
}

/// Dense matrix of an operator, row-major, dimension 2^n.
inline std::vector<cdouble> dense_matrix(const XSOperator &g) {
    size_t n = g.num_qubits();
    size_t dim = size_t(1) << n;
    std::vector<cdouble> m(dim * dim, 0);
    uint64_t a = to_index(g.xmask());
    for (uint64_t x = 0; x < dim; x++) {
        m[(x ^ a) * dim + x] = alpha_power(g.phase_on_u64(x));
    }
    return m;
}

/// Orthonormal basis of the common +1 eigenspace of the generators.
///
/// Each generator maps |x> to a phase times |x + a>, so a fixed vector is determined on every
/// orbit of the X-masks by one amplitude. Amplitudes are propagated in exact Z8 arithmetic and an
/// orbit contributes a basis vector iff the propagation is consistent.
inline std::vector<DenseState> fixed_space(const GeneratingSet &S, size_t limit = kDefaultDenseLimit) {
    check_dense_limit(S.n, limit);
    size_t dim = size_t(1) << S.n;
    std::vector<uint64_t> masks;
    for (const auto &g : S.gens) {
        masks.push_back(to_index(g.xmask()));
    }
    std::vector<int8_t> phase(dim, -1);
    std::vector<uint8_t> visited(dim, 0);
    std::vector<DenseState> out;
    std::vector<uint64_t> queue;
    for (uint64_t seed = 0; seed < dim; seed++) {
        if (visited[seed]) {
            continue;
        }
        queue.clear();
        queue.push_back(seed);
        visited[seed] = 1;
        phase[seed] = 0;
        bool consistent = true;
        for (size_t head = 0; head < queue.size(); head++) {
            uint64_t x = queue[head];
            for (size_t j = 0; j < S.gens.size(); j++) {
                uint64_t y = x ^ masks[j];
                int p = (phase[x] + S.gens[j].phase_on_u64(x)) % 8;
                if (!visited[y]) {
                    visited[y] = 1;
                    phase[y] = int8_t(p);
                    queue.push_back(y);
                } else if (phase[y] != p) {
                    consistent = false;
                }
            }
        }
        if (consistent) {
            DenseState v(S.n);
            double amp = 1.0 / std::sqrt(double(queue.size()));
            for (uint64_t x : queue) {
                v.amp[x] = alpha_power(phase[x]) * amp;
            }
            out.push_back(std::move(v));
        }
    }
    return out;
}

inline bool is_stabilized(const XSOperator &g, const DenseState &v, double tol = 1e-9) {
    return distance(apply(g, v), v) <= tol * std::max(1.0, v.norm());
}

inline bool is_stabilized(const GeneratingSet &S, const DenseState &v, double tol = 1e-9) {
    for (const auto &g : S.gens) {
        if (!is_stabilized(g, v, tol)) {
            return false;
        }
    }
    return true;
}

/// Eigenvalues of the reduced density matrix on qubits `A` (0-based).
inline std::vector<double> reduced_spectrum(const DenseState &v, const std::vector<size_t> &A) {
    size_t n = v.n;
    std::vector<bool> in_a(n, false);
    for (size_t q : A) {
        if (q >= n) {
            throw std::invalid_argument("reduced_spectrum: qubit out of range");
        }
        in_a[q] = true;
    }
    std::vector<size_t> qa, qb;
    for (size_t q = 0; q < n; q++) {
        (in_a[q] ? qa : qb).push_back(q);
    }
    // Work on the smaller side; the nonzero spectra agree.
    if (qa.size() > qb.size()) {
        std::swap(qa, qb);
    }
    size_t da = size_t(1) << qa.size(), db = size_t(1) << qb.size();
    Eigen::MatrixXcd psi(da, db);
    for (uint64_t x = 0; x < v.amp.size(); x++) {
        uint64_t ia = 0, ib = 0;
        for (size_t k = 0; k < qa.size(); k++) {
            ia |= ((x >> qa[k]) & 1) << k;
        }
        for (size_t k = 0; k < qb.size(); k++) {
            ib |= ((x >> qb[k]) & 1) << k;
        }
        psi(Eigen::Index(ia), Eigen::Index(ib)) = v.amp[x];
    }
    Eigen::MatrixXcd rho = psi * psi.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    std::vector<double> ev(size_t(solver.eigenvalues().size()));
    for (size_t k = 0; k < ev.size(); k++) {
        ev[k] = solver.eigenvalues()(Eigen::Index(k));
    }
    return ev;
}

/// Von Neumann entropy in bits of the reduced state on `A`.
inline double entropy_dense(const DenseState &v, const std::vector<size_t> &A) {
    double s = 0;
    for (double p : reduced_spectrum(v, A)) {
        if (p > 1e-14) {
            s -= p * std::log2(p);
        }
    }
    return s;
}

inline double renyi2_dense(const DenseState &v, const std::vector<size_t> &A) {
    double purity = 0;
    for (double p : reduced_spectrum(v, A)) {
        purity += p * p;
    }
    return -std::log2(purity);
}

/// Applies i^s X(x) Z(z) (Z acts first).
inline DenseState apply_pauli(int s, const BitVector &x, const BitVector &z, const DenseState &v) {
    DenseState out(v.n);
    uint64_t xm = to_index(x), zm = to_index(z);
    for (uint64_t b = 0; b < v.amp.size(); b++) {
        int k = 2 * s + 4 * (std::popcount(zm & b) & 1);
        out.amp[b ^ xm] += alpha_power(k) * v.amp[b];
    }
    return out;
}

/// Frobenius distance between the projectors onto span(a) and span(b), both orthonormal.
inline double projector_distance(const std::vector<DenseState> &a, const std::vector<DenseState> &b) {
    double cross = 0;
    for (const auto &u : a) {
        for (const auto &w : b) {
            cross += std::norm(inner(u, w));
        }
    }
    double d2 = double(a.size()) + double(b.size()) - 2 * cross;
    return std::sqrt(std::max(0.0, d2));
}

}  // namespace xsstab

#endif
