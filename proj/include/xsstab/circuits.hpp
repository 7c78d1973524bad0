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


#ifndef XSSTAB_CIRCUITS_HPP
#define XSSTAB_CIRCUITS_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "xsstab/codespace.hpp"
#include "xsstab/gf2.hpp"
#include "xsstab/pauli.hpp"
#include "xsstab/phase_polynomial.hpp"
#include "xsstab/xs_operator.hpp"

namespace xsstab {

enum class GateKind { H, X, CNOT, Z, S, CZ, T, CS, CCZ };

inline const char *gate_name(GateKind k) {
    switch (k) {
        case GateKind::H:
            return "H";
        case GateKind::X:
            return "X";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::Z:
            return "Z";
        case GateKind::S:
            return "S";
        case GateKind::CZ:
            return "CZ";
        case GateKind::T:
            return "T";
        case GateKind::CS:
            return "CS";
        case GateKind::CCZ:
            return "CCZ";
    }
    return "?";
}

inline size_t gate_arity(GateKind k) {
    switch (k) {
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::CS:
            return 2;
        case GateKind::CCZ:
            return 3;
        default:
            return 1;
    }
}

inline bool is_clifford(GateKind k) {
    return k != GateKind::T && k != GateKind::CS && k != GateKind::CCZ;
}

/// CNOT lists control then target.
struct Gate {
    GateKind kind;
    std::vector<size_t> qubits;

    bool operator==(const Gate &other) const = default;
};

struct Circuit {
    size_t n = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(size_t n) : n(n) {}

    void add(GateKind k, std::vector<size_t> qubits) {
        if (qubits.size() != gate_arity(k)) {
            throw std::invalid_argument(std::string("Circuit: wrong arity for ") + gate_name(k));
        }
        for (size_t i = 0; i < qubits.size(); i++) {
            if (qubits[i] >= n) {
                throw std::invalid_argument("Circuit: qubit index out of range");
            }
            for (size_t j = 0; j < i; j++) {
                if (qubits[i] == qubits[j]) {
                    throw std::invalid_argument("Circuit: repeated qubit in one gate");
                }
            }
        }
        gates.push_back({k, std::move(qubits)});
    }

    size_t count(GateKind k) const {
        size_t c = 0;
        for (const auto &g : gates) {
            c += g.kind == k;
        }
        return c;
    }

    /// True if no Clifford gate follows a non-Clifford gate.
    bool has_diagonal_suffix() const {
        bool seen = false;
        for (const auto &g : gates) {
            if (!is_clifford(g.kind)) {
                seen = true;
            } else if (seen) {
                return false;
            }
        }
        return true;
    }

    /// One gate per line, 1-indexed qubits.
    std::string str() const {
        std::string s;
        for (const auto &g : gates) {
            s += gate_name(g.kind);
            for (size_t q : g.qubits) {
                s += ' ' + std::to_string(q + 1);
            }
            s += '\n';
        }
        return s;
    }

    static Circuit parse(size_t n, const std::string &text) {
        Circuit c(n);
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) {
                line.resize(hash);
            }
            std::istringstream ls(line);
            std::string name;
            if (!(ls >> name)) {
                continue;
            }
            GateKind kind;
            bool found = false;
            for (GateKind k : {GateKind::H, GateKind::X, GateKind::CNOT, GateKind::Z, GateKind::S, GateKind::CZ,
                               GateKind::T, GateKind::CS, GateKind::CCZ}) {
                if (name == gate_name(k)) {
                    kind = k;
                    found = true;
                }
            }
            if (!found) {
                throw std::invalid_argument("Circuit: unknown gate " + name);
            }
            std::vector<size_t> qs;
            long q;
            while (ls >> q) {
                if (q < 1) {
                    throw std::invalid_argument("Circuit: qubit indices are 1-based");
                }
                qs.push_back(size_t(q - 1));
            }
            if (!ls.eof()) {
                throw std::invalid_argument("Circuit: malformed line: " + line);
            }
            c.add(kind, qs);
        }
        return c;
    }
};

/// Clifford preparation of the support followed by the diagonal phase gates.
inline Circuit synthesize(const BasisState &psi) {
    const CodeStructure &cs = *psi.structure;
    Circuit c(cs.n);
    for (size_t j = 0; j < cs.t; j++) {
        c.add(GateKind::H, {cs.perm[j]});
    }
    for (size_t r : psi.mu.ones()) {
        c.add(GateKind::X, {cs.perm[cs.t + r]});
    }
    for (size_t r = 0; r < cs.n - cs.t; r++) {
        for (size_t j : cs.W.row(r).ones()) {
            c.add(GateKind::CNOT, {cs.perm[j], cs.perm[cs.t + r]});
        }
    }
    auto qubits_of = [&](const Monomial &m) {
        std::vector<size_t> q;
        for (uint32_t v : m.vars()) {
            q.push_back(cs.perm[v]);
        }
        return q;
    };
    for (const auto &[m, coef] : psi.f.terms()) {
        if (m.degree() == 1) {
            if (coef & 4) {
                c.add(GateKind::Z, qubits_of(m));
            }
            if (coef & 2) {
                c.add(GateKind::S, qubits_of(m));
            }
        } else if (m.degree() == 2 && (coef & 4)) {
            c.add(GateKind::CZ, qubits_of(m));
        }
    }
    for (const auto &[m, coef] : psi.f.terms()) {
        if (m.degree() == 1 && (coef & 1)) {
            c.add(GateKind::T, qubits_of(m));
        } else if (m.degree() == 2 && (coef & 2)) {
            c.add(GateKind::CS, qubits_of(m));
        } else if (m.degree() == 3) {
            c.add(GateKind::CCZ, qubits_of(m));
        }
    }
    return c;
}

/// Exact value sum_k counts[k] alpha^k / 2^t.
struct ExactAmplitude {
    std::array<int64_t, 8> counts{};
    size_t log2_denominator = 0;

    std::complex<double> value() const {
        const double r = std::sqrt(0.5);
        const std::complex<double> a[8] = {{1, 0}, {r, r}, {0, 1}, {-r, r}, {-1, 0}, {-r, -r}, {0, -1}, {r, -r}};
        std::complex<double> acc = 0;
        for (int k = 0; k < 8; k++) {
            acc += double(counts[k]) * a[k];
        }
        return acc / std::ldexp(1.0, int(log2_denominator));
    }
};

/// <psi| i^s X(x) Z(z) |psi> by enumeration over the 2^t support strings.
inline ExactAmplitude expectation_exact(const BasisState &psi, const Pauli &p) {
    const CodeStructure &cs = *psi.structure;
    if (p.num_qubits() != cs.n) {
        throw std::invalid_argument("expectation: Pauli acts on a different qubit count");
    }
    if (cs.t > 40) {
        throw std::length_error("expectation: support too large to enumerate");
    }
    ExactAmplitude out;
    out.log2_denominator = cs.t;
    if (!cs.V.in_span(p.x)) {
        return out;
    }
    BitVector delta(cs.t);
    for (size_t j = 0; j < cs.t; j++) {
        delta.set(j, p.x.get(cs.perm[j]));
    }
    for (uint64_t bits = 0; bits < (uint64_t{1} << cs.t); bits++) {
        BitVector x = BitVector::from_u64(cs.t, bits);
        BitVector b = cs.basis_string(x, psi.mu);
        int e = psi.f.evaluate(x) - psi.f.evaluate(x ^ delta) + 2 * p.phase + 4 * int(p.z.dot(b));
        out.counts[size_t(((e % 8) + 8) % 8)]++;
    }
    return out;
}

inline std::complex<double> expectation(const BasisState &psi, const Pauli &p) {
    return expectation_exact(psi, p).value();
}

/// Acts as X(xmask) followed by |b> -> alpha^(correction(b)) |b>.
struct LogicalX {
    BitVector xmask;
    PhasePolynomial correction;
};

struct LogicalPair {
    ZTypeOperator zbar;
    LogicalX xbar;
};

/// Logical labels y of a regular code: mu(y) = mu0 + sum_k y_k beta_k, with mu(y) at pivots[k] equal to y_k.
struct LogicalFrame {
    BitVector mu0;
    std::vector<BitVector> beta;
    std::vector<size_t> pivots;

    BitVector mu_of(const BitVector &y) const {
        BitVector m = mu0;
        for (size_t k : y.ones()) {
            m ^= beta[k];
        }
        return m;
    }
};

inline LogicalFrame logical_frame(const CodeStructure &cs) {
    if (!cs.regular) {
        throw std::invalid_argument("logical_frame: code is not regular");
    }
    size_t s = 0;
    while ((size_t{1} << s) < cs.d) {
        s++;
    }
    if ((size_t{1} << s) != cs.d) {
        throw std::logic_error("logical_frame: degeneracy is not a power of two");
    }
    std::vector<BitVector> diffs;
    for (const auto &m : cs.mu_list) {
        diffs.push_back(m ^ cs.mu_list[0]);
    }
    AffineSpace hull(cs.n - cs.t, diffs, cs.mu_list[0]);
    if (hull.dim() != s) {
        throw std::logic_error("logical_frame: coset labels do not form an affine space");
    }
    LogicalFrame fr;
    fr.mu0 = hull.offset();
    fr.beta = hull.basis();
    fr.pivots = hull.pivots();
    return fr;
}

/// s = log2(d) pairs; Zbar_k multiplies psi(y) by (-1)^(y_k), Xbar_k maps psi(y) to psi(y + e_k).
inline std::vector<LogicalPair> logical_operators(const CodeStructure &cs) {
    LogicalFrame fr = logical_frame(cs);
    size_t t = cs.t, s = fr.beta.size(), n = cs.n;
    std::vector<LogicalPair> out;
    if (s == 0) {
        return out;
    }

    // F(x, y): phase of the basis state with symbolic label y, variables t..t+s-1.
    std::vector<AffineForm> values(n, AffineForm{BitVector(t + s), false});
    for (size_t r = 0; r < n - t; r++) {
        AffineForm &v = values[cs.perm[t + r]];
        v.constant = fr.mu0.get(r);
        for (size_t k = 0; k < s; k++) {
            if (fr.beta[k].get(r)) {
                v.vars.flip(t + k);
            }
        }
    }
    PhasePolynomial F0 = detail::symbolic_phase(cs.normal, t, values, t + s);
    PhasePolynomial F(t + s);
    for (const auto &[m, c] : F0.terms()) {
        auto vs = m.vars();
        if (std::any_of(vs.begin(), vs.end(), [&](uint32_t v) { return v < t; })) {
            F.add(m, c);
        }
    }

    // Readout of (x, y) from a basis string.
    BitMatrix read(t + s, n);
    for (size_t j = 0; j < t; j++) {
        read.set(j, cs.perm[j]);
    }
    for (size_t k = 0; k < s; k++) {
        size_t p = fr.pivots[k];
        read.set(t + k, cs.perm[t + p]);
        for (size_t j : cs.W.row(p).ones()) {
            read.row(t + k).flip(cs.perm[j]);
        }
    }

    for (size_t k = 0; k < s; k++) {
        LogicalPair lp;
        size_t p = fr.pivots[k];
        BitVector z(n);
        z.set(cs.perm[t + p]);
        for (size_t j : cs.W.row(p).ones()) {
            z.flip(cs.perm[j]);
        }
        lp.zbar = ZTypeOperator(false, z);

        lp.xbar.xmask = cs.lambda_of(fr.beta[k]);
        BitVector shift(t + s);
        shift.set(t + k);
        PhasePolynomial D = F - compose_affine(F, BitMatrix::identity(t + s), shift);
        lp.xbar.correction = compose_linear(D, read);
        out.push_back(std::move(lp));
    }
    return out;
}

}  // namespace xsstab

#endif
