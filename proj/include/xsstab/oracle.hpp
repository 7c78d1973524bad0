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


#ifndef XSSTAB_ORACLE_HPP
#define XSSTAB_ORACLE_HPP

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "xsstab/circuits.hpp"
#include "xsstab/codespace.hpp"
#include "xsstab/dense.hpp"
#include "xsstab/hamiltonian.hpp"
#include "xsstab/pauli.hpp"

namespace xsstab {

/// 2^(-t/2) sum_x f(x) |x, Wx + mu>, expanded.
inline DenseState dense_state(const BasisState &psi, size_t limit = kDefaultDenseLimit) {
    const CodeStructure &cs = *psi.structure;
    check_dense_limit(cs.n, limit);
    DenseState v(cs.n);
    double amp = std::ldexp(1.0, -int(cs.t));
    amp = std::sqrt(amp);
    for (uint64_t bits = 0; bits < (uint64_t{1} << cs.t); bits++) {
        BitVector x = BitVector::from_u64(cs.t, bits);
        v.amp[to_index(cs.basis_string(x, psi.mu))] += alpha_power(psi.f.evaluate(x)) * amp;
    }
    return v;
}

inline DenseState apply(const Pauli &p, const DenseState &v) {
    return apply_pauli(p.phase, p.x, p.z, v);
}

inline DenseState apply(const ZTypeOperator &z, const DenseState &v) {
    DenseState out = v;
    uint64_t m = to_index(z.zmask);
    for (uint64_t b = 0; b < v.amp.size(); b++) {
        if ((std::popcount(m & b) & 1) ^ int(z.sign)) {
            out.amp[b] = -out.amp[b];
        }
    }
    return out;
}

inline DenseState apply(const LogicalX &op, const DenseState &v) {
    DenseState out(v.n);
    uint64_t a = to_index(op.xmask);
    for (uint64_t b = 0; b < v.amp.size(); b++) {
        uint64_t c = b ^ a;
        out.amp[c] += alpha_power(op.correction.evaluate(BitVector::from_u64(v.n, c))) * v.amp[b];
    }
    return out;
}

inline cdouble expectation_dense(const DenseState &v, const Pauli &p) {
    return inner(v, apply(p, v));
}

inline void apply_gate(const Gate &g, DenseState &v) {
    const double r = std::sqrt(0.5);
    auto bit = [](uint64_t b, size_t q) { return (b >> q) & 1; };
    const auto &q = g.qubits;
    switch (g.kind) {
        case GateKind::H: {
            uint64_t m = uint64_t{1} << q[0];
            for (uint64_t b = 0; b < v.amp.size(); b++) {
                if (!(b & m)) {
                    cdouble a0 = v.amp[b], a1 = v.amp[b | m];
                    v.amp[b] = r * (a0 + a1);
                    v.amp[b | m] = r * (a0 - a1);
                }
            }
            return;
        }
        case GateKind::X: {
            uint64_t m = uint64_t{1} << q[0];
            for (uint64_t b = 0; b < v.amp.size(); b++) {
                if (!(b & m)) {
                    std::swap(v.amp[b], v.amp[b | m]);
                }
            }
            return;
        }
        case GateKind::CNOT: {
            uint64_t m = uint64_t{1} << q[1];
            for (uint64_t b = 0; b < v.amp.size(); b++) {
                if (bit(b, q[0]) && !(b & m)) {
                    std::swap(v.amp[b], v.amp[b | m]);
                }
            }
            return;
        }
        default:
            break;
    }
    int power = 0;
    switch (g.kind) {
        case GateKind::Z:
        case GateKind::CZ:
        case GateKind::CCZ:
            power = 4;
            break;
        case GateKind::S:
        case GateKind::CS:
            power = 2;
            break;
        case GateKind::T:
            power = 1;
            break;
        default:
            break;
    }
    cdouble ph = alpha_power(power);
    for (uint64_t b = 0; b < v.amp.size(); b++) {
        bool all = true;
        for (size_t k : q) {
            all = all && bit(b, k);
        }
        if (all) {
            v.amp[b] *= ph;
        }
    }
}

/// Runs the circuit on |0...0>.
inline DenseState simulate(const Circuit &c, size_t limit = kDefaultDenseLimit) {
    check_dense_limit(c.n, limit);
    DenseState v = DenseState::basis(c.n, 0);
    for (const auto &g : c.gates) {
        apply_gate(g, v);
    }
    return v;
}

/// Sum of monomial operators |x> -> d_a[x] |x + a>, keyed by the mask a.
class SparseOperator {
   public:
    SparseOperator() = default;
    explicit SparseOperator(size_t n) : n_(n) {}

    static SparseOperator identity(size_t n) {
        SparseOperator o(n);
        o.terms_[0] = std::vector<cdouble>(size_t(1) << n, 1.0);
        return o;
    }
    static SparseOperator from(const XSOperator &g) {
        SparseOperator o(g.num_qubits());
        std::vector<cdouble> d(size_t(1) << o.n_);
        for (uint64_t x = 0; x < d.size(); x++) {
            d[x] = alpha_power(g.phase_on_u64(x));
        }
        o.terms_[to_index(g.xmask())] = std::move(d);
        return o;
    }
    /// (I + z)/2.
    static SparseOperator projector(const ZTypeOperator &z) {
        size_t n = z.zmask.size();
        SparseOperator o(n);
        std::vector<cdouble> d(size_t(1) << n);
        uint64_t m = to_index(z.zmask);
        for (uint64_t x = 0; x < d.size(); x++) {
            d[x] = ((std::popcount(m & x) & 1) ^ int(z.sign)) ? 0.0 : 1.0;
        }
        o.terms_[0] = std::move(d);
        return o;
    }
    /// (I + g)/2.
    static SparseOperator projector(const XSOperator &g) {
        return (identity(g.num_qubits()) + from(g)).scaled(0.5);
    }
    static SparseOperator of(const ProjectorTerm &t, size_t n) {
        if (t.kind == ProjectorTerm::Kind::Gauge) {
            return identity(n) - projector(t.z);
        }
        SparseOperator p = identity(n);
        for (const auto &z : t.guard) {
            p = p * projector(z);
        }
        return identity(n) - p * projector(t.g);
    }

    size_t num_qubits() const {
        return n_;
    }

    SparseOperator scaled(cdouble c) const {
        SparseOperator o = *this;
        for (auto &[a, d] : o.terms_) {
            for (auto &v : d) {
                v *= c;
            }
        }
        return o;
    }
    friend SparseOperator operator+(SparseOperator a, const SparseOperator &b) {
        for (const auto &[m, d] : b.terms_) {
            auto &slot = a.terms_[m];
            if (slot.empty()) {
                slot.assign(d.size(), 0.0);
            }
            for (size_t x = 0; x < d.size(); x++) {
                slot[x] += d[x];
            }
        }
        return a;
    }
    friend SparseOperator operator-(const SparseOperator &a, const SparseOperator &b) {
        return a + b.scaled(-1.0);
    }
    /// (A B)|x> = B applied first.
    friend SparseOperator operator*(const SparseOperator &A, const SparseOperator &B) {
        SparseOperator o(A.n_);
        for (const auto &[mb, db] : B.terms_) {
            for (const auto &[ma, da] : A.terms_) {
                auto &slot = o.terms_[ma ^ mb];
                if (slot.empty()) {
                    slot.assign(db.size(), 0.0);
                }
                for (uint64_t x = 0; x < db.size(); x++) {
                    slot[x] += db[x] * da[x ^ mb];
                }
            }
        }
        return o;
    }

    /// Largest coefficient magnitude; zero iff the operator vanishes.
    double max_abs() const {
        double m = 0;
        for (const auto &[a, d] : terms_) {
            for (const auto &v : d) {
                m = std::max(m, std::abs(v));
            }
        }
        return m;
    }
    cdouble trace() const {
        cdouble t = 0;
        auto it = terms_.find(0);
        if (it != terms_.end()) {
            for (const auto &v : it->second) {
                t += v;
            }
        }
        return t;
    }
    DenseState apply(const DenseState &v) const {
        DenseState out(v.n);
        for (const auto &[a, d] : terms_) {
            for (uint64_t x = 0; x < d.size(); x++) {
                out.amp[x ^ a] += d[x] * v.amp[x];
            }
        }
        return out;
    }

   private:
    size_t n_ = 0;
    std::map<uint64_t, std::vector<cdouble>> terms_;
};

struct HamiltonianCheck {
    /// Largest coefficient of any commutator [h_i, h_j].
    double max_commutator = 0;
    /// Largest coefficient of h^2 - h over all terms.
    double max_idempotence_error = 0;
    /// Dimension of the common zero-energy space.
    size_t ground_dimension = 0;
};

inline HamiltonianCheck check_hamiltonian(const HamiltonianSpec &H, size_t limit = 12) {
    check_dense_limit(H.n, limit);
    HamiltonianCheck out;
    std::vector<SparseOperator> ops;
    for (const auto &t : H.terms) {
        ops.push_back(SparseOperator::of(t, H.n));
    }
    for (size_t i = 0; i < ops.size(); i++) {
        out.max_idempotence_error = std::max(out.max_idempotence_error, (ops[i] * ops[i] - ops[i]).max_abs());
        for (size_t j = i + 1; j < ops.size(); j++) {
            out.max_commutator = std::max(out.max_commutator, (ops[i] * ops[j] - ops[j] * ops[i]).max_abs());
        }
    }
    SparseOperator ground = SparseOperator::identity(H.n);
    for (const auto &op : ops) {
        ground = ground * (SparseOperator::identity(H.n) - op);
    }
    out.ground_dimension = size_t(std::llround(ground.trace().real()));
    return out;
}

/// Largest coefficient of P [P_gj, P_gk] over generator pairs, with P the product of all gauge projectors.
inline double gauge_restricted_commutator(const HamiltonianSpec &H, size_t limit = 12) {
    check_dense_limit(H.n, limit);
    SparseOperator P = SparseOperator::identity(H.n);
    std::vector<SparseOperator> gens;
    for (const auto &t : H.terms) {
        if (t.kind == ProjectorTerm::Kind::Gauge) {
            P = P * SparseOperator::projector(t.z);
        } else {
            gens.push_back(SparseOperator::projector(t.g));
        }
    }
    double worst = 0;
    for (size_t i = 0; i < gens.size(); i++) {
        for (size_t j = i + 1; j < gens.size(); j++) {
            worst = std::max(worst, (P * (gens[i] * gens[j] - gens[j] * gens[i])).max_abs());
        }
    }
    return worst;
}

}  // namespace xsstab

#endif
