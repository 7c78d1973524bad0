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

#ifndef XSSTAB_CODESPACE_HPP
#define XSSTAB_CODESPACE_HPP

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "xsstab/gf2.hpp"
#include "xsstab/phase_polynomial.hpp"
#include "xsstab/xs_group.hpp"

namespace xsstab {

/// Raised when a computation requires a stabilized state and none exists.
class NoStabilizedState : public std::runtime_error {
   public:
    explicit NoStabilizedState(const std::string &what) : std::runtime_error(what) {}
};

struct CodeStructure {
    size_t n = 0;
    size_t t = 0;
    /// perm[k] is the original qubit at position k; positions 0..t-1 carry x.
    std::vector<size_t> perm;
    /// (n - t) x t; position t + r carries W[r] . x + mu_r.
    BitMatrix W;
    /// First t generators: independent X-masks (e_j, w_j) in position order.
    GeneratingSet normal;
    std::vector<XSOperator> diag_gens;
    bool regular = false;
    /// Span of the support vectors (x, Wx), original qubit labels.
    AffineSpace V;
    /// Basis strings fixed by the diagonal subgroup; present for regular groups.
    std::optional<AffineSpace> V_D;
    /// Canonical coset representatives (zero on the x positions), sorted; original labels.
    std::vector<BitVector> lambda_list;
    /// mu_i = lambda_i restricted to positions t..n-1.
    std::vector<BitVector> mu_list;
    size_t d = 0;

    /// Column j of the support matrix: the qubits flipped by x_j.
    BitVector support_column(size_t j) const {
        return normal.gens[j].xmask();
    }
    /// Basis string for (x, Wx + mu) in original labels.
    BitVector basis_string(const BitVector &x, const BitVector &mu) const {
        BitVector v(n);
        for (size_t j : x.ones()) {
            v ^= support_column(j);
        }
        for (size_t r : mu.ones()) {
            v.flip(perm[t + r]);
        }
        return v;
    }
    BitVector lambda_of(const BitVector &mu) const {
        return basis_string(BitVector(t), mu);
    }
    BitVector mu_of(const BitVector &lambda) const {
        BitVector mu(n - t);
        for (size_t r = 0; r < n - t; r++) {
            mu.set(r, lambda.get(perm[t + r]));
        }
        return mu;
    }
};

/// State 2^(-t/2) sum_x f(x) |x, Wx + mu> in position order.
struct BasisState {
    std::shared_ptr<const CodeStructure> structure;
    BitVector mu;
    PhasePolynomial f;

    size_t n() const {
        return structure->n;
    }
    size_t t() const {
        return structure->t;
    }
};

/// Z2-affine form over a set of variables: parity of `vars` plus `constant`.
struct AffineForm {
    BitVector vars;
    bool constant = false;
};

namespace detail {

/// Phase of g_t^{x_t} ... g_1^{x_1} applied to a basis state whose qubit values are `values`.
/// Variables 0..t-1 are x; further variables may appear in `values`.
inline PhasePolynomial symbolic_phase(const GeneratingSet &normal, size_t t, std::vector<AffineForm> values,
                                      size_t num_vars) {
    PhasePolynomial f(num_vars);
    for (size_t k = 0; k < t; k++) {
        const XSOperator &g = normal.gens[k];
        uint32_t xk = uint32_t(k);
        f.add(Monomial::of({xk}), g.phase());
        for (size_t q = 0; q < g.num_qubits(); q++) {
            int b = g.b(q);
            if (b == 0) {
                continue;
            }
            std::vector<uint32_t> vs;
            for (size_t v : values[q].vars.ones()) {
                vs.push_back(uint32_t(v));
            }
            for (const auto &[m, c] : parity_expansion(vs, values[q].constant, 2)) {
                f.add(m.times(Monomial::of({xk})), 2 * b * c);
            }
        }
        for (size_t q : g.xmask().ones()) {
            values[q].vars.flip(k);
        }
    }
    return f;
}

}  // namespace detail

/// Degeneracy, support structure and coset labels of the space stabilized by S.
inline CodeStructure analyze(const GeneratingSet &S) {
    ExistenceResult ex = decide_existence(S);
    if (!ex) {
        throw NoStabilizedState(ex.violated_condition
                                    ? "generating set violates admissibility condition " +
                                          std::to_string(ex.violated_condition)
                                    : "no basis state is fixed by the diagonal subgroup");
    }
    CodeStructure cs;
    cs.n = S.n;
    NormalForm nf = normal_form(S);
    cs.t = nf.t;
    cs.perm = nf.perm;
    cs.W = nf.W;
    cs.normal = GeneratingSet(S.n);
    for (size_t j = 0; j < nf.t; j++) {
        cs.normal.add(nf.gens.gens[j]);
    }
    cs.diag_gens = diagonal_subgroup(S);
    cs.regular = std::all_of(cs.diag_gens.begin(), cs.diag_gens.end(),
                             [](const XSOperator &d) { return d.has_even_sexp(); });
    std::vector<BitVector> vbasis;
    for (size_t j = 0; j < cs.t; j++) {
        vbasis.push_back(cs.normal.gens[j].xmask());
    }
    cs.V = AffineSpace::linear(S.n, vbasis);
    if (cs.regular) {
        std::vector<BitVector> rows;
        BitVector rhs(cs.diag_gens.size());
        for (size_t j = 0; j < cs.diag_gens.size(); j++) {
            rows.push_back(cs.diag_gens[j].b_hi());
            rhs.set(j, cs.diag_gens[j].phase() == 4);
        }
        auto vd = solve_affine(BitMatrix::from_rows(rows, S.n), rhs);
        cs.V_D = *vd;
        cs.lambda_list = coset_representatives(cs.V, *cs.V_D);
    } else {
        std::set<BitVector> reps;
        for (const auto &z : diagonal_fixed_points(S.n, cs.diag_gens)) {
            reps.insert(cs.V.reduce(z));
        }
        cs.lambda_list.assign(reps.begin(), reps.end());
    }
    for (const auto &lam : cs.lambda_list) {
        cs.mu_list.push_back(cs.mu_of(lam));
    }
    cs.d = cs.lambda_list.size();
    return cs;
}

/// f with g_t^{x_t} ... g_1^{x_1} |0, mu> = f(x) |x, Wx + mu>, normalized to f(0) = 1.
inline PhasePolynomial extract_phase(const CodeStructure &cs, const BitVector &mu) {
    if (mu.size() != cs.n - cs.t) {
        throw std::invalid_argument("extract_phase: mu has the wrong length");
    }
    std::vector<AffineForm> values(cs.n, AffineForm{BitVector(cs.t), false});
    for (size_t r : mu.ones()) {
        values[cs.perm[cs.t + r]].constant = true;
    }
    PhasePolynomial f = detail::symbolic_phase(cs.normal, cs.t, values, cs.t).normalized();
    if (!f.is_valid_phase()) {
        throw std::logic_error("extract_phase: phase polynomial left the representable class");
    }
    return f;
}

inline PhasePolynomial extract_phase(const GeneratingSet &S, const CodeStructure &cs, const BitVector &mu) {
    (void)S;
    return extract_phase(cs, mu);
}

inline BasisState basis_state(std::shared_ptr<const CodeStructure> cs, size_t index) {
    if (index >= cs->mu_list.size()) {
        throw std::out_of_range("basis_state: index beyond the code dimension");
    }
    BasisState b;
    b.mu = cs->mu_list[index];
    b.f = extract_phase(*cs, b.mu);
    b.structure = std::move(cs);
    return b;
}

inline std::vector<BasisState> basis_states(const GeneratingSet &S) {
    auto cs = std::make_shared<const CodeStructure>(analyze(S));
    std::vector<BasisState> out;
    for (size_t k = 0; k < cs->d; k++) {
        out.push_back(basis_state(cs, k));
    }
    return out;
}

/// Basis of the orthogonal complement of V: the Z-masks fixing the support of one coset.
inline std::vector<BitVector> support_complement(const CodeStructure &cs) {
    return orthogonal_complement(cs.V.basis(), cs.n);
}

/// Z-type operators (-1)^(z . lambda) Z(z) for z spanning the complement of V.
inline std::vector<XSOperator> coset_stabilizers(const CodeStructure &cs, const BitVector &lambda) {
    std::vector<XSOperator> out;
    for (const auto &z : support_complement(cs)) {
        out.push_back(ZTypeOperator(z.dot(lambda), z).to_xs());
    }
    return out;
}

/// The original generators plus Z-type operators singling out the basis state labelled mu.
inline GeneratingSet complete_stabilizers(const GeneratingSet &S, const CodeStructure &cs, const BitVector &mu) {
    GeneratingSet out = S;
    for (auto &g : coset_stabilizers(cs, cs.lambda_of(mu))) {
        out.add(std::move(g));
    }
    return out;
}

/// Index of the pair {j, k}, j < k, among pairs of t variables.
inline size_t pair_index(size_t j, size_t k) {
    if (j > k) {
        std::swap(j, k);
    }
    return k * (k - 1) / 2 + j;
}

inline size_t num_pairs(size_t t) {
    return t * (t - 1) / 2;
}

/// F_h applied to the i-quadratic and (-1)-cubic part of f; a quadratic form over Z2 pairs.
inline BitVector fh_map(size_t h, const PhasePolynomial &f) {
    size_t t = f.num_vars();
    BitVector q(num_pairs(t));
    for (const auto &[m, c] : f.terms()) {
        if (!m.contains(uint32_t(h))) {
            continue;
        }
        auto v = m.vars();
        if (v.size() == 2 && ((c / 2) % 2)) {
            q.flip(pair_index(v[0], v[1]));
        } else if (v.size() == 3 && c == 4) {
            auto rest = m.without(uint32_t(h)).vars();
            q.flip(pair_index(rest[0], rest[1]));
        }
    }
    return q;
}

struct AmplitudeCondition {
    std::vector<BitVector> gamma_basis;
    AffineSpace Gamma;
};

/// gamma_r has pair coefficient W[r][k] W[r][l].
inline AmplitudeCondition amplitude_condition(const BitMatrix &W) {
    AmplitudeCondition ac;
    size_t t = W.num_cols();
    for (size_t r = 0; r < W.num_rows(); r++) {
        BitVector g(num_pairs(t));
        auto ones = W.row(r).ones();
        for (size_t a = 0; a < ones.size(); a++) {
            for (size_t b = a + 1; b < ones.size(); b++) {
                g.set(pair_index(ones[a], ones[b]));
            }
        }
        ac.gamma_basis.push_back(g);
    }
    ac.Gamma = AffineSpace::linear(num_pairs(t), ac.gamma_basis);
    return ac;
}

inline bool check_amplitude(const PhasePolynomial &f, const BitMatrix &W) {
    if (f.num_vars() != W.num_cols()) {
        throw std::invalid_argument("check_amplitude: f and W disagree on t");
    }
    AmplitudeCondition ac = amplitude_condition(W);
    for (size_t h = 0; h < f.num_vars(); h++) {
        if (!ac.Gamma.in_span(fh_map(h, f))) {
            return false;
        }
    }
    return true;
}

/// Generators uniquely stabilizing sum_x f(x) |x, Wx> on t + rows(W) qubits.
inline GeneratingSet stabilizers_from_amplitude(const PhasePolynomial &f, const BitMatrix &W) {
    size_t t = W.num_cols();
    size_t n = t + W.num_rows();
    if (f.num_vars() != t || !f.is_valid_phase()) {
        throw std::invalid_argument("stabilizers_from_amplitude: f is not a valid phase on t variables");
    }
    AmplitudeCondition ac = amplitude_condition(W);
    BitMatrix gamma_cols = BitMatrix::from_columns(ac.gamma_basis, num_pairs(t));
    GeneratingSet S(n);
    for (size_t j = 0; j < t; j++) {
        // D_j(x) = f(x + e_j) - f(x).
        PhasePolynomial shifted = compose_affine(f, BitMatrix::identity(t), BitVector::unit(t, j));
        PhasePolynomial D = shifted - f;
        BitVector quad(num_pairs(t));
        std::vector<int> linear(t, 0);
        int constant = 0;
        for (const auto &[m, c] : D.terms()) {
            auto v = m.vars();
            if (v.empty()) {
                constant = c;
            } else if (v.size() == 1) {
                if (c % 2) {
                    throw std::logic_error("stabilizers_from_amplitude: odd linear coefficient in a difference");
                }
                linear[v[0]] = c;
            } else if (v.size() == 2) {
                if (c % 4) {
                    throw std::domain_error("stabilizers_from_amplitude: amplitude condition violated");
                }
                quad.set(pair_index(v[0], v[1]), c == 4);
            } else {
                throw std::logic_error("stabilizers_from_amplitude: cubic term in a difference");
            }
        }
        BitVector bprime(W.num_rows());
        if (W.num_rows() > 0 || quad.any()) {
            auto sol = solve_affine(gamma_cols, quad);
            if (!sol) {
                throw std::domain_error("stabilizers_from_amplitude: amplitude condition violated");
            }
            bprime = sol->offset();
        }
        XSOperator g(n);
        g.set_phase(constant);
        BitVector a(n);
        a.set(j);
        for (size_t r = 0; r < W.num_rows(); r++) {
            if (W.get(r, j)) {
                a.set(t + r);
            }
        }
        g.xmask() = a;
        for (size_t k = 0; k < t; k++) {
            int acc = linear[k] / 2;
            for (size_t r = 0; r < W.num_rows(); r++) {
                if (bprime.get(r) && W.get(r, k)) {
                    acc -= 1;
                }
            }
            g.set_b(k, acc);
        }
        for (size_t r = 0; r < W.num_rows(); r++) {
            g.set_b(t + r, bprime.get(r));
        }
        S.add(g);
    }
    for (size_t r = 0; r < W.num_rows(); r++) {
        BitVector z(n);
        z.set(t + r);
        for (size_t k : W.row(r).ones()) {
            z.set(k);
        }
        S.add(ZTypeOperator(false, z).to_xs());
    }
    return S;
}

/// A regular generating set stabilizing the same unique state.
inline GeneratingSet regularize(const GeneratingSet &S) {
    CodeStructure cs = analyze(S);
    if (cs.d != 1) {
        throw std::domain_error("regularize: the group stabilizes a space of dimension " + std::to_string(cs.d) +
                                ", not a unique state");
    }
    GeneratingSet out(S.n);
    for (const auto &g : cs.normal.gens) {
        out.add(g);
    }
    for (auto &h : coset_stabilizers(cs, cs.lambda_list[0])) {
        out.add(std::move(h));
    }
    return out;
}

}  // namespace xsstab

#endif
