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


#ifndef XSSTAB_HAMILTONIAN_HPP
#define XSSTAB_HAMILTONIAN_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "xsstab/gf2.hpp"
#include "xsstab/xs_group.hpp"
#include "xsstab/xs_operator.hpp"

namespace xsstab {

/// Gauge term I - (I + Z)/2, or generator term I - (prod_guard (I + Z)/2) (I + g)/2.
struct ProjectorTerm {
    enum class Kind { Gauge, Generator };
    Kind kind = Kind::Gauge;
    ZTypeOperator z;
    XSOperator g;
    std::vector<ZTypeOperator> guard;

    static ProjectorTerm gauge(ZTypeOperator z) {
        ProjectorTerm t;
        t.kind = Kind::Gauge;
        t.z = std::move(z);
        return t;
    }
    static ProjectorTerm generator(XSOperator g, std::vector<ZTypeOperator> guard) {
        ProjectorTerm t;
        t.kind = Kind::Generator;
        t.g = std::move(g);
        t.guard = std::move(guard);
        return t;
    }

    BitVector support() const {
        if (kind == Kind::Gauge) {
            return z.zmask;
        }
        BitVector s = g.support();
        for (const auto &p : guard) {
            s |= p.zmask;
        }
        return s;
    }

    /// `GAUGE +/- zmask` or `GEN s=.. a=.. b=.. GUARD k +/-zmask ...`.
    std::string str() const {
        auto zstr = [](const ZTypeOperator &p) { return std::string(p.sign ? "-" : "+") + p.zmask.str(); };
        if (kind == Kind::Gauge) {
            return std::string("GAUGE ") + (z.sign ? "-" : "+") + " " + z.zmask.str();
        }
        std::string s = "GEN " + g.str() + " GUARD " + std::to_string(guard.size());
        for (const auto &p : guard) {
            s += " " + zstr(p);
        }
        return s;
    }
};

struct HamiltonianSpec {
    size_t n = 0;
    std::vector<ProjectorTerm> terms;
    /// Set for the local variant: the largest number of generator supports a guard spans.
    std::optional<size_t> locality_radius;

    size_t num_gauge_terms() const {
        size_t c = 0;
        for (const auto &t : terms) {
            c += t.kind == ProjectorTerm::Kind::Gauge;
        }
        return c;
    }
    std::string str() const {
        std::string s;
        for (const auto &t : terms) {
            s += t.str() + "\n";
        }
        return s;
    }
};

namespace detail {

inline ZTypeOperator as_ztype(const XSOperator &g) {
    auto z = ZTypeOperator::from_xs(g);
    if (!z) {
        throw std::logic_error("hamiltonian: commutator or square is not a signed Z operator");
    }
    return *z;
}

inline void require_admissible(const GeneratingSet &S) {
    AdmissibilityResult r = is_admissible(S);
    if (!r.admissible) {
        throw std::invalid_argument("hamiltonian: generating set violates admissibility condition " +
                                    std::to_string(r.violated_condition));
    }
}

}  // namespace detail

/// Gauge terms for C_S and Q_S, and one generator term per generator guarded by all of them.
inline HamiltonianSpec build(const GeneratingSet &S) {
    detail::require_admissible(S);
    HamiltonianSpec H;
    H.n = S.n;
    std::vector<ZTypeOperator> gauge;
    std::unordered_set<XSOperator, XSOperatorHash> seen;
    auto collect = [&](const std::vector<XSOperator> &ops) {
        for (const auto &c : ops) {
            if (seen.insert(c).second) {
                gauge.push_back(detail::as_ztype(c));
            }
        }
    };
    collect(commutator_set(S));
    collect(square_set(S));
    for (const auto &z : gauge) {
        H.terms.push_back(ProjectorTerm::gauge(z));
    }
    for (const auto &g : S.gens) {
        H.terms.push_back(ProjectorTerm::generator(g, gauge));
    }
    return H;
}

/// Generator j is guarded only by the commutators and squares among its neighbours (itself included).
/// supports[j] lists the qubits touched by generator j; an empty list means "use the generator's support".
inline HamiltonianSpec build_local(const GeneratingSet &S, const std::vector<std::vector<size_t>> &supports = {}) {
    detail::require_admissible(S);
    size_t m = S.size();
    std::vector<BitVector> supp(m);
    for (size_t j = 0; j < m; j++) {
        supp[j] = S.gens[j].support();
        if (j < supports.size() && !supports[j].empty()) {
            BitVector s(S.n);
            for (size_t q : supports[j]) {
                if (q >= S.n) {
                    throw std::invalid_argument("build_local: support qubit out of range");
                }
                s.set(q);
            }
            if ((supp[j] & s) != supp[j]) {
                throw std::invalid_argument("build_local: declared support misses qubits of the generator");
            }
            supp[j] = s;
        }
    }
    std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
    size_t radius = 0;
    for (size_t j = 0; j < m; j++) {
        size_t neighbours = 0;
        for (size_t k = 0; k < m; k++) {
            adj[j][k] = k == j || (supp[j] & supp[k]).any();
            neighbours += adj[j][k] ? 1 : 0;
        }
        radius = std::max(radius, neighbours);
    }
    std::vector<ZTypeOperator> gauge;
    std::unordered_set<XSOperator, XSOperatorHash> seen_all;
    std::vector<std::vector<ZTypeOperator>> guards(m);
    std::vector<std::unordered_set<XSOperator, XSOperatorHash>> seen(m);
    auto take = [&](const XSOperator &c, size_t a, size_t b) {
        if (c.is_identity()) {
            return;
        }
        bool used = false;
        for (size_t j = 0; j < m; j++) {
            if (adj[j][a] && adj[j][b]) {
                used = true;
                if (seen[j].insert(c).second) {
                    guards[j].push_back(detail::as_ztype(c));
                }
            }
        }
        if (used && seen_all.insert(c).second) {
            gauge.push_back(detail::as_ztype(c));
        }
    };
    for (size_t a = 0; a < m; a++) {
        for (size_t b = 0; b < m; b++) {
            if (a != b) {
                take(commutator(S.gens[a], S.gens[b]), a, b);
            }
        }
    }
    for (size_t a = 0; a < m; a++) {
        take(square(S.gens[a]), a, a);
    }
    HamiltonianSpec H;
    H.n = S.n;
    for (const auto &z : gauge) {
        H.terms.push_back(ProjectorTerm::gauge(z));
    }
    for (size_t j = 0; j < m; j++) {
        H.terms.push_back(ProjectorTerm::generator(S.gens[j], guards[j]));
    }
    H.locality_radius = radius;
    return H;
}

}  // namespace xsstab

#endif
