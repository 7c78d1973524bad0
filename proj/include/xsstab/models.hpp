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


#ifndef XSSTAB_MODELS_HPP
#define XSSTAB_MODELS_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xsstab/gf2.hpp"
#include "xsstab/xs_group.hpp"
#include "xsstab/xs_operator.hpp"

namespace xsstab {

/// Three generators on six qubits whose unique stabilized state has amplitudes (-1)^(x1 x2 x3).
inline GeneratingSet six_qubit() {
    GeneratingSet S(6);
    S.add(XSOperator::from_factors(0, {"X", "S3", "S3", "X", "S", "X"}));
    S.add(XSOperator::from_factors(0, {"S3", "X", "S3", "X", "X", "S"}));
    S.add(XSOperator::from_factors(0, {"S3", "S3", "X", "S", "X", "X"}));
    return S;
}

/// One generator i^3 S_a S_b S_c per clause; a state is fixed iff every clause has exactly one true variable.
inline GeneratingSet sat_encode(size_t num_vars, const std::vector<std::array<size_t, 3>> &clauses) {
    GeneratingSet S(num_vars);
    for (const auto &c : clauses) {
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) {
            throw std::invalid_argument("sat_encode: clause repeats a variable");
        }
        XSOperator g(num_vars);
        g.set_phase(6);
        for (size_t v : c) {
            if (v >= num_vars) {
                throw std::invalid_argument("sat_encode: variable index out of range");
            }
            g.set_b(v, 1);
        }
        S.add(g);
    }
    return S;
}

/// Brute-force Positive 1-in-3-SAT; returns a satisfying assignment if any.
inline std::optional<BitVector> solve_one_in_three(size_t num_vars,
                                                   const std::vector<std::array<size_t, 3>> &clauses) {
    if (num_vars > 30) {
        throw std::length_error("solve_one_in_three: too many variables for enumeration");
    }
    for (uint64_t bits = 0; bits < (uint64_t{1} << num_vars); bits++) {
        bool ok = true;
        for (const auto &c : clauses) {
            int k = int((bits >> c[0]) & 1) + int((bits >> c[1]) & 1) + int((bits >> c[2]) & 1);
            if (k != 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return BitVector::from_u64(num_vars, bits);
        }
    }
    return std::nullopt;
}

struct ReedMuller15 {
    GeneratingSet xs;
    GeneratingSet pauli;
};

/// 15-qubit codes with Z rows from degree <= 2 monomials and X (resp. XS) rows from degree-1 monomials,
/// evaluated on the nonzero points p = 1..15 of Z2^4 (qubit p - 1, coordinate i = bit i of p).
inline ReedMuller15 reed_muller_15() {
    auto eval = [](std::vector<size_t> vars) {
        BitVector v(15);
        for (size_t p = 1; p <= 15; p++) {
            bool on = true;
            for (size_t i : vars) {
                on = on && ((p >> i) & 1);
            }
            v.set(p - 1, on);
        }
        return v;
    };
    std::vector<BitVector> zrows, xrows;
    for (size_t i = 0; i < 4; i++) {
        xrows.push_back(eval({i}));
        zrows.push_back(eval({i}));
    }
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = i + 1; j < 4; j++) {
            zrows.push_back(eval({i, j}));
        }
    }
    ReedMuller15 rm{GeneratingSet(15), GeneratingSet(15)};
    for (const auto &x : xrows) {
        XSOperator px(15);
        px.xmask() = x;
        rm.pauli.add(px);
        XSOperator g = px;
        for (size_t q : x.ones()) {
            g.set_b(q, 1);
        }
        int s = 0;
        while (s < 8) {
            g.set_phase(s);
            if (has_plus_one_eigenvalue(g)) {
                break;
            }
            s++;
        }
        if (s == 8) {
            throw std::logic_error("reed_muller_15: no phase gives a +1 eigenvalue");
        }
        rm.xs.add(g);
    }
    for (const auto &z : zrows) {
        XSOperator g = ZTypeOperator(false, z).to_xs();
        rm.pauli.add(g);
        rm.xs.add(g);
    }
    return rm;
}

enum class Boundary { Open, Torus };

/// omega(a, b, c) = (-1)^(a_i b_j c_k) with 0-based layers (i, j, k); i == j == k and j == k give the
/// single-layer and two-layer generators.
struct CocycleTerm {
    size_t i = 0, j = 0, k = 0;

    static CocycleTerm parse(const std::string &s) {
        if (s.size() < 2 || s.size() > 4 || s[0] != 'w') {
            throw std::invalid_argument("cocycle descriptor must look like w1, w12 or w123: " + s);
        }
        std::vector<size_t> d;
        for (size_t p = 1; p < s.size(); p++) {
            if (s[p] < '1' || s[p] > '9') {
                throw std::invalid_argument("cocycle descriptor must look like w1, w12 or w123: " + s);
            }
            d.push_back(size_t(s[p] - '1'));
        }
        if (d.size() == 1) {
            return {d[0], d[0], d[0]};
        }
        if (d.size() == 2) {
            if (d[0] == d[1]) {
                throw std::invalid_argument("cocycle layers must be distinct: " + s);
            }
            return {d[0], d[1], d[1]};
        }
        if (d[0] == d[1] || d[0] == d[2] || d[1] == d[2]) {
            throw std::invalid_argument("cocycle layers must be distinct: " + s);
        }
        return {d[0], d[1], d[2]};
    }
    std::string str() const {
        std::string s = "w" + std::to_string(i + 1);
        if (j != i || k != i) {
            s += std::to_string(j + 1);
        }
        if (k != j) {
            s += std::to_string(k + 1);
        }
        return s;
    }
};

struct LatticeSpec {
    size_t Lx = 2;
    size_t Ly = 2;
    Boundary boundary = Boundary::Torus;
    size_t layers = 1;
    std::vector<CocycleTerm> cocycle;
};

struct LatticeModel {
    GeneratingSet gens;
    size_t num_edges = 0;
    size_t num_edge_qubits = 0;
    size_t num_ancillas = 0;
    /// vertex_gens[v * layers + sigma] indexes gens; npos when that vertex carries no operator.
    std::vector<size_t> vertex_gens;
    /// Single-qubit Z terms pinning boundary edges of an open patch.
    std::vector<size_t> boundary_gens;
    std::vector<size_t> triangle_gens;
    std::vector<size_t> coupling_gens;
    std::vector<std::string> qubit_labels;
};

namespace detail {

/// Triangular lattice on vertices (x, y): edges a: v -> v + e1, b: v -> v + e2, c: v -> v + e1 + e2.
/// Triangles up(v) = (v, v + e1, v + e1 + e2) and down(v) = (v, v + e2, v + e1 + e2), listed with
/// edges (x01, x12, x02) in branching order.
///
/// A torus has Lx x Ly vertices, all interior. An open patch has Lx x Ly interior vertices surrounded by a
/// ring of boundary vertices; it keeps the triangles touching an interior vertex and their edges.
class TriangularLattice {
   public:
    static constexpr size_t npos = size_t(-1);

    TriangularLattice(size_t Lx, size_t Ly, Boundary b) : b_(b) {
        if (Lx < 2 || Ly < 2) {
            throw std::invalid_argument("lattice must be at least 2 x 2");
        }
        W_ = b == Boundary::Torus ? Lx : Lx + 2;
        H_ = b == Boundary::Torus ? Ly : Ly + 2;
        interior_.assign(W_ * H_, b == Boundary::Torus);
        if (b == Boundary::Open) {
            for (size_t y = 1; y <= Ly; y++) {
                for (size_t x = 1; x <= Lx; x++) {
                    interior_[y * W_ + x] = true;
                }
            }
        }
        tri_present_.assign(2 * W_ * H_, false);
        std::vector<bool> used(3 * W_ * H_, false);
        for (size_t t = 0; t < 2 * W_ * H_; t++) {
            auto vs = triangle_vertices(t);
            bool inside = true, touches = false;
            for (size_t v : vs) {
                inside = inside && v != npos;
                touches = touches || (v != npos && interior_[v]);
            }
            if (inside && touches) {
                tri_present_[t] = true;
                for (size_t slot : triangle_slots(t)) {
                    used[slot] = true;
                }
            }
        }
        edge_id_.assign(3 * W_ * H_, npos);
        for (size_t k = 0; k < used.size(); k++) {
            if (used[k]) {
                edge_id_[k] = num_edges_++;
                edge_slot_.push_back(k);
            }
        }
    }

    size_t num_vertices() const {
        return W_ * H_;
    }
    bool interior(size_t v) const {
        return interior_[v];
    }
    size_t num_edges() const {
        return num_edges_;
    }
    size_t num_triangles() const {
        return 2 * W_ * H_;
    }

    /// Vertex index of v + (dx, dy), or npos outside an open patch.
    size_t shift(size_t v, long dx, long dy) const {
        if (v == npos) {
            return npos;
        }
        long x = long(v % W_) + dx, y = long(v / W_) + dy;
        if (b_ == Boundary::Torus) {
            x = ((x % long(W_)) + long(W_)) % long(W_);
            y = ((y % long(H_)) + long(H_)) % long(H_);
        } else if (x < 0 || y < 0 || x >= long(W_) || y >= long(H_)) {
            return npos;
        }
        return size_t(y) * W_ + size_t(x);
    }

    /// Edge index of the edge of `type` leaving v, or npos.
    size_t edge(size_t v, size_t type) const {
        return v == npos ? npos : edge_id_[3 * v + type];
    }

    /// Endpoints of edge e.
    std::array<size_t, 2> endpoints(size_t e) const {
        size_t k = edge_slot_[e], v = k / 3, type = k % 3;
        return {v, shift(v, type == 1 ? 0 : 1, type == 0 ? 0 : 1)};
    }

    /// (x01, x12, x02) edge indices of triangle 2v (up) or 2v + 1 (down), or nullopt if absent.
    std::optional<std::array<size_t, 3>> triangle(size_t tri) const {
        if (tri == npos || !tri_present_[tri]) {
            return std::nullopt;
        }
        auto sl = triangle_slots(tri);
        return std::array<size_t, 3>{edge_id_[sl[0]], edge_id_[sl[1]], edge_id_[sl[2]]};
    }

    /// Local edges 1..12 around s (index 0..11); npos for missing edges.
    std::array<size_t, 12> star(size_t s) const {
        size_t m1 = shift(s, -1, 0), m2 = shift(s, 0, -1), m12 = shift(s, -1, -1);
        size_t p1 = shift(s, 1, 0), p2 = shift(s, 0, 1);
        return {edge(m1, 0), edge(m12, 2), edge(m2, 1), edge(s, 0), edge(s, 2), edge(s, 1),
                edge(m12, 1), edge(m12, 0), edge(m2, 2), edge(p1, 1), edge(p2, 0), edge(m1, 2)};
    }

    /// Triangles T1..T6 around s as lattice triangle ids (npos when the base vertex is missing).
    std::array<size_t, 6> star_triangles(size_t s) const {
        size_t m1 = shift(s, -1, 0), m2 = shift(s, 0, -1), m12 = shift(s, -1, -1);
        auto up = [](size_t v) { return v == npos ? npos : 2 * v; };
        auto down = [](size_t v) { return v == npos ? npos : 2 * v + 1; };
        return {down(m12), up(m12), down(m2), up(s), down(s), up(m1)};
    }

    std::string edge_label(size_t e) const {
        size_t k = edge_slot_[e], v = k / 3;
        const char *t = "abc";
        return std::string(1, t[k % 3]) + "(" + std::to_string(v % W_) + "," + std::to_string(v / W_) + ")";
    }

   private:
    std::array<size_t, 3> triangle_vertices(size_t tri) const {
        size_t v = tri / 2;
        return {v, tri % 2 == 0 ? shift(v, 1, 0) : shift(v, 0, 1), shift(v, 1, 1)};
    }
    /// Edge slots 3v + type of (x01, x12, x02); only meaningful when all vertices exist.
    std::array<size_t, 3> triangle_slots(size_t tri) const {
        size_t v = tri / 2;
        if (tri % 2 == 0) {
            return {3 * v + 0, 3 * shift(v, 1, 0) + 1, 3 * v + 2};
        }
        return {3 * v + 1, 3 * shift(v, 0, 1) + 0, 3 * v + 2};
    }

    size_t W_ = 0, H_ = 0;
    Boundary b_;
    size_t num_edges_ = 0;
    std::vector<bool> interior_;
    std::vector<bool> tri_present_;
    std::vector<size_t> edge_id_;
    std::vector<size_t> edge_slot_;
};

/// Multilinear polynomial over Z2 with monomials as sorted variable lists.
class Z2Poly {
   public:
    static Z2Poly constant(bool c) {
        Z2Poly p;
        if (c) {
            p.terms_.insert(std::vector<size_t>{});
        }
        return p;
    }
    static Z2Poly variable(size_t v) {
        Z2Poly p;
        p.terms_.insert({v});
        return p;
    }
    Z2Poly &operator+=(const Z2Poly &o) {
        for (const auto &m : o.terms_) {
            toggle(m);
        }
        return *this;
    }
    friend Z2Poly operator*(const Z2Poly &a, const Z2Poly &b) {
        Z2Poly r;
        for (const auto &x : a.terms_) {
            for (const auto &y : b.terms_) {
                std::vector<size_t> m = x;
                m.insert(m.end(), y.begin(), y.end());
                std::sort(m.begin(), m.end());
                m.erase(std::unique(m.begin(), m.end()), m.end());
                r.toggle(m);
            }
        }
        return r;
    }
    const std::set<std::vector<size_t>> &terms() const {
        return terms_;
    }

   private:
    void toggle(const std::vector<size_t> &m) {
        if (!terms_.erase(m)) {
            terms_.insert(m);
        }
    }
    std::set<std::vector<size_t>> terms_;
};

}  // namespace detail

/// Twisted quantum double model on the triangular lattice with one qubit per edge and layer.
///
/// Local edges around a vertex s: 1 a(s-e1), 2 c(s-e1-e2), 3 b(s-e2), 4 a(s), 5 c(s), 6 b(s),
/// 7 b(s-e1-e2), 8 a(s-e1-e2), 9 c(s-e2), 10 b(s+e1), 11 a(s+e2), 12 c(s-e1). Triangle Tp holds the
/// edges p, p+1 (mod 6) and 6+p. The vertex phase for generator t is
///   w(t,x4,x10) w(x3+t,t,x4) w(x8,x3+t,t) / (w(t,x6,x11) w(x1+t,t,x6) w(x7,x1+t,t))
/// with the factors living on T4, T3, T2, T5, T6 and T1. Products x_{e,s} x_{e',s} in one layer
/// become S^3 S^3 S on the triangle; products across layers use an ancilla holding x01 + x12 of the
/// triangle. On an open patch only interior vertices carry operators and every edge between two boundary
/// vertices is pinned by a single-qubit Z term.
inline LatticeModel tqd(const LatticeSpec &spec) {
    using detail::TriangularLattice;
    using detail::Z2Poly;
    const size_t K = spec.layers;
    if (K == 0) {
        throw std::invalid_argument("tqd: need at least one layer");
    }
    for (const auto &c : spec.cocycle) {
        if (c.i >= K || c.j >= K || c.k >= K) {
            throw std::invalid_argument("tqd: cocycle " + c.str() + " uses a layer beyond " + std::to_string(K));
        }
    }
    TriangularLattice lat(spec.Lx, spec.Ly, spec.boundary);
    const size_t E = lat.num_edges();
    const size_t npos = TriangularLattice::npos;
    auto qubit = [&](size_t e, size_t layer) { return layer * E + e; };

    struct VertexTerm {
        size_t s;
        size_t layer;
        BitVector flips;
        Z2Poly phase;
        std::map<std::pair<size_t, size_t>, size_t> pair_triangle;
    };
    std::vector<VertexTerm> terms;
    // Affine layer components of a cocycle argument: an edge variable (or none) plus t.
    struct Arg {
        size_t edge;
        bool plus_t;
    };
    for (size_t s = 0; s < lat.num_vertices(); s++) {
        if (!lat.interior(s)) {
            continue;
        }
        auto st = lat.star(s);
        auto tris = lat.star_triangles(s);
        auto present = [&](size_t p) { return tris[p] != npos && lat.triangle(tris[p]).has_value(); };
        for (size_t layer = 0; layer < K; layer++) {
            VertexTerm vt{s, layer, BitVector(K * E), {}, {}};
            bool any = false;
            for (size_t l = 0; l < 6; l++) {
                if (st[l] != npos) {
                    vt.flips.set(qubit(st[l], layer));
                    any = true;
                }
            }
            if (!any) {
                continue;
            }
            auto component = [&](const Arg &a, size_t comp) {
                Z2Poly p = Z2Poly::constant(a.plus_t && comp == layer);
                if (a.edge != npos) {
                    p += Z2Poly::variable(qubit(a.edge, comp));
                }
                return p;
            };
            const Arg T{npos, true};
            auto x = [&](size_t label) { return Arg{st[label - 1], false}; };
            auto xt = [&](size_t label) { return Arg{st[label - 1], true}; };
            struct Factor {
                size_t tri;
                Arg a, b, c;
            };
            const Factor factors[6] = {{3, T, x(4), x(10)},   {2, xt(3), T, x(4)}, {1, x(8), xt(3), T},
                                       {4, T, x(6), x(11)},   {5, xt(1), T, x(6)}, {0, x(7), xt(1), T}};
            for (const auto &f : factors) {
                if (!present(f.tri)) {
                    continue;
                }
                for (const auto &w : spec.cocycle) {
                    Z2Poly term = component(f.a, w.i) * component(f.b, w.j) * component(f.c, w.k);
                    for (const auto &m : term.terms()) {
                        if (m.size() == 2) {
                            vt.pair_triangle.emplace(std::make_pair(m[0], m[1]), tris[f.tri]);
                        } else if (m.size() > 2) {
                            throw std::logic_error("tqd: vertex phase above degree 2");
                        }
                    }
                    vt.phase += term;
                }
            }
            terms.push_back(std::move(vt));
        }
    }

    // Ancillas keyed by (triangle, layer of x01, layer of x12), created on first use.
    std::map<std::array<size_t, 3>, size_t> ancilla;
    std::vector<std::array<size_t, 3>> ancilla_keys;
    struct Plan {
        std::vector<std::pair<size_t, int>> edge_b;
        std::vector<std::pair<std::array<size_t, 3>, int>> anc_b;
    };
    std::vector<Plan> plans(terms.size());
    for (size_t ti = 0; ti < terms.size(); ti++) {
        const auto &vt = terms[ti];
        Plan &pl = plans[ti];
        for (const auto &m : vt.phase.terms()) {
            if (m.empty()) {
                continue;
            }
            if (m.size() == 1) {
                pl.edge_b.push_back({m[0], 2});
                continue;
            }
            size_t u = m[0], v = m[1];
            size_t tri = vt.pair_triangle.at({u, v});
            auto e = *lat.triangle(tri);
            size_t eu = u % E, lu = u / E, ev = v % E, lv = v / E;
            pl.edge_b.push_back({u, 3});
            pl.edge_b.push_back({v, 3});
            if (lu == lv) {
                size_t third = npos;
                for (size_t x : e) {
                    if (x != eu && x != ev) {
                        third = x;
                    }
                }
                if (third == npos) {
                    throw std::logic_error("tqd: quadratic phase on edges outside one triangle");
                }
                pl.edge_b.push_back({qubit(third, lu), 1});
            } else {
                std::array<size_t, 3> key;
                if (eu == e[0] && ev == e[1]) {
                    key = {tri, lu, lv};
                } else if (ev == e[0] && eu == e[1]) {
                    key = {tri, lv, lu};
                } else {
                    throw std::logic_error("tqd: cross-layer phase does not couple x01 and x12");
                }
                if (!ancilla.count(key)) {
                    ancilla[key] = 0;
                }
                pl.anc_b.push_back({key, 1});
            }
        }
    }
    size_t idx = 0;
    for (auto &[key, id] : ancilla) {
        id = idx++;
        ancilla_keys.push_back(key);
    }
    const size_t n = K * E + ancilla.size();

    LatticeModel model;
    model.gens = GeneratingSet(n);
    model.num_edges = E;
    model.num_edge_qubits = K * E;
    model.num_ancillas = ancilla.size();
    model.vertex_gens.assign(lat.num_vertices() * K, npos);
    for (size_t l = 0; l < K; l++) {
        for (size_t e = 0; e < E; e++) {
            model.qubit_labels.push_back(lat.edge_label(e) + "." + std::to_string(l + 1));
        }
    }
    for (const auto &key : ancilla_keys) {
        model.qubit_labels.push_back("y[t" + std::to_string(key[0]) + "," + std::to_string(key[1] + 1) + "," +
                                     std::to_string(key[2] + 1) + "]");
    }

    for (size_t ti = 0; ti < terms.size(); ti++) {
        const auto &vt = terms[ti];
        XSOperator g(n);
        BitVector a(n);
        for (size_t q : vt.flips.ones()) {
            a.set(q);
        }
        for (const auto &key : ancilla_keys) {
            auto e = *lat.triangle(key[0]);
            if (vt.flips.get(qubit(e[0], key[1])) != vt.flips.get(qubit(e[1], key[2]))) {
                a.set(K * E + ancilla.at(key));
            }
        }
        g.xmask() = a;
        for (const auto &[q, inc] : plans[ti].edge_b) {
            g.set_b(q, (g.b(q) + inc) % 4);
        }
        for (const auto &[key, inc] : plans[ti].anc_b) {
            size_t q = K * E + ancilla.at(key);
            g.set_b(q, (g.b(q) + inc) % 4);
        }
        model.vertex_gens[vt.s * K + vt.layer] = model.gens.size();
        model.gens.add(std::move(g));
    }
    for (size_t tri = 0; tri < lat.num_triangles(); tri++) {
        auto e = lat.triangle(tri);
        if (!e) {
            continue;
        }
        for (size_t l = 0; l < K; l++) {
            BitVector z(n);
            for (size_t x : *e) {
                z.set(qubit(x, l));
            }
            model.triangle_gens.push_back(model.gens.size());
            model.gens.add(ZTypeOperator(false, z).to_xs());
        }
    }
    for (const auto &key : ancilla_keys) {
        auto e = *lat.triangle(key[0]);
        BitVector z(n);
        z.set(qubit(e[0], key[1]));
        z.set(qubit(e[1], key[2]));
        z.set(K * E + ancilla.at(key));
        model.coupling_gens.push_back(model.gens.size());
        model.gens.add(ZTypeOperator(false, z).to_xs());
    }
    for (size_t e = 0; e < E; e++) {
        auto ends = lat.endpoints(e);
        if (lat.interior(ends[0]) || lat.interior(ends[1])) {
            continue;
        }
        for (size_t l = 0; l < K; l++) {
            BitVector z(n);
            z.set(qubit(e, l));
            model.boundary_gens.push_back(model.gens.size());
            model.gens.add(ZTypeOperator(false, z).to_xs());
        }
    }
    return model;
}

/// Z2 model with omega = (-1)^(abc), vertex operators multiplied by the triangle terms on T4 and T5 so
/// that a bulk vertex reads X1..X6 Z1..Z6 S7..S12.
inline LatticeModel doubled_semion(size_t Lx, size_t Ly, Boundary boundary) {
    LatticeSpec spec{Lx, Ly, boundary, 1, {CocycleTerm{0, 0, 0}}};
    LatticeModel m = tqd(spec);
    detail::TriangularLattice lat(Lx, Ly, boundary);
    const size_t npos = detail::TriangularLattice::npos;
    for (size_t s = 0; s < lat.num_vertices(); s++) {
        size_t gi = m.vertex_gens[s];
        if (gi == npos) {
            continue;
        }
        auto tris = lat.star_triangles(s);
        for (size_t p : {size_t(3), size_t(4)}) {
            if (tris[p] == npos) {
                continue;
            }
            auto e = lat.triangle(tris[p]);
            if (!e) {
                continue;
            }
            BitVector z(m.gens.n);
            for (size_t x : *e) {
                z.set(x);
            }
            m.gens.gens[gi] = multiply(m.gens.gens[gi], ZTypeOperator(false, z).to_xs());
        }
    }
    return m;
}

/// Product of the vertex operators of one layer over all vertices, in vertex order.
inline XSOperator vertex_product(const LatticeModel &m, size_t layers, size_t layer) {
    XSOperator p(m.gens.n);
    for (size_t v = 0; v * layers + layer < m.vertex_gens.size(); v++) {
        size_t gi = m.vertex_gens[v * layers + layer];
        if (gi != size_t(-1)) {
            p = multiply(p, m.gens.gens[gi]);
        }
    }
    return p;
}

}  // namespace xsstab

#endif
