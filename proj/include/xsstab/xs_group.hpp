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

#ifndef XSSTAB_XS_GROUP_HPP
#define XSSTAB_XS_GROUP_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "xsstab/gf2.hpp"
#include "xsstab/xs_operator.hpp"

namespace xsstab {

struct GeneratingSet {
    size_t n = 0;
    std::vector<XSOperator> gens;

    GeneratingSet() = default;
    explicit GeneratingSet(size_t n) : n(n) {}
    GeneratingSet(size_t n, std::vector<XSOperator> gens) : n(n), gens(std::move(gens)) {
        for (const auto &g : this->gens) {
            if (g.num_qubits() != n) {
                throw std::invalid_argument("GeneratingSet: generator has the wrong qubit count");
            }
        }
    }

    size_t size() const {
        return gens.size();
    }
    void add(XSOperator g) {
        if (g.num_qubits() != n) {
            throw std::invalid_argument("GeneratingSet: generator has the wrong qubit count");
        }
        gens.push_back(std::move(g));
    }
    bool operator==(const GeneratingSet &other) const = default;
};

/// Ordered product g_1^{x_1} ... g_m^{x_m}.
inline XSOperator word(const GeneratingSet &S, const BitVector &x) {
    XSOperator r = XSOperator::identity(S.n);
    for (size_t j : x.ones()) {
        r = multiply(r, S.gens[j]);
    }
    return r;
}

/// Matrix whose columns are the generators' X-masks.
inline BitMatrix xmask_matrix(const GeneratingSet &S) {
    std::vector<BitVector> cols;
    for (const auto &g : S.gens) {
        cols.push_back(g.xmask());
    }
    return BitMatrix::from_columns(cols, S.n);
}

struct AdmissibilityResult {
    bool admissible = true;
    /// 0 when admissible, otherwise the first violated condition (1..4).
    int violated_condition = 0;
    explicit operator bool() const {
        return admissible;
    }
};

namespace detail {

inline void push_unique(std::vector<XSOperator> &out, std::unordered_set<XSOperator, XSOperatorHash> &seen,
                        const XSOperator &g) {
    if (g.is_identity()) {
        return;
    }
    if (seen.insert(g).second) {
        out.push_back(g);
    }
}

/// For diagonal d with even S exponents, d g d^-1 g^-1 is +-I with sign (-1)^(c.a_g).
inline bool diagonal_commutes(const XSOperator &d, const XSOperator &g) {
    return !d.b_hi().dot(g.xmask());
}

}  // namespace detail

/// Distinct non-identity commutators [g_j, g_k], j != k, in order of first appearance.
inline std::vector<XSOperator> commutator_set(const GeneratingSet &S) {
    std::vector<XSOperator> out;
    std::unordered_set<XSOperator, XSOperatorHash> seen;
    for (size_t j = 0; j < S.size(); j++) {
        for (size_t k = 0; k < S.size(); k++) {
            if (j != k) {
                detail::push_unique(out, seen, commutator(S.gens[j], S.gens[k]));
            }
        }
    }
    return out;
}

/// Distinct non-identity squares g_j^2.
inline std::vector<XSOperator> square_set(const GeneratingSet &S) {
    std::vector<XSOperator> out;
    std::unordered_set<XSOperator, XSOperatorHash> seen;
    for (const auto &g : S.gens) {
        detail::push_unique(out, seen, square(g));
    }
    return out;
}

/// Checks the four admissibility conditions in order and reports the first failure.
inline AdmissibilityResult is_admissible(const GeneratingSet &S) {
    for (const auto &g : S.gens) {
        if (!has_plus_one_eigenvalue(g)) {
            return {false, 1};
        }
    }
    std::vector<XSOperator> comms = commutator_set(S);
    for (const auto &c : comms) {
        if (!has_plus_one_eigenvalue(c)) {
            return {false, 2};
        }
    }
    // Commutators are diagonal with even exponents, so [c, g] reduces to a parity.
    for (const auto &c : comms) {
        for (const auto &g : S.gens) {
            if (!detail::diagonal_commutes(c, g)) {
                return {false, 3};
            }
        }
    }
    for (const auto &q : square_set(S)) {
        if (!q.has_even_sexp()) {
            return {false, 4};
        }
        for (const auto &g : S.gens) {
            if (!detail::diagonal_commutes(q, g)) {
                return {false, 4};
            }
        }
    }
    return {true, 0};
}

/// Generators of the diagonal subgroup: commutators, squares, and g(u) for u in ker A.
inline std::vector<XSOperator> diagonal_subgroup(const GeneratingSet &S) {
    std::vector<XSOperator> out;
    std::unordered_set<XSOperator, XSOperatorHash> seen;
    for (const auto &c : commutator_set(S)) {
        detail::push_unique(out, seen, c);
    }
    for (const auto &q : square_set(S)) {
        detail::push_unique(out, seen, q);
    }
    for (const auto &u : kernel(xmask_matrix(S))) {
        detail::push_unique(out, seen, word(S, u));
    }
    return out;
}

struct GroupAnalysis {
    std::vector<ZTypeOperator> commutators;
    std::vector<ZTypeOperator> squares;
    std::vector<XSOperator> diag_gens;
    bool admissible = false;
    int violated_condition = 0;
    bool regular = false;
};

inline bool is_regular(const GeneratingSet &S) {
    for (const auto &d : diagonal_subgroup(S)) {
        if (!d.has_even_sexp()) {
            return false;
        }
    }
    return true;
}

inline GroupAnalysis analyze_group(const GeneratingSet &S) {
    GroupAnalysis a;
    AdmissibilityResult adm = is_admissible(S);
    a.admissible = adm.admissible;
    a.violated_condition = adm.violated_condition;
    if (!a.admissible) {
        return a;
    }
    for (const auto &c : commutator_set(S)) {
        a.commutators.push_back(*ZTypeOperator::from_xs(c));
    }
    for (const auto &q : square_set(S)) {
        a.squares.push_back(*ZTypeOperator::from_xs(q));
    }
    a.diag_gens = diagonal_subgroup(S);
    a.regular = std::all_of(a.diag_gens.begin(), a.diag_gens.end(),
                            [](const XSOperator &d) { return d.has_even_sexp(); });
    return a;
}

struct NormalForm {
    /// First t generators have independent X-masks; the rest are diagonal. Original qubit labels.
    GeneratingSet gens;
    size_t t = 0;
    /// perm[k] is the original qubit at position k; positions 0..t-1 hold the identity block.
    std::vector<size_t> perm;
    /// (n - t) x t matrix: position t + r carries parity W[r] . x.
    BitMatrix W;
};

namespace detail {

/// Non-diagonal generators first with masks already in reduced echelon form on qubits 0..t-1.
inline bool already_normal(const GeneratingSet &S) {
    size_t t = 0;
    while (t < S.size() && !S.gens[t].is_diagonal()) {
        t++;
    }
    for (size_t j = t; j < S.size(); j++) {
        if (!S.gens[j].is_diagonal()) {
            return false;
        }
    }
    for (size_t j = 0; j < t; j++) {
        for (size_t i = 0; i < t; i++) {
            if (S.gens[j].xmask().get(i) != (i == j)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace detail

inline NormalForm normal_form(const GeneratingSet &S) {
    NormalForm nf;
    size_t n = S.n;
    if (detail::already_normal(S)) {
        size_t t = 0;
        while (t < S.size() && !S.gens[t].is_diagonal()) {
            t++;
        }
        nf.gens = S;
        nf.t = t;
        nf.perm.resize(n);
        std::iota(nf.perm.begin(), nf.perm.end(), size_t(0));
        nf.W = BitMatrix(n - t, t);
        for (size_t row = 0; row < n - t; row++) {
            for (size_t j = 0; j < t; j++) {
                nf.W.set(row, j, S.gens[j].xmask().get(t + row));
            }
        }
        return nf;
    }
    std::vector<BitVector> masks;
    for (const auto &g : S.gens) {
        masks.push_back(g.xmask());
    }
    BitMatrix rows = BitMatrix::from_rows(masks, n);
    RrefResult r = rref(rows);
    nf.t = r.rank;
    nf.gens = GeneratingSet(n);
    for (size_t i = 0; i < r.rank; i++) {
        nf.gens.add(word(S, r.transform.row(i)));
    }
    for (const auto &d : diagonal_subgroup(S)) {
        nf.gens.add(d);
    }
    std::vector<bool> is_pivot(n, false);
    for (size_t p : r.pivots) {
        nf.perm.push_back(p);
        is_pivot[p] = true;
    }
    for (size_t q = 0; q < n; q++) {
        if (!is_pivot[q]) {
            nf.perm.push_back(q);
        }
    }
    nf.W = BitMatrix(n - nf.t, nf.t);
    for (size_t row = 0; row < n - nf.t; row++) {
        size_t q = nf.perm[nf.t + row];
        for (size_t j = 0; j < nf.t; j++) {
            nf.W.set(row, j, nf.gens.gens[j].xmask().get(q));
        }
    }
    return nf;
}

namespace detail {

/// Membership in a submodule of (Z/8)^N via echelon form with annihilator rows.
class Z8Module {
   public:
    explicit Z8Module(size_t dim) : dim_(dim) {}

    void build(std::vector<std::vector<int>> rows) {
        pivots_.clear();
        for (size_t col = 0; col < dim_; col++) {
            int best = -1;
            int best_val = 3;
            for (size_t r = 0; r < rows.size(); r++) {
                int v = valuation(rows[r][col]);
                if (v < best_val) {
                    best_val = v;
                    best = int(r);
                }
            }
            if (best < 0) {
                continue;
            }
            std::vector<int> p = rows[size_t(best)];
            rows.erase(rows.begin() + best);
            int unit = p[col] >> best_val;
            int inv = unit_inverse(unit);
            for (auto &e : p) {
                e = (e * inv) % 8;
            }
            for (auto &row : rows) {
                if (row[col] == 0) {
                    continue;
                }
                int factor = row[col] >> best_val;
                for (size_t c = 0; c < dim_; c++) {
                    row[c] = ((row[c] - factor * p[c]) % 8 + 8) % 8;
                }
            }
            std::vector<int> ann(dim_);
            bool nonzero = false;
            for (size_t c = 0; c < dim_; c++) {
                ann[c] = (p[c] << (3 - best_val)) % 8;
                nonzero |= ann[c] != 0;
            }
            if (nonzero) {
                rows.push_back(ann);
            }
            pivots_.push_back({col, best_val, p});
        }
    }

    bool contains(std::vector<int> v) const {
        for (const auto &piv : pivots_) {
            int e = v[piv.col];
            if (e == 0) {
                continue;
            }
            if (valuation(e) < piv.val) {
                return false;
            }
            int factor = e >> piv.val;
            for (size_t c = 0; c < dim_; c++) {
                v[c] = ((v[c] - factor * piv.row[c]) % 8 + 8) % 8;
            }
        }
        return std::all_of(v.begin(), v.end(), [](int e) { return e == 0; });
    }

   private:
    struct Pivot {
        size_t col;
        int val;
        std::vector<int> row;
    };
    static int valuation(int e) {
        e %= 8;
        if (e == 0) {
            return 3;
        }
        return std::countr_zero(unsigned(e));
    }
    static int unit_inverse(int u) {
        // Odd residues mod 8 are self-inverse.
        return u % 8;
    }

    size_t dim_;
    std::vector<Pivot> pivots_;
};

/// Diagonal alpha^s S(b) as the vector (s, 2 b_1, ..., 2 b_n) in (Z/8)^(n+1).
inline std::vector<int> diagonal_exponents(const XSOperator &d) {
    std::vector<int> v(d.num_qubits() + 1);
    v[0] = d.phase();
    for (size_t k = 0; k < d.num_qubits(); k++) {
        v[k + 1] = 2 * d.b(k);
    }
    return v;
}

}  // namespace detail

/// Membership of h in the group generated by an admissible S.
inline bool contains(const GeneratingSet &S, const XSOperator &h) {
    if (h.num_qubits() != S.n) {
        throw std::invalid_argument("contains: qubit counts differ");
    }
    auto sol = solve_affine(xmask_matrix(S), h.xmask());
    if (!sol) {
        return false;
    }
    XSOperator residue = multiply(h, inverse(word(S, sol->offset())));
    detail::Z8Module module(S.n + 1);
    std::vector<std::vector<int>> rows;
    for (const auto &d : diagonal_subgroup(S)) {
        rows.push_back(detail::diagonal_exponents(d));
    }
    module.build(std::move(rows));
    return module.contains(detail::diagonal_exponents(residue));
}

/// Outcome of the stabilizer-existence decision.
struct ExistenceResult {
    bool exists = false;
    /// A basis state fixed by every diagonal element of the group.
    BitVector witness;
    /// Set when the input is inadmissible.
    int violated_condition = 0;
    explicit operator bool() const {
        return exists;
    }
};

namespace detail {

/// Constraints s_j + 2 sum_k b_jk z_k == 0 (mod 8) over z in {0,1}^n.
class DiagonalSystem {
   public:
    DiagonalSystem(size_t n, const std::vector<XSOperator> &diag) : n_(n), diag_(diag) {}

    /// Enumerates solutions in a deterministic order; the callback returns false to stop.
    void enumerate(const std::function<bool(const BitVector &)> &visit) const {
        // Mod 2: s_j must be even and s_j/2 + sum_k (b_jk mod 2) z_k == 0.
        std::vector<BitVector> rows;
        BitVector rhs(diag_.size());
        for (size_t j = 0; j < diag_.size(); j++) {
            if (diag_[j].phase() % 2) {
                return;
            }
            rows.push_back(diag_[j].b_lo());
            rhs.set(j, (diag_[j].phase() / 2) % 2);
        }
        BitMatrix m = BitMatrix::from_rows(rows, n_);
        RrefResult r = rref(m);
        BitVector trhs = r.transform * rhs;
        for (size_t i = r.rank; i < rows.size(); i++) {
            if (trhs.get(i)) {
                return;
            }
        }
        std::vector<bool> is_pivot(n_, false);
        for (size_t p : r.pivots) {
            is_pivot[p] = true;
        }
        std::vector<size_t> free_vars;
        for (size_t k = 0; k < n_; k++) {
            if (!is_pivot[k]) {
                free_vars.push_back(k);
            }
        }
        // Pivot variable i equals trhs_i + sum over free f of reduced(i, f) z_f.
        std::vector<std::vector<size_t>> pivot_deps(r.rank);
        for (size_t i = 0; i < r.rank; i++) {
            for (size_t f : free_vars) {
                if (r.reduced.get(i, f)) {
                    pivot_deps[i].push_back(f);
                }
            }
        }
        // Participation: constraints touching the variable directly or through a pivot.
        std::vector<size_t> participation(n_, 0);
        for (const auto &d : diag_) {
            BitVector touched = d.b_lo() | d.b_hi();
            std::vector<bool> counted(n_, false);
            for (size_t k : touched.ones()) {
                if (!is_pivot[k]) {
                    counted[k] = true;
                }
            }
            for (size_t i = 0; i < r.rank; i++) {
                if (touched.get(r.pivots[i])) {
                    for (size_t f : pivot_deps[i]) {
                        counted[f] = true;
                    }
                }
            }
            for (size_t k = 0; k < n_; k++) {
                participation[k] += counted[k];
            }
        }
        std::vector<size_t> order = free_vars;
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t x, size_t y) { return participation[x] > participation[y]; });
        std::vector<size_t> rank_in_order(n_, 0);
        for (size_t i = 0; i < order.size(); i++) {
            rank_in_order[order[i]] = i + 1;
        }
        // Each variable becomes determined once the free variables it depends on are set.
        std::vector<size_t> ready_at(n_, 0);
        for (size_t f : free_vars) {
            ready_at[f] = rank_in_order[f];
        }
        for (size_t i = 0; i < r.rank; i++) {
            size_t lvl = 0;
            for (size_t f : pivot_deps[i]) {
                lvl = std::max(lvl, rank_in_order[f]);
            }
            ready_at[r.pivots[i]] = lvl;
        }
        // Constraints checked as soon as all their variables are determined.
        std::vector<std::vector<size_t>> check_at(order.size() + 1);
        for (size_t j = 0; j < diag_.size(); j++) {
            BitVector touched = diag_[j].b_lo() | diag_[j].b_hi();
            size_t lvl = 0;
            for (size_t k : touched.ones()) {
                lvl = std::max(lvl, ready_at[k]);
            }
            check_at[lvl].push_back(j);
        }
        std::vector<std::vector<size_t>> pivots_at(order.size() + 1);
        for (size_t i = 0; i < r.rank; i++) {
            pivots_at[ready_at[r.pivots[i]]].push_back(i);
        }

        BitVector z(n_);
        bool stop = false;
        std::function<void(size_t)> dfs = [&](size_t level) {
            if (stop) {
                return;
            }
            for (size_t i : pivots_at[level]) {
                bool v = trhs.get(i);
                for (size_t f : pivot_deps[i]) {
                    v ^= z.get(f);
                }
                z.set(r.pivots[i], v);
            }
            for (size_t j : check_at[level]) {
                if (diag_[j].phase_on(z) != 0) {
                    return;
                }
            }
            if (level == order.size()) {
                if (!visit(z)) {
                    stop = true;
                }
                return;
            }
            size_t var = order[level];
            for (int bit = 0; bit < 2 && !stop; bit++) {
                z.set(var, bit);
                dfs(level + 1);
            }
            z.set(var, false);
        };
        dfs(0);
    }

   private:
    size_t n_;
    const std::vector<XSOperator> &diag_;
};

}  // namespace detail

/// Decides whether some nonzero state is stabilized by every element of the group.
inline ExistenceResult decide_existence(const GeneratingSet &S) {
    ExistenceResult res;
    AdmissibilityResult adm = is_admissible(S);
    if (!adm) {
        res.violated_condition = adm.violated_condition;
        return res;
    }
    std::vector<XSOperator> diag = diagonal_subgroup(S);
    bool regular = std::all_of(diag.begin(), diag.end(), [](const XSOperator &d) { return d.has_even_sexp(); });
    if (regular) {
        std::vector<BitVector> rows;
        BitVector rhs(diag.size());
        for (size_t j = 0; j < diag.size(); j++) {
            if (diag[j].phase() % 4) {
                return res;
            }
            rows.push_back(diag[j].b_hi());
            rhs.set(j, diag[j].phase() == 4);
        }
        auto sol = solve_affine(BitMatrix::from_rows(rows, S.n), rhs);
        if (sol) {
            res.exists = true;
            res.witness = sol->offset();
        }
        return res;
    }
    detail::DiagonalSystem sys(S.n, diag);
    sys.enumerate([&](const BitVector &z) {
        res.exists = true;
        res.witness = z;
        return false;
    });
    return res;
}

/// All basis states fixed by the diagonal generators, in enumeration order; stops after `limit`.
inline std::vector<BitVector> diagonal_fixed_points(size_t n, const std::vector<XSOperator> &diag,
                                                    size_t limit = size_t(1) << 22) {
    std::vector<BitVector> out;
    detail::DiagonalSystem sys(n, diag);
    bool overflow = false;
    sys.enumerate([&](const BitVector &z) {
        if (out.size() >= limit) {
            overflow = true;
            return false;
        }
        out.push_back(z);
        return true;
    });
    if (overflow) {
        throw std::length_error("diagonal_fixed_points: enumeration limit exceeded");
    }
    return out;
}

}  // namespace xsstab

#endif
