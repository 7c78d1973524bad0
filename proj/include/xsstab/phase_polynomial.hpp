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

#ifndef XSSTAB_PHASE_POLYNOMIAL_HPP
#define XSSTAB_PHASE_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "xsstab/gf2.hpp"

namespace xsstab {

/// Product of at most three distinct variables, stored sorted.
class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::vector<uint32_t> vars) {
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        if (vars.size() > 3) {
            throw std::invalid_argument("Monomial: degree above 3");
        }
        for (size_t k = 0; k < vars.size(); k++) {
            key_ |= uint64_t(vars[k] + 1) << (42 - 21 * k);
        }
    }
    static Monomial of(std::initializer_list<uint32_t> vars) {
        return Monomial(std::vector<uint32_t>(vars));
    }

    size_t degree() const {
        size_t d = 0;
        for (size_t k = 0; k < 3; k++) {
            d += slot(k) != 0;
        }
        return d;
    }
    std::vector<uint32_t> vars() const {
        std::vector<uint32_t> v;
        for (size_t k = 0; k < 3; k++) {
            if (slot(k)) {
                v.push_back(uint32_t(slot(k) - 1));
            }
        }
        return v;
    }
    bool contains(uint32_t var) const {
        for (size_t k = 0; k < 3; k++) {
            if (slot(k) == uint64_t(var) + 1) {
                return true;
            }
        }
        return false;
    }
    /// Multilinear product; throws if the degree exceeds 3.
    Monomial times(const Monomial &other) const {
        std::vector<uint32_t> v = vars();
        for (uint32_t x : other.vars()) {
            v.push_back(x);
        }
        return Monomial(v);
    }
    Monomial without(uint32_t var) const {
        std::vector<uint32_t> v;
        for (uint32_t x : vars()) {
            if (x != var) {
                v.push_back(x);
            }
        }
        return Monomial(v);
    }
    bool evaluate(const BitVector &x) const {
        for (size_t k = 0; k < 3; k++) {
            if (slot(k) && !x.get(size_t(slot(k) - 1))) {
                return false;
            }
        }
        return true;
    }

    /// "x1 x2 x3" with 1-based indices, "1" for the empty monomial.
    std::string str() const {
        auto v = vars();
        if (v.empty()) {
            return "1";
        }
        std::string s;
        for (size_t k = 0; k < v.size(); k++) {
            if (k) {
                s += ' ';
            }
            s += "x" + std::to_string(v[k] + 1);
        }
        return s;
    }

    auto operator<=>(const Monomial &other) const = default;

   private:
    uint64_t slot(size_t k) const {
        return (key_ >> (42 - 21 * k)) & ((uint64_t{1} << 21) - 1);
    }
    uint64_t key_ = 0;
};

/// f(x) = alpha^(sum_m c_m m(x)) with coefficients in Z8 on multilinear monomials of degree <= 3.
class PhasePolynomial {
   public:
    PhasePolynomial() = default;
    explicit PhasePolynomial(size_t num_vars) : t_(num_vars) {}

    size_t num_vars() const {
        return t_;
    }
    const std::map<Monomial, int> &terms() const {
        return coeffs_;
    }
    int coeff(const Monomial &m) const {
        auto it = coeffs_.find(m);
        return it == coeffs_.end() ? 0 : it->second;
    }
    void add(const Monomial &m, int c) {
        for (uint32_t v : m.vars()) {
            if (v >= t_) {
                throw std::invalid_argument("PhasePolynomial: variable out of range");
            }
        }
        int &slot = coeffs_[m];
        slot = ((slot + c) % 8 + 8) % 8;
        if (slot == 0) {
            coeffs_.erase(m);
        }
    }
    void set(const Monomial &m, int c) {
        coeffs_.erase(m);
        add(m, c);
    }
    bool is_zero() const {
        return coeffs_.empty();
    }

    /// Exponent of alpha at x, in Z8.
    int evaluate(const BitVector &x) const {
        int acc = 0;
        for (const auto &[m, c] : coeffs_) {
            if (m.evaluate(x)) {
                acc += c;
            }
        }
        return acc % 8;
    }

    /// Degree <= 3, quadratic coefficients even, cubic coefficients in {0, 4}.
    bool is_valid_phase() const {
        for (const auto &[m, c] : coeffs_) {
            size_t d = m.degree();
            if (d == 2 && c % 2) {
                return false;
            }
            if (d == 3 && c != 4) {
                return false;
            }
        }
        return true;
    }

    /// Removes the constant term so that f(0) = 1.
    PhasePolynomial normalized() const {
        PhasePolynomial r = *this;
        r.coeffs_.erase(Monomial());
        return r;
    }

    PhasePolynomial &operator+=(const PhasePolynomial &other) {
        t_ = std::max(t_, other.t_);
        for (const auto &[m, c] : other.coeffs_) {
            add(m, c);
        }
        return *this;
    }
    friend PhasePolynomial operator+(PhasePolynomial a, const PhasePolynomial &b) {
        a += b;
        return a;
    }
    PhasePolynomial operator-() const {
        PhasePolynomial r(t_);
        for (const auto &[m, c] : coeffs_) {
            r.add(m, -c);
        }
        return r;
    }
    friend PhasePolynomial operator-(const PhasePolynomial &a, const PhasePolynomial &b) {
        return a + (-b);
    }
    PhasePolynomial scaled(int k) const {
        PhasePolynomial r(t_);
        for (const auto &[m, c] : coeffs_) {
            r.add(m, c * k);
        }
        return r;
    }

    bool operator==(const PhasePolynomial &other) const {
        return coeffs_ == other.coeffs_;
    }

    /// Renders alpha^{...} i^{...} (-1)^{...}; each Z8 coefficient splits into its three bits.
    std::string str() const {
        std::string parts[3];
        for (const auto &[m, c] : coeffs_) {
            for (int bit = 0; bit < 3; bit++) {
                if ((c >> bit) & 1) {
                    if (!parts[bit].empty()) {
                        parts[bit] += " + ";
                    }
                    parts[bit] += m.str();
                }
            }
        }
        const char *bases[3] = {"alpha", "i", "(-1)"};
        std::string s;
        for (int bit = 0; bit < 3; bit++) {
            if (parts[bit].empty()) {
                continue;
            }
            if (!s.empty()) {
                s += ' ';
            }
            s += std::string(bases[bit]) + "^{" + parts[bit] + "}";
        }
        return s.empty() ? "1" : s;
    }

   private:
    size_t t_ = 0;
    std::map<Monomial, int> coeffs_;
};

namespace detail {

/// Integer expansion of y_1 xor ... xor y_k (xor constant), truncated at degree max_deg, mod 8.
/// Uses parity = sum_T (-2)^(|T|-1) prod_T y.
inline std::vector<std::pair<Monomial, int>> parity_expansion(const std::vector<uint32_t> &vars, bool constant,
                                                              size_t max_deg) {
    std::vector<std::pair<Monomial, int>> out;
    int sign = constant ? -1 : 1;
    if (constant) {
        out.push_back({Monomial(), 1});
    }
    size_t k = vars.size();
    for (size_t a = 0; a < k && max_deg >= 1; a++) {
        out.push_back({Monomial::of({vars[a]}), ((sign * 1) % 8 + 8) % 8});
        for (size_t b = a + 1; b < k && max_deg >= 2; b++) {
            out.push_back({Monomial::of({vars[a], vars[b]}), ((sign * -2) % 8 + 8) % 8});
            for (size_t c = b + 1; c < k && max_deg >= 3; c++) {
                out.push_back({Monomial::of({vars[a], vars[b], vars[c]}), ((sign * 4) % 8 + 8) % 8});
            }
        }
    }
    return out;
}

inline int two_adic(int c) {
    c = ((c % 8) + 8) % 8;
    if (c == 0) {
        return 3;
    }
    int v = 0;
    while (!(c & 1)) {
        c >>= 1;
        v++;
    }
    return v;
}

}  // namespace detail

/// f(L y): substitutes each old variable by a parity of new variables, x_i = row_i(L) . y + shift_i.
inline PhasePolynomial compose_affine(const PhasePolynomial &f, const BitMatrix &L, const BitVector &shift) {
    if (L.num_rows() != f.num_vars() || shift.size() != f.num_vars()) {
        throw std::invalid_argument("compose_affine: dimension mismatch");
    }
    PhasePolynomial r(L.num_cols());
    std::vector<std::vector<uint32_t>> row_vars(L.num_rows());
    for (size_t i = 0; i < L.num_rows(); i++) {
        for (size_t v : L.row(i).ones()) {
            row_vars[i].push_back(uint32_t(v));
        }
    }
    for (const auto &[m, c] : f.terms()) {
        auto vars = m.vars();
        int v = detail::two_adic(c);
        if (vars.empty()) {
            r.add(Monomial(), c);
            continue;
        }
        // Parity expansion terms of degree d carry 2^(d-1); products beyond 2^3 vanish.
        std::vector<std::vector<std::pair<Monomial, int>>> factors;
        for (uint32_t x : vars) {
            factors.push_back(detail::parity_expansion(row_vars[x], shift.get(x), size_t(std::max(1, 3 - v))));
        }
        std::vector<std::pair<Monomial, int>> acc = {{Monomial(), c}};
        for (const auto &fac : factors) {
            std::vector<std::pair<Monomial, int>> next;
            for (const auto &[ma, ca] : acc) {
                for (const auto &[mb, cb] : fac) {
                    int prod = (ca * cb) % 8;
                    if (prod == 0) {
                        continue;
                    }
                    std::vector<uint32_t> u = ma.vars();
                    for (uint32_t y : mb.vars()) {
                        u.push_back(y);
                    }
                    std::sort(u.begin(), u.end());
                    u.erase(std::unique(u.begin(), u.end()), u.end());
                    if (u.size() > 3) {
                        throw std::logic_error("compose_affine: degree above 3 with nonzero coefficient");
                    }
                    next.push_back({Monomial(u), prod});
                }
            }
            acc = std::move(next);
        }
        for (const auto &[mm, cc] : acc) {
            r.add(mm, cc);
        }
    }
    return r;
}

inline PhasePolynomial compose_linear(const PhasePolynomial &f, const BitMatrix &L) {
    return compose_affine(f, L, BitVector(f.num_vars()));
}

}  // namespace xsstab

#endif
