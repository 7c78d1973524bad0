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

#ifndef XSSTAB_XS_OPERATOR_HPP
#define XSSTAB_XS_OPERATOR_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "xsstab/gf2.hpp"

namespace xsstab {

/// Element alpha^s X(a) S(b) of the n-qubit Pauli-S group, alpha = exp(i pi / 4).
///
/// The operator acts as |x> -> alpha^(s + 2 b.x) |x + a>: the S part acts first.
/// The mod-4 exponent vector b is stored bit-sliced as (b_lo, b_hi).
class XSOperator {
   public:
    XSOperator() = default;
    explicit XSOperator(size_t n) : a_(n), lo_(n), hi_(n) {}
    XSOperator(int s, BitVector a, const std::vector<int> &b) : a_(std::move(a)), lo_(a_.size()), hi_(a_.size()) {
        if (b.size() != a_.size()) {
            throw std::invalid_argument("XSOperator: xmask and sexp lengths differ");
        }
        set_phase(s);
        for (size_t k = 0; k < b.size(); k++) {
            set_b(k, b[k]);
        }
    }

    static XSOperator identity(size_t n) {
        return XSOperator(n);
    }

    /// Builds from the text fields of the generator format.
    static XSOperator from_strings(int s, const std::string &a, const std::string &b) {
        if (a.size() != b.size()) {
            throw std::invalid_argument("XSOperator: xmask and sexp lengths differ");
        }
        XSOperator g(a.size());
        g.set_phase(s);
        g.a_ = BitVector::from_string(a);
        for (size_t k = 0; k < b.size(); k++) {
            if (b[k] < '0' || b[k] > '3') {
                throw std::invalid_argument("sexp digits must be 0..3: " + b);
            }
            g.set_b(k, b[k] - '0');
        }
        return g;
    }

    /// Tensor product of single-qubit factors written as "X", "S", "S3", "Z", "I", "XS", "XZ", "XS3".
    static XSOperator from_factors(int s, const std::vector<std::string> &factors) {
        XSOperator g(factors.size());
        g.set_phase(s);
        for (size_t k = 0; k < factors.size(); k++) {
            std::string f = factors[k];
            if (!f.empty() && f[0] == 'X') {
                g.a_.set(k);
                f = f.substr(1);
            }
            int b = 0;
            if (f.empty() || f == "I") {
                b = 0;
            } else if (f == "S") {
                b = 1;
            } else if (f == "Z") {
                b = 2;
            } else if (f == "S3") {
                b = 3;
            } else {
                throw std::invalid_argument("unknown single-qubit factor: " + factors[k]);
            }
            g.set_b(k, b);
        }
        return g;
    }

    size_t num_qubits() const {
        return a_.size();
    }
    int phase() const {
        return s_;
    }
    void set_phase(int s) {
        s_ = ((s % 8) + 8) % 8;
    }
    const BitVector &xmask() const {
        return a_;
    }
    BitVector &xmask() {
        return a_;
    }
    int b(size_t k) const {
        return int(lo_.get(k)) | (int(hi_.get(k)) << 1);
    }
    void set_b(size_t k, int value) {
        value = ((value % 4) + 4) % 4;
        lo_.set(k, value & 1);
        hi_.set(k, value & 2);
    }
    std::vector<int> sexp() const {
        std::vector<int> r(num_qubits());
        for (size_t k = 0; k < r.size(); k++) {
            r[k] = b(k);
        }
        return r;
    }
    const BitVector &b_lo() const {
        return lo_;
    }
    const BitVector &b_hi() const {
        return hi_;
    }

    bool is_diagonal() const {
        return a_.none();
    }
    /// All S exponents even: the operator is alpha^s Z(c).
    bool has_even_sexp() const {
        return lo_.none();
    }
    bool is_identity() const {
        return s_ == 0 && a_.none() && lo_.none() && hi_.none();
    }

    /// Qubits on which the operator acts nontrivially.
    BitVector support() const {
        return a_ | lo_ | hi_;
    }

    /// Exponent of alpha picked up on input basis state x: s + 2 b.x (mod 8).
    int phase_on(const BitVector &x) const {
        size_t c1 = (lo_ & x).popcount();
        size_t c2 = (hi_ & x).popcount();
        return int((s_ + 2 * c1 + 4 * c2) % 8);
    }
    int phase_on_u64(uint64_t x) const {
        uint64_t lo = lo_.to_u64(), hi = hi_.to_u64();
        return int((s_ + 2 * std::popcount(lo & x) + 4 * std::popcount(hi & x)) % 8);
    }

    std::string sexp_str() const {
        std::string r(num_qubits(), '0');
        for (size_t k = 0; k < r.size(); k++) {
            r[k] = char('0' + b(k));
        }
        return r;
    }

    /// Text form "s=<s> a=<bits> b=<digits>".
    std::string str() const {
        return "s=" + std::to_string(s_) + " a=" + a_.str() + " b=" + sexp_str();
    }

    bool operator==(const XSOperator &other) const = default;

    size_t hash() const {
        return a_.hash() * 31 + lo_.hash() * 17 + hi_.hash() * 7 + size_t(s_);
    }

    friend XSOperator multiply(const XSOperator &g, const XSOperator &h);
    friend XSOperator inverse(const XSOperator &g);

   private:
    int s_ = 0;
    BitVector a_;
    BitVector lo_;
    BitVector hi_;
};

struct XSOperatorHash {
    size_t operator()(const XSOperator &g) const {
        return g.hash();
    }
};

/// Canonical form of the matrix product g h.
///
/// Per qubit S^b X = i^b X S^(-b), so moving h's X factors left through g's S factors
/// negates those exponents and contributes i^(b_g) on every qubit where h has an X.
inline XSOperator multiply(const XSOperator &g, const XSOperator &h) {
    if (g.num_qubits() != h.num_qubits()) {
        throw std::invalid_argument("multiply: qubit counts differ");
    }
    XSOperator r(g.num_qubits());
    const BitVector &a2 = h.a_;
    size_t c1 = (g.lo_ & a2).popcount();
    size_t c2 = (g.hi_ & a2).popcount();
    r.set_phase(int((g.s_ + h.s_ + 2 * c1 + 4 * c2) % 8));
    r.a_ = g.a_ ^ h.a_;
    // b1 conditionally negated on a2: lo unchanged, hi ^= lo & a2.
    BitVector lo1 = g.lo_;
    BitVector hi1 = g.hi_ ^ (g.lo_ & a2);
    BitVector carry = lo1 & h.lo_;
    r.lo_ = lo1 ^ h.lo_;
    r.hi_ = hi1 ^ h.hi_ ^ carry;
    return r;
}

inline XSOperator inverse(const XSOperator &g) {
    XSOperator r(g.num_qubits());
    r.a_ = g.a_;
    // b -> -b off the X support, unchanged on it.
    r.lo_ = g.lo_;
    r.hi_ = g.hi_ ^ (g.lo_ & g.a_.complement());
    size_t c1 = (g.lo_ & g.a_).popcount();
    size_t c2 = (g.hi_ & g.a_).popcount();
    r.set_phase(-g.s_ - int(2 * c1 + 4 * c2));
    return r;
}

/// Group commutator g h g^-1 h^-1. Always diagonal with even S exponents.
inline XSOperator commutator(const XSOperator &g, const XSOperator &h) {
    return multiply(multiply(g, h), multiply(inverse(g), inverse(h)));
}

inline XSOperator square(const XSOperator &g) {
    return multiply(g, g);
}

/// Operator (-1)^sign Z(c).
struct ZTypeOperator {
    bool sign = false;
    BitVector zmask;

    ZTypeOperator() = default;
    ZTypeOperator(bool sign, BitVector zmask) : sign(sign), zmask(std::move(zmask)) {}

    size_t num_qubits() const {
        return zmask.size();
    }
    XSOperator to_xs() const {
        XSOperator g(zmask.size());
        g.set_phase(sign ? 4 : 0);
        for (size_t k : zmask.ones()) {
            g.set_b(k, 2);
        }
        return g;
    }
    /// Converts alpha^s Z(c) with s in {0, 4}; nullopt for anything else.
    static std::optional<ZTypeOperator> from_xs(const XSOperator &g) {
        if (!g.is_diagonal() || !g.has_even_sexp() || (g.phase() % 4) != 0) {
            return std::nullopt;
        }
        return ZTypeOperator(g.phase() == 4, g.b_hi());
    }
    bool is_identity() const {
        return !sign && zmask.none();
    }
    /// Eigenvalue sign on basis state x.
    bool sign_on(const BitVector &x) const {
        return sign ^ zmask.dot(x);
    }
    std::string str() const {
        return std::string("s=") + (sign ? "1" : "0") + " z=" + zmask.str();
    }
    bool operator==(const ZTypeOperator &other) const = default;
};

/// Residues r in Z8 reachable as sum_j 2 b_j x_j over x in {0,1}^n, for diagonal g.
inline uint8_t reachable_diagonal_residues(const XSOperator &g) {
    uint8_t reach = 1;
    for (size_t k = 0; k < g.num_qubits(); k++) {
        int step = (2 * g.b(k)) % 8;
        if (step == 0) {
            continue;
        }
        uint8_t shifted = uint8_t((reach << step) | (reach >> (8 - step)));
        reach |= shifted;
        if (reach == 0xFF) {
            break;
        }
    }
    return reach;
}

/// A basis state x with g|x> = |x>, for diagonal g; nullopt if none exists.
inline std::optional<BitVector> diagonal_fixed_point(const XSOperator &g) {
    if (!g.is_diagonal()) {
        throw std::invalid_argument("diagonal_fixed_point: operator is not diagonal");
    }
    size_t n = g.num_qubits();
    // reach[k] = residues reachable using qubits [0, k).
    std::vector<uint8_t> reach(n + 1);
    reach[0] = 1;
    for (size_t k = 0; k < n; k++) {
        int step = (2 * g.b(k)) % 8;
        uint8_t shifted = step == 0 ? reach[k] : uint8_t((reach[k] << step) | (reach[k] >> (8 - step)));
        reach[k + 1] = reach[k] | shifted;
    }
    int target = (8 - g.phase()) % 8;
    if (!((reach[n] >> target) & 1)) {
        return std::nullopt;
    }
    BitVector x(n);
    for (size_t k = n; k-- > 0;) {
        if ((reach[k] >> target) & 1) {
            continue;
        }
        x.set(k);
        target = ((target - 2 * g.b(k)) % 8 + 8) % 8;
    }
    return x;
}

/// True iff 1 is an eigenvalue of g.
///
/// A non-diagonal g pairs |x> with |x + a> into 2x2 blocks whose eigenvalues square to the
/// corresponding diagonal entry of g^2, so it suffices to look for a +1 entry of g^2.
inline bool has_plus_one_eigenvalue(const XSOperator &g) {
    if (g.is_diagonal()) {
        int target = (8 - g.phase()) % 8;
        return (reachable_diagonal_residues(g) >> target) & 1;
    }
    XSOperator sq = square(g);
    int target = (8 - sq.phase()) % 8;
    return (reachable_diagonal_residues(sq) >> target) & 1;
}

}  // namespace xsstab

#endif
