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

#ifndef XSSTAB_GF2_HPP
#define XSSTAB_GF2_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xsstab {

/// Fixed-length vector over Z2, packed into 64-bit words.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static BitVector from_string(std::string_view bits) {
        BitVector v(bits.size());
        for (size_t k = 0; k < bits.size(); k++) {
            if (bits[k] == '1') {
                v.set(k);
            } else if (bits[k] != '0') {
                throw std::invalid_argument("bit string may only contain 0 and 1: " + std::string(bits));
            }
        }
        return v;
    }

    static BitVector unit(size_t n, size_t k) {
        BitVector v(n);
        v.set(k);
        return v;
    }

    size_t size() const {
        return n_;
    }
    size_t num_words() const {
        return words_.size();
    }
    uint64_t word(size_t w) const {
        return words_[w];
    }
    uint64_t &word(size_t w) {
        return words_[w];
    }

    bool get(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    bool operator[](size_t k) const {
        return get(k);
    }
    void set(size_t k, bool value = true) {
        uint64_t m = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= m;
        } else {
            words_[k >> 6] &= ~m;
        }
    }
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }

    BitVector &operator^=(const BitVector &other) {
        check_size(other);
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }
    BitVector &operator&=(const BitVector &other) {
        check_size(other);
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] &= other.words_[w];
        }
        return *this;
    }
    BitVector &operator|=(const BitVector &other) {
        check_size(other);
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] |= other.words_[w];
        }
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        a &= b;
        return a;
    }
    friend BitVector operator|(BitVector a, const BitVector &b) {
        a |= b;
        return a;
    }

    /// Bitwise complement within the fixed length.
    BitVector complement() const {
        BitVector r = *this;
        for (auto &w : r.words_) {
            w = ~w;
        }
        if (n_ % 64) {
            r.words_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
        }
        return r;
    }

    size_t popcount() const {
        size_t c = 0;
        for (uint64_t w : words_) {
            c += std::popcount(w);
        }
        return c;
    }
    bool any() const {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    bool none() const {
        return !any();
    }

    /// Inner product over Z2.
    bool dot(const BitVector &other) const {
        check_size(other);
        uint64_t acc = 0;
        for (size_t w = 0; w < words_.size(); w++) {
            acc ^= words_[w] & other.words_[w];
        }
        return std::popcount(acc) & 1;
    }

    /// Index of the lowest set bit, or size() if none.
    size_t first_one() const {
        for (size_t w = 0; w < words_.size(); w++) {
            if (words_[w]) {
                return w * 64 + std::countr_zero(words_[w]);
            }
        }
        return n_;
    }

    std::vector<size_t> ones() const {
        std::vector<size_t> r;
        for (size_t w = 0; w < words_.size(); w++) {
            uint64_t x = words_[w];
            while (x) {
                r.push_back(w * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
        return r;
    }

    /// Low 64 bits as an integer with bit k of the vector at bit k of the result.
    uint64_t to_u64() const {
        return words_.empty() ? 0 : words_[0];
    }
    static BitVector from_u64(size_t n, uint64_t value) {
        BitVector v(n);
        if (n > 0) {
            v.words_[0] = n >= 64 ? value : value & ((uint64_t{1} << n) - 1);
        }
        return v;
    }

    BitVector slice(size_t start, size_t len) const {
        BitVector r(len);
        for (size_t k = 0; k < len; k++) {
            r.set(k, get(start + k));
        }
        return r;
    }
    BitVector concat(const BitVector &tail) const {
        BitVector r(n_ + tail.n_);
        for (size_t k = 0; k < n_; k++) {
            r.set(k, get(k));
        }
        for (size_t k = 0; k < tail.n_; k++) {
            r.set(n_ + k, tail.get(k));
        }
        return r;
    }

    std::string str() const {
        std::string s(n_, '0');
        for (size_t k = 0; k < n_; k++) {
            if (get(k)) {
                s[k] = '1';
            }
        }
        return s;
    }

    bool operator==(const BitVector &other) const = default;

    /// Lexicographic order reading index 0 first, with 0 < 1.
    bool operator<(const BitVector &other) const {
        size_t m = std::min(n_, other.n_);
        for (size_t k = 0; k < m; k++) {
            if (get(k) != other.get(k)) {
                return other.get(k);
            }
        }
        return n_ < other.n_;
    }

    size_t hash() const {
        size_t h = n_ * 0x9E3779B97F4A7C15ULL;
        for (uint64_t w : words_) {
            h ^= std::hash<uint64_t>{}(w) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

   private:
    void check_size(const BitVector &other) const {
        if (other.n_ != n_) {
            throw std::invalid_argument("BitVector length mismatch");
        }
    }

    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVectorHash {
    size_t operator()(const BitVector &v) const {
        return v.hash();
    }
};

/// Dense matrix over Z2 stored as packed rows.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix identity(size_t n) {
        BitMatrix m(n, n);
        for (size_t k = 0; k < n; k++) {
            m.set(k, k);
        }
        return m;
    }

    static BitMatrix from_rows(const std::vector<BitVector> &rows, size_t cols) {
        BitMatrix m(0, cols);
        for (const auto &r : rows) {
            m.push_row(r);
        }
        return m;
    }

    /// Matrix whose k-th column is vecs[k].
    static BitMatrix from_columns(const std::vector<BitVector> &vecs, size_t rows) {
        BitMatrix m(rows, vecs.size());
        for (size_t c = 0; c < vecs.size(); c++) {
            if (vecs[c].size() != rows) {
                throw std::invalid_argument("column length mismatch");
            }
            for (size_t r : vecs[c].ones()) {
                m.set(r, c);
            }
        }
        return m;
    }

    static BitMatrix from_strings(const std::vector<std::string> &rows) {
        size_t cols = rows.empty() ? 0 : rows[0].size();
        BitMatrix m(0, cols);
        for (const auto &r : rows) {
            m.push_row(BitVector::from_string(r));
        }
        return m;
    }

    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return cols_;
    }

    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool value = true) {
        rows_[r].set(c, value);
    }
    const BitVector &row(size_t r) const {
        return rows_[r];
    }
    BitVector &row(size_t r) {
        return rows_[r];
    }
    const std::vector<BitVector> &rows() const {
        return rows_;
    }
    BitVector column(size_t c) const {
        BitVector v(rows_.size());
        for (size_t r = 0; r < rows_.size(); r++) {
            v.set(r, rows_[r].get(c));
        }
        return v;
    }

    void push_row(const BitVector &r) {
        if (r.size() != cols_) {
            throw std::invalid_argument("row length mismatch");
        }
        rows_.push_back(r);
    }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows_.size());
        for (size_t r = 0; r < rows_.size(); r++) {
            for (size_t c : rows_[r].ones()) {
                t.set(c, r);
            }
        }
        return t;
    }

    BitVector operator*(const BitVector &v) const {
        if (v.size() != cols_) {
            throw std::invalid_argument("matrix-vector size mismatch");
        }
        BitVector out(rows_.size());
        for (size_t r = 0; r < rows_.size(); r++) {
            out.set(r, rows_[r].dot(v));
        }
        return out;
    }

    BitMatrix operator*(const BitMatrix &other) const {
        if (other.num_rows() != cols_) {
            throw std::invalid_argument("matrix product size mismatch");
        }
        BitMatrix out(rows_.size(), other.num_cols());
        for (size_t r = 0; r < rows_.size(); r++) {
            for (size_t k : rows_[r].ones()) {
                out.rows_[r] ^= other.rows_[k];
            }
        }
        return out;
    }

    /// Row vector times matrix: sum of the rows selected by v.
    BitVector left_multiply(const BitVector &v) const {
        BitVector out(cols_);
        for (size_t k : v.ones()) {
            out ^= rows_[k];
        }
        return out;
    }

    bool operator==(const BitMatrix &other) const = default;

    std::string str() const {
        std::string s;
        for (const auto &r : rows_) {
            s += r.str();
            s += '\n';
        }
        return s;
    }

   private:
    size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RrefResult {
    BitMatrix reduced;
    size_t rank = 0;
    std::vector<size_t> pivots;
    /// Invertible matrix with transform * input == reduced.
    BitMatrix transform;
};

/// Reduced row-echelon form. Pivots are chosen leftmost column first, topmost row first.
inline RrefResult rref(const BitMatrix &m) {
    RrefResult res;
    res.reduced = m;
    res.transform = BitMatrix::identity(m.num_rows());
    BitMatrix &a = res.reduced;
    BitMatrix &t = res.transform;
    size_t row = 0;
    for (size_t col = 0; col < m.num_cols() && row < m.num_rows(); col++) {
        size_t p = row;
        while (p < m.num_rows() && !a.get(p, col)) {
            p++;
        }
        if (p == m.num_rows()) {
            continue;
        }
        if (p != row) {
            std::swap(a.row(p), a.row(row));
            std::swap(t.row(p), t.row(row));
        }
        for (size_t r = 0; r < m.num_rows(); r++) {
            if (r != row && a.get(r, col)) {
                a.row(r) ^= a.row(row);
                t.row(r) ^= t.row(row);
            }
        }
        res.pivots.push_back(col);
        row++;
    }
    res.rank = row;
    return res;
}

inline size_t rank(const BitMatrix &m) {
    std::vector<BitVector> rows = m.rows();
    size_t r = 0;
    for (size_t col = 0; col < m.num_cols() && r < rows.size(); col++) {
        size_t p = r;
        while (p < rows.size() && !rows[p].get(col)) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[r]);
        for (size_t q = r + 1; q < rows.size(); q++) {
            if (rows[q].get(col)) {
                rows[q] ^= rows[r];
            }
        }
        r++;
    }
    return r;
}

/// Basis of {x : m x = 0}, one vector per free column in increasing order.
inline std::vector<BitVector> kernel(const BitMatrix &m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.num_cols(), false);
    for (size_t p : r.pivots) {
        is_pivot[p] = true;
    }
    std::vector<BitVector> basis;
    for (size_t f = 0; f < m.num_cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v(m.num_cols());
        v.set(f);
        for (size_t i = 0; i < r.rank; i++) {
            if (r.reduced.get(i, f)) {
                v.set(r.pivots[i]);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Affine subspace offset + span(basis) of Z2^n in canonical form.
class AffineSpace {
   public:
    AffineSpace() = default;
    AffineSpace(size_t n, std::vector<BitVector> basis, BitVector offset) : n_(n) {
        BitMatrix b = BitMatrix::from_rows(basis, n);
        RrefResult r = rref(b);
        for (size_t i = 0; i < r.rank; i++) {
            basis_.push_back(r.reduced.row(i));
        }
        pivots_ = r.pivots;
        offset_ = reduce(offset);
    }

    static AffineSpace linear(size_t n, std::vector<BitVector> basis) {
        return AffineSpace(n, std::move(basis), BitVector(n));
    }
    static AffineSpace point(const BitVector &v) {
        return AffineSpace(v.size(), {}, v);
    }

    size_t ambient_dim() const {
        return n_;
    }
    size_t dim() const {
        return basis_.size();
    }
    const std::vector<BitVector> &basis() const {
        return basis_;
    }
    const std::vector<size_t> &pivots() const {
        return pivots_;
    }
    const BitVector &offset() const {
        return offset_;
    }

    /// Clears the pivot positions of v using the basis; canonical coset representative.
    BitVector reduce(BitVector v) const {
        for (size_t i = 0; i < basis_.size(); i++) {
            if (v.get(pivots_[i])) {
                v ^= basis_[i];
            }
        }
        return v;
    }

    bool in_span(const BitVector &v) const {
        return reduce(v).none();
    }
    bool contains(const BitVector &v) const {
        return reduce(v ^ offset_).none();
    }

    /// The element offset + sum_k bits_k basis_k.
    BitVector element(uint64_t bits) const {
        BitVector v = offset_;
        for (size_t k = 0; k < basis_.size(); k++) {
            if ((bits >> k) & 1) {
                v ^= basis_[k];
            }
        }
        return v;
    }

    bool operator==(const AffineSpace &other) const = default;

   private:
    size_t n_ = 0;
    std::vector<BitVector> basis_;
    std::vector<size_t> pivots_;
    BitVector offset_;
};

/// Solutions of m v = rhs, or nullopt if the system is inconsistent.
inline std::optional<AffineSpace> solve_affine(const BitMatrix &m, const BitVector &rhs) {
    if (rhs.size() != m.num_rows()) {
        throw std::invalid_argument("solve_affine: rhs length must equal row count");
    }
    RrefResult r = rref(m);
    BitVector trhs = r.transform * rhs;
    for (size_t i = r.rank; i < m.num_rows(); i++) {
        if (trhs.get(i)) {
            return std::nullopt;
        }
    }
    BitVector offset(m.num_cols());
    for (size_t i = 0; i < r.rank; i++) {
        if (trhs.get(i)) {
            offset.set(r.pivots[i]);
        }
    }
    return AffineSpace(m.num_cols(), kernel(m), offset);
}

/// Basis of {z : z . v = 0 for all v in span(vectors)}.
inline std::vector<BitVector> orthogonal_complement(const std::vector<BitVector> &vectors, size_t n) {
    return kernel(BitMatrix::from_rows(vectors, n));
}

/// Inverse of a square invertible matrix; throws if singular.
inline BitMatrix inverse(const BitMatrix &m) {
    if (m.num_rows() != m.num_cols()) {
        throw std::invalid_argument("inverse: matrix is not square");
    }
    RrefResult r = rref(m);
    if (r.rank != m.num_rows()) {
        throw std::invalid_argument("inverse: matrix is singular");
    }
    return r.transform;
}

/// Extends the independent vectors `start` to a basis of Z2^n using unit vectors.
/// Returns only the added vectors.
inline std::vector<BitVector> complete_basis(const std::vector<BitVector> &start, size_t n) {
    AffineSpace span = AffineSpace::linear(n, start);
    std::vector<BitVector> current = span.basis();
    std::vector<BitVector> added;
    for (size_t k = 0; k < n && current.size() < n; k++) {
        BitVector e = BitVector::unit(n, k);
        AffineSpace s = AffineSpace::linear(n, current);
        if (!s.in_span(e)) {
            current.push_back(e);
            added.push_back(e);
        }
    }
    return added;
}

/// One canonical representative per coset of V inside V_D, sorted lexicographically.
/// Throws if V is not contained in the direction space of V_D.
inline std::vector<BitVector> coset_representatives(const AffineSpace &sub, const AffineSpace &super) {
    AffineSpace dir = AffineSpace::linear(super.ambient_dim(), super.basis());
    for (const auto &v : sub.basis()) {
        if (!dir.in_span(v)) {
            throw std::domain_error("coset_representatives: V is not inside the direction space of V_D");
        }
    }
    std::vector<BitVector> current = sub.basis();
    std::vector<BitVector> extra;
    for (const auto &v : super.basis()) {
        AffineSpace s = AffineSpace::linear(super.ambient_dim(), current);
        if (!s.in_span(v)) {
            current.push_back(v);
            extra.push_back(v);
        }
    }
    if (extra.size() >= 63) {
        throw std::length_error("coset_representatives: too many cosets to enumerate");
    }
    std::vector<BitVector> reps;
    for (uint64_t bits = 0; bits < (uint64_t{1} << extra.size()); bits++) {
        BitVector v = super.offset();
        for (size_t k = 0; k < extra.size(); k++) {
            if ((bits >> k) & 1) {
                v ^= extra[k];
            }
        }
        reps.push_back(sub.reduce(v));
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

}  // namespace xsstab

#endif
