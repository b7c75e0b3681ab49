/*
   Copyright 2026 The ccalg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ccalg/matrix.hpp"

#include <sstream>

#include "ccalg/errors.hpp"

namespace ccalg {

RingVector::RingVector(RingPtr ring, int length) : ring_(std::move(ring)) {
    comps_.assign(length, Polynomial(ring_));
}

RingVector::RingVector(RingPtr ring, std::vector<Polynomial> comps) : ring_(std::move(ring)), comps_(std::move(comps)) {
    for (auto& c : comps_) {
        if (c.ring() == nullptr) {
            c = Polynomial(ring_);
        } else {
            check_same_ring(ring_, c.ring());
        }
    }
}

bool RingVector::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

RingVector RingVector::operator+(const RingVector& o) const {
    if (length() != o.length()) throw shape_error("vector length mismatch");
    RingVector r = *this;
    for (int i = 0; i < length(); ++i) r.comps_[i] = comps_[i] + o.comps_[i];
    return r;
}

RingVector RingVector::operator-(const RingVector& o) const { return *this + (-o); }

RingVector RingVector::operator-() const {
    RingVector r = *this;
    for (auto& c : r.comps_) c = -c;
    return r;
}

RingVector RingVector::scaled(const Polynomial& p) const {
    RingVector r = *this;
    for (auto& c : r.comps_) c = c * p;
    return r;
}

RingVector RingVector::term_multiplied(const Monomial& m, const Scalar& c) const {
    RingVector r = *this;
    for (auto& comp : r.comps_) comp = comp.term_multiplied(m, c);
    return r;
}

bool RingVector::operator==(const RingVector& o) const {
    if (length() != o.length()) return false;
    for (int i = 0; i < length(); ++i)
        if (comps_[i] != o.comps_[i]) return false;
    return true;
}

RingVector RingVector::unit(RingPtr ring, int length, int index) {
    RingVector r(ring, length);
    r[index] = Polynomial::constant(ring, 1);
    return r;
}

std::string RingVector::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < length(); ++i) {
        if (i) os << ", ";
        os << comps_[i].str();
    }
    os << ")";
    return os.str();
}

Polynomial dot(const RingVector& a, const RingVector& b) {
    if (a.length() != b.length()) throw shape_error("dot product length mismatch");
    Polynomial acc(a.ring());
    for (int i = 0; i < a.length(); ++i) acc = acc + a[i] * b[i];
    return acc;
}

RingMatrix::RingMatrix(RingPtr ring, int rows, int cols) : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw shape_error("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, Polynomial(ring_));
}

RingMatrix RingMatrix::identity(RingPtr ring, int n) {
    RingMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(ring, 1);
    return m;
}

RingMatrix RingMatrix::from_columns(RingPtr ring, int rows, const std::vector<RingVector>& cols) {
    RingMatrix m(ring, rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
        if (cols[j].length() != rows) throw shape_error("column length mismatch");
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

RingMatrix RingMatrix::from_rows(RingPtr ring, int cols, const std::vector<RingVector>& rows) {
    RingMatrix m(ring, static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows_; ++i) {
        if (rows[i].length() != cols) throw shape_error("row length mismatch");
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RingVector RingMatrix::column(int j) const {
    std::vector<Polynomial> c;
    c.reserve(rows_);
    for (int i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return RingVector(ring_, std::move(c));
}

RingVector RingMatrix::row(int i) const {
    std::vector<Polynomial> c;
    c.reserve(cols_);
    for (int j = 0; j < cols_; ++j) c.push_back(at(i, j));
    return RingVector(ring_, std::move(c));
}

std::vector<RingVector> RingMatrix::columns() const {
    std::vector<RingVector> out;
    out.reserve(cols_);
    for (int j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix m(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
    check_same_ring(ring_, o.ring_);
    if (cols_ != o.rows_) throw shape_error("matrix product shape mismatch");
    RingMatrix m(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            Polynomial acc(ring_);
            for (int k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
            m.at(i, j) = acc;
        }
    return m;
}

RingVector RingMatrix::operator*(const RingVector& v) const {
    if (cols_ != v.length()) throw shape_error("matrix-vector shape mismatch");
    RingVector r(ring_, rows_);
    for (int i = 0; i < rows_; ++i) {
        Polynomial acc(ring_);
        for (int k = 0; k < cols_; ++k) acc = acc + at(i, k) * v[k];
        r[i] = acc;
    }
    return r;
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix sum shape mismatch");
    RingMatrix m = *this;
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
    return m;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix difference shape mismatch");
    RingMatrix m = *this;
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
    return m;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < a_.size(); ++k)
        if (a_[k] != o.a_[k]) return false;
    return true;
}

bool RingMatrix::is_zero() const {
    for (const auto& p : a_)
        if (!p.is_zero()) return false;
    return true;
}

RingMatrix RingMatrix::concat_columns(const RingMatrix& a, const RingMatrix& b) {
    if (a.rows_ != b.rows_) throw shape_error("column concat row mismatch");
    RingMatrix m(a.ring_, a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j) m.at(i, a.cols_ + j) = b.at(i, j);
    }
    return m;
}

std::string RingMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

// Subset-DP Laplace expansion: det over column subsets, O(n * 2^n) products,
// no divisions. Adequate at the matrix sizes that occur here.
Polynomial det(const RingMatrix& m) {
    if (m.rows() != m.cols()) throw shape_error("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return Polynomial::constant(m.ring(), 1);
    std::vector<Polynomial> dp(static_cast<size_t>(1) << n);
    dp[0] = Polynomial::constant(m.ring(), 1);
    for (unsigned mask = 1; mask < dp.size(); ++mask) {
        int row = __builtin_popcount(mask) - 1;
        Polynomial acc(m.ring());
        int pos = 0;  // index of j among the set bits
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const Polynomial& entry = m.at(row, j);
            if (!entry.is_zero()) {
                Polynomial contrib = dp[mask & ~(1u << j)] * entry;
                acc = ((row + pos) % 2 == 0) ? acc + contrib : acc - contrib;
            }
            ++pos;
        }
        dp[mask] = acc;
    }
    return dp.back();
}

Polynomial minor_det(const RingMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw shape_error("minor index sets of unequal size");
    RingMatrix sub(m.ring(), static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) sub.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]);
    return det(sub);
}

}  // namespace ccalg
