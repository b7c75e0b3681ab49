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

#ifndef CCALG_MATRIX_HPP
#define CCALG_MATRIX_HPP

#include <string>
#include <vector>

#include "ccalg/ring.hpp"

namespace ccalg {

/// An element of the free module O^r: a fixed-length list of polynomials.
class RingVector {
public:
    RingVector() = default;
    RingVector(RingPtr ring, int length);  // zero vector
    RingVector(RingPtr ring, std::vector<Polynomial> comps);

    const RingPtr& ring() const { return ring_; }
    int length() const { return static_cast<int>(comps_.size()); }
    const Polynomial& operator[](int i) const { return comps_[i]; }
    Polynomial& operator[](int i) { return comps_[i]; }
    const std::vector<Polynomial>& components() const { return comps_; }

    bool is_zero() const;
    RingVector operator+(const RingVector& o) const;
    RingVector operator-(const RingVector& o) const;
    RingVector operator-() const;
    RingVector scaled(const Polynomial& p) const;
    RingVector term_multiplied(const Monomial& m, const Scalar& c) const;
    bool operator==(const RingVector& o) const;

    static RingVector unit(RingPtr ring, int length, int index);

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> comps_;
};

/// Dot product of two vectors of equal length.
Polynomial dot(const RingVector& a, const RingVector& b);

/// rows x cols grid of polynomials. Columns are generators when the matrix
/// presents a submodule, otherwise it is the map O^cols -> O^rows.
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(RingPtr ring, int rows, int cols);  // zero matrix

    static RingMatrix identity(RingPtr ring, int n);
    static RingMatrix from_columns(RingPtr ring, int rows, const std::vector<RingVector>& cols);
    static RingMatrix from_rows(RingPtr ring, int cols, const std::vector<RingVector>& rows);

    const RingPtr& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Polynomial& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    Polynomial& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }

    RingVector column(int j) const;
    RingVector row(int i) const;
    std::vector<RingVector> columns() const;

    RingMatrix transpose() const;
    RingMatrix operator*(const RingMatrix& o) const;
    RingVector operator*(const RingVector& v) const;
    RingMatrix operator+(const RingMatrix& o) const;
    RingMatrix operator-(const RingMatrix& o) const;
    bool operator==(const RingMatrix& o) const;
    bool is_zero() const;

    /// Horizontal concatenation [A | B].
    static RingMatrix concat_columns(const RingMatrix& a, const RingMatrix& b);

    std::string str() const;

private:
    RingPtr ring_;
    int rows_ = 0, cols_ = 0;
    std::vector<Polynomial> a_;
};

/// Exact determinant of a square matrix (division-free expansion).
Polynomial det(const RingMatrix& m);

/// Determinant of the square submatrix picked by row and column index sets.
Polynomial minor_det(const RingMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

}  // namespace ccalg

#endif
