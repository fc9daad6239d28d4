#pragma once

#include <array>

#include "quadfield/quad.hpp"

namespace quadfield {

struct Matrix4 {
    std::array<double, 16> a{};  // row-major

    double& operator()(int r, int c) { return a[4 * r + c]; }
    double operator()(int r, int c) const { return a[4 * r + c]; }

    static Matrix4 identity();
};

Matrix4 operator*(const Matrix4& l, const Matrix4& r);
Matrix4 operator+(const Matrix4& l, const Matrix4& r);
Matrix4 transpose(const Matrix4& m);
double max_abs_diff(const Matrix4& l, const Matrix4& r);

Matrix4 represent(const Quad& u);
// LU with partial pivoting
double determinant(const Matrix4& m);

// fixed orthogonal change of basis for each kind; its inverse is the transpose
const Matrix4& basis_change(Kind k);
// T * represent(u) * T^-1
Matrix4 block_diagonalize(const Quad& u);

}  // namespace quadfield
