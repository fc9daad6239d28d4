#include "quadfield/matrix.hpp"

#include <algorithm>
#include <numbers>
#include <utility>

namespace quadfield {

Matrix4 Matrix4::identity()
{
    Matrix4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1;
    return m;
}

Matrix4 operator*(const Matrix4& l, const Matrix4& r)
{
    Matrix4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0;
            for (int k = 0; k < 4; ++k) s += l(i, k) * r(k, j);
            m(i, j) = s;
        }
    return m;
}

Matrix4 operator+(const Matrix4& l, const Matrix4& r)
{
    Matrix4 m;
    for (int i = 0; i < 16; ++i) m.a[i] = l.a[i] + r.a[i];
    return m;
}

Matrix4 transpose(const Matrix4& m)
{
    Matrix4 t;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t(i, j) = m(j, i);
    return t;
}

double max_abs_diff(const Matrix4& l, const Matrix4& r)
{
    double d = 0;
    for (int i = 0; i < 16; ++i) d = std::max(d, std::abs(l.a[i] - r.a[i]));
    return d;
}

Matrix4 represent(const Quad& u)
{
    const double x = u.x(), y = u.y(), z = u.z(), t = u.t();
    switch (u.kind()) {
    case Kind::Circular:
        return {{x, y, z, t, -y, x, t, -z, -z, t, x, -y, t, z, y, x}};
    case Kind::Hyperbolic:
        return {{x, y, z, t, y, x, t, z, z, t, x, y, t, z, y, x}};
    case Kind::Planar:
        return {{x, y, z, t, -t, x, y, z, -z, -t, x, y, -y, -z, -t, x}};
    case Kind::Polar:
        return {{x, y, z, t, t, x, y, z, z, t, x, y, y, z, t, x}};
    }
    return {};
}

double determinant(const Matrix4& in)
{
    Matrix4 m = in;
    double det = 1;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
        if (m(piv, col) == 0) return 0;
        if (piv != col) {
            for (int c = 0; c < 4; ++c) std::swap(m(piv, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (int r = col + 1; r < 4; ++r) {
            const double f = m(r, col) / m(col, col);
            for (int c = col; c < 4; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

const Matrix4& basis_change(Kind k)
{
    constexpr double s = 1.0 / std::numbers::sqrt2, h = 0.5;
    static const Matrix4 circular{{s, 0, 0, s, 0, s, s, 0, s, 0, 0, -s, 0, s, -s, 0}};
    static const Matrix4 hyperbolic{{h, h, h, h, h, -h, h, -h, h, h, -h, -h, h, -h, -h, h}};
    static const Matrix4 planar{{s, h, 0, -h, 0, h, s, h, s, -h, 0, h, 0, h, -s, h}};
    static const Matrix4 polar{{h, h, h, h, h, -h, h, -h, s, 0, -s, 0, 0, s, 0, -s}};
    switch (k) {
    case Kind::Circular: return circular;
    case Kind::Hyperbolic: return hyperbolic;
    case Kind::Planar: return planar;
    case Kind::Polar: return polar;
    }
    return circular;
}

Matrix4 block_diagonalize(const Quad& u)
{
    const Matrix4& T = basis_change(u.kind());
    return T * represent(u) * transpose(T);
}

}  // namespace quadfield
