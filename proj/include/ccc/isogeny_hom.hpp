#pragma once

#include <array>
#include <string>
#include <vector>

#include "ccc/elliptic_model.hpp"
#include "ccc/lattice_core.hpp"

namespace ccc {

// 2x2 integer matrix. For an isogeny f: E1 -> E2, row i holds f(v_i) in the
// w-basis, so a point x (row vector in v-coordinates) maps to x * M.
struct Matrix2 {
    std::array<std::array<Integer, 2>, 2> a{{{Integer(0), Integer(0)}, {Integer(0), Integer(0)}}};

    static Matrix2 of(long a00, long a01, long a10, long a11);
    static Matrix2 identity() { return of(1, 0, 0, 1); }
    static Matrix2 zero() { return {}; }
    static Matrix2 unit(std::size_t i, std::size_t j);

    Integer det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
    Integer trace() const { return a[0][0] + a[1][1]; }
    // Adjugate: M * adj(M) = det(M) I; for an isogeny this is the dual isogeny.
    Matrix2 adjugate() const;
    bool is_zero() const;

    Matrix2 operator+(const Matrix2& rhs) const;
    Matrix2 operator-(const Matrix2& rhs) const;
    Matrix2 operator*(const Matrix2& rhs) const;
    Matrix2& operator+=(const Matrix2& rhs);
    bool operator==(const Matrix2& rhs) const { return a == rhs.a; }

    std::string to_string() const;
};

Matrix2 operator*(const Integer& k, const Matrix2& m);
TorusPoint apply(const TorusPoint& x, const Matrix2& m);

struct IsogenyClass {
    Matrix2 matrix;
    std::string source = "E1";
    std::string target = "E2";

    static IsogenyClass identity(const std::string& curve) { return {Matrix2::identity(), curve, curve}; }
};

// Composition g o f (first f, then g).
IsogenyClass compose(const IsogenyClass& g, const IsogenyClass& f);

enum class HomRank { Zero, RankOne, RankTwo };

struct HomGroup {
    std::vector<IsogenyClass> generators;
    HomRank kind = HomRank::Zero;

    HomGroup(std::vector<IsogenyClass> gens, HomRank rank);
};

// Coefficient array of a class in H1(E) (x) H1(E'): coeff[i][j] multiplies v_i (x) w_j.
struct H2Tensor {
    std::array<std::array<Integer, 2>, 2> coeff{{{Integer(0), Integer(0)}, {Integer(0), Integer(0)}}};

    static H2Tensor of(long c00, long c01, long c10, long c11);

    H2Tensor operator+(const H2Tensor& rhs) const;
    H2Tensor operator-() const;
    bool operator==(const H2Tensor& rhs) const { return coeff == rhs.coeff; }
    bool is_zero() const;
    // Basis order v0w0, v0w1, v1w0, v1w1.
    std::array<Integer, 4> flat() const;
    std::string to_string() const;
};

H2Tensor operator*(const Integer& k, const H2Tensor& t);

// Hom(E1, E2) for E1 = C/(Z m + Z sqrt d), E2 = C/(Z + Z sqrt d).
HomGroup cm_hom_generators(const Integer& m, const Integer& d);

Integer degree(const IsogenyClass& f);
Integer trace(const IsogenyClass& f);

struct GraphDecomposition {
    Integer horizontal;  // coefficient of [E1 x e2]
    Integer vertical;    // coefficient of [e1 x E2]
    IsogenyClass hom;
};

// [Gamma_f] = [E1 x e2] + deg(f) [e1 x E2] + [f]
GraphDecomposition graph_decomposition(const IsogenyClass& f);

// T(f) = v0 (x) f(v1) - v1 (x) f(v0).
H2Tensor kunneth_tensor(const IsogenyClass& f);
H2Tensor kunneth_tensor(const Matrix2& m);

// Bilinear extension of Q(x(x)y, x'(x)y') = -(x.x')(y.y'); Q(T(id), T(id)) = -2.
Integer tensor_pairing(const H2Tensor& lhs, const H2Tensor& rhs);

Integer tensor_content(const H2Tensor& t);

}  // namespace ccc
