#pragma once

#include <array>
#include <optional>
#include <string>

#include "ccc/lattice_core.hpp"

namespace ccc {

// A point of (Q/Z)^2: rational coordinates in the H1 basis, reduced into [0, 1).
using TorusPoint = std::array<Rational, 2>;

Rational frac(const Rational& q);
TorusPoint reduce(const TorusPoint& p);
TorusPoint operator+(const TorusPoint& a, const TorusPoint& b);
TorusPoint operator-(const TorusPoint& a, const TorusPoint& b);
TorusPoint scale(const Integer& k, const TorusPoint& p);
// lcm of the reduced denominators.
Integer torus_point_order(const TorusPoint& p);

// Complex multiplication data: period lattice Z m + Z sqrt(d).
struct CmData {
    Integer m;
    Integer d;
};

// An elliptic curve seen through H1(E, Z) = Z v0 + Z v1 with (v0 . v1) = +1.
struct EllipticCurveLattice {
    std::string label;
    std::array<std::string, 2> basis_names{"v0", "v1"};
    int intersection_sign = 1;
    std::optional<CmData> cm;

    EllipticCurveLattice(std::string label, std::array<std::string, 2> names,
                         std::optional<CmData> cm = std::nullopt);

    // Standard symplectic form on Z^2.
    static Integer intersection(std::size_t i, std::size_t j);
};

class TorsionPoint {
public:
    TorsionPoint() = default;
    TorsionPoint(Rational a, Rational b);

    // (1/n, 0)
    static TorsionPoint canonical(const Integer& n);

    const TorusPoint& coords() const { return coords_; }
    const Integer& order() const { return order_; }
    bool is_origin() const { return order_ == 1; }

    // Primitive vector gamma with 2([t] - [e]) = (1/d(n)) gamma up to a unit mod d(n).
    std::array<Integer, 2> primitive_direction() const;

    bool operator==(const TorsionPoint& rhs) const { return coords_ == rhs.coords_; }

private:
    TorusPoint coords_{Rational(0), Rational(0)};
    Integer order_ = 1;
};

// A class in CH^1(E) = Z (degree) + E (Abel-Jacobi image), torsion part only.
struct ZeroCycleClass {
    Integer degree = 0;
    TorusPoint aj{Rational(0), Rational(0)};

    static ZeroCycleClass zero() { return {}; }
    static ZeroCycleClass point(const TorusPoint& y);
    static ZeroCycleClass point(const TorsionPoint& y) { return point(y.coords()); }

    bool is_zero() const;
    bool is_homologically_trivial() const { return degree == 0; }

    ZeroCycleClass operator+(const ZeroCycleClass& rhs) const;
    ZeroCycleClass operator-(const ZeroCycleClass& rhs) const;
    ZeroCycleClass operator-() const;
    ZeroCycleClass& operator+=(const ZeroCycleClass& rhs);
    bool operator==(const ZeroCycleClass& rhs) const;

    std::string to_string() const;
};

ZeroCycleClass operator*(const Integer& k, const ZeroCycleClass& c);

// n/2 for even n, n for odd n.
Integer d_of_n(const Integer& n);

Integer torsion_point_order(const TorusPoint& coords);

// k([t] - [e])
ZeroCycleClass scaled_difference_class(const Integer& k, const TorsionPoint& t);

// Order of a degree-zero class; throws std::invalid_argument on nonzero degree.
Integer class_order(const ZeroCycleClass& c);

Integer odd_part(const Integer& n);

}  // namespace ccc
