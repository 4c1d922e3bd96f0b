#pragma once

#include <array>
#include <string>
#include <string_view>

#include "ccc/elliptic_model.hpp"
#include "ccc/isogeny_hom.hpp"

namespace ccc {

// Graded pieces G^{p,q,r} of product cycles on E1 x E2 x E3.
enum class GradedPiece { G022, G112, G202, G211, G220 };

GradedPiece parse_graded_piece(std::string_view label);
std::string_view graded_piece_label(GradedPiece piece);

// An element of CH^1(Ea) (x) CH^1(Eb), stored by its complete invariants:
// sum deg(a)deg(b), sum deg(b)aj(a), sum deg(a)aj(b). The torsion parts of
// the two factors pair to zero, so these determine the tensor.
struct ZeroCycleTensor {
    Integer degree = 0;
    TorusPoint left_aj{Rational(0), Rational(0)};
    TorusPoint right_aj{Rational(0), Rational(0)};

    void add(const ZeroCycleClass& left, const ZeroCycleClass& right);

    // sum deg(b) a, sum deg(a) b, and the image under the addition map when Ea = Eb.
    ZeroCycleClass left_weighted() const { return {degree, left_aj}; }
    ZeroCycleClass right_weighted() const { return {degree, right_aj}; }
    ZeroCycleClass convolution() const { return {degree, left_aj + right_aj}; }

    bool is_zero() const;
    ZeroCycleTensor operator+(const ZeroCycleTensor& rhs) const;
    bool operator==(const ZeroCycleTensor& rhs) const = default;
};

ZeroCycleTensor operator*(const Integer& k, const ZeroCycleTensor& t);

// An element of Hom (x) CH^1 (either order): entries[i][j] is the zero-cycle
// coefficient of the matrix unit E_ij.
struct HomCycleTensor {
    std::array<std::array<ZeroCycleClass, 2>, 2> entries{};

    void add(const Matrix2& f, const ZeroCycleClass& z);

    bool is_zero() const;
    // Degree-zero slice: the homologically trivial subgroup.
    bool is_homologically_trivial() const;
    HomCycleTensor operator+(const HomCycleTensor& rhs) const;
    bool operator==(const HomCycleTensor& rhs) const = default;
};

HomCycleTensor operator*(const Integer& k, const HomCycleTensor& t);

struct ProductCycleClass {
    std::array<std::string, 3> curves{"E1", "E2", "E3"};
    ZeroCycleTensor g022;  // [E1] x beta x theta
    HomCycleTensor g112;   // [g] (x) beta, g: E1 -> E2
    ZeroCycleTensor g202;  // alpha x [E2] x gamma
    HomCycleTensor g211;   // alpha (x) [h], h: E2 -> E3
    ZeroCycleTensor g220;  // alpha x beta x [E3]

    ProductCycleClass() = default;
    explicit ProductCycleClass(std::array<std::string, 3> curve_labels) : curves(std::move(curve_labels)) {}

    ProductCycleClass& add_g022(const ZeroCycleClass& beta, const ZeroCycleClass& theta);
    ProductCycleClass& add_g112(const IsogenyClass& g, const ZeroCycleClass& beta);
    ProductCycleClass& add_g202(const ZeroCycleClass& alpha, const ZeroCycleClass& gamma);
    ProductCycleClass& add_g211(const ZeroCycleClass& alpha, const IsogenyClass& h);
    ProductCycleClass& add_g220(const ZeroCycleClass& alpha, const ZeroCycleClass& beta);

    bool is_zero() const;
    bool in_hom_slice_112() const { return g112.is_homologically_trivial(); }
    bool in_hom_slice_211() const { return g211.is_homologically_trivial(); }

    ProductCycleClass operator+(const ProductCycleClass& rhs) const;
    ProductCycleClass operator-(const ProductCycleClass& rhs) const;
    bool operator==(const ProductCycleClass& rhs) const;
};

ProductCycleClass operator*(const Integer& k, const ProductCycleClass& z);

// A class in CH^1(E1 x E2) = CH^1(E1) + CH^1(E2) + Hom(E1, E2):
// first x [E2] + [E1] x second + [hom], with [hom] rigidified (trivial
// restrictions to both axes) so that it is additive in the matrix.
struct DivisorClass {
    std::array<std::string, 2> curves{"E1", "E2"};
    ZeroCycleClass first;
    ZeroCycleClass second;
    Matrix2 hom;

    bool is_zero() const { return first.is_zero() && second.is_zero() && hom.is_zero(); }
    DivisorClass operator+(const DivisorClass& rhs) const;
    bool operator==(const DivisorClass& rhs) const;
};

// Sum of the kernel points of a nonsingular matrix (a point of order <= 2).
TorusPoint kernel_sum(const Matrix2& m);

// The exact class of the graph of f. Its first component carries, besides
// deg(f)[e1], the degree-zero class of the kernel sum of f.
DivisorClass graph_class(const IsogenyClass& f);

// [Gamma_f] (x) beta on E1 x E2 x E3, expanded through graph_class.
ProductCycleClass graph_tensor_class(const IsogenyClass& f, const ZeroCycleClass& beta,
                                     const std::string& third = "E3");

// k([t] - [e1]) (x) [f] in the g211 piece.
ProductCycleClass make_diagonal_type_class(const TorsionPoint& t, const IsogenyClass& f, const Integer& k);

// (id x Sigma)_* for E2 = E3. Componentwise:
//   g112: [g] (x) beta   -> deg(beta)[g] - (dual(g)(aj beta)) x [E2]
//   g211: alpha (x) [h]  -> trace(h) alpha x [E2]
//   g022: beta x theta   -> [E1] x (beta * theta)
//   g202, g220           -> deg(other factor) alpha x [E2]
DivisorClass pushforward_sum(const ProductCycleClass& z);

// Action of the g211 component, alpha (x) [g] -> Q(T(g), T(arg)) alpha.
ZeroCycleClass correspondence_action(const ProductCycleClass& z, const IsogenyClass& arg);

ProductCycleClass project_to_graded(const ProductCycleClass& z, GradedPiece piece);
ProductCycleClass project_to_graded(const ProductCycleClass& z, std::string_view label);

}  // namespace ccc
