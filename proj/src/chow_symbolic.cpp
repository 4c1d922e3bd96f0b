#include "ccc/chow_symbolic.hpp"

#include <stdexcept>

namespace ccc {

GradedPiece parse_graded_piece(std::string_view label) {
    if (label == "g022") return GradedPiece::G022;
    if (label == "g112") return GradedPiece::G112;
    if (label == "g202") return GradedPiece::G202;
    if (label == "g211") return GradedPiece::G211;
    if (label == "g220") return GradedPiece::G220;
    throw std::invalid_argument("unknown graded piece label: " + std::string(label));
}

std::string_view graded_piece_label(GradedPiece piece) {
    switch (piece) {
        case GradedPiece::G022: return "g022";
        case GradedPiece::G112: return "g112";
        case GradedPiece::G202: return "g202";
        case GradedPiece::G211: return "g211";
        case GradedPiece::G220: return "g220";
    }
    return "";
}

void ZeroCycleTensor::add(const ZeroCycleClass& left, const ZeroCycleClass& right) {
    degree += left.degree * right.degree;
    left_aj = left_aj + scale(right.degree, left.aj);
    right_aj = right_aj + scale(left.degree, right.aj);
}

bool ZeroCycleTensor::is_zero() const {
    return degree == 0 && left_aj == TorusPoint{} && right_aj == TorusPoint{};
}

ZeroCycleTensor ZeroCycleTensor::operator+(const ZeroCycleTensor& rhs) const {
    return {degree + rhs.degree, left_aj + rhs.left_aj, right_aj + rhs.right_aj};
}

ZeroCycleTensor operator*(const Integer& k, const ZeroCycleTensor& t) {
    return {k * t.degree, scale(k, t.left_aj), scale(k, t.right_aj)};
}

void HomCycleTensor::add(const Matrix2& f, const ZeroCycleClass& z) {
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (f.a[i][j] != 0) entries[i][j] += f.a[i][j] * z;
}

bool HomCycleTensor::is_zero() const {
    for (const auto& row : entries)
        for (const auto& z : row)
            if (!z.is_zero()) return false;
    return true;
}

bool HomCycleTensor::is_homologically_trivial() const {
    for (const auto& row : entries)
        for (const auto& z : row)
            if (z.degree != 0) return false;
    return true;
}

HomCycleTensor HomCycleTensor::operator+(const HomCycleTensor& rhs) const {
    HomCycleTensor out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) out.entries[i][j] = entries[i][j] + rhs.entries[i][j];
    return out;
}

HomCycleTensor operator*(const Integer& k, const HomCycleTensor& t) {
    HomCycleTensor out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) out.entries[i][j] = k * t.entries[i][j];
    return out;
}

ProductCycleClass& ProductCycleClass::add_g022(const ZeroCycleClass& beta, const ZeroCycleClass& theta) {
    g022.add(beta, theta);
    return *this;
}

ProductCycleClass& ProductCycleClass::add_g112(const IsogenyClass& g, const ZeroCycleClass& beta) {
    g112.add(g.matrix, beta);
    return *this;
}

ProductCycleClass& ProductCycleClass::add_g202(const ZeroCycleClass& alpha, const ZeroCycleClass& gamma) {
    g202.add(alpha, gamma);
    return *this;
}

ProductCycleClass& ProductCycleClass::add_g211(const ZeroCycleClass& alpha, const IsogenyClass& h) {
    g211.add(h.matrix, alpha);
    return *this;
}

ProductCycleClass& ProductCycleClass::add_g220(const ZeroCycleClass& alpha, const ZeroCycleClass& beta) {
    g220.add(alpha, beta);
    return *this;
}

bool ProductCycleClass::is_zero() const {
    return g022.is_zero() && g112.is_zero() && g202.is_zero() && g211.is_zero() && g220.is_zero();
}

ProductCycleClass ProductCycleClass::operator+(const ProductCycleClass& rhs) const {
    if (curves != rhs.curves) throw std::invalid_argument("adding classes on different products");
    ProductCycleClass out(curves);
    out.g022 = g022 + rhs.g022;
    out.g112 = g112 + rhs.g112;
    out.g202 = g202 + rhs.g202;
    out.g211 = g211 + rhs.g211;
    out.g220 = g220 + rhs.g220;
    return out;
}

ProductCycleClass ProductCycleClass::operator-(const ProductCycleClass& rhs) const {
    return *this + Integer(-1) * rhs;
}

bool ProductCycleClass::operator==(const ProductCycleClass& rhs) const {
    return curves == rhs.curves && g022 == rhs.g022 && g112 == rhs.g112 && g202 == rhs.g202 &&
           g211 == rhs.g211 && g220 == rhs.g220;
}

ProductCycleClass operator*(const Integer& k, const ProductCycleClass& z) {
    ProductCycleClass out(z.curves);
    out.g022 = k * z.g022;
    out.g112 = k * z.g112;
    out.g202 = k * z.g202;
    out.g211 = k * z.g211;
    out.g220 = k * z.g220;
    return out;
}

DivisorClass DivisorClass::operator+(const DivisorClass& rhs) const {
    if (curves != rhs.curves) throw std::invalid_argument("adding divisors on different surfaces");
    return {curves, first + rhs.first, second + rhs.second, hom + rhs.hom};
}

bool DivisorClass::operator==(const DivisorClass& rhs) const {
    return curves == rhs.curves && first == rhs.first && second == rhs.second && hom == rhs.hom;
}

TorusPoint kernel_sum(const Matrix2& m) {
    if (m.det() == 0) throw std::invalid_argument("kernel sum of a singular matrix");
    // ker = { y U : y_i in (1/s_i)Z/Z } for U m V = diag(s_1, s_2).
    IntegerMatrix mm(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) mm(i, j) = m.a[i][j];
    const auto snf = smith_normal_form(mm);
    const Integer s1 = snf.S(0, 0);
    const Integer s2 = snf.S(1, 1);
    // Sum over (Z/s1 x Z/s2) of (a/s1, b/s2).
    const TorusPoint y = reduce({Rational(s2 * (s1 - 1), Integer(2)), Rational(s1 * (s2 - 1), Integer(2))});
    return reduce({y[0] * Rational(snf.U(0, 0)) + y[1] * Rational(snf.U(1, 0)),
                   y[0] * Rational(snf.U(0, 1)) + y[1] * Rational(snf.U(1, 1))});
}

DivisorClass graph_class(const IsogenyClass& f) {
    DivisorClass d{{f.source, f.target}, {}, {}, f.matrix};
    d.second = ZeroCycleClass::point(TorusPoint{});
    if (f.matrix.is_zero()) return d;
    d.first = degree(f) * ZeroCycleClass::point(TorusPoint{}) +
              (ZeroCycleClass::point(kernel_sum(f.matrix)) - ZeroCycleClass::point(TorusPoint{}));
    return d;
}

ProductCycleClass graph_tensor_class(const IsogenyClass& f, const ZeroCycleClass& beta, const std::string& third) {
    const DivisorClass g = graph_class(f);
    ProductCycleClass z({f.source, f.target, third});
    z.add_g022(g.second, beta);
    z.add_g202(g.first, beta);
    z.add_g112(f, beta);
    return z;
}

ProductCycleClass make_diagonal_type_class(const TorsionPoint& t, const IsogenyClass& f, const Integer& k) {
    ProductCycleClass z({"E1", f.source, f.target});
    z.add_g211(scaled_difference_class(k, t), f);
    return z;
}

DivisorClass pushforward_sum(const ProductCycleClass& z) {
    if (z.curves[1] != z.curves[2])
        throw std::invalid_argument("addition map needs the last two factors to be the same curve");

    DivisorClass out{{z.curves[0], z.curves[1]}, {}, {}, {}};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const ZeroCycleClass& beta = z.g112.entries[i][j];
            const Matrix2 unit = Matrix2::unit(i, j);
            out.hom += beta.degree * unit;
            // Translated graphs shift the first factor by the dual map.
            const TorusPoint shift = ccc::apply(beta.aj, unit.adjugate());
            out.first += ZeroCycleClass{Integer(0), TorusPoint{} - shift};

            if (i == j) out.first += z.g211.entries[i][j];
        }
    out.second += z.g022.convolution();
    out.first += z.g202.left_weighted();
    out.first += z.g220.left_weighted();
    return out;
}

ZeroCycleClass correspondence_action(const ProductCycleClass& z, const IsogenyClass& arg) {
    const H2Tensor target = kunneth_tensor(arg);
    ZeroCycleClass out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const ZeroCycleClass& alpha = z.g211.entries[i][j];
            if (alpha.is_zero()) continue;
            out += tensor_pairing(kunneth_tensor(Matrix2::unit(i, j)), target) * alpha;
        }
    return out;
}

ProductCycleClass project_to_graded(const ProductCycleClass& z, GradedPiece piece) {
    ProductCycleClass out(z.curves);
    switch (piece) {
        case GradedPiece::G022: out.g022 = z.g022; break;
        case GradedPiece::G112: out.g112 = z.g112; break;
        case GradedPiece::G202: out.g202 = z.g202; break;
        case GradedPiece::G211: out.g211 = z.g211; break;
        case GradedPiece::G220: out.g220 = z.g220; break;
    }
    return out;
}

ProductCycleClass project_to_graded(const ProductCycleClass& z, std::string_view label) {
    return project_to_graded(z, parse_graded_piece(label));
}

}  // namespace ccc
