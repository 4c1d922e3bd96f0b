#include "ccc/isogeny_hom.hpp"

#include <sstream>
#include <stdexcept>

namespace ccc {

Matrix2 Matrix2::of(long a00, long a01, long a10, long a11) {
    Matrix2 m;
    m.a = {{{Integer(a00), Integer(a01)}, {Integer(a10), Integer(a11)}}};
    return m;
}

Matrix2 Matrix2::unit(std::size_t i, std::size_t j) {
    Matrix2 m;
    m.a[i][j] = 1;
    return m;
}

Matrix2 Matrix2::adjugate() const {
    Matrix2 m;
    m.a = {{{a[1][1], -a[0][1]}, {-a[1][0], a[0][0]}}};
    return m;
}

bool Matrix2::is_zero() const {
    return a[0][0] == 0 && a[0][1] == 0 && a[1][0] == 0 && a[1][1] == 0;
}

Matrix2 Matrix2::operator+(const Matrix2& rhs) const {
    Matrix2 m;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.a[i][j] = a[i][j] + rhs.a[i][j];
    return m;
}

Matrix2 Matrix2::operator-(const Matrix2& rhs) const { return *this + Integer(-1) * rhs; }

Matrix2 Matrix2::operator*(const Matrix2& rhs) const {
    Matrix2 m;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.a[i][j] = a[i][0] * rhs.a[0][j] + a[i][1] * rhs.a[1][j];
    return m;
}

Matrix2& Matrix2::operator+=(const Matrix2& rhs) {
    *this = *this + rhs;
    return *this;
}

std::string Matrix2::to_string() const {
    std::ostringstream os;
    os << "[[" << a[0][0].get_str() << "," << a[0][1].get_str() << "],[" << a[1][0].get_str() << ","
       << a[1][1].get_str() << "]]";
    return os.str();
}

Matrix2 operator*(const Integer& k, const Matrix2& m) {
    Matrix2 out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) out.a[i][j] = k * m.a[i][j];
    return out;
}

TorusPoint apply(const TorusPoint& x, const Matrix2& m) {
    return reduce({x[0] * Rational(m.a[0][0]) + x[1] * Rational(m.a[1][0]),
                   x[0] * Rational(m.a[0][1]) + x[1] * Rational(m.a[1][1])});
}

IsogenyClass compose(const IsogenyClass& g, const IsogenyClass& f) {
    if (f.target != g.source) throw std::invalid_argument("composition of incompatible isogenies");
    // x -> (x M_f) M_g
    return {f.matrix * g.matrix, f.source, g.target};
}

HomGroup::HomGroup(std::vector<IsogenyClass> gens, HomRank rank)
    : generators(std::move(gens)), kind(rank) {
    const std::size_t expected = rank == HomRank::Zero ? 0 : rank == HomRank::RankOne ? 1 : 2;
    if (generators.size() != expected) throw std::invalid_argument("generator count does not match Hom rank");
}

H2Tensor H2Tensor::of(long c00, long c01, long c10, long c11) {
    H2Tensor t;
    t.coeff = {{{Integer(c00), Integer(c01)}, {Integer(c10), Integer(c11)}}};
    return t;
}

H2Tensor H2Tensor::operator+(const H2Tensor& rhs) const {
    H2Tensor t;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) t.coeff[i][j] = coeff[i][j] + rhs.coeff[i][j];
    return t;
}

H2Tensor H2Tensor::operator-() const { return Integer(-1) * *this; }

bool H2Tensor::is_zero() const {
    for (const auto& row : coeff)
        for (const auto& c : row)
            if (c != 0) return false;
    return true;
}

std::array<Integer, 4> H2Tensor::flat() const {
    return {coeff[0][0], coeff[0][1], coeff[1][0], coeff[1][1]};
}

std::string H2Tensor::to_string() const {
    std::ostringstream os;
    os << coeff[0][0].get_str() << "," << coeff[0][1].get_str() << "," << coeff[1][0].get_str() << ","
       << coeff[1][1].get_str();
    return os.str();
}

H2Tensor operator*(const Integer& k, const H2Tensor& t) {
    H2Tensor out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) out.coeff[i][j] = k * t.coeff[i][j];
    return out;
}

HomGroup cm_hom_generators(const Integer& m, const Integer& d) {
    if (m < 1) throw std::invalid_argument("CM family requires m >= 1");
    if (d > -1) throw std::invalid_argument("CM family requires d <= -1");
    Matrix2 phi_one;
    phi_one.a = {{{m, Integer(0)}, {Integer(0), Integer(1)}}};
    Matrix2 phi_sqrt_d;
    phi_sqrt_d.a = {{{Integer(0), m}, {d, Integer(0)}}};
    return HomGroup({{phi_one, "E1", "E2"}, {phi_sqrt_d, "E1", "E2"}}, HomRank::RankTwo);
}

Integer degree(const IsogenyClass& f) { return abs(f.matrix.det()); }

Integer trace(const IsogenyClass& f) {
    if (f.source != f.target) throw std::invalid_argument("trace of a map between different curves");
    return f.matrix.trace();
}

GraphDecomposition graph_decomposition(const IsogenyClass& f) { return {Integer(1), degree(f), f}; }

H2Tensor kunneth_tensor(const Matrix2& m) {
    H2Tensor t;
    for (std::size_t j = 0; j < 2; ++j) {
        t.coeff[0][j] = m.a[1][j];
        t.coeff[1][j] = -m.a[0][j];
    }
    return t;
}

H2Tensor kunneth_tensor(const IsogenyClass& f) { return kunneth_tensor(f.matrix); }

Integer tensor_pairing(const H2Tensor& lhs, const H2Tensor& rhs) {
    Integer q = 0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) {
                    const Integer form = EllipticCurveLattice::intersection(i, k) *
                                         EllipticCurveLattice::intersection(j, l);
                    if (form != 0) q -= lhs.coeff[i][j] * rhs.coeff[k][l] * form;
                }
    return q;
}

Integer tensor_content(const H2Tensor& t) {
    const auto f = t.flat();
    return content(f);
}

}  // namespace ccc
