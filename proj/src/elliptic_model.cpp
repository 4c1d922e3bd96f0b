#include "ccc/elliptic_model.hpp"

#include <sstream>
#include <stdexcept>

namespace ccc {

Rational frac(const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rational r = q - Rational(fl);
    r.canonicalize();
    return r;
}

TorusPoint reduce(const TorusPoint& p) { return {frac(p[0]), frac(p[1])}; }

TorusPoint operator+(const TorusPoint& a, const TorusPoint& b) {
    return reduce({a[0] + b[0], a[1] + b[1]});
}

TorusPoint operator-(const TorusPoint& a, const TorusPoint& b) {
    return reduce({a[0] - b[0], a[1] - b[1]});
}

TorusPoint scale(const Integer& k, const TorusPoint& p) {
    return reduce({Rational(k) * p[0], Rational(k) * p[1]});
}

Integer torus_point_order(const TorusPoint& p) {
    const TorusPoint r = reduce(p);
    return lcm(r[0].get_den(), r[1].get_den());
}

Integer torsion_point_order(const TorusPoint& coords) { return torus_point_order(coords); }

EllipticCurveLattice::EllipticCurveLattice(std::string label_, std::array<std::string, 2> names,
                                           std::optional<CmData> cm_)
    : label(std::move(label_)), basis_names(std::move(names)), cm(std::move(cm_)) {
    if (cm && (cm->m < 1 || cm->d > -1))
        throw std::invalid_argument("CM data requires m >= 1 and d <= -1");
}

Integer EllipticCurveLattice::intersection(std::size_t i, std::size_t j) {
    if (i == j) return 0;
    return i == 0 ? 1 : -1;
}

TorsionPoint::TorsionPoint(Rational a, Rational b) {
    a.canonicalize();
    b.canonicalize();
    coords_ = reduce({a, b});
    order_ = torus_point_order(coords_);
}

TorsionPoint TorsionPoint::canonical(const Integer& n) {
    if (n < 1) throw std::invalid_argument("torsion order must be positive");
    return TorsionPoint(Rational(Integer(1), n), Rational(0));
}

std::array<Integer, 2> TorsionPoint::primitive_direction() const {
    if (order_ == 1) return {Integer(0), Integer(0)};
    // coords = (a/n, b/n) with gcd(a, b, n) = 1
    Integer a = coords_[0].get_num() * (order_ / coords_[0].get_den());
    Integer b = coords_[1].get_num() * (order_ / coords_[1].get_den());
    const Integer g = gcd(a, b);
    return {a / g, b / g};
}

ZeroCycleClass ZeroCycleClass::point(const TorusPoint& y) { return {Integer(1), reduce(y)}; }

bool ZeroCycleClass::is_zero() const { return degree == 0 && aj[0] == 0 && aj[1] == 0; }

ZeroCycleClass ZeroCycleClass::operator+(const ZeroCycleClass& rhs) const {
    return {degree + rhs.degree, aj + rhs.aj};
}

ZeroCycleClass ZeroCycleClass::operator-(const ZeroCycleClass& rhs) const {
    return {degree - rhs.degree, aj - rhs.aj};
}

ZeroCycleClass ZeroCycleClass::operator-() const { return ZeroCycleClass{} - *this; }

ZeroCycleClass& ZeroCycleClass::operator+=(const ZeroCycleClass& rhs) {
    *this = *this + rhs;
    return *this;
}

bool ZeroCycleClass::operator==(const ZeroCycleClass& rhs) const {
    return degree == rhs.degree && aj == rhs.aj;
}

std::string ZeroCycleClass::to_string() const {
    std::ostringstream os;
    os << "(deg " << degree.get_str() << ", aj " << aj[0].get_str() << ", " << aj[1].get_str() << ")";
    return os.str();
}

ZeroCycleClass operator*(const Integer& k, const ZeroCycleClass& c) {
    return {k * c.degree, scale(k, c.aj)};
}

Integer d_of_n(const Integer& n) {
    if (n < 1) throw std::invalid_argument("d(n) requires n >= 1");
    return mpz_even_p(n.get_mpz_t()) ? Integer(n / 2) : n;
}

ZeroCycleClass scaled_difference_class(const Integer& k, const TorsionPoint& t) {
    return k * (ZeroCycleClass::point(t) - ZeroCycleClass::point(TorusPoint{Rational(0), Rational(0)}));
}

Integer class_order(const ZeroCycleClass& c) {
    if (c.degree != 0) throw std::invalid_argument("order is only defined for degree-zero classes");
    return torus_point_order(c.aj);
}

Integer odd_part(const Integer& n) {
    if (n == 0) return 0;
    Integer r = abs(n);
    while (mpz_even_p(r.get_mpz_t())) r /= 2;
    return r;
}

}  // namespace ccc
