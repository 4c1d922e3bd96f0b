#pragma once

#include <random>

#include "ccc/chow_symbolic.hpp"
#include "ccc/isogeny_hom.hpp"
#include "oracles/brute_force.hpp"
#include "oracles/point_model.hpp"

namespace testing_support {

inline oracle::Frac to_frac(const ccc::Rational& q) {
    return oracle::Frac(q.get_num().get_si(), q.get_den().get_si());
}
inline oracle::Pt to_pt(const ccc::TorusPoint& p) { return {to_frac(p[0]), to_frac(p[1])}; }
inline ccc::TorusPoint from_pt(const oracle::Pt& p) {
    auto q = [](const oracle::Frac& f) { return ccc::Rational(static_cast<long>(f.num), static_cast<unsigned long>(f.den)); };
    return ccc::reduce({q(p[0]), q(p[1])});
}
inline oracle::Zc to_zc(const ccc::ZeroCycleClass& z) { return {z.degree.get_si(), to_pt(z.aj)}; }
inline oracle::IMat to_imat(const ccc::Matrix2& m) {
    return {{{m.a[0][0].get_si(), m.a[0][1].get_si()}, {m.a[1][0].get_si(), m.a[1][1].get_si()}}};
}
inline ccc::Matrix2 from_imat(const oracle::IMat& m) { return ccc::Matrix2::of(static_cast<long>(m[0][0]), static_cast<long>(m[0][1]), static_cast<long>(m[1][0]),
                            static_cast<long>(m[1][1])); }

inline ccc::ZeroCycleClass zero_cycle(const oracle::PointSum& s) {
    ccc::ZeroCycleClass z;
    for (const auto& [c, p] : s) z += ccc::Integer(static_cast<long>(c)) * ccc::ZeroCycleClass::point(from_pt(p));
    return z;
}

// Zero-cycle (deg, aj) realized as (deg - 1)[0] + [aj].
inline oracle::PointSum realize(const ccc::ZeroCycleClass& z) {
    return {{z.degree.get_si() - 1, oracle::Pt{}}, {1, to_pt(z.aj)}};
}

// first x [E2] + [E1] x second + rigidified [hom]
inline oracle::Cycle<2> realize(const ccc::DivisorClass& d) {
    oracle::Cycle<2> c = oracle::rigid_hom(to_imat(d.hom));
    oracle::add_points(c, realize(d.first), true);
    oracle::add_points(c, realize(d.second), false);
    return c;
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed2026ULL ^ salt); }

inline long uniform(std::mt19937_64& g, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(g);
}

inline ccc::Matrix2 random_matrix(std::mt19937_64& g, long lo, long hi) {
    return ccc::Matrix2::of(uniform(g, lo, hi), uniform(g, lo, hi), uniform(g, lo, hi), uniform(g, lo, hi));
}

}  // namespace testing_support
