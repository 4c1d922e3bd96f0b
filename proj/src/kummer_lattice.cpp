#include "ccc/kummer_lattice.hpp"

#include <set>
#include <stdexcept>

namespace ccc {

std::size_t KummerCode::dimension() const {
    // Rank over F_2 by elimination on bit rows.
    std::vector<std::uint32_t> bits;
    for (const auto& g : generators) {
        std::uint32_t b = 0;
        for (std::size_t i = 0; i < kKummerLength; ++i)
            if (g[i]) b |= 1u << i;
        bits.push_back(b);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < kKummerLength; ++col) {
        std::size_t p = rank;
        while (p < bits.size() && !(bits[p] >> col & 1u)) ++p;
        if (p == bits.size()) continue;
        std::swap(bits[rank], bits[p]);
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (i != rank && (bits[i] >> col & 1u)) bits[i] ^= bits[rank];
        ++rank;
    }
    return rank;
}

std::vector<KummerCode::Word> KummerCode::codewords() const {
    std::set<Word> words;
    const std::size_t g = generators.size();
    for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
        Word w{};
        for (std::size_t k = 0; k < g; ++k)
            if (mask >> k & 1u)
                for (std::size_t i = 0; i < kKummerLength; ++i) w[i] ^= generators[k][i];
        words.insert(w);
    }
    return {words.begin(), words.end()};
}

std::map<std::size_t, std::size_t> KummerCode::weight_enumerator() const {
    std::map<std::size_t, std::size_t> counts;
    for (const auto& w : codewords()) {
        std::size_t weight = 0;
        for (auto bit : w) weight += bit;
        ++counts[weight];
    }
    return counts;
}

std::size_t KummerCode::minimum_weight() const {
    std::size_t best = kKummerLength + 1;
    for (const auto& [weight, count] : weight_enumerator())
        if (weight > 0 && count > 0 && weight < best) best = weight;
    return best;
}

bool KummerCode::contains(const Word& w) const {
    for (const auto& c : codewords())
        if (c == w) return true;
    return false;
}

KummerCode build_kummer_code() {
    KummerCode code;
    KummerCode::Word ones{};
    ones.fill(1);
    code.generators.push_back(ones);
    for (std::size_t k = 0; k < 4; ++k) {
        KummerCode::Word w{};
        for (std::size_t i = 0; i < kKummerLength; ++i) w[i] = static_cast<std::uint8_t>(i >> k & 1u);
        code.generators.push_back(w);
    }
    return code;
}

namespace {

Integer dot(std::span<const Integer> x, std::span<const Integer> y) {
    if (x.size() != y.size()) throw std::invalid_argument("pairing of vectors of different lengths");
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

template <class Pairing>
IntegerMatrix gram_of(const std::vector<IntVector>& basis, Pairing pairing) {
    IntegerMatrix g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = pairing(basis[i], basis[j]);
    return g;
}

}  // namespace

Integer kummer_pairing(std::span<const Integer> x, std::span<const Integer> y) {
    // e_i . e_j = -(1/2) delta_ij
    const Integer s = dot(x, y);
    if (!mpz_even_p(s.get_mpz_t())) throw std::domain_error("pairing is not integral on these vectors");
    return -s / 2;
}

Integer blowup_pairing(std::span<const Integer> x, std::span<const Integer> y) { return -dot(x, y); }

KummerLattice build_kummer_lattice() {
    KummerCode code = build_kummer_code();

    std::vector<IntVector> roots;
    for (std::size_t i = 0; i < kKummerLength; ++i) {
        IntVector v(kKummerLength, Integer(0));
        v[i] = 2;
        roots.push_back(std::move(v));
    }
    std::vector<IntVector> generators = roots;
    for (const auto& w : code.generators) {
        IntVector v(kKummerLength);
        for (std::size_t i = 0; i < kKummerLength; ++i) v[i] = w[i];
        generators.push_back(std::move(v));
    }
    std::vector<IntVector> basis = echelon_basis(std::move(generators), kKummerLength);

    auto pair = [](const IntVector& x, const IntVector& y) { return kummer_pairing(x, y); };
    IntegerMatrix k_gram = gram_of(basis, pair);
    IntegerMatrix root_gram = gram_of(roots, pair);
    return {IntegerLattice(std::move(basis), kKummerLength, std::move(k_gram)),
            IntegerLattice(std::move(roots), kKummerLength, std::move(root_gram)), std::move(code)};
}

PullbackIndices pullback_index_check() {
    const KummerLattice k = build_kummer_lattice();

    std::vector<IntVector> unit;
    for (std::size_t i = 0; i < kKummerLength; ++i) {
        IntVector v(kKummerLength, Integer(0));
        v[i] = 1;
        unit.push_back(std::move(v));
    }
    const IntegerLattice exceptional(unit, kKummerLength);
    // pi^* acts as the identity on e-coordinates.
    const IntegerLattice pulled(k.lattice.basis(), kKummerLength);

    PullbackIndices out;
    out.pullback_integral = true;
    try {
        out.exceptional_over_pullback = sublattice_index(exceptional, pulled).value();
    } catch (const NotSublatticeError&) {
        out.pullback_integral = false;
        out.exceptional_over_pullback = 0;
    }
    out.kummer_over_roots = sublattice_index(k.lattice, k.root_lattice).value();

    out.form_doubles = true;
    for (const auto& x : k.lattice.basis())
        for (const auto& y : k.lattice.basis())
            if (blowup_pairing(x, y) != 2 * kummer_pairing(x, y)) out.form_doubles = false;
    return out;
}

}  // namespace ccc
