#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "ccc/lattice_core.hpp"

namespace ccc {

inline constexpr std::size_t kKummerLength = 16;

// Binary code of length 16 with coordinates indexed by F_2^4.
struct KummerCode {
    using Word = std::array<std::uint8_t, kKummerLength>;

    std::vector<Word> generators;

    std::size_t length() const { return kKummerLength; }
    std::size_t dimension() const;
    std::vector<Word> codewords() const;
    // weight -> number of codewords
    std::map<std::size_t, std::size_t> weight_enumerator() const;
    std::size_t minimum_weight() const;
    bool contains(const Word& w) const;
};

// First-order Reed-Muller code RM(1,4): the all-ones word and the four
// coordinate indicators x -> x_k.
KummerCode build_kummer_code();

// Coordinates are taken in the basis e_i = (1/2) Ebar_i, so Ebar_i = 2 e_i and a
// glue vector (1/2) sum_{i in W} Ebar_i has 0/1 coordinates. The ambient form
// is Ebar_i . Ebar_j = -2 delta_ij.
struct KummerLattice {
    IntegerLattice lattice;       // K, with gram
    IntegerLattice root_lattice;  // sum Z Ebar_i, with gram
    KummerCode code;
};

// (x . y) for vectors in e-coordinates; throws if the value is not integral.
Integer kummer_pairing(std::span<const Integer> x, std::span<const Integer> y);

KummerLattice build_kummer_lattice();

struct PullbackIndices {
    Integer exceptional_over_pullback;  // [sum Z E_i : pi^* K]
    Integer kummer_over_roots;          // [K : sum Z Ebar_i]
    bool pullback_integral;             // pi^* K lies in sum Z E_i
    bool form_doubles;                  // (pi^* x).(pi^* y) = 2 (x.y) on a basis of K
};

// pi^* sends Ebar_i to 2 E_i, i.e. it is the identity on e-coordinates once the
// target carries E_i . E_j = -delta_ij.
PullbackIndices pullback_index_check();

// Blow-up side pairing E_i . E_j = -delta_ij.
Integer blowup_pairing(std::span<const Integer> x, std::span<const Integer> y);

}  // namespace ccc
