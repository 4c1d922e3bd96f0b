#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ccc {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

class NotSublatticeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;

    IntegerMatrix transpose() const;
    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    IntVector operator*(std::span<const Integer> v) const;

    bool operator==(const IntegerMatrix& rhs) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t i);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

// U * M * V = S with U, V unimodular and S diagonal, S[i][i] | S[i+1][i+1].
struct SnfDecomposition {
    IntegerMatrix U;
    IntegerMatrix S;
    IntegerMatrix V;

    // Diagonal of S, length min(rows, cols).
    IntVector diagonal() const;
};

SnfDecomposition smith_normal_form(const IntegerMatrix& m);

Integer determinant(const IntegerMatrix& m);

// gcd of the entries; 0 for the zero vector.
Integer content(std::span<const Integer> v);
bool is_primitive(std::span<const Integer> v);

// Lexicographically smallest x in [0, N)^cols with A x = b (mod N), or nullopt
// when the system has no solution.
std::optional<IntVector> solve_mod(const IntegerMatrix& a, std::span<const Integer> b,
                                   const Integer& modulus);

// Upper-triangular basis (positive pivots) of the lattice spanned by `generators`
// inside Z^dim. Zero generators are dropped.
std::vector<IntVector> echelon_basis(std::vector<IntVector> generators, std::size_t dim);

// Coordinates c with sum_j c_j basis[j] = v, or nullopt if v is outside the span.
std::optional<std::vector<Rational>> rational_coordinates(const std::vector<IntVector>& basis,
                                                          std::span<const Integer> v);

std::size_t rational_rank(const std::vector<IntVector>& vectors);

class IntegerLattice {
public:
    // Basis vectors are rows of an ambient Z^N; they must be linearly independent.
    IntegerLattice(std::vector<IntVector> basis, std::size_t ambient_dim,
                   std::optional<IntegerMatrix> gram = std::nullopt);

    std::size_t rank() const { return basis_.size(); }
    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<IntVector>& basis() const { return basis_; }
    const std::optional<IntegerMatrix>& gram() const { return gram_; }

private:
    std::vector<IntVector> basis_;
    std::size_t ambient_dim_;
    std::optional<IntegerMatrix> gram_;
};

// [L : Lsub]; nullopt means the index is infinite (rank(Lsub) < rank(L)).
// Throws NotSublatticeError when some basis vector of Lsub is not in L.
std::optional<Integer> sublattice_index(const IntegerLattice& lattice, const IntegerLattice& sub);

// det(gram); throws std::invalid_argument when the lattice carries no gram.
Integer gram_determinant(const IntegerLattice& lattice);

Integer floor_mod(const Integer& a, const Integer& n);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace ccc
