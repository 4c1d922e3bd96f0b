#include "ccc/lattice_core.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ccc {

Integer floor_mod(const Integer& a, const Integer& n) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// s*a + t*b = g = gcd(a, b) >= 0
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : r) entries_.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length does not match column count");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntVector IntegerMatrix::row(std::size_t i) const {
    return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntegerMatrix::col(std::size_t j) const {
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntVector IntegerMatrix::operator*(std::span<const Integer> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    IntVector out(rows_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

bool IntegerMatrix::operator==(const IntegerMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

IntVector SnfDecomposition::diagonal() const {
    const std::size_t k = std::min(S.rows(), S.cols());
    IntVector d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = S(i, i);
    return d;
}

SnfDecomposition smith_normal_form(const IntegerMatrix& m) {
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    IntegerMatrix s = m;
    IntegerMatrix u = IntegerMatrix::identity(r);
    IntegerMatrix v = IntegerMatrix::identity(c);

    for (std::size_t t = 0; t < std::min(r, c); ++t) {
        for (;;) {
            // Smallest nonzero |entry| in the trailing block, first in row-major order.
            bool found = false;
            std::size_t pr = t, pc = t;
            Integer best;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    if (s(i, j) == 0) continue;
                    Integer a = abs(s(i, j));
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pr = i;
                        pc = j;
                    }
                }
            if (!found) return {std::move(u), std::move(s), std::move(v)};

            s.swap_rows(t, pr);
            u.swap_rows(t, pr);
            s.swap_cols(t, pc);
            v.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (s(i, t) == 0) continue;
                Integer q = -floor_div(s(i, t), s(t, t));
                s.add_row_multiple(i, t, q);
                u.add_row_multiple(i, t, q);
                if (s(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (s(t, j) == 0) continue;
                Integer q = -floor_div(s(t, j), s(t, t));
                s.add_col_multiple(j, t, q);
                v.add_col_multiple(j, t, q);
                if (s(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            bool divides_all = true;
            for (std::size_t i = t + 1; i < r && divides_all; ++i)
                for (std::size_t j = t + 1; j < c; ++j) {
                    if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
                        s.add_row_multiple(t, i, Integer(1));
                        u.add_row_multiple(t, i, Integer(1));
                        divides_all = false;
                        break;
                    }
                }
            if (divides_all) break;
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    return {std::move(u), std::move(s), std::move(v)};
}

Integer determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Integer(1);
    // Bareiss fraction-free elimination.
    IntegerMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return Integer(0);
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Integer content(std::span<const Integer> v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

bool is_primitive(std::span<const Integer> v) { return content(v) == 1; }

std::vector<IntVector> echelon_basis(std::vector<IntVector> rows, std::size_t dim) {
    for (const auto& row : rows)
        if (row.size() != dim) throw std::invalid_argument("generator has wrong dimension");

    std::vector<IntVector> basis;
    for (std::size_t col = 0; col < dim && !rows.empty(); ++col) {
        // Collapse every row's entry in this column into a single pivot row.
        std::size_t pivot = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            if (pivot == rows.size()) {
                pivot = i;
                continue;
            }
            Integer g, s, t;
            const Integer x = rows[pivot][col];
            const Integer y = rows[i][col];
            extended_gcd(x, y, g, s, t);
            const Integer xg = x / g;
            const Integer yg = y / g;
            IntVector a(dim), b(dim);
            for (std::size_t j = 0; j < dim; ++j) {
                a[j] = s * rows[pivot][j] + t * rows[i][j];
                b[j] = xg * rows[i][j] - yg * rows[pivot][j];
            }
            rows[pivot] = std::move(a);
            rows[i] = std::move(b);
        }
        if (pivot == rows.size()) continue;
        IntVector p = std::move(rows[pivot]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
        if (p[col] < 0)
            for (auto& x : p) x = -x;
        basis.push_back(std::move(p));
    }
    return basis;
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[r], a[p]);
        const Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rational_rank(const std::vector<IntVector>& vectors) {
    if (vectors.empty()) return 0;
    const std::size_t dim = vectors.front().size();
    std::vector<std::vector<Rational>> a;
    for (const auto& v : vectors) {
        if (v.size() != dim) throw std::invalid_argument("vectors of different dimensions");
        a.emplace_back(v.begin(), v.end());
    }
    return rref(a, dim).size();
}

std::optional<std::vector<Rational>> rational_coordinates(const std::vector<IntVector>& basis,
                                                          std::span<const Integer> v) {
    const std::size_t k = basis.size();
    const std::size_t dim = v.size();
    // Rows are ambient coordinates; columns are basis vectors plus the target.
    std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(k + 1));
    for (std::size_t j = 0; j < k; ++j) {
        if (basis[j].size() != dim) throw std::invalid_argument("basis vector has wrong dimension");
        for (std::size_t i = 0; i < dim; ++i) a[i][j] = basis[j][i];
    }
    for (std::size_t i = 0; i < dim; ++i) a[i][k] = v[i];
    const auto pivots = rref(a, k + 1);
    if (!pivots.empty() && pivots.back() == k) return std::nullopt;
    std::vector<Rational> coords(k);
    for (std::size_t r = 0; r < pivots.size(); ++r) coords[pivots[r]] = a[r][k];
    return coords;
}

std::optional<IntVector> solve_mod(const IntegerMatrix& a, std::span<const Integer> b,
                                   const Integer& modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be at least 1");
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length does not match row count");
    const std::size_t r = a.rows();
    const std::size_t c = a.cols();
    const Integer& n = modulus;

    const SnfDecomposition snf = smith_normal_form(a);
    const IntVector ub = snf.U * b;

    // Diagonal system s_i y_i = (Ub)_i (mod N).
    IntVector y(c, Integer(0));
    IntVector step(c, Integer(1));  // kernel generator multipliers on the columns of V
    for (std::size_t i = 0; i < r; ++i) {
        const Integer s = i < c ? snf.S(i, i) : Integer(0);
        const Integer g = gcd(s, n);
        if (!mpz_divisible_p(ub[i].get_mpz_t(), g.get_mpz_t())) return std::nullopt;
        if (i >= c) continue;
        const Integer nr = n / g;
        step[i] = nr;
        if (nr == 1) continue;
        Integer inv;
        const Integer sg = floor_mod(s / g, nr);
        mpz_invert(inv.get_mpz_t(), sg.get_mpz_t(), nr.get_mpz_t());
        y[i] = floor_mod((ub[i] / g) * inv, nr);
    }

    IntVector x = snf.V * y;
    for (auto& xi : x) xi = floor_mod(xi, n);

    // Homogeneous solutions plus N Z^c form a full-rank lattice; reduce x greedily
    // against its echelon basis to reach the lexicographic minimum.
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < c; ++i) {
        IntVector g = snf.V.col(i);
        for (auto& e : g) e *= step[i];
        gens.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < c; ++i) {
        IntVector e(c, Integer(0));
        e[i] = n;
        gens.push_back(std::move(e));
    }
    const auto basis = echelon_basis(std::move(gens), c);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const Integer& d = basis[j][j];
        const Integer q = floor_div(x[j], d);
        if (q == 0) continue;
        for (std::size_t k = j; k < c; ++k) x[k] -= q * basis[j][k];
    }
    for (auto& xi : x) xi = floor_mod(xi, n);
    return x;
}

IntegerLattice::IntegerLattice(std::vector<IntVector> basis, std::size_t ambient_dim,
                               std::optional<IntegerMatrix> gram)
    : basis_(std::move(basis)), ambient_dim_(ambient_dim), gram_(std::move(gram)) {
    for (const auto& b : basis_)
        if (b.size() != ambient_dim_) throw std::invalid_argument("basis vector outside the ambient dimension");
    if (rational_rank(basis_) != basis_.size())
        throw std::invalid_argument("lattice basis is not linearly independent");
    if (gram_) {
        const auto& g = *gram_;
        if (g.rows() != basis_.size() || g.cols() != basis_.size())
            throw std::invalid_argument("gram matrix size does not match rank");
        if (!(g == g.transpose())) throw std::invalid_argument("gram matrix is not symmetric");
    }
}

std::optional<Integer> sublattice_index(const IntegerLattice& lattice, const IntegerLattice& sub) {
    if (lattice.ambient_dim() != sub.ambient_dim())
        throw std::invalid_argument("lattices live in different ambient spaces");

    IntegerMatrix change(sub.rank(), lattice.rank());
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        const auto coords = rational_coordinates(lattice.basis(), sub.basis()[i]);
        if (!coords) throw NotSublatticeError("basis vector outside the rational span of the lattice");
        for (std::size_t j = 0; j < lattice.rank(); ++j) {
            const Rational& q = (*coords)[j];
            if (q.get_den() != 1) throw NotSublatticeError("basis vector has non-integral coordinates");
            change(i, j) = q.get_num();
        }
    }
    if (sub.rank() < lattice.rank()) return std::nullopt;

    Integer index = 1;
    for (const auto& d : smith_normal_form(change).diagonal()) index *= d;
    return index;
}

Integer gram_determinant(const IntegerLattice& lattice) {
    if (!lattice.gram()) throw std::invalid_argument("lattice has no gram matrix");
    return determinant(*lattice.gram());
}

}  // namespace ccc
