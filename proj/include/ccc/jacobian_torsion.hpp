#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ccc/elliptic_model.hpp"
#include "ccc/isogeny_hom.hpp"
#include "ccc/lattice_core.hpp"

namespace ccc {

// (1/k) (gamma (x) T) modulo H1 (x) H1 (x) H1 = Z^8.
class TorsionTensorClass {
public:
    TorsionTensorClass(Integer k, std::array<Integer, 2> gamma, H2Tensor tensor);

    const Integer& denominator() const { return k_; }
    const std::array<Integer, 2>& gamma() const { return gamma_; }
    const H2Tensor& tensor() const { return tensor_; }

    // Coefficients of gamma (x) T reduced mod k, index 4i + 2j + l for v_i w_j u_l.
    std::array<Integer, 8> normal_form() const;

private:
    Integer k_;
    std::array<Integer, 2> gamma_;
    H2Tensor tensor_;
};

Integer order_of_tensor_class(const TorsionTensorClass& c);

// gamma (x) T flattened in the basis order v_i w_j u_l -> 4i + 2j + l.
std::array<Integer, 8> triple_tensor(const std::array<Integer, 2>& gamma, const H2Tensor& t);

// Decides gamma (x) target = sum_g G_g (x) x_g (mod M) with x_g in (Z/M)^2.
// The solution lists x_{g,0}, x_{g,1} generator by generator and is the
// lexicographically smallest one in [0, M).
std::optional<IntVector> solve_tensor_congruence(const std::array<Integer, 2>& gamma, const H2Tensor& target,
                                                 const std::vector<H2Tensor>& generators, const Integer& modulus);

// The 8 x 2g system matrix and right-hand side behind solve_tensor_congruence.
IntegerMatrix tensor_congruence_matrix(const std::vector<H2Tensor>& generators);

namespace pair {
struct NonIsogenous {};
struct IsogenousNoCM {
    Matrix2 generator;
};
struct IsomorphicNoCM {};
struct IsomorphicCM {
    std::vector<Matrix2> generators;
};
struct IsogenousCM {
    Integer m;
    Integer d;
};
}  // namespace pair

using CurvePairVariant =
    std::variant<pair::NonIsogenous, pair::IsogenousNoCM, pair::IsomorphicNoCM, pair::IsomorphicCM, pair::IsogenousCM>;

class CurvePairSpec {
public:
    // Validates the variant's invariants; throws std::invalid_argument.
    explicit CurvePairSpec(CurvePairVariant v);

    static CurvePairSpec non_isogenous() { return CurvePairSpec(pair::NonIsogenous{}); }
    static CurvePairSpec isogenous_no_cm(const Matrix2& g) { return CurvePairSpec(pair::IsogenousNoCM{g}); }
    static CurvePairSpec isomorphic_no_cm() { return CurvePairSpec(pair::IsomorphicNoCM{}); }
    static CurvePairSpec isomorphic_cm(std::vector<Matrix2> gens) { return CurvePairSpec(pair::IsomorphicCM{std::move(gens)}); }
    static CurvePairSpec isogenous_cm(const Integer& m, const Integer& d) { return CurvePairSpec(pair::IsogenousCM{m, d}); }

    const CurvePairVariant& variant() const { return variant_; }
    // CLI name: non-isogenous, no-cm, isomorphic-no-cm, isomorphic-cm, cm
    std::string_view kind_name() const;
    bool isogenous() const;
    // For the CM family: Z m + Z sqrt(d) and Z + Z sqrt(d) are homothetic iff m = 1.
    bool isomorphic() const;

    // Generators of Hom(E1, E2) as matrices.
    std::vector<Matrix2> hom_generators() const;

private:
    CurvePairVariant variant_;
};

enum class OrderMethod { RationalFiber, GenericFormula, CongruenceSolver };

std::string_view method_name(OrderMethod m);
OrderMethod parse_method(std::string_view name);

struct CertificateEntry {
    Integer divisor;
    Integer modulus;
    bool solvable = false;
    std::optional<IntVector> solution;

    bool operator==(const CertificateEntry& rhs) const = default;
};

struct OrderResult {
    Integer order;
    OrderMethod method = OrderMethod::GenericFormula;
    std::vector<CertificateEntry> certificate;
    std::optional<std::string> note;

    bool operator==(const OrderResult& rhs) const = default;
};

inline constexpr std::string_view kBeyondProvenRange = "model answer, beyond paper's proven range";

// gamma_t: primitive direction of the torsion point.
std::array<Integer, 2> gamma_of(const TorsionPoint& t);

// Smallest N | d(n) with odd(d(n)) | N such that gamma (x) T(id) lies in the
// span of the generator tensors (x) H1 modulo d(n)/N. Every tried divisor is
// recorded in the certificate.
OrderResult solver_order(const std::array<Integer, 2>& gamma, const std::vector<Matrix2>& hom_generators,
                         const Integer& n);

// Closed form for the CM family at n = 4: 1 iff m even and d odd, else 2.
Integer cm_family_closed_form(const Integer& m, const Integer& d);

OrderResult decide_order(const CurvePairSpec& spec, const Integer& n,
                         const std::optional<TorsionPoint>& t = std::nullopt);

}  // namespace ccc
