#include "ccc/jacobian_torsion.hpp"

#include <stdexcept>

namespace ccc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

TorsionTensorClass::TorsionTensorClass(Integer k, std::array<Integer, 2> gamma, H2Tensor tensor)
    : k_(std::move(k)), gamma_(std::move(gamma)), tensor_(std::move(tensor)) {
    if (k_ < 1) throw std::invalid_argument("torsion tensor denominator must be positive");
}

std::array<Integer, 8> triple_tensor(const std::array<Integer, 2>& gamma, const H2Tensor& t) {
    std::array<Integer, 8> out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t l = 0; l < 2; ++l) out[4 * i + 2 * j + l] = gamma[i] * t.coeff[j][l];
    return out;
}

std::array<Integer, 8> TorsionTensorClass::normal_form() const {
    auto coeffs = triple_tensor(gamma_, tensor_);
    for (auto& c : coeffs) c = floor_mod(c, k_);
    return coeffs;
}

Integer order_of_tensor_class(const TorsionTensorClass& c) {
    const Integer divisibility = content(c.gamma()) * tensor_content(c.tensor());
    return c.denominator() / gcd(c.denominator(), divisibility);
}

IntegerMatrix tensor_congruence_matrix(const std::vector<H2Tensor>& generators) {
    // Row 4i + 2j + l (v_i w_j u_l); column 2g + c is x_{g,c}: G_g[i][j] on u_c.
    IntegerMatrix a(8, 2 * generators.size());
    for (std::size_t g = 0; g < generators.size(); ++g)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t l = 0; l < 2; ++l) a(4 * i + 2 * j + l, 2 * g + l) = generators[g].coeff[i][j];
    return a;
}

std::optional<IntVector> solve_tensor_congruence(const std::array<Integer, 2>& gamma, const H2Tensor& target,
                                                 const std::vector<H2Tensor>& generators, const Integer& modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be at least 1");
    const auto rhs = triple_tensor(gamma, target);
    return solve_mod(tensor_congruence_matrix(generators), rhs, modulus);
}

CurvePairSpec::CurvePairSpec(CurvePairVariant v) : variant_(std::move(v)) {
    std::visit(overloaded{
                   [](const pair::NonIsogenous&) {},
                   [](const pair::IsomorphicNoCM&) {},
                   [](const pair::IsogenousNoCM& p) {
                       if (p.generator.det() == 0)
                           throw std::invalid_argument("isogeny generator must have nonzero determinant");
                   },
                   [](const pair::IsomorphicCM& p) {
                       if (p.generators.size() != 2)
                           throw std::invalid_argument("a CM endomorphism ring needs exactly two generators");
                       std::vector<IntVector> flat;
                       for (const auto& g : p.generators)
                           flat.push_back({g.a[0][0], g.a[0][1], g.a[1][0], g.a[1][1]});
                       if (rational_rank(flat) != 2)
                           throw std::invalid_argument("CM generators must be linearly independent");
                   },
                   [](const pair::IsogenousCM& p) {
                       if (p.m < 1 || p.d > -1) throw std::invalid_argument("CM family requires m >= 1 and d <= -1");
                   },
               },
               variant_);
}

std::string_view CurvePairSpec::kind_name() const {
    return std::visit(overloaded{
                          [](const pair::NonIsogenous&) -> std::string_view { return "non-isogenous"; },
                          [](const pair::IsogenousNoCM&) -> std::string_view { return "no-cm"; },
                          [](const pair::IsomorphicNoCM&) -> std::string_view { return "isomorphic-no-cm"; },
                          [](const pair::IsomorphicCM&) -> std::string_view { return "isomorphic-cm"; },
                          [](const pair::IsogenousCM&) -> std::string_view { return "cm"; },
                      },
                      variant_);
}

bool CurvePairSpec::isogenous() const { return !std::holds_alternative<pair::NonIsogenous>(variant_); }

bool CurvePairSpec::isomorphic() const {
    if (std::holds_alternative<pair::IsomorphicNoCM>(variant_) || std::holds_alternative<pair::IsomorphicCM>(variant_))
        return true;
    if (const auto* cm = std::get_if<pair::IsogenousCM>(&variant_)) return cm->m == 1;
    return false;
}

std::vector<Matrix2> CurvePairSpec::hom_generators() const {
    return std::visit(overloaded{
                          [](const pair::NonIsogenous&) { return std::vector<Matrix2>{}; },
                          [](const pair::IsogenousNoCM& p) { return std::vector<Matrix2>{p.generator}; },
                          [](const pair::IsomorphicNoCM&) { return std::vector<Matrix2>{Matrix2::identity()}; },
                          [](const pair::IsomorphicCM& p) { return p.generators; },
                          [](const pair::IsogenousCM& p) {
                              std::vector<Matrix2> out;
                              for (const auto& g : cm_hom_generators(p.m, p.d).generators) out.push_back(g.matrix);
                              return out;
                          },
                      },
                      variant_);
}

std::string_view method_name(OrderMethod m) {
    switch (m) {
        case OrderMethod::RationalFiber: return "rational-fiber";
        case OrderMethod::GenericFormula: return "generic-formula";
        case OrderMethod::CongruenceSolver: return "congruence-solver";
    }
    return "";
}

OrderMethod parse_method(std::string_view name) {
    if (name == "rational-fiber") return OrderMethod::RationalFiber;
    if (name == "generic-formula") return OrderMethod::GenericFormula;
    if (name == "congruence-solver") return OrderMethod::CongruenceSolver;
    throw std::invalid_argument("unknown order method: " + std::string(name));
}

std::array<Integer, 2> gamma_of(const TorsionPoint& t) { return t.primitive_direction(); }

OrderResult solver_order(const std::array<Integer, 2>& gamma, const std::vector<Matrix2>& hom_generators,
                         const Integer& n) {
    const Integer dn = d_of_n(n);
    const Integer odd = odd_part(dn);
    std::vector<H2Tensor> tensors;
    for (const auto& g : hom_generators) tensors.push_back(kunneth_tensor(g));
    const H2Tensor id_tensor = kunneth_tensor(Matrix2::identity());

    OrderResult result{dn, OrderMethod::CongruenceSolver, {}, std::nullopt};
    // Candidates N = odd * 2^j, ascending; N = d(n) always succeeds (modulus 1).
    for (Integer divisor = odd; divisor <= dn; divisor *= 2) {
        if (!mpz_divisible_p(dn.get_mpz_t(), divisor.get_mpz_t())) break;
        const Integer modulus = dn / divisor;
        auto solution = solve_tensor_congruence(gamma, id_tensor, tensors, modulus);
        const bool solvable = solution.has_value();
        result.certificate.push_back({divisor, modulus, solvable, std::move(solution)});
        if (solvable) {
            result.order = divisor;
            break;
        }
    }
    return result;
}

Integer cm_family_closed_form(const Integer& m, const Integer& d) {
    if (m < 1 || d > -1) throw std::invalid_argument("CM family requires m >= 1 and d <= -1");
    const bool m_even = mpz_even_p(m.get_mpz_t()) != 0;
    const bool d_odd = mpz_odd_p(d.get_mpz_t()) != 0;
    return m_even && d_odd ? Integer(1) : Integer(2);
}

OrderResult decide_order(const CurvePairSpec& spec, const Integer& n, const std::optional<TorsionPoint>& t) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const TorsionPoint point = t ? *t : TorsionPoint::canonical(n);
    if (point.order() != n) throw std::invalid_argument("torsion point does not have order n");

    if (n <= 2) return {Integer(1), OrderMethod::RationalFiber, {}, std::nullopt};

    const Integer dn = d_of_n(n);
    const bool four_divides = mpz_divisible_ui_p(n.get_mpz_t(), 4) != 0;
    if (!spec.isogenous() || !four_divides) return {dn, OrderMethod::GenericFormula, {}, std::nullopt};

    const auto* cm = std::get_if<pair::IsogenousCM>(&spec.variant());
    if (cm == nullptr || spec.isomorphic()) return {Integer(n / 2), OrderMethod::GenericFormula, {}, std::nullopt};

    OrderResult r = solver_order(gamma_of(point), spec.hom_generators(), n);
    if (mpz_divisible_ui_p(n.get_mpz_t(), 8)) r.note = std::string(kBeyondProvenRange);
    return r;
}

}  // namespace ccc
