#include "ccc/report.hpp"

#include <sstream>
#include <stdexcept>

namespace ccc {

Json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer");
}

namespace {

Json matrix_json(const Matrix2& m) {
    return Json::array({integer_json(m.a[0][0]), integer_json(m.a[0][1]), integer_json(m.a[1][0]),
                        integer_json(m.a[1][1])});
}

Matrix2 matrix_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("matrix needs 4 entries");
    Matrix2 m;
    m.a = {{{integer_from_json(j[0]), integer_from_json(j[1])}, {integer_from_json(j[2]), integer_from_json(j[3])}}};
    return m;
}

}  // namespace

Json pair_json(const CurvePairSpec& spec) {
    Json j;
    j["kind"] = std::string(spec.kind_name());
    if (const auto* cm = std::get_if<pair::IsogenousCM>(&spec.variant())) {
        j["m"] = integer_json(cm->m);
        j["d"] = integer_json(cm->d);
        j["isomorphic"] = spec.isomorphic();
    } else if (std::holds_alternative<pair::IsogenousNoCM>(spec.variant()) ||
               std::holds_alternative<pair::IsomorphicCM>(spec.variant())) {
        Json gens = Json::array();
        for (const auto& g : spec.hom_generators()) gens.push_back(matrix_json(g));
        j["generators"] = gens;
    }
    return j;
}

CurvePairSpec pair_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "non-isogenous") return CurvePairSpec::non_isogenous();
    if (kind == "isomorphic-no-cm") return CurvePairSpec::isomorphic_no_cm();
    if (kind == "cm") return CurvePairSpec::isogenous_cm(integer_from_json(j.at("m")), integer_from_json(j.at("d")));
    if (kind != "no-cm" && kind != "isomorphic-cm") throw std::invalid_argument("unknown pair kind: " + kind);
    std::vector<Matrix2> gens;
    for (const auto& g : j.at("generators")) gens.push_back(matrix_from_json(g));
    if (kind == "no-cm") {
        if (gens.size() != 1) throw std::invalid_argument("no-cm pair needs one generator");
        return CurvePairSpec::isogenous_no_cm(gens.front());
    }
    return CurvePairSpec::isomorphic_cm(std::move(gens));
}

Json order_report_json(const CurvePairSpec& spec, const Integer& n, const OrderResult& result,
                       const std::optional<TorsionPoint>& t) {
    Json j;
    j["order"] = integer_json(result.order);
    j["method"] = std::string(method_name(result.method));
    j["n"] = integer_json(n);
    j["d_of_n"] = integer_json(d_of_n(n));
    j["pair"] = pair_json(spec);
    Json cert = Json::array();
    for (const auto& e : result.certificate) {
        Json c;
        c["divisor"] = integer_json(e.divisor);
        c["modulus"] = integer_json(e.modulus);
        c["solvable"] = e.solvable;
        if (e.solution) {
            Json s = Json::array();
            for (const auto& x : *e.solution) s.push_back(integer_json(x));
            c["solution"] = s;
        } else {
            c["solution"] = nullptr;
        }
        cert.push_back(c);
    }
    j["certificate"] = cert;
    if (t) j["t"] = Json::array({t->coords()[0].get_str(), t->coords()[1].get_str()});
    if (result.note) j["note"] = *result.note;
    return j;
}

OrderResult order_result_from_json(const Json& j) {
    OrderResult r;
    r.order = integer_from_json(j.at("order"));
    r.method = parse_method(j.at("method").get<std::string>());
    for (const auto& c : j.at("certificate")) {
        CertificateEntry e;
        e.divisor = integer_from_json(c.at("divisor"));
        e.modulus = integer_from_json(c.at("modulus"));
        e.solvable = c.at("solvable").get<bool>();
        if (!c.at("solution").is_null()) {
            IntVector s;
            for (const auto& x : c.at("solution")) s.push_back(integer_from_json(x));
            e.solution = std::move(s);
        }
        r.certificate.push_back(std::move(e));
    }
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
    return r;
}

std::string order_report_tsv(const CurvePairSpec& spec, const Integer& n, const OrderResult& result) {
    std::ostringstream os;
    os << "pair\tn\td_of_n\torder\tmethod\n";
    os << spec.kind_name() << '\t' << n.get_str() << '\t' << d_of_n(n).get_str() << '\t' << result.order.get_str()
       << '\t' << method_name(result.method) << '\n';
    return os.str();
}

Json sweep_json(const std::string& pair_kind, const std::vector<SweepRow>& rows) {
    Json out;
    out["pair"] = pair_kind;
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json row;
        if (r.m) row["m"] = integer_json(*r.m);
        if (r.d) row["d"] = integer_json(*r.d);
        row["n"] = integer_json(r.n);
        row["order"] = integer_json(r.order);
        row["method"] = std::string(method_name(r.method));
        arr.push_back(row);
    }
    out["rows"] = arr;
    return out;
}

std::string sweep_tsv(const std::vector<SweepRow>& rows) {
    const bool with_cm = !rows.empty() && rows.front().m.has_value();
    std::ostringstream os;
    os << (with_cm ? "m\td\t" : "") << "n\torder\tmethod\n";
    for (const auto& r : rows) {
        if (with_cm) os << r.m->get_str() << '\t' << r.d->get_str() << '\t';
        os << r.n.get_str() << '\t' << r.order.get_str() << '\t' << method_name(r.method) << '\n';
    }
    return os.str();
}

}  // namespace ccc
