#include <doctest.h>

#include "ccc/report.hpp"
#include "support.hpp"

using namespace ccc;

namespace {

std::vector<CurvePairSpec> sample_specs() {
    std::vector<CurvePairSpec> specs{CurvePairSpec::non_isogenous(), CurvePairSpec::isomorphic_no_cm(),
                                     CurvePairSpec::isomorphic_cm({Matrix2::identity(), Matrix2::of(0, 1, -1, 0)}),
                                     CurvePairSpec::isogenous_no_cm(Matrix2::of(2, 1, -1, 1))};
    for (long m = 1; m <= 4; ++m)
        for (long d = -3; d <= -1; ++d) specs.push_back(CurvePairSpec::isogenous_cm(m, d));
    return specs;
}

}  // namespace

TEST_CASE("order reports round-trip through JSON") {
    for (const auto& spec : sample_specs())
        for (long n = 1; n <= 24; ++n) {
            const OrderResult r = decide_order(spec, n);
            const Json j = order_report_json(spec, n, r);
            const Json reparsed = Json::parse(j.dump());
            CHECK(order_result_from_json(reparsed) == r);
            const CurvePairSpec back = pair_from_json(reparsed.at("pair"));
            CHECK(back.kind_name() == spec.kind_name());
            CHECK(back.hom_generators() == spec.hom_generators());
            CHECK(reparsed.at("n") == n);
            CHECK(reparsed.at("d_of_n") == integer_json(d_of_n(n)));
        }
}

TEST_CASE("report schema") {
    const auto spec = CurvePairSpec::isogenous_cm(2, -1);
    const Json j = order_report_json(spec, 4, decide_order(spec, 4));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"order", "method", "n", "d_of_n", "pair", "certificate"});
    CHECK(j.at("certificate").at(0).at("solution") == Json::array({1, 0, 0, 1}));
    CHECK(j.at("pair").at("isomorphic") == false);

    const Json noted = order_report_json(spec, 8, decide_order(spec, 8), TorsionPoint::canonical(8));
    CHECK(noted.at("note") == std::string(kBeyondProvenRange));
    CHECK(noted.at("t") == Json::array({"1/8", "0"}));
}

TEST_CASE("reports are deterministic") {
    for (const auto& spec : sample_specs()) {
        const auto a = order_report_json(spec, 12, decide_order(spec, 12)).dump(2);
        const auto b = order_report_json(spec, 12, decide_order(spec, 12)).dump(2);
        CHECK(a == b);
        CHECK(order_report_tsv(spec, 12, decide_order(spec, 12)) == order_report_tsv(spec, 12, decide_order(spec, 12)));
    }
}

TEST_CASE("big integers survive JSON") {
    const Integer big("123456789012345678901234567890");
    CHECK(integer_from_json(integer_json(big)) == big);
    CHECK(integer_from_json(integer_json(-7)) == -7);
    CHECK_THROWS_AS(integer_from_json(Json(1.5)), std::invalid_argument);
    CHECK_THROWS_AS(pair_from_json(Json{{"kind", "other"}}), std::invalid_argument);
}

TEST_CASE("sweep tables") {
    std::vector<SweepRow> rows;
    for (long n = 3; n <= 8; ++n) {
        const auto r = decide_order(CurvePairSpec::non_isogenous(), n);
        rows.push_back({std::nullopt, std::nullopt, n, r.order, r.method});
    }
    CHECK(sweep_tsv(rows) ==
          "n\torder\tmethod\n3\t3\tgeneric-formula\n4\t2\tgeneric-formula\n5\t5\tgeneric-formula\n"
          "6\t3\tgeneric-formula\n7\t7\tgeneric-formula\n8\t4\tgeneric-formula\n");
    const Json j = sweep_json("non-isogenous", rows);
    CHECK(j.at("rows").size() == 6);
    CHECK_FALSE(j.at("rows").at(0).contains("m"));
}
