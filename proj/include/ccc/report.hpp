#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccc/jacobian_torsion.hpp"

namespace ccc {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json pair_json(const CurvePairSpec& spec);
CurvePairSpec pair_from_json(const Json& j);

// {"order", "method", "n", "d_of_n", "pair", "certificate", ["t"], ["note"]}
Json order_report_json(const CurvePairSpec& spec, const Integer& n, const OrderResult& result,
                       const std::optional<TorsionPoint>& t = std::nullopt);
OrderResult order_result_from_json(const Json& j);

std::string order_report_tsv(const CurvePairSpec& spec, const Integer& n, const OrderResult& result);

struct SweepRow {
    std::optional<Integer> m;
    std::optional<Integer> d;
    Integer n;
    Integer order;
    OrderMethod method;
};

Json sweep_json(const std::string& pair_kind, const std::vector<SweepRow>& rows);
std::string sweep_tsv(const std::vector<SweepRow>& rows);

}  // namespace ccc
