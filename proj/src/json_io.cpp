#include <qapery/json_io.hpp>

#include <stdexcept>

namespace qapery {

namespace {

Json coeff_strings(const std::vector<Int>& coeffs) {
    Json arr = Json::array();
    for (const Int& c : coeffs) arr.push_back(to_decimal(c));
    return arr;
}

std::vector<Int> coeffs_from(const Json& arr) {
    std::vector<Int> out;
    out.reserve(arr.size());
    for (const auto& c : arr) out.push_back(from_decimal(c.get<std::string>()));
    return out;
}

}   // namespace

Json to_json(const Laurent& f) {
    return Json{{"offset", f.is_zero() ? 0L : f.min_exp()}, {"coeffs", coeff_strings(f.coeffs())}};
}

Laurent laurent_from_json(const Json& j) {
    return Laurent::from_coeffs(j.at("offset").get<long>(), coeffs_from(j.at("coeffs")));
}

Json to_json(const IntPoly& f) { return to_json(f.to_laurent()); }

Json to_json(const IntXPoly& f) { return Json{{"coeffs", coeff_strings(f.coeffs())}}; }

IntXPoly intxpoly_from_json(const Json& j) {
    return IntXPoly::from_coeffs(coeffs_from(j.at("coeffs")));
}

Json to_json(const XPoly& f) {
    Json arr = Json::array();
    for (const Laurent& c : f.coeffs()) arr.push_back(to_json(c));
    return Json{{"coeffs", std::move(arr)}};
}

XPoly xpoly_from_json(const Json& j) {
    std::vector<Laurent> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(laurent_from_json(c));
    return XPoly::from_coeffs(std::move(coeffs));
}

Json to_json(const EtaCoefficients& eta) {
    Json arr = Json::array();
    for (long n = 1; n <= eta.limit; ++n) arr.push_back(to_decimal(eta.at(n)));
    return Json{{"limit", eta.limit}, {"a", std::move(arr)}};
}

namespace {

Json witness_to_json(const Witness& w) {
    return std::visit(
        [](const auto& v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CoeffWitness>) {
                return Json{{"type", "coefficient"},
                            {"x_degree", v.x_degree},
                            {"coefficient", to_decimal(v.coefficient)},
                            {"modulus", to_decimal(v.modulus)}};
            } else if constexpr (std::is_same_v<T, RemainderWitness>) {
                return Json{{"type", "remainder"},
                            {"x_degree", v.x_degree},
                            {"remainder", to_json(v.remainder)}};
            } else if constexpr (std::is_same_v<T, IntMismatchWitness>) {
                return Json{{"type", "mismatch"},
                            {"x_degree", v.x_degree},
                            {"lhs", to_decimal(v.lhs)},
                            {"rhs", to_decimal(v.rhs)}};
            } else if constexpr (std::is_same_v<T, PolyMismatchWitness>) {
                return Json{{"type", "mismatch_poly"},
                            {"x_degree", v.x_degree},
                            {"lhs", to_json(v.lhs)},
                            {"rhs", to_json(v.rhs)}};
            } else {
                static_assert(std::is_same_v<T, QuotientWitness>);
                return Json{{"type", "quotient"}, {"quotient", to_json(v.quotient)}};
            }
        },
        w);
}

}   // namespace

Json report_to_json(const VerificationReport& r, bool include_elapsed, bool include_quotients) {
    const bool failed = r.status == Status::fail || r.status == Status::conjecture_fail;
    if (failed && !r.witness.has_value())
        throw std::logic_error("report_to_json: failing report without witness");
    Json params = Json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    Json j{{"theorem", to_string(r.theorem)},
           {"params", std::move(params)},
           {"status", to_string(r.status)}};
    if (r.witness.has_value()) {
        const bool quotient = std::holds_alternative<QuotientWitness>(*r.witness);
        if (!quotient || include_quotients) j["witness"] = witness_to_json(*r.witness);
    }
    if (include_elapsed) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

}  // namespace qapery
