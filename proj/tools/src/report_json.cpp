#include "hookid_cli/report_json.hpp"

#include <stdexcept>

namespace hookid {

nlohmann::json to_termlist(const Polynomial& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [exponents, coefficient] : p.terms()) {
        nlohmann::json e = nlohmann::json::array();
        for (auto power : exponents) {
            e.push_back(power);
        }
        out.push_back(nlohmann::json::array({std::move(e), to_fraction_string(coefficient)}));
    }
    return out;
}

Polynomial from_termlist(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("term list must be an array");
    }
    Polynomial out;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_array() || term[0].size() != kVarCount ||
            !term[1].is_string()) {
            throw std::invalid_argument("malformed term: " + term.dump());
        }
        Exponents e{};
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (!term[0][i].is_number_unsigned()) {
                throw std::invalid_argument("exponents must be non-negative integers");
            }
            e[i] = term[0][i].get<std::uint16_t>();
        }
        out += Polynomial::monomial(e, parse_rational(term[1].get<std::string>()));
    }
    return out;
}

void to_json(nlohmann::json& j, const IdentityReport& r) {
    j = nlohmann::json{{"identity", r.identity}, {"degree", r.degree}, {"verified", r.verified}};
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"degree", r.first_mismatch->degree},
                               {"lhs", to_termlist(r.first_mismatch->lhs)},
                               {"rhs", to_termlist(r.first_mismatch->rhs)}};
    } else {
        j["first_mismatch"] = nullptr;
    }
}

void from_json(const nlohmann::json& j, IdentityReport& r) {
    r.identity = j.at("identity").get<std::string>();
    r.degree = j.at("degree").get<int>();
    r.verified = j.at("verified").get<bool>();
    const auto& m = j.at("first_mismatch");
    if (m.is_null()) {
        r.first_mismatch.reset();
    } else {
        r.first_mismatch = Mismatch{m.at("degree").get<int>(), from_termlist(m.at("lhs")), from_termlist(m.at("rhs"))};
    }
}

}  // namespace hookid
