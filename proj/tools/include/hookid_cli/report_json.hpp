#pragma once

#include <json.hpp>

#include "hookid/identities.hpp"

namespace hookid {

/// [[ez, ey, es, eb], "p/q"] pairs in ascending exponent order.
[[nodiscard]] nlohmann::json to_termlist(const Polynomial& p);
/// Throws std::invalid_argument on a malformed term list.
[[nodiscard]] Polynomial from_termlist(const nlohmann::json& j);

void to_json(nlohmann::json& j, const IdentityReport& r);
void from_json(const nlohmann::json& j, IdentityReport& r);

}  // namespace hookid
