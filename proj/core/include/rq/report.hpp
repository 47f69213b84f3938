#pragma once

#include "rq/series.hpp"

#include <nlohmann/json.hpp>

#include <string_view>

namespace rq {

inline constexpr const char* kReportSchema = "rq-report/1";

// JSON number when the value fits in 64 bits, decimal string otherwise.
nlohmann::json json_integer(const Integer& x);
// "p/q" or "n".
nlohmann::json json_rational(const Rational& x);

// {schema, version, kind, config}; callers add the payload fields.
nlohmann::json report_envelope(std::string_view kind, const nlohmann::json& config);

}  // namespace rq
