#include "rq/report.hpp"

#include "rq/version.hpp"

#include <string>

namespace rq {

nlohmann::json json_integer(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

nlohmann::json json_rational(const Rational& x) { return x.get_str(); }

nlohmann::json report_envelope(std::string_view kind, const nlohmann::json& config) {
  return nlohmann::json{{"schema", kReportSchema},
                        {"version", kVersion},
                        {"kind", std::string(kind)},
                        {"config", config}};
}

}  // namespace rq
