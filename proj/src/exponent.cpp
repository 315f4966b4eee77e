#include "pmod/exponent.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "pmod/errors.hpp"

namespace pmod {

double Exponent::value() const noexcept {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

void Exponent::validate() const {
  if (infinite_) return;
  if (!(value_ >= 1.0) || !std::isfinite(value_)) {
    throw ParameterError("exponent p must satisfy p >= 1 or p = inf, got " + to_string());
  }
}

std::string Exponent::to_string() const {
  if (infinite_) return "inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value_);
  return std::string(buf, end);
}

Exponent Exponent::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf" || text == "INF") {
    return Exponent::infinity();
  }
  double p = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(p)) {
    throw ParameterError("cannot parse exponent '" + std::string(text) + "'");
  }
  Exponent result(p);
  result.validate();
  return result;
}

} // namespace pmod
