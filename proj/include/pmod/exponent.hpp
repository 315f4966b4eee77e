#pragma once

#include <string>
#include <string_view>

namespace pmod {

/// The energy exponent p, an extended real in [1, inf].
///
/// Infinity is a distinct state rather than a large double so that the
/// closed-form p = inf path can never be reached by accident.
class Exponent {
public:
  constexpr Exponent(double p) noexcept : value_(p), infinite_(false) {}

  static constexpr Exponent infinity() noexcept { return Exponent(Tag{}); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }

  /// Finite value; +inf for the infinite exponent.
  double value() const noexcept;

  /// Throws ParameterError unless p >= 1 (or p is infinite).
  void validate() const;

  /// "inf" or the shortest round-tripping decimal.
  std::string to_string() const;

  /// Accepts "inf", "infinity" or a decimal number.
  static Exponent parse(std::string_view text);

  friend constexpr bool operator==(Exponent a, Exponent b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

private:
  struct Tag {};
  constexpr explicit Exponent(Tag) noexcept : value_(0.0), infinite_(true) {}

  double value_;
  bool infinite_;
};

} // namespace pmod
