#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pmod/exponent.hpp"

namespace pmod {

/// A real value per edge (rho). No sign restriction.
class EdgeDensity {
public:
  EdgeDensity() = default;
  /// Throws InputError on non-finite entries.
  explicit EdgeDensity(std::vector<double> values);

  static EdgeDensity constant(std::size_t edge_count, double value);
  static EdgeDensity zero(std::size_t edge_count) { return constant(edge_count, 0.0); }

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t e) const { return values_[e]; }
  std::span<const double> values() const noexcept { return values_; }

  EdgeDensity scaled(double factor) const;

  friend bool operator==(const EdgeDensity&, const EdgeDensity&) = default;

private:
  std::vector<double> values_;
};

/// p-energy: sum sigma(e)|rho(e)|^p, or max |rho(e)| for p = inf.
/// Throws ParameterError for p < 1 and InputError on a size mismatch.
double energy(const EdgeDensity& rho, Exponent p, std::span<const double> sigma);

/// Unweighted p-norm, (sum |x(e)|^p)^(1/p); max |x(e)| for p = inf.
double p_norm_distance(const EdgeDensity& a, const EdgeDensity& b, Exponent p);

enum class Admissibility {
  NotAdmissible, ///< rho-length of the family below 1
  RelaxedOnly,   ///< in A' but some entry negative
  Admissible,    ///< in A but some entry above 1
  Restricted,    ///< in A*: 0 <= rho <= 1
};

/// Classifies rho given the family rho-length; every comparison uses tol.
Admissibility admissibility_class(const EdgeDensity& rho, double family_rho_length,
                                  double tol);

const char* to_string(Admissibility a) noexcept;

} // namespace pmod
