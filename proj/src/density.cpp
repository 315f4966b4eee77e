#include "pmod/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pmod/errors.hpp"
#include "pmod/kernels.hpp"

namespace pmod {

EdgeDensity::EdgeDensity(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) throw InputError("edge density entries must be finite");
  }
}

EdgeDensity EdgeDensity::constant(std::size_t edge_count, double value) {
  return EdgeDensity(std::vector<double>(edge_count, value));
}

EdgeDensity EdgeDensity::scaled(double factor) const {
  std::vector<double> out(values_);
  for (double& v : out) v *= factor;
  return EdgeDensity(std::move(out));
}

double energy(const EdgeDensity& rho, Exponent p, std::span<const double> sigma) {
  p.validate();
  if (p.is_infinite()) return kernels::max_abs(rho.values());
  if (sigma.size() != rho.size()) {
    throw InputError("density has " + std::to_string(rho.size()) + " entries, expected " +
                     std::to_string(sigma.size()));
  }
  const double q = p.value();
  if (q == 1.0) return kernels::weighted_abs_sum(sigma, rho.values());
  if (q == 2.0) return kernels::weighted_sq_sum(sigma, rho.values());
  double total = 0.0;
  for (std::size_t e = 0; e < sigma.size(); ++e) {
    total += sigma[e] * std::pow(std::abs(rho[e]), q);
  }
  return total;
}

double p_norm_distance(const EdgeDensity& a, const EdgeDensity& b, Exponent p) {
  p.validate();
  if (a.size() != b.size()) throw InputError("densities differ in size");
  double acc = 0.0;
  for (std::size_t e = 0; e < a.size(); ++e) {
    const double d = std::abs(a[e] - b[e]);
    acc = p.is_infinite() ? std::max(acc, d) : acc + std::pow(d, p.value());
  }
  return p.is_infinite() ? acc : std::pow(acc, 1.0 / p.value());
}

Admissibility admissibility_class(const EdgeDensity& rho, double family_rho_length,
                                  double tol) {
  if (family_rho_length < 1.0 - tol) return Admissibility::NotAdmissible;
  const auto v = rho.values();
  if (std::any_of(v.begin(), v.end(), [tol](double x) { return x < -tol; })) {
    return Admissibility::RelaxedOnly;
  }
  if (std::any_of(v.begin(), v.end(), [tol](double x) { return x > 1.0 + tol; })) {
    return Admissibility::Admissible;
  }
  return Admissibility::Restricted;
}

const char* to_string(Admissibility a) noexcept {
  switch (a) {
  case Admissibility::NotAdmissible: return "not-admissible";
  case Admissibility::RelaxedOnly: return "relaxed-only";
  case Admissibility::Admissible: return "admissible";
  case Admissibility::Restricted: return "restricted";
  }
  return "?";
}

} // namespace pmod
