#pragma once

#include <optional>
#include <string>

#include "lacunary/dense_poly.hpp"
#include "lacunary/sparse_poly.hpp"

namespace lacunary {

enum class GapMode { standard, paranoid };

struct GapConfig {
  GapMode mode = GapMode::standard;
  /// Multiplies the height quotient before the final ceiling.
  std::optional<Rational> custom_scale;
};

/// Gap threshold: a nonnegative integer, or +infinity in paranoid mode.
class GapThreshold {
 public:
  static GapThreshold infinite() { return GapThreshold(); }
  static GapThreshold finite(Integer v) { return GapThreshold(std::move(v)); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws InputError when infinite.
  const Integer& value() const;
  /// gap > threshold
  bool exceeded_by(const Integer& gap) const { return value_ && gap > *value_; }

  std::string to_string() const { return value_ ? value_->get_str() : "inf"; }

  friend bool operator==(const GapThreshold&, const GapThreshold&) = default;

 private:
  GapThreshold() = default;
  explicit GapThreshold(Integer v) : value_(std::move(v)) {}

  std::optional<Integer> value_;
};

/// Lower bound on the absolute logarithmic height of any algebraic number of
/// degree <= d that is neither zero nor a root of unity:
///   ln 2 for d = 1, 2 / (d (ln 3d)^3) for d >= 2 (Dobrowolski-Voutier).
/// The returned rational is the 128-bit value rounded toward zero.
Rational height_lower_bound(unsigned d);

/// ceil((ln ||f||_1 + (d+1) ln 2) / h_min(d)) + d, evaluated with rounding
/// that can only enlarge the result; +infinity in paranoid mode.
GapThreshold gamma(const Integer& norm1, unsigned d, const GapConfig& cfg);
GapThreshold gamma(const SparsePoly& f, unsigned d, const GapConfig& cfg);

}  // namespace lacunary
