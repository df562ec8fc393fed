#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hyp {

// Every metric quantity is an integer number of 1/8 edge units.
inline constexpr std::int32_t kUnitsPerEdge = 8;

struct EighthLength {
  std::int32_t units = 0;

  constexpr EighthLength() = default;
  constexpr explicit EighthLength(std::int32_t u) : units(u) {}

  static constexpr EighthLength edges(std::int32_t e) { return EighthLength{e * kUnitsPerEdge}; }
  static constexpr EighthLength quarters(std::int32_t q) { return EighthLength{q * 2}; }

  constexpr bool on_quarter_grid() const { return units % 2 == 0; }
  constexpr std::int32_t in_quarters() const { return units / 2; }

  constexpr EighthLength operator+(EighthLength o) const { return EighthLength{units + o.units}; }
  constexpr EighthLength operator-(EighthLength o) const { return EighthLength{units - o.units}; }
  constexpr EighthLength& operator+=(EighthLength o) {
    units += o.units;
    return *this;
  }
  constexpr auto operator<=>(const EighthLength&) const = default;
};

/// Reduced "p/q" form of num/den, or "p" when the denominator cancels.
inline std::string rational_string(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational_string: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

inline std::string to_string(EighthLength l) { return rational_string(l.units, kUnitsPerEdge); }

/// Quarter-valued quantities (bounds, hyperbolicity constants) as "p/q".
inline std::string quarter_string(std::int64_t quarters) { return rational_string(quarters, 4); }

inline std::ostream& operator<<(std::ostream& os, EighthLength l) { return os << to_string(l); }

}  // namespace hyp
