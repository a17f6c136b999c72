#include "jsonspace/render.hpp"

#include <cmath>
#include <cstdlib>

namespace jsonspace {

double truncate2(double value) {
  double scaled = value * 100.0;
  // Nudge values sitting a hair under an integer (representation error of
  // a decimal like 29.17) over the edge before truncating.
  scaled += scaled >= 0 ? 1e-7 : -1e-7;
  return std::trunc(scaled) / 100.0;
}

std::string fixed(double value, int decimals) {
  double scale = 1.0;
  for (int i = 0; i < decimals; ++i) scale *= 10.0;
  double scaled = value * scale;
  // Pull decimal halves stored fractionally low (0.15 * 10 is a shade
  // under 1.5) back onto the half so they round away from zero.
  scaled += std::copysign(std::abs(scaled) * 1e-13, scaled);
  long long units = std::llround(scaled);
  unsigned long long magnitude =
      units < 0 ? static_cast<unsigned long long>(-(units + 1)) + 1
                : static_cast<unsigned long long>(units);
  unsigned long long divisor = 1;
  for (int i = 0; i < decimals; ++i) divisor *= 10;
  std::string out = units < 0 ? "-" : "";
  out += std::to_string(magnitude / divisor);
  if (decimals > 0) {
    std::string frac = std::to_string(magnitude % divisor);
    out += '.';
    out.append(static_cast<std::size_t>(decimals) - frac.size(), '0');
    out += frac;
  }
  return out;
}

std::string fixed1(double value) { return fixed(value, 1); }

std::string fixed2_truncated(double value) {
  return fixed(truncate2(value), 2);
}

std::string ratio_text(std::uint64_t numerator, std::uint64_t denominator) {
  std::uint64_t tenths = numerator * 10 / denominator;
  std::string out = std::to_string(tenths / 10);
  if (tenths % 10 != 0) {
    out += '.';
    out += static_cast<char>('0' + tenths % 10);
  }
  out += 'x';
  return out;
}

}  // namespace jsonspace
