#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace tracecodes {

/// Which defining set the code is evaluated on:
/// L = uQ + (1-u)F*  (index 2 in the unit group) or L' = all units.
enum class Variant { L, Lprime };

enum class RegimeTag { five_weight, two_weight_L, two_weight_Lprime, unsupported };

struct Regime {
  Variant variant = Variant::L;
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  RegimeTag tag = RegimeTag::unsupported;

  bool operator==(const Regime&) const = default;
};

/// five_weight: L with m = 2 mod 4. two_weight_L: L, m odd, p = 3 mod 4.
/// two_weight_Lprime: any L'. Everything else under L is unsupported.
Regime classify_regime(Variant variant, std::uint32_t p, std::uint32_t m);

std::string_view to_string(Variant v);
std::string_view to_string(RegimeTag t);
/// Parses "L" / "Lprime" (also "L'"). Throws InvalidArgument.
Variant parse_variant(std::string_view s);

}  // namespace tracecodes
