#ifndef CGFLZ_RATIONAL_HPP
#define CGFLZ_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cgflz {

/// Exact positive rational, used so that tilt parameters like "1/2" or "0.25"
/// survive serialization round trips without floating-point drift.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;

    bool operator==(const Rational&) const = default;
};

/// Accepts "p/q", integer, or decimal literals ("1/2", "2", "0.25").
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals, e.g. "0.25,0.5,1,2,4".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace cgflz

#endif
