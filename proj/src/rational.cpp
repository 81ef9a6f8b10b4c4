#include "cgflz/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace cgflz {
namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    return v;
}

Rational reduce(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    return Rational{num, den};
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        return reduce(parse_int(trim(s.substr(0, slash))),
                      parse_int(trim(s.substr(slash + 1))));
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto frac = s.substr(dot + 1);
        if (frac.empty() || frac.size() > 18)
            throw std::invalid_argument("bad decimal '" + std::string(s) + "'");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        auto whole_sv = s.substr(0, dot);
        bool negative = !whole_sv.empty() && whole_sv.front() == '-';
        std::int64_t whole = whole_sv.empty() || whole_sv == "-" ? 0 : parse_int(whole_sv);
        std::int64_t num = parse_int(frac);
        std::int64_t combined = whole * den + (negative ? -num : num);
        return reduce(combined, den);
    }
    return Rational{parse_int(s), 1};
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = comma == std::string_view::npos ? text.substr(start)
                                                     : text.substr(start, comma - start);
        if (!trim(piece).empty()) out.push_back(parse_rational(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty rational list");
    return out;
}

}  // namespace cgflz
