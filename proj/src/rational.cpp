#include "hahn/rational.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cctype>

namespace hahn {

std::optional<Rat> parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) -> std::optional<Int> {
        if (s.empty()) return std::nullopt;
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') i = 1;
        if (i == s.size()) return std::nullopt;
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j]))) return std::nullopt;
        return Int(std::string(s));
    };

    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(text);
        if (!n) return std::nullopt;
        return Rat(*n);
    }
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return make_rational(*num, *den);
}

std::vector<Rat> normalize_to_integers(const std::vector<Rat>& v) {
    Int lcm_den = 1;
    for (const auto& x : v)
        lcm_den = boost::multiprecision::lcm(lcm_den, Int(denominator(x)));

    std::vector<Int> scaled;
    scaled.reserve(v.size());
    Int g = 0;
    for (const auto& x : v) {
        Int n = Int(numerator(x)) * (lcm_den / Int(denominator(x)));
        g = boost::multiprecision::gcd(g, n);
        scaled.push_back(std::move(n));
    }
    if (g == 0) return v; // zero vector

    int lead_sign = 0;
    for (const auto& n : scaled) {
        if (n != 0) {
            lead_sign = n > 0 ? 1 : -1;
            break;
        }
    }
    if (lead_sign < 0) g = -g;

    std::vector<Rat> out;
    out.reserve(v.size());
    for (const auto& n : scaled) out.emplace_back(n / g);
    return out;
}

} // namespace hahn
