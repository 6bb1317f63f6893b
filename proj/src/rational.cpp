#include "cpt/rational.hpp"

#include <charconv>

namespace cpt {

std::optional<Rational> Rational::parse(std::string_view text) {
    const auto read_ll = [](std::string_view s) -> std::optional<long long> {
        long long value = 0;
        const char* begin = s.data();
        const char* end = begin + s.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end) return std::nullopt;
        return value;
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        const auto num = read_ll(text);
        if (!num) return std::nullopt;
        return Rational(*num);
    }
    const auto num = read_ll(text.substr(0, slash));
    const auto den = read_ll(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
}

} // namespace cpt
