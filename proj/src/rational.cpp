#include "prufer/rational.hpp"

#include <cctype>

namespace prufer {

std::optional<Rat> parse_rat(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    auto parse_int = [](std::string s) -> std::optional<Int> {
        if (s.empty()) return std::nullopt;
        if (s[0] == '+') s.erase(0, 1);
        std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (i == s.size() || s.empty()) return std::nullopt;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        return Int(s);
    };
    if (slash == std::string::npos) {
        auto n = parse_int(text);
        if (!n) return std::nullopt;
        return Rat(*n);
    }
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rat(*n, *d);
}

}  // namespace prufer
