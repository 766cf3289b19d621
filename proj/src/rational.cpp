#include "hiergame/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace hiergame {

std::string to_string(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto valid = [](const std::string& part, bool allow_sign) {
        if (part.empty()) {
            return false;
        }
        std::size_t start = (allow_sign && part[0] == '-') ? 1 : 0;
        if (start == part.size()) {
            return false;
        }
        return std::all_of(part.begin() + static_cast<std::ptrdiff_t>(start), part.end(),
                           [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num, true) || !valid(den, false) || Integer(den) == 0) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
    Rational r{Integer(num), Integer(den)};
    r.canonicalize();
    return r;
}

std::vector<std::string> to_strings(const std::vector<Rational>& values)
{
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) {
        out.push_back(to_string(v));
    }
    return out;
}

}  // namespace hiergame
