#include "ffgrid/caps.hpp"

#include "ffgrid/error.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

namespace ffgrid {

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view text)
{
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("bad value for cap '" + std::string(key) + "': '" + std::string(text) + "'", 0);
    return value;
}

} // namespace

Caps parse_caps(std::string_view spec, Caps base)
{
    Caps caps = base;
    while (!spec.empty()) {
        auto comma = spec.find(',');
        auto item = spec.substr(0, comma);
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        if (item.empty())
            continue;
        auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("cap entry '" + std::string(item) + "' is not key=value", 0);
        auto key = item.substr(0, eq);
        auto val = item.substr(eq + 1);
        if (key == "max_vertices") caps.max_vertices = parse_number<int>(key, val);
        else if (key == "independence") caps.independence = parse_number<int>(key, val);
        else if (key == "chromatic") caps.chromatic = parse_number<int>(key, val);
        else if (key == "grundy_exhaustive") caps.grundy_exhaustive = parse_number<int>(key, val);
        else if (key == "grundy") caps.grundy = parse_number<int>(key, val);
        else if (key == "enumeration") caps.enumeration = parse_number<int>(key, val);
        else if (key == "hitting_family") caps.hitting_family = parse_number<std::size_t>(key, val);
        else if (key == "minimum_gds") caps.minimum_gds = parse_number<int>(key, val);
        else if (key == "latin_side") caps.latin_side = parse_number<int>(key, val);
        else if (key == "dk_level") caps.dk_level = parse_number<int>(key, val);
        else if (key == "corollary") caps.corollary = parse_number<int>(key, val);
        else
            throw ParseError("unknown cap '" + std::string(key) + "'", 0);
    }
    return caps;
}

Caps caps_from_environment(Caps base)
{
    if (const char* env = std::getenv("FFGRID_CAP_OVERRIDE"))
        return parse_caps(env, base);
    return base;
}

std::string format_caps(const Caps& caps)
{
    std::ostringstream out;
    out << "max_vertices=" << caps.max_vertices
        << ",independence=" << caps.independence
        << ",chromatic=" << caps.chromatic
        << ",grundy_exhaustive=" << caps.grundy_exhaustive
        << ",grundy=" << caps.grundy
        << ",enumeration=" << caps.enumeration
        << ",hitting_family=" << caps.hitting_family
        << ",minimum_gds=" << caps.minimum_gds
        << ",latin_side=" << caps.latin_side
        << ",dk_level=" << caps.dk_level
        << ",corollary=" << caps.corollary;
    return out.str();
}

} // namespace ffgrid
