#include "rhombil/region_spec.hpp"

#include "rhombil/errors.hpp"

#include <array>

namespace rhombil {

namespace {
constexpr std::array<std::string_view, 15> kNames = {
    "P", "Pp", "Q", "Qp", "K", "Kp", "H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8", "S"};
}

std::string_view family_name(Family f) { return kNames[static_cast<std::size_t>(f)]; }

std::optional<Family> parse_family(std::string_view name)
{
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name) return static_cast<Family>(i);
    return std::nullopt;
}

bool is_weighted(Family f)
{
    switch (f) {
    case Family::Pp: case Family::Qp: case Family::Kp:
    case Family::H3: case Family::H4: case Family::H5:
    case Family::H6: case Family::H7: case Family::H8:
        return true;
    default:
        return false;
    }
}

int h_index(Family f)
{
    int i = static_cast<int>(f) - static_cast<int>(Family::H1) + 1;
    return (i >= 1 && i <= 8) ? i : 0;
}

Family h_family(int m)
{
    if (m < 1 || m > 8) throw BadParameters("H family index " + std::to_string(m));
    return static_cast<Family>(static_cast<int>(Family::H1) + m - 1);
}

std::string describe(const RegionSpec& s)
{
    auto seq = [&] {
        std::string r;
        for (std::size_t i = 0; i < s.seq.size(); ++i) {
            if (i) r += ",";
            r += std::to_string(s.seq[i]);
        }
        return r;
    };
    std::string out(family_name(s.family));
    switch (s.family) {
    case Family::P: case Family::Pp:
        return out + "(" + std::to_string(s.a) + "," + std::to_string(s.b) + "," + std::to_string(s.c) + ")";
    case Family::Q: case Family::Qp: case Family::K: case Family::Kp:
        return out + "(" + seq() + ")";
    default:
        return out + "(" + std::to_string(s.x) + "," + std::to_string(s.y) + "," + std::to_string(s.z) + ";" + seq() + ")";
    }
}

} // namespace rhombil
