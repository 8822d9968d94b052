#pragma once

#include "rhombil/combinat.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace rhombil {

enum class Family { P, Pp, Q, Qp, K, Kp, H1, H2, H3, H4, H5, H6, H7, H8, S };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
bool is_weighted(Family f);
int h_index(Family f);  // 1..8 for H families, 0 otherwise
Family h_family(int m);

// P uses a,b,c; Q/K use seq as t; H and S use x,y,z and seq as a.
struct RegionSpec {
    Family family = Family::P;
    int a = 0, b = 0, c = 0;
    int x = 0, y = 0, z = 0;
    HoleSeq seq;

    friend bool operator==(const RegionSpec&, const RegionSpec&) = default;
};

std::string describe(const RegionSpec& spec);  // e.g. "H1(0,1,1;1,1)"

} // namespace rhombil
