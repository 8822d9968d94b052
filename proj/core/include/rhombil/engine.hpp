#pragma once

#include "rhombil/lattice.hpp"

#include <cstddef>

namespace rhombil {

struct EngineOptions {
    std::size_t state_cap = std::size_t(1) << 24;

    // Default cap, overridden by RHOMBIL_STATE_CAP when set.
    static EngineOptions from_env();
};

enum class SweepAxis { Rows, Columns };

struct CountStats {
    SweepAxis axis = SweepAxis::Rows;
    int width = 0;               // frontier window, in cells
    std::size_t peak_states = 0;
};

// Weighted perfect matchings of the dual graph by a frontier sweep.
// Throws ResourceLimit when the live state count exceeds the cap.
Rational count_tilings(const Region& r, const EngineOptions& opt = EngineOptions::from_env(),
                       CountStats* stats = nullptr);

// Brute force for at most kReferenceCap cells; throws TooLarge beyond.
inline constexpr std::size_t kReferenceCap = 28;
Rational count_tilings_reference(const Region& r);

struct Reduction {
    Region region;
    Rational factor;  // 0 when some cell was left without a partner
};
Reduction reduce_forced(const Region& r);

// u,w share one orientation and v,s the other, in cyclic order on a face.
struct KuoQuad {
    Cell u, v, w, s;
};

enum class KuoTerm { UV, WS, US, VW, UVWS };

// Throws MissingCell or ClassViolation.
Region kuo_corner_delete(const Region& r, const KuoQuad& q, KuoTerm term);
Region delete_pair(const Region& r, Cell a, Cell b);

// Corner quad on the eastern boundary: v is the last down cell of the top
// row, u its western neighbour; w is the last up cell of the bottom row,
// s its western neighbour.
KuoQuad corner_quad(const Region& r);

} // namespace rhombil
