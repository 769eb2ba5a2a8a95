#pragma once

#include <cstdint>
#include <vector>

namespace angleset {

struct ArcCover {
    int count = 0;
    std::vector<int> starts;
};

// Minimum number of cyclic arcs of `width` consecutive slots (out of `deg`)
// covering every slot in `slots`, with one optimal placement. Tries each
// selected slot as the first arc start and sweeps greedily; O(|S| * deg).
ArcCover min_arc_cover(int deg, const std::vector<int>& slots, int width);

// Same minimum on a bitmask of slots; deg <= 64.
int min_arc_cover_mask(std::uint64_t mask, int deg, int width);

}  // namespace angleset
