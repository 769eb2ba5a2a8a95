#include "angleset/arcs.hpp"

#include <algorithm>
#include <bit>

#include "angleset/errors.hpp"

namespace angleset {

ArcCover min_arc_cover(int deg, const std::vector<int>& slots, int width) {
    std::vector<int> s(slots);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int x : s)
        if (x < 0 || x >= deg) throw MalformedInput("slot outside the rotation");
    ArcCover best;
    if (s.empty()) return best;
    width = std::min(width, deg);
    if (width <= 0) throw MalformedInput("arc width must be positive");
    best.count = static_cast<int>(s.size()) + 1;
    const int k = static_cast<int>(s.size());
    for (int first = 0; first < k; ++first) {
        std::vector<int> starts;
        int i = 0;
        while (i < k) {
            int start = s[(first + i) % k];
            starts.push_back(start);
            int reach = (start - s[first] + deg) % deg + width;  // exclusive, in offsets from s[first]
            while (i < k && (s[(first + i) % k] - s[first] + deg) % deg < reach) ++i;
        }
        if (static_cast<int>(starts.size()) < best.count) {
            best.count = static_cast<int>(starts.size());
            best.starts = std::move(starts);
        }
    }
    return best;
}

int min_arc_cover_mask(std::uint64_t mask, int deg, int width) {
    if (mask == 0) return 0;
    if (width >= deg) return 1;
    const std::uint64_t full = deg == 64 ? ~0ULL : ((1ULL << deg) - 1);
    auto rotr = [&](std::uint64_t x, int r) -> std::uint64_t {
        if (r == 0) return x;
        return ((x >> r) | (x << (deg - r))) & full;
    };
    const std::uint64_t arc = (1ULL << width) - 1;
    int best = 65;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
        int first = std::countr_zero(rest);
        std::uint64_t m = rotr(mask, first);
        int count = 0;
        while (m) {
            int p = std::countr_zero(m);
            m &= ~(arc << p);
            if (++count >= best) break;
        }
        best = std::min(best, count);
    }
    return best;
}

}  // namespace angleset
