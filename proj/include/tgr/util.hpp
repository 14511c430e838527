#pragma once

#include <cassert>
#include <cstdint>
#include <limits>

namespace tgr {

/// Sentinel for "no bound" / "unreachable" / "+infinity" in integer fields.
/// Never serialized: absence of an entry is the on-disk representation.
inline constexpr int kInf = std::numeric_limits<int>::max();

/// Mathematical modulus: result in [0, m) for any sign of a.
inline int floor_mod(int a, int m) {
    assert(m > 0);
    int r = a % m;
    return r < 0 ? r + m : r;
}

/// Residue gap from t to the next time ≡ target (mod m); 0 when already there.
/// This is the waiting time before an edge labeled `target` departs at or
/// after absolute time t.
inline int mod_gap(int t, int target, int m) {
    assert(m > 0);
    return floor_mod(target - t, m);
}

} // namespace tgr
