#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace g3af {

/// The two worlds of the G3 frame, ordered t < s; t is the actual world.
enum class World : std::uint8_t { t = 0, s = 1 };

inline constexpr std::array<World, 2> kWorlds{World::t, World::s};

/// Truth profile of a formula over (t, s). The profile (true, false) violates
/// persistence and has no enumerator.
enum class ThreeVal : std::uint8_t {
    FF = 0,  ///< false at t and s
    FT = 1,  ///< false at t, true at s
    TT = 2,  ///< true at t and s
};

inline constexpr std::array<ThreeVal, 3> kThreeVals{ThreeVal::FF, ThreeVal::FT, ThreeVal::TT};

constexpr bool holds_at(ThreeVal v, World w) noexcept {
    return w == World::t ? v == ThreeVal::TT : v != ThreeVal::FF;
}

/// Builds a profile from per-world truth. Returns false in `ok` for (true, false).
constexpr ThreeVal from_worlds(bool at_t, bool at_s, bool* ok = nullptr) noexcept {
    if (ok != nullptr) *ok = !(at_t && !at_s);
    if (at_t) return ThreeVal::TT;
    return at_s ? ThreeVal::FT : ThreeVal::FF;
}

/// "(f,f)", "(f,t)" or "(t,t)".
constexpr std::string_view profile(ThreeVal v) noexcept {
    switch (v) {
        case ThreeVal::FF: return "(f,f)";
        case ThreeVal::FT: return "(f,t)";
        case ThreeVal::TT: return "(t,t)";
    }
    return "?";
}

}  // namespace g3af
