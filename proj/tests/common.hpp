#pragma once

#include "thomae/harness.hpp"

namespace testutil {

// One shared context per (genus, seed) for the lifetime of the test binary.
inline const thomae::CurveContext& context(int genus, std::uint64_t seed = 1) {
    static std::map<std::pair<int, std::uint64_t>, thomae::CurveContext> cache;
    auto key = std::make_pair(genus, seed);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, thomae::make_context(thomae::random_curve(genus, seed))).first;
    return it->second;
}

}  // namespace testutil
