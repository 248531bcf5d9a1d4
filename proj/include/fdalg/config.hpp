#pragma once

#include <cstdlib>
#include <string>

namespace fdalg {

/// Candidates examined by each deterministic search before giving up.
inline constexpr std::size_t kDefaultSearchBudget = 4000;

/// kDefaultSearchBudget, or FDALG_SEARCH_BUDGET when set to a positive integer.
inline std::size_t search_budget() {
    if (const char* env = std::getenv("FDALG_SEARCH_BUDGET")) {
        try {
            long long v = std::stoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (...) {
        }
    }
    return kDefaultSearchBudget;
}

}  // namespace fdalg
