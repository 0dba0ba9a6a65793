#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace testing {

inline std::vector<std::uint64_t> trial_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(n);
    }
    return out;
}

inline int naive_mobius(std::uint64_t n) {
    int mu = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        n /= d;
        if (n % d == 0) return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

inline nlohmann::json frozen_constants() {
    std::ifstream in(PRIMELAB_FIXTURE_DIR "/frozen_constants.json");
    return nlohmann::json::parse(in);
}

}  // namespace testing
