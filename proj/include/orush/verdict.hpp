#pragma once

// Report types shared by the checkers and the CLI. A "fails" verdict always
// carries a witness that re-verifies under the exact ideal arithmetic;
// "holds-proven" is reserved for terminating decisions (single-input exact
// comparisons and the monomial structure tests), never for sampling.

#include <cstdint>
#include <string>

#include "orush/numeric.hpp"
#include "orush/serial.hpp"

namespace orush {

struct SampleConfig {
    uint64_t seed = 1;
    long samples = 1000;
    long coeff_bound = 20;
    uint32_t degree_bound = 6;
    unsigned long cap_extra = 2;  // dm_exponent cap = deg(g) + cap_extra
    Int budget = Int(1000000);    // factorization budget
};

struct VerdictReport {
    std::string property;
    std::string verdict;  // holds-proven | holds-on-samples | fails | fails-as-expected
    json witness = nullptr;
    uint64_t seed = 0;
    long budget = 0;  // sample budget in effect (1 for single-input decisions)

    bool failed() const { return verdict == "fails"; }

    json to_json() const {
        return json{{"property", property},
                    {"verdict", verdict},
                    {"witness", witness},
                    {"seed", seed},
                    {"budget", budget}};
    }
};

}  // namespace orush
