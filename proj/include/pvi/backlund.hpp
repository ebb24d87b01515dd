#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pvi/pvi_core.hpp"

namespace pvi {

enum class GenTag { s0, s1, s2, s3, s4, pi1, pi2, sigma1, sigma2, sigma3 };

struct Generator {
    GenTag tag;
};

struct Word {
    std::vector<Generator> letters; // empty word is the identity
};

// CLI tokens: s0 s1 s2 s3 s4 pi1 pi2 sig1 sig2 sig3
Generator parse_generator(const std::string& token);
std::string generator_name(Generator g);
Word parse_word(const std::string& tokens);

std::pair<PviParams, PhaseState> apply_generator(Generator g,
                                                 const PviParams& params,
                                                 const PhaseState& s);

// left-to-right composition
std::pair<PviParams, PhaseState> apply_word(const Word& w, const PviParams& params,
                                            const PhaseState& s);

// Integrate a step h from s, transform, and compare with transforming first
// and integrating the image system (with the transformed time step for the
// sigma generators). Returns the mismatch |dy| + |dz|.
double pushforward_check(Generator g, const PviParams& params, const PhaseState& s,
                         cplx h);

} // namespace pvi
