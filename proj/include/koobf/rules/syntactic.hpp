#pragma once

#include <string>

#include "koobf/edits.hpp"
#include "koobf/rng.hpp"

namespace koobf {

// Rule 15. Inserts spaces between adjacent syllables and/or removes existing
// ones; the syllable sequence with spaces stripped is unchanged. Edit count
// <= ceil(tau * boundary count). Errors: NoEligibleTargetError (< 2 syllables
// or no editable boundary).
Applied perturb_spacing(const std::string& text, double tau, Rng& rng);

// Rule 16. Swaps one adjacent internal syllable pair per selected word of
// >= 3 syllables; the first syllable never moves (오랜만에->오만랜에).
Applied syllable_anagram(const std::string& text, double tau, Rng& rng);

}  // namespace koobf
