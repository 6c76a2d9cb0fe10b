#pragma once

#include <string>

#include "koobf/dicts.hpp"
#include "koobf/edits.hpp"
#include "koobf/rng.hpp"

namespace koobf {

enum class JamoSlot { Initial, Medial, Final };
enum class LiaisonDirection { Forward, Reverse, Both };

// Rules 1-3. Replaces the chosen slot of ceil(tau * eligible) syllables with a
// dictionary target; every modified syllable differs in exactly that slot.
// Errors: NoEligibleTargetError.
Applied replace_jamo(const std::string& text, JamoSlot slot, double tau, Rng& rng,
                     const PhonDict& dict = default_phon_dict());

// Rules 5-7. Initial: onset-ㅇ syllables take the previous coda forward
// (안에->안네) or an injected ㅎ. Medial: vowel gains a glide (수->슈).
// Final: empty coda copies the next onset (호스트->홋스트).
Applied insert_jamo(const std::string& text, JamoSlot slot, double tau, Rng& rng,
                    const PhonDict& dict = default_phon_dict());

// Rule 8. Forward moves a coda onto a following ㅇ onset (들어봐->드러봐);
// reverse pulls the next onset back into an empty coda (바보->밥오).
Applied liaison(const std::string& text, LiaisonDirection direction, double tau, Rng& rng);

// Rule 4. Pronunciation respelling over whole phonological phrases using the
// bundled rule table (liaison chains, tensification after obstruent codas and
// across a space after ㄹ, nasal assimilation). tau selects phrases.
Applied resyllabify(const std::string& text, double tau, Rng& rng);

}  // namespace koobf
