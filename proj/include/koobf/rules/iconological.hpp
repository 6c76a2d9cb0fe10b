#pragma once

#include <string>

#include "koobf/dicts.hpp"
#include "koobf/edits.hpp"
#include "koobf/rng.hpp"

namespace koobf {

enum class LookalikeLevel { Character, Subsyllabic };
enum class LookalikeScript { Hangeul, Cross };

// Rules 9-10. Character level swaps whole syllables for visually similar
// glyphs (귀엽다->커엽다, 쭈꾸미->卒꾸미); subsyllabic renders each jamo as a
// lookalike symbol (참->え占 style). Script selects the target map.
Applied lookalike(const std::string& text, LookalikeLevel level, LookalikeScript script,
                  double tau, Rng& rng, const GlyphDict& dict = default_glyph_dict());

// Engine binding for rule 10: per selected unit, a character-level cross-script
// entry when one exists, otherwise the subsyllabic rendering.
Applied cross_script(const std::string& text, double tau, Rng& rng,
                     const GlyphDict& dict = default_glyph_dict());

enum class RotationAngle { Quarter, Half, Any };

// Rule 11. Lookup-table rotation: 180° reverses a mapped span of >= 2
// syllables (눈물->룸곡), 90° maps units in place (비버->뜨또).
Applied rotate(const std::string& text, RotationAngle angle, double tau, Rng& rng,
               const GlyphDict& dict = default_glyph_dict());

}  // namespace koobf
