#pragma once

#include <string>
#include <vector>

#include "koobf/edits.hpp"
#include "koobf/rng.hpp"

namespace koobf {

// °♡ 《 》 ≥ㅅ≤ ♥ ‥ ∥ 〃 ◉ ; 《 and 》 form a bracket pair.
const std::vector<std::string>& default_symbol_pool();

// Rule 17. Inserts pool symbols at unit boundaries only; bracket symbols go
// around a single word as a balanced pair. Removing every pool symbol from the
// output recovers the input exactly. Insertions <= ceil(tau * unit count).
// Errors: EmptyPoolError, NoEligibleTargetError.
Applied insert_symbols(const std::string& text, double tau, Rng& rng,
                       const std::vector<std::string>& pool = default_symbol_pool());

}  // namespace koobf
