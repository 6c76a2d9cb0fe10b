#pragma once

#include <string>
#include <vector>

namespace koobf {

// One textual change made by a rule application. `offset` is a byte offset
// into the application's *output* string; replacing output[offset, |after|)
// with `before` (right to left) restores the input exactly.
struct Edit {
    size_t offset = 0;
    std::string before;
    std::string after;

    bool operator==(const Edit&) const = default;
};

struct Applied {
    std::string text;
    std::vector<Edit> edits;
};

}  // namespace koobf
