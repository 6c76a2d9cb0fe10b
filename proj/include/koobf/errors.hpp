#pragma once

#include <stdexcept>
#include <string>

namespace koobf {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// hangul-core
struct NotHangulSyllableError : Error {
    using Error::Error;
};
struct IndexOutOfRangeError : Error {
    using Error::Error;
};

// rule ops: no unit in the input qualifies for the rule. The engine treats
// this as "resample another rule", not as a fatal failure.
struct NoEligibleTargetError : Error {
    using Error::Error;
};
struct EmptyPoolError : Error {
    using Error::Error;
};

// remote transliteration backend
struct BackendUnavailableError : Error {
    using Error::Error;
};
struct MalformedRemoteResponseError : Error {
    using Error::Error;
};

// engine
struct IncompleteError : Error {
    IncompleteError(std::string msg, int applied_count)
        : Error(std::move(msg)), applied(applied_count) {}
    int applied;  // rules committed before the candidate set ran dry
};

// dataset pipeline
struct ParseError : Error {
    ParseError(std::string msg, size_t line_no) : Error(std::move(msg)), line(line_no) {}
    size_t line;
};
struct EmptyCorpusError : Error {
    using Error::Error;
};

// metrics
struct EmptyReferenceError : Error {
    using Error::Error;
};
struct NonInvertibleRuleError : Error {
    using Error::Error;
};

}  // namespace koobf
