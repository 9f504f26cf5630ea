#pragma once

#include <stdexcept>

namespace lrstab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : Error { using Error::Error; };
struct EmptyTextError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct InvalidRangeError : Error { using Error::Error; };
struct InvalidIntervalError : Error { using Error::Error; };
struct TextTooLargeError : Error { using Error::Error; };
struct CorruptIndexError : Error { using Error::Error; };

}  // namespace lrstab
