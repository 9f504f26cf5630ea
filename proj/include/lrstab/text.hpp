#pragma once

#include <iosfwd>
#include <string>

#include "lrstab/types.hpp"

namespace lrstab {

enum class TextFormat { plain, fasta };

/*
 * Immutable input text over raw bytes, n >= 1, positions 1-based.
 * No sentinel character is appended; the lcp array's zero sentinels
 * take that role downstream.
 */
class Text {
public:
    explicit Text(std::string bytes, std::string source_name = "");

    Pos n() const { return static_cast<Pos>(bytes_.size()); }
    char at(Pos i) const { return bytes_[static_cast<std::size_t>(i - 1)]; }

    // Characters at positions i..j; rejects i > j and out-of-range bounds.
    std::string substring(Pos i, Pos j) const;

    const std::string& bytes() const { return bytes_; }
    const std::string& source_name() const { return source_name_; }

private:
    std::string bytes_;
    std::string source_name_;
};

// Plain format keeps every byte except a single trailing newline.
// FASTA concatenates the sequence lines of all records, drops headers,
// and strips whitespace; sequence characters are taken verbatim.
Text load_text(std::istream& in, TextFormat format, const std::string& source_name);
Text load_text(const std::string& path, TextFormat format = TextFormat::plain);

TextFormat parse_text_format(const std::string& name);

}  // namespace lrstab
