#include "lrstab/text.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "lrstab/errors.hpp"

namespace lrstab {

Text::Text(std::string bytes, std::string source_name)
    : bytes_(std::move(bytes)), source_name_(std::move(source_name)) {
    if (bytes_.empty()) {
        throw EmptyTextError("empty text" +
                             (source_name_.empty() ? std::string() : " from " + source_name_));
    }
    if (bytes_.size() > static_cast<std::size_t>(std::numeric_limits<Pos>::max()) - 2) {
        throw TextTooLargeError("text exceeds the supported 32-bit position range");
    }
}

std::string Text::substring(Pos i, Pos j) const {
    if (i < 1 || j > n() || i > j) {
        throw InvalidRangeError("invalid substring range [" + std::to_string(i) + ".." +
                                std::to_string(j) + "] for text of length " + std::to_string(n()));
    }
    return bytes_.substr(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - i + 1));
}

namespace {

std::string read_stream(std::istream& in, const std::string& source_name) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed to read " + source_name);
    }
    return std::move(buffer).str();
}

std::string parse_plain(std::string raw) {
    if (!raw.empty() && raw.back() == '\n') {
        raw.pop_back();
    }
    return raw;
}

std::string parse_fasta(const std::string& raw, const std::string& source_name) {
    std::string sequence;
    sequence.reserve(raw.size());
    bool saw_header = false;
    std::size_t pos = 0;
    while (pos < raw.size()) {
        std::size_t eol = raw.find('\n', pos);
        if (eol == std::string::npos) eol = raw.size();
        std::size_t begin = pos;
        pos = eol + 1;

        // skip leading whitespace of the line
        while (begin < eol && std::isspace(static_cast<unsigned char>(raw[begin]))) ++begin;
        if (begin == eol) continue;  // blank line

        if (raw[begin] == '>') {
            saw_header = true;
            continue;
        }
        if (!saw_header) {
            throw FormatError("malformed FASTA (sequence data before any '>' header) in " +
                              source_name);
        }
        for (std::size_t k = begin; k < eol; ++k) {
            const char c = raw[k];
            if (!std::isspace(static_cast<unsigned char>(c))) sequence.push_back(c);
        }
    }
    if (!saw_header) {
        throw FormatError("malformed FASTA (no '>' header) in " + source_name);
    }
    return sequence;
}

}  // namespace

Text load_text(std::istream& in, TextFormat format, const std::string& source_name) {
    std::string raw = read_stream(in, source_name);
    std::string bytes =
        format == TextFormat::plain ? parse_plain(std::move(raw)) : parse_fasta(raw, source_name);
    return Text(std::move(bytes), source_name);
}

Text load_text(const std::string& path, TextFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    return load_text(in, format, path);
}

TextFormat parse_text_format(const std::string& name) {
    if (name == "plain") return TextFormat::plain;
    if (name == "fasta") return TextFormat::fasta;
    throw FormatError("unknown text format '" + name + "' (expected plain or fasta)");
}

}  // namespace lrstab
