#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "saa/presentation.hpp"

namespace saa {

/// Malformed presentation text. line() is 1-based; 0 means "whole file".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads the line-based format:
///
///   saa-presentation v1
///   n <n>
///   p <prime>
///   kind <general|nilpotent>
///   triple <b> <b> <b> <value>     (b = x<i> | y<i>, value in [1, p))
///
/// '#' comment lines and blank lines are skipped anywhere. With kind
/// nilpotent every triple must have nilpotent shape.
Presentation parse_presentation(std::string_view text);

/// Canonical text: the canonical presentation, kind nilpotent whenever the
/// shape allows it, one triple per line.
std::string emit_presentation(const Presentation& p);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace saa
