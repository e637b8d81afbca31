#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pufsim {

/// Reads a bitstream file: optional '#' comment lines at the top, then one
/// response per line, characters '0'/'1' only, all lines of equal length.
/// Throws ParseError naming the offending line.
std::vector<std::vector<std::uint8_t>> read_bitstream_file(
    const std::string& path);

/// Writes a bitstream file with the given comment lines ('#' prepended) at
/// the top. Throws ParseError when the file cannot be written.
void write_bitstream_file(const std::string& path,
                          const std::vector<std::vector<std::uint8_t>>& rows,
                          const std::vector<std::string>& comments = {});

/// Plain-text portable bitmap ("P1"), row-major, 1 = black.
void write_pbm(const std::string& path,
               const std::vector<std::uint8_t>& bits, int width, int height);

}  // namespace pufsim
