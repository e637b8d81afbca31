#include "pufsim/bitstream.hpp"

#include <fstream>

#include "pufsim/errors.hpp"

namespace pufsim {

std::vector<std::vector<std::uint8_t>> read_bitstream_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");

  std::vector<std::vector<std::uint8_t>> rows;
  std::string line;
  int line_no = 0;
  bool header_done = false;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (header_done) {
        throw ParseError(path, line_no,
                         "comment lines are only permitted before the data");
      }
      continue;
    }
    header_done = true;
    std::vector<std::uint8_t> row;
    row.reserve(line.size());
    for (char c : line) {
      if (c != '0' && c != '1') {
        throw ParseError(path, line_no,
                         std::string("invalid character `") + c + "`");
      }
      row.push_back(c == '1' ? 1 : 0);
    }
    if (width == 0) {
      width = row.size();
    } else if (row.size() != width) {
      throw ParseError(path, line_no, "line length differs from first line");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(path + ": no data lines");
  return rows;
}

void write_bitstream_file(const std::string& path,
                          const std::vector<std::vector<std::uint8_t>>& rows,
                          const std::vector<std::string>& comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot open file for writing");
  for (const std::string& comment : comments) {
    out << "# " << comment << '\n';
  }
  for (const auto& row : rows) {
    std::string line;
    line.reserve(row.size() + 1);
    for (std::uint8_t b : row) line.push_back(b ? '1' : '0');
    line.push_back('\n');
    out << line;
  }
  if (!out) throw ParseError(path + ": write failed");
}

void write_pbm(const std::string& path, const std::vector<std::uint8_t>& bits,
               int width, int height) {
  if (width <= 0 || height <= 0 ||
      bits.size() != static_cast<std::size_t>(width) * height) {
    throw InvalidInput("write_pbm: bit count does not match dimensions");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot open file for writing");
  out << "P1\n" << width << ' ' << height << '\n';
  for (int r = 0; r < height; ++r) {
    std::string line;
    line.reserve(static_cast<std::size_t>(width) * 2);
    for (int c = 0; c < width; ++c) {
      if (c > 0) line.push_back(' ');
      line.push_back(bits[static_cast<std::size_t>(r) * width + c] ? '1' : '0');
    }
    line.push_back('\n');
    out << line;
  }
  if (!out) throw ParseError(path + ": write failed");
}

}  // namespace pufsim
