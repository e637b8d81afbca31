#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <string>

#include "pufsim/bitstream.hpp"
#include "pufsim/errors.hpp"

using namespace pufsim;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("pufsim_bitstream_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
};

void write_raw(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace

TEST_CASE("bitstream files round-trip") {
  TempDir dir;
  const std::vector<std::vector<std::uint8_t>> rows = {
      {1, 0, 1, 1}, {0, 0, 0, 1}, {1, 1, 1, 1}};
  const std::string path = dir.file("roundtrip.bits");
  write_bitstream_file(path, rows, {"three rows"});
  CHECK(read_bitstream_file(path) == rows);
}

TEST_CASE("bitstream reader accepts top comments only") {
  TempDir dir;
  const std::string ok = dir.file("ok.bits");
  write_raw(ok, "# one\n# two\n0101\n1010\n");
  CHECK(read_bitstream_file(ok).size() == 2);

  const std::string late = dir.file("late.bits");
  write_raw(late, "0101\n# too late\n1010\n");
  try {
    read_bitstream_file(late);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("bitstream reader names the offending line") {
  TempDir dir;
  const std::string bad_char = dir.file("badchar.bits");
  write_raw(bad_char, "0101\n01x1\n");
  try {
    read_bitstream_file(bad_char);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("badchar.bits:2") != std::string::npos);
  }

  const std::string ragged = dir.file("ragged.bits");
  write_raw(ragged, "0101\n010\n");
  try {
    read_bitstream_file(ragged);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("bitstream reader rejects empty inputs and missing files") {
  TempDir dir;
  const std::string empty = dir.file("empty.bits");
  write_raw(empty, "# nothing else\n");
  CHECK_THROWS_AS(read_bitstream_file(empty), ParseError);
  CHECK_THROWS_AS(read_bitstream_file(dir.file("missing.bits")), ParseError);
}

TEST_CASE("pbm writer emits the plain-text header and digits") {
  TempDir dir;
  std::vector<std::uint8_t> bits(16, 0);
  bits[0] = 1;
  bits[15] = 1;
  const std::string path = dir.file("img.pbm");
  write_pbm(path, bits, 4, 4);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "P1");
  std::getline(in, line);
  CHECK(line == "4 4");
  std::getline(in, line);
  CHECK(line == "1 0 0 0");
  CHECK_THROWS_AS(write_pbm(dir.file("bad.pbm"), bits, 5, 4), InvalidInput);
}
