#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sdmin {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputRecord {
  std::string name;
  std::string seq;
};

struct InputData {
  bool fasta = false;
  std::vector<InputRecord> records;
};

// Reads `path` as FASTA when its first non-whitespace character is '>'
// (headers start records, sequence lines are concatenated with whitespace
// stripped); otherwise the whole file is one unnamed sequence with trailing
// whitespace stripped.  Throws io_error when the file cannot be read.
InputData read_input(const std::string& path);

// One string per non-empty line, used by the trie subcommand.
std::vector<std::string> read_lines(const std::string& path);

}  // namespace sdmin
