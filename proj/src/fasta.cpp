#include "sdmin/fasta.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace sdmin {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw io_error("cannot read " + path);
  return std::move(buf).str();
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

InputData read_input(const std::string& path) {
  std::string content = slurp(path);
  std::size_t first = 0;
  while (first < content.size() && is_space(content[first])) ++first;

  InputData data;
  if (first < content.size() && content[first] == '>') {
    data.fasta = true;
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      if (line[0] == '>') {
        std::string name = line.substr(1);
        std::size_t cut = name.find_first_of(" \t");
        if (cut != std::string::npos) name.resize(cut);
        data.records.push_back(InputRecord{std::move(name), {}});
      } else if (!data.records.empty()) {
        for (char c : line)
          if (!is_space(c)) data.records.back().seq.push_back(c);
      }
    }
    return data;
  }

  while (!content.empty() && is_space(content.back())) content.pop_back();
  data.records.push_back(InputRecord{{}, std::move(content)});
  return data;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::string content = slurp(path);
  std::vector<std::string> lines;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace sdmin
