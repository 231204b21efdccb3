#include "grr/corpus.hpp"

#include <fstream>

#include "grr/types.hpp"

namespace grr {

const std::vector<std::string>& default_corpus() {
  static const std::vector<std::string> corpus = {
      "cyclic:1",      "cyclic:2",      "cyclic:3",      "cyclic:4",
      "cyclic:5",      "cyclic:6",      "cyclic:7",      "cyclic:8",
      "cyclic:9",      "cyclic:10",     "cyclic:11",     "cyclic:12",
      "cyclic:13",     "cyclic:14",     "cyclic:15",     "cyclic:16",
      "dihedral:3",    "dihedral:4",    "dihedral:5",    "dihedral:6",
      "dihedral:7",    "dihedral:8",    "quaternion",    "dicyclic:3",
      "dicyclic:4",    "elem2:1",       "elem2:2",       "elem2:3",
      "elem2:4",       "alt:4",         "sym:3",         "sym:4",
      "product:cyclic:3,cyclic:3",      "product:cyclic:4,cyclic:2",
      "product:cyclic:4,cyclic:4",      "product:cyclic:6,cyclic:2",
      "product:cyclic:8,cyclic:2",      "product:quaternion,elem2:1",
      "product:dihedral:4,cyclic:2",    "product:sym:3,cyclic:2",
  };
  return corpus;
}

std::vector<std::string> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read corpus manifest " + path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    line = line.substr(0, line.find('#'));
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace grr
