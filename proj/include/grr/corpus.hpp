#pragma once

#include <string>
#include <vector>

namespace grr {

/// The versioned default corpus, identical to corpus/default.txt.
const std::vector<std::string>& default_corpus();

/// Reads a manifest: one group source per line, '#' comments, blank lines
/// ignored. Throws on an unreadable file.
std::vector<std::string> load_corpus(const std::string& path);

}  // namespace grr
