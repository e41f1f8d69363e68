#ifndef UIR_CORPUS_HPP
#define UIR_CORPUS_HPP

#include <string>
#include <vector>

#include "uir/text.hpp"

namespace uir {

using Corpus = std::vector<text::Document>;

/// Reads a whole file; throws Error naming the file when unreadable.
/// CRLF line endings are normalized to LF.
std::string read_text_file(const std::string& path);

/// Loads a corpus from either a directory of plain-text files (document
/// id = file name, lexicographic order) or a doc-list file holding
/// whitespace-separated file names resolved relative to the list's
/// directory (doc-list order).
Corpus load_corpus(const std::string& path, text::Mode mode);

}  // namespace uir

#endif  // UIR_CORPUS_HPP
