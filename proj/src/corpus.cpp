#include "uir/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "uir/error.hpp"

namespace uir {

namespace fs = std::filesystem;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string raw = buf.str();
  std::string out;
  out.reserve(raw.size());
  for (char c : raw)
    if (c != '\r') out.push_back(c);
  return out;
}

namespace {

Corpus load_from_directory(const fs::path& dir, text::Mode mode) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  Corpus corpus;
  for (const auto& f : files)
    corpus.push_back(text::Document::analyze(f.filename().string(),
                                             read_text_file(f.string()),
                                             mode));
  return corpus;
}

Corpus load_from_doclist(const fs::path& list, text::Mode mode) {
  std::istringstream in(read_text_file(list.string()));
  fs::path base = list.parent_path();
  Corpus corpus;
  std::string name;
  while (in >> name) {
    fs::path entry = base / name;
    corpus.push_back(text::Document::analyze(
        entry.filename().string(), read_text_file(entry.string()), mode));
  }
  return corpus;
}

}  // namespace

Corpus load_corpus(const std::string& path, text::Mode mode) {
  fs::path p(path);
  if (fs::is_directory(p)) return load_from_directory(p, mode);
  if (fs::is_regular_file(p)) return load_from_doclist(p, mode);
  throw Error("cannot open corpus path (not a directory or doc-list file): " +
              path);
}

}  // namespace uir
