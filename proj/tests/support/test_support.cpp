#include "test_support.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace codemark::testing {

TempDir::TempDir() {
  auto pattern = (std::filesystem::temp_directory_path() / "codemark-test-XXXXXX").string();
  if (!mkdtemp(pattern.data())) throw std::runtime_error("mkdtemp failed");
  path_ = pattern;
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
}

const CandidateCodebase& bundled_corpus() {
  static const CandidateCodebase cb = ingest_directory(corpus_dir() / "functions");
  return cb;
}

CodeSnippet snippet(const std::string& id, Language lang, const std::string& text) {
  return CodeSnippet::make(id, lang, text);
}

}  // namespace codemark::testing
