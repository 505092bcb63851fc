#pragma once

#include <filesystem>
#include <string>

#include "codemark/corpus.hpp"

namespace codemark::testing {

inline std::filesystem::path corpus_dir() { return CODEMARK_CORPUS_DIR; }

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void write_text(const std::filesystem::path& path, const std::string& text);

/// The bundled fixtures, one codebase for all languages.
const CandidateCodebase& bundled_corpus();

CodeSnippet snippet(const std::string& id, Language lang, const std::string& text);

}  // namespace codemark::testing
