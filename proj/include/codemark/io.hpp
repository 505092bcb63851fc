#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace codemark {

std::string read_file(const std::filesystem::path& path);

/// Writes through a sibling temp file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// ISO-8601 UTC timestamp. Honors SOURCE_DATE_EPOCH when set.
std::string utc_timestamp();

}  // namespace codemark
