#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace qbank {

// Writes through a temporary file in the destination directory and renames
// it into place, so readers see either the old file or the complete new
// one. Throws IoError naming `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view data);

std::string read_file(const std::filesystem::path& path);

// Copies `path` to "<path>.<YYYYmmddTHHMMSS>.bak" (with a numeric suffix
// if that exists) and returns the backup path.
std::filesystem::path backup_file(const std::filesystem::path& path);

} // namespace qbank
