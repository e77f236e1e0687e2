#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qbank {

// Bytes produced elsewhere (a plotting script, a renderer) and their IANA
// media type.
struct MediaAsset
{
  std::vector<std::uint8_t> bytes;
  std::string media_type;
  std::optional<std::string> alt_text;

  static MediaAsset from_file(const std::filesystem::path& path, std::string media_type,
                              std::optional<std::string> alt_text = std::nullopt);
};

std::string base64_encode(const std::vector<std::uint8_t>& bytes);

// Throws ValidationError on characters outside the base64 alphabet or bad
// padding.
std::vector<std::uint8_t> base64_decode(std::string_view text);

// "data:<type>;base64,<payload>"
std::string data_uri(const MediaAsset& asset);

struct DecodedDataUri
{
  std::string media_type;
  std::vector<std::uint8_t> bytes;
};

DecodedDataUri decode_data_uri(std::string_view uri);

// <img src="data:image/...;base64,..." alt="...">
std::string embed_image(const MediaAsset& asset);

// <video controls><source src="data:video/...;base64,..." type="..."></video>
std::string embed_video(const MediaAsset& asset);

// Prebuilt HTML (interactive viewers and the like) is trusted and returned
// as is.
inline std::string embed_raw_html(std::string_view fragment) { return std::string(fragment); }

// Sum of decoded payload sizes of every base64 data URI found in `html`.
std::uint64_t embedded_media_bytes(std::string_view html);

} // namespace qbank
