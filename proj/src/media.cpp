#include "qbank/media.hpp"

#include "qbank/error.hpp"
#include "qbank/file_io.hpp"
#include "qbank/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace qbank {

namespace {

constexpr std::string_view kAlphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

constexpr std::array<int, 256> make_decode_table()
{
  std::array<int, 256> table{};
  for (auto& v : table) {
    v = -1;
  }
  for (std::size_t i = 0; i < kAlphabet.size(); ++i) {
    table[static_cast<unsigned char>(kAlphabet[i])] = static_cast<int>(i);
  }
  return table;
}

constexpr auto kDecode = make_decode_table();

bool is_restricted_name(std::string_view s)
{
  if (s.empty() || s.size() > 127 || !std::isalnum(static_cast<unsigned char>(s.front()))) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || std::string_view("!#$&-^_.+").find(c) != std::string_view::npos;
  });
}

std::string lowercase(std::string_view s)
{
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

void check_asset(const MediaAsset& asset, std::string_view family)
{
  if (asset.bytes.empty()) {
    throw ValidationError("media asset is empty");
  }
  std::size_t slash = asset.media_type.find('/');
  if (slash == std::string::npos || !is_restricted_name(std::string_view(asset.media_type).substr(0, slash))
      || !is_restricted_name(std::string_view(asset.media_type).substr(slash + 1))) {
    throw ValidationError("\"" + asset.media_type + "\" is not a valid media type");
  }
  if (lowercase(asset.media_type.substr(0, slash)) != family) {
    throw ValidationError("expected an " + std::string(family) + "/* media type, got \"" + asset.media_type + "\"");
  }
}

bool is_base64_char(char c)
{
  return kDecode[static_cast<unsigned char>(c)] >= 0 || c == '=';
}

} // namespace

MediaAsset MediaAsset::from_file(const std::filesystem::path& path, std::string media_type,
                                 std::optional<std::string> alt_text)
{
  std::string data = read_file(path);
  return MediaAsset{std::vector<std::uint8_t>(data.begin(), data.end()), std::move(media_type), std::move(alt_text)};
}

std::string base64_encode(const std::vector<std::uint8_t>& bytes)
{
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 2 < bytes.size(); i += 3) {
    std::uint32_t n = (bytes[i] << 16) | (bytes[i + 1] << 8) | bytes[i + 2];
    out += kAlphabet[(n >> 18) & 63];
    out += kAlphabet[(n >> 12) & 63];
    out += kAlphabet[(n >> 6) & 63];
    out += kAlphabet[n & 63];
  }
  if (std::size_t rest = bytes.size() - i; rest > 0) {
    std::uint32_t n = bytes[i] << 16;
    if (rest == 2) {
      n |= bytes[i + 1] << 8;
    }
    out += kAlphabet[(n >> 18) & 63];
    out += kAlphabet[(n >> 12) & 63];
    out += rest == 2 ? kAlphabet[(n >> 6) & 63] : '=';
    out += '=';
  }
  return out;
}

std::vector<std::uint8_t> base64_decode(std::string_view text)
{
  if (text.size() % 4 != 0) {
    throw ValidationError("base64 length is not a multiple of 4");
  }
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 4 * 3);
  for (std::size_t i = 0; i < text.size(); i += 4) {
    bool last = i + 4 == text.size();
    int pad = 0;
    std::uint32_t n = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      char c = text[i + j];
      int v = kDecode[static_cast<unsigned char>(c)];
      if (c == '=' && last && j >= 2) {
        ++pad;
        v = 0;
      } else if (v < 0 || pad > 0) {
        throw ValidationError("invalid base64 data");
      }
      n = (n << 6) | static_cast<std::uint32_t>(v);
    }
    out.push_back(static_cast<std::uint8_t>(n >> 16));
    if (pad < 2) {
      out.push_back(static_cast<std::uint8_t>(n >> 8));
    }
    if (pad < 1) {
      out.push_back(static_cast<std::uint8_t>(n));
    }
  }
  return out;
}

std::string data_uri(const MediaAsset& asset)
{
  return "data:" + asset.media_type + ";base64," + base64_encode(asset.bytes);
}

DecodedDataUri decode_data_uri(std::string_view uri)
{
  constexpr std::string_view scheme = "data:";
  constexpr std::string_view marker = ";base64,";
  if (uri.substr(0, scheme.size()) != scheme) {
    throw ValidationError("not a data URI");
  }
  std::size_t at = uri.find(marker);
  if (at == std::string_view::npos) {
    throw ValidationError("only base64 data URIs are supported");
  }
  return DecodedDataUri{std::string(uri.substr(scheme.size(), at - scheme.size())),
                        base64_decode(uri.substr(at + marker.size()))};
}

std::string embed_image(const MediaAsset& asset)
{
  check_asset(asset, "image");
  return "<img src=\"" + data_uri(asset) + "\" alt=\"" + html_escape(asset.alt_text.value_or("")) + "\">";
}

std::string embed_video(const MediaAsset& asset)
{
  check_asset(asset, "video");
  std::string out = "<video controls";
  if (asset.alt_text) {
    out += " title=\"" + html_escape(*asset.alt_text) + "\"";
  }
  out += "><source src=\"" + data_uri(asset) + "\" type=\"" + html_escape(asset.media_type) + "\"></video>";
  return out;
}

std::uint64_t embedded_media_bytes(std::string_view html)
{
  constexpr std::string_view marker = ";base64,";
  std::uint64_t total = 0;
  for (std::size_t pos = html.find("data:"); pos != std::string_view::npos; pos = html.find("data:", pos + 1)) {
    std::size_t at = html.find(marker, pos);
    if (at == std::string_view::npos) {
      break;
    }
    // The media type between "data:" and ";base64," never holds quotes or spaces.
    std::string_view type = html.substr(pos + 5, at - pos - 5);
    if (type.find_first_of("\"' <>") != std::string_view::npos) {
      continue;
    }
    std::size_t start = at + marker.size();
    std::size_t end = start;
    while (end < html.size() && is_base64_char(html[end])) {
      ++end;
    }
    std::size_t length = end - start;
    std::size_t pad = 0;
    for (std::size_t i = end; i > start && pad < 2 && html[i - 1] == '='; --i) {
      ++pad;
    }
    total += length / 4 * 3 - (length % 4 == 0 ? pad : 0);
    pos = end > 0 ? end - 1 : end;
  }
  return total;
}

} // namespace qbank
