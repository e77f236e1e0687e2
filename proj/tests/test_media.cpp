#include "support.hpp"

#include "qbank/error.hpp"
#include "qbank/media.hpp"

#include <doctest.h>

using namespace qbank;

TEST_CASE("base64 known vectors")
{
  auto bytes = [](std::string_view s) { return std::vector<std::uint8_t>(s.begin(), s.end()); };
  CHECK(base64_encode(bytes("")) == "");
  CHECK(base64_encode(bytes("f")) == "Zg==");
  CHECK(base64_encode(bytes("fo")) == "Zm8=");
  CHECK(base64_encode(bytes("foo")) == "Zm9v");
  CHECK(base64_encode(bytes("foobar")) == "Zm9vYmFy");
  CHECK(base64_decode("Zm9vYmE=") == bytes("fooba"));
  CHECK_THROWS_AS(base64_decode("Zm9"), ValidationError);
  CHECK_THROWS_AS(base64_decode("Zm9!"), ValidationError);
}

TEST_CASE("base64 round trip over all byte values")
{
  std::vector<std::uint8_t> all;
  for (int i = 0; i < 256; ++i) {
    all.push_back(static_cast<std::uint8_t>(i));
  }
  for (std::size_t n = 0; n < all.size(); n += 7) {
    std::vector<std::uint8_t> prefix(all.begin(), all.begin() + static_cast<long>(n));
    CHECK(base64_decode(base64_encode(prefix)) == prefix);
  }
}

TEST_CASE("embed_image with a 1x1 PNG")
{
  MediaAsset png{testing::tiny_png(), "image/png", "pixel"};
  const std::string html = embed_image(png);
  CHECK(html.rfind("<img src=\"data:image/png;base64,", 0) == 0);
  CHECK(html.find("alt=\"pixel\"") != std::string::npos);
  auto start = html.find("data:");
  auto uri = html.substr(start, html.find('"', start) - start);
  auto decoded = decode_data_uri(uri);
  CHECK(decoded.media_type == "image/png");
  CHECK(decoded.bytes == testing::tiny_png());
  CHECK(embedded_media_bytes(html) == testing::tiny_png().size());
}

TEST_CASE("media type checks")
{
  MediaAsset video{{1, 2, 3}, "video/mp4", std::nullopt};
  CHECK_THROWS_AS(embed_image(video), ValidationError);
  CHECK(embed_video(video).find("<source src=\"data:video/mp4;base64,AQID\" type=\"video/mp4\">") != std::string::npos);
  MediaAsset empty{{}, "image/png", std::nullopt};
  CHECK_THROWS_AS(embed_image(empty), ValidationError);
  MediaAsset bogus{{1}, "image png", std::nullopt};
  CHECK_THROWS_AS(embed_image(bogus), ValidationError);
}

TEST_CASE("alt text is escaped")
{
  MediaAsset png{testing::tiny_png(), "image/png", "a \"b\" <c>"};
  CHECK(embed_image(png).find("alt=\"a &quot;b&quot; &lt;c&gt;\"") != std::string::npos);
}

TEST_CASE("raw html is inserted verbatim")
{
  CHECK(embed_raw_html("<iframe src=\"x\"></iframe>") == "<iframe src=\"x\"></iframe>");
}
