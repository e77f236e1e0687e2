#include "support.hpp"

#include "qbank/error.hpp"
#include "qbank/media.hpp"
#include "qbank/moodle_xml.hpp"

#include <doctest.h>

using namespace qbank;

namespace {

std::string roundtrip(const std::string& xml)
{
  return serialize_bank(parse_bank(xml, [](const Warning&) {}));
}

} // namespace

TEST_CASE("CDATA escaping splits the terminator")
{
  CHECK(escape_for_cdata("x]]>y") == "<![CDATA[x]]]]><![CDATA[>y]]>");
  CHECK(escape_for_cdata("plain") == "<![CDATA[plain]]>");
}

TEST_CASE("stem containing a CDATA terminator survives a round trip")
{
  auto bank = testing::quiet_bank(1);
  bank.add_short_answer("", "x]]>y", std::string("a"));
  auto parsed = parse_bank(serialize_bank(bank));
  CHECK(parsed.questions()[0].stem == "x]]>y");
}

TEST_CASE("LaTeX passes through untouched")
{
  auto bank = testing::quiet_bank(1);
  const std::string stem = R"(Select the derivative of \(\sin(2x)\) and $$\int_0^1 x\,dx$$)";
  bank.add_multiple_choice("", stem, std::vector<std::string>{R"(\(2\cos(2x)\))", "b"});
  const std::string xml = serialize_bank(bank);
  CHECK(xml.find(stem) != std::string::npos);
  CHECK(parse_bank(xml).questions()[0].stem == stem);
}

TEST_CASE("serialized structure")
{
  auto bank = testing::quiet_bank(1);
  bank.set_category("Calculus/Derivatives");
  bank.add_multiple_choice("Q & A", "Pick", std::vector<std::string>{"a", "b", "c", "d"});
  bank.add_numerical("", "N", std::vector<double>{3, -5});
  const std::string xml = serialize_bank(bank);
  CHECK(xml.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<quiz>\n", 0) == 0);
  CHECK(xml.find("<question type=\"category\">") != std::string::npos);
  CHECK(xml.find("<text>$course$/top/Calculus/Derivatives</text>") != std::string::npos);
  CHECK(xml.find("<text>Q &amp; A</text>") != std::string::npos);
  CHECK(xml.find("<question type=\"multichoice\">") != std::string::npos);
  CHECK(xml.find("<single>true</single>") != std::string::npos);
  CHECK(xml.find("<answer fraction=\"-33.33333\" format=\"html\">") != std::string::npos);
  CHECK(xml.find("<question type=\"numerical\">") != std::string::npos);
  CHECK(xml.find("<text>-5</text>") != std::string::npos);
  CHECK(xml.find("<tolerance>0.01</tolerance>") != std::string::npos);
}

TEST_CASE("unsupported question types are skipped with a warning")
{
  const std::string xml = R"(<?xml version="1.0" encoding="UTF-8"?>
<quiz>
  <question type="essay">
    <name><text>E</text></name>
    <questiontext format="html"><text>Discuss.</text></questiontext>
  </question>
  <question type="shortanswer">
    <name><text>S</text></name>
    <questiontext format="html"><text><![CDATA[Capital?]]></text></questiontext>
    <answer fraction="100"><text>Paris</text></answer>
  </question>
</quiz>
)";
  testing::WarningLog log;
  auto bank = parse_bank(xml, log.sink());
  CHECK(bank.size() == 1);
  CHECK(log.messages.size() == 1);
  CHECK(bank.questions()[0].name == "S");
}

TEST_CASE("malformed input raises ParseError with a position")
{
  auto bank = testing::quiet_bank(1);
  bank.add_short_answer("", "Q", std::string("a"));
  std::string xml = serialize_bank(bank);
  xml.resize(xml.size() / 2);
  CHECK_THROWS_AS(parse_bank(xml), ParseError);
  try {
    parse_bank("<quiz>\n<question></quiz>");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_bank("<notquiz/>"), ParseError);
}

TEST_CASE("invalid text is rejected at serialization")
{
  auto bank = testing::quiet_bank(1);
  bank.add_short_answer("bad", std::string("ctrl\x01", 5), std::string("a"));
  CHECK_THROWS_AS(serialize_bank(bank), EncodeError);
  auto utf = testing::quiet_bank(1);
  utf.add_short_answer("bad", std::string("\xff\xfe"), std::string("a"));
  CHECK_THROWS_AS(serialize_bank(utf), EncodeError);
}

TEST_CASE("round trip on random banks")
{
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    testing::BankFuzzer fuzz(seed);
    auto bank = testing::quiet_bank(seed);
    fuzz.fill(bank, 1 + fuzz.pick(12));
    const std::string xml = serialize_bank(bank);
    auto parsed = parse_bank(xml, [](const Warning&) {});
    CHECK(parsed.content() == bank.content());
    CHECK(serialize_bank(parsed) == xml);
  }
}

TEST_CASE("embedded image round trip")
{
  auto bank = testing::quiet_bank(1);
  MediaAsset png{testing::tiny_png(), "image/png", "dot"};
  bank.add_short_answer("", "What is this? " + embed_image(png), std::string("a dot"));
  const std::string xml = serialize_bank(bank);
  CHECK(roundtrip(xml) == xml);
  auto parsed = parse_bank(xml);
  const auto& stem = parsed.questions()[0].stem;
  auto start = stem.find("data:");
  auto end = stem.find('"', start);
  CHECK(decode_data_uri(stem.substr(start, end - start)).bytes == testing::tiny_png());
}

TEST_CASE("category root variants are accepted")
{
  const std::string xml = R"(<quiz>
  <question type="category"><category><text>$course$/A/B</text></category></question>
  <question type="shortanswer">
    <name><text>S</text></name>
    <questiontext format="html"><text>Q</text></questiontext>
    <answer fraction="100"><text>a</text></answer>
  </question>
</quiz>)";
  auto bank = parse_bank(xml);
  CHECK(bank.questions()[0].category == "A/B");
}
