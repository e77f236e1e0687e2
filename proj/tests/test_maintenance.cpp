#include "support.hpp"

#include "qbank/error.hpp"
#include "qbank/maintenance.hpp"
#include "qbank/moodle_xml.hpp"

#include <doctest.h>

using namespace qbank;

TEST_CASE("replace_text counts replacements")
{
  auto bank = testing::quiet_bank(1);
  bank.add_matching("", "Match magnitudes with units:",
                    {{"Flux", "W"}, {"Intensity", "W/sr"}, {"Irradiance", "W/m^2"}, {"Radiance", "W/(sr*m^2)"}});
  bank.add_short_answer("", "Other", std::string("a"));
  CHECK(replace_text(bank, "Flux", "Radiant flux") == 1);
  CHECK(std::get<MatchPairList>(bank.questions()[0].payload).pairs[0].prompt == "Radiant flux");
  CHECK(replace_text(bank, "nothing-here", "x") == 0);
  CHECK_THROWS_AS(replace_text(bank, "", "x"), ValidationError);
}

TEST_CASE("replace_text followed by its inverse restores the bank")
{
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    testing::BankFuzzer fuzz(seed);
    auto bank = testing::quiet_bank(seed);
    fuzz.fill(bank, 10);
    const std::string before = serialize_bank(bank);
    // The marker never occurs in fuzzed text, so the inverse is exact.
    const std::size_t forward = replace_text(bank, "Flux", "§§");
    CHECK(replace_text(bank, "§§", "Flux") == forward);
    CHECK(serialize_bank(bank) == before);
  }
}

TEST_CASE("replace_regex")
{
  auto bank = testing::quiet_bank(1);
  bank.add_short_answer("", "Version 1.2", std::string("a"));
  bank.add_short_answer("", "Version 3.4", std::string("b"));
  CHECK(replace_regex(bank, R"(Version (\d)\.(\d))", "v$1$2") == 2);
  CHECK(bank.questions()[1].stem == "v34");
  CHECK_THROWS_AS(replace_regex(bank, "(", "x"), ValidationError);
}

TEST_CASE("an edit that would invalidate a question is rolled back")
{
  auto bank = testing::quiet_bank(1);
  bank.add_multiple_choice("", "Q", std::vector<std::string>{"cat", "bat"});
  CHECK_THROWS_AS(replace_text(bank, "b", "c"), ValidationError);
  CHECK(std::get<ChoiceSet>(bank.questions()[0].payload).choices[1].text == "bat");
}

TEST_CASE("set_wrong_penalty")
{
  auto bank = testing::quiet_bank(1);
  for (int i = 0; i < 10; ++i) {
    bank.add_multiple_choice("", "Q" + std::to_string(i), std::vector<std::string>{"a", "b", "c", "d"});
  }
  bank.add_short_answer("", "S", std::string("a"));
  CHECK(set_wrong_penalty(bank, 0) == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    for (const auto& c : std::get<ChoiceSet>(bank.questions()[i].payload).choices) {
      CHECK((c.fraction == 100.0 || c.fraction == 0.0));
    }
  }
  const std::string once = serialize_bank(bank);
  CHECK(set_wrong_penalty(bank, 0) == 0);
  CHECK(serialize_bank(bank) == once);
  CHECK_THROWS_AS(set_wrong_penalty(bank, 10), ValidationError);
  CHECK_THROWS_AS(set_wrong_penalty(bank, -101), ValidationError);
  bank.add_multiple_choice("", "New", std::vector<std::string>{"a", "b"});
  CHECK(std::get<ChoiceSet>(bank.questions().back().payload).choices[1].fraction == 0.0);
}
