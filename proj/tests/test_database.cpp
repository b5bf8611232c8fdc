#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "vpf/chambers.hpp"
#include "vpf/database.hpp"
#include "vpf/errors.hpp"

using namespace vpf;

namespace {

void expect_format_error(const std::string& text) {
  try {
    from_json(text);
    ADD_FAILURE() << "accepted corrupted database";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DatabaseFormat);
  }
}

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  if (pos != std::string::npos) s.replace(pos, from.size(), to);
  return s;
}

}  // namespace

TEST(Database, RoundTrip) {
  const auto& t = testing_support::so5_table();
  const std::string text = to_json(t);
  const ChamberTable back = from_json(text);
  EXPECT_EQ(back, t);
  EXPECT_EQ(to_json(back), text);
}

TEST(Database, GenericRoundTrip) {
  const ChamberTable t = build_table(IntMat{{1, 0, 1, 1}, {0, 1, 1, 2}}, std::nullopt);
  EXPECT_FALSE(t.B.has_value());
  EXPECT_EQ(from_json(to_json(t)), t);
}

TEST(Database, Deterministic) {
  const std::string a = to_json(so5::build_chamber_table(1));
  EXPECT_EQ(a, to_json(testing_support::so5_table()));
}

TEST(Database, SaveAndLoad) {
  const auto path = std::filesystem::temp_directory_path() / "vpf_test_db.json";
  save_database(testing_support::so5_table(), path);
  EXPECT_EQ(load_database(path), testing_support::so5_table());
  std::filesystem::remove(path);
  try {
    load_database(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(is_user_error(e.kind()));
  }
}

TEST(Database, RejectsCorruption) {
  const std::string text = to_json(testing_support::so5_table());
  expect_format_error("");
  expect_format_error("{}");
  expect_format_error(text.substr(0, text.size() / 2));
  expect_format_error(replace_once(text, "vpf-chamber-database", "something-else"));
  expect_format_error(replace_once(text, "\"version\": \"1\"", "\"version\": \"7\""));
  expect_format_error(replace_once(text, "\"id\": \"1\"", "\"id\": \"2\""));
  expect_format_error(replace_once(text, "\"glued_chambers\": \"33\"", "\"glued_chambers\": \"34\""));
  expect_format_error(replace_once(text, "\"period\": [", "\"period\": [\"0\", "));
}
