#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cayley/error.hpp"
#include "cayley/io.hpp"

using namespace cayley;

TEST_CASE("group json round trip") {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  Json j = group_json(s3);
  FiniteGroup back = group_from_json(j);
  CHECK(back.order() == 6);
  CHECK(back.table() == s3.table());
  CHECK(back.labels() == s3.labels());
}

TEST_CASE("builtin group names") {
  CHECK(load_group("Z2").order() == 2);
  CHECK(load_group("Z12").order() == 12);
  CHECK(load_group("Z2xZ3").order() == 6);
  CHECK(load_group("Z2xZ3").abelian());
  CHECK(load_group("S3").order() == 6);
  CHECK(load_group("D4").order() == 8);
  CHECK(load_group("Q8").order() == 8);
  CHECK_THROWS_WITH_AS(load_group("nonsense"), doctest::Contains("no-such-group"), DomainError);
}

TEST_CASE("group file loading canonicalizes the identity") {
  const char* path = "io_test_group.json";
  {
    std::ofstream out(path);
    // Z3 written with the identity last
    out << R"({"labels": ["a", "b", "e"], "table": [[1,2,0],[2,0,1],[0,1,2]]})";
  }
  FiniteGroup g = load_group(path);
  CHECK(g.order() == 3);
  CHECK(g.label(0) == "e");
  std::remove(path);
}

TEST_CASE("machine json") {
  Json j = machine_json(MealyMachine::reset_inverse(FiniteGroup::cyclic(2)));
  CHECK(j["states"] == 2);
  CHECK(j["alphabet"] == 2);
  CHECK(j["reset"] == true);
  CHECK(j["invertible"] == true);
  CHECK(j["transition"][1][0] == 0);
  CHECK(j["output"][1][0] == 1);
}

TEST_CASE("element word parsing") {
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  auto word = parse_element_word(z3, "x,1^-1,2");
  REQUIRE(word.size() == 3);
  CHECK(word[0].g == 0);
  CHECK(word[0].exp == 1);
  CHECK(word[1].g == 1);
  CHECK(word[1].exp == -1);
  CHECK(word[2].g == 2);
  CHECK(word[2].exp == 1);
  CHECK_THROWS_WITH_AS(parse_element_word(z3, "7"), doctest::Contains("out-of-range"),
                       DomainError);
}
