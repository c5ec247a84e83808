#include <doctest.h>

#include <vector>

#include "ratiomin/io.hpp"
#include "test_support.hpp"

using namespace ratiomin;

TEST_SUITE_BEGIN("io");

TEST_CASE("decimal literals") {
  auto check = [](const char* text, const char* mantissa, long long exponent) {
    const auto parsed = parse_decimal(text);
    REQUIRE(parsed.has_value());
    CHECK(parsed->mantissa.str() == mantissa);
    CHECK(parsed->exponent == exponent);
  };
  check("3", "3", 0);
  check("2.50", "250", -2);
  check("1e3", "1", 3);
  check("0.125", "125", -3);
  check("+4.2e-1", "42", -2);
  check("-7", "-7", 0);
  check("007", "7", 0);

  CHECK_FALSE(parse_decimal("").has_value());
  CHECK_FALSE(parse_decimal("x").has_value());
  CHECK_FALSE(parse_decimal("1..2").has_value());
  CHECK_FALSE(parse_decimal("1e").has_value());
  CHECK_FALSE(parse_decimal("--1").has_value());
  CHECK_FALSE(parse_decimal("1 2").has_value());
}

TEST_CASE("normalization shares one power of ten") {
  std::vector<Decimal> values;
  values.push_back(*parse_decimal("1.5"));
  values.push_back(*parse_decimal("0.125"));
  values.push_back(*parse_decimal("2"));
  const auto scaled = normalize_decimals(values);
  CHECK(scaled[0] == 1500);
  CHECK(scaled[1] == 125);
  CHECK(scaled[2] == 2000);
}

TEST_CASE("instance CSV round trip") {
  testsupport::TempDir dir;
  const auto path = dir.file("good.csv", "a,b\n3,6\n2,2\n5,2\n7,8\n");
  const auto inst = load_instance_csv(path);
  CHECK(inst.size() == 4);
  CHECK(inst.a == std::vector<BigInt>{3, 2, 5, 7});
  CHECK(inst.b == std::vector<BigInt>{6, 2, 2, 8});
}

TEST_CASE("CSV accepts CRLF and decimal values") {
  testsupport::TempDir dir;
  const auto path = dir.file("crlf.csv", "a,b\r\n1.5,3\r\n0.25,1\r\n");
  const auto inst = load_instance_csv(path);
  // shared scale 100
  CHECK(inst.a == std::vector<BigInt>{150, 25});
  CHECK(inst.b == std::vector<BigInt>{300, 100});
}

TEST_CASE("CSV failures carry line numbers") {
  testsupport::TempDir dir;

  try {
    load_instance_csv(dir.file("short.csv", "a,b\n1,1\n"));
    FAIL("expected TooShort");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_short);
  }

  try {
    load_instance_csv(dir.file("bad.csv", "a,b\n1,2\nx,3\n"));
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(e.index() == 3);
  }

  try {
    load_instance_csv(dir.file("header.csv", "x,y\n1,2\n2,3\n"));
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(e.index() == 1);
  }

  CHECK_THROWS_AS(load_instance_csv(dir.path("missing.csv")), Error);

  try {
    load_instance_csv(dir.file("wide.csv", "a,b\n1,2,3\n4,5\n"));
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.index() == 2);
  }
}

TEST_CASE("float CSV loader") {
  testsupport::TempDir dir;
  const auto path = dir.file("float.csv", "a,b\n0.5,2\n1.5,4\n");
  const auto inst = load_instance_csv_float(path);
  CHECK(inst.a == std::vector<double>{0.5, 1.5});
  CHECK(inst.b == std::vector<double>{2.0, 4.0});
}

TEST_CASE("matrix and vector files") {
  testsupport::TempDir dir;
  const auto mpath = dir.file("m.txt", "1, 2\n3 4\n5,6\n");
  const auto matrix = load_matrix(mpath);
  CHECK(matrix.rows == 3);
  CHECK(matrix.cols == 2);
  CHECK(matrix(1, 0) == 3);
  CHECK(matrix(2, 1) == 6);

  const auto vpath = dir.file("v.txt", "0.25\n-1\n3\n");
  CHECK(load_vector(vpath) == std::vector<double>{0.25, -1, 3});

  try {
    load_matrix(dir.file("ragged.txt", "1 2\n3\n"));
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(e.index() == 2);
  }

  CHECK_THROWS_AS(load_vector(mpath), Error);      // two columns
  CHECK_THROWS_AS(load_matrix(dir.file("empty.txt", "\n")), Error);
}

TEST_SUITE_END();
