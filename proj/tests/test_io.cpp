#include <gtest/gtest.h>

#include "birkhoff/algebra_catalog.hpp"
#include "birkhoff/group_catalog.hpp"
#include "birkhoff/io.hpp"
#include "support/generators.hpp"

using namespace birkhoff;
using namespace birkhoff::catalog;
using nlohmann::json;

namespace {

Error error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error thrown";
  return Error(ErrorKind::ParseError, "none", "");
}

}  // namespace

TEST(Rationals, CanonicalText) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-2/1")), "-2");
  EXPECT_EQ(to_string(parse_rational("+0/7")), "0");
  for (const char* bad : {"", "1/0", "1/-2", "a", "1.5", "/3", "3/"})
    EXPECT_EQ(error_of([&] { parse_rational(bad); }).kind(), ErrorKind::ParseError) << bad;
}

TEST(GroupJson, RoundTrip) {
  for (const auto& g : {symmetric(3), quaternion(), dihedral(4), cyclic(1)}) {
    auto j = io::to_json(g);
    auto back = io::parse_group(j);
    EXPECT_EQ(back.table(), g.table());
    EXPECT_EQ(io::to_json(back), j);
  }
}

TEST(GroupJson, NamesAreKept) {
  json j = {{"order", 2}, {"table", {{0, 1}, {1, 0}}}, {"names", {"e", "s"}}};
  auto g = io::parse_group(j);
  EXPECT_EQ(g.names(), (std::vector<std::string>{"e", "s"}));
  EXPECT_EQ(io::to_json(g), j);
}

TEST(GroupJson, ErrorsNameTheField) {
  auto e = error_of([] { io::parse_group(json{{"order", 2}}); });
  EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  EXPECT_EQ(e.witness(), "/table");

  e = error_of([] { io::parse_group(json{{"order", 3}, {"table", {{0, 1}, {1, 0}}}}); });
  EXPECT_EQ(e.witness(), "/order");

  e = error_of([] { io::parse_group(json{{"table", {{0, 1}, {1, -1}}}}, "/G"); });
  EXPECT_EQ(e.witness(), "/G/table/1/1");

  // Structural failures keep their own kind.
  e = error_of([] { io::parse_group(json{{"table", {{0, 1}, {0, 1}}}}); });
  EXPECT_EQ(e.kind(), ErrorKind::NotLatinSquare);
}

TEST(AlgebraJson, RoundTrip) {
  for (const auto& g : {sl2(), l2(), heisenberg(), abelian(2), truncated_current(sl2(), 2)}) {
    auto j = io::to_json(g);
    auto back = io::parse_algebra(j);
    EXPECT_EQ(io::to_json(back), j);
    for (std::size_t a = 0; a < g.dim(); ++a)
      for (std::size_t b = 0; b < g.dim(); ++b) EXPECT_EQ(back.bracket_basis(a, b), g.bracket_basis(a, b));
  }
}

TEST(AlgebraJson, ParsesTheDocumentedShape) {
  json j = json::parse(R"({"dim": 2, "basis": ["x", "y"],
                           "brackets": [{"left": 0, "right": 1, "value": ["1/2", 0]}]})");
  auto g = io::parse_algebra(j);
  EXPECT_EQ(g.dim(), 2u);
  EXPECT_EQ(g.bracket_basis(0, 1), (Vector{Rational(1, 2), Rational(0)}));
  EXPECT_TRUE(is_zero(g.bracket_basis(1, 0)));
  EXPECT_EQ(io::to_json(g)["brackets"][0]["value"], json({"1/2", "0"}));
}

TEST(AlgebraJson, ErrorsNameTheField) {
  auto e = error_of([] { io::parse_algebra(json::parse(R"({"dim": 2, "brackets": [{"left": 0, "right": 1, "value": ["x", 0]}]})")); });
  EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  EXPECT_EQ(e.witness(), "/brackets/0/value/0");

  e = error_of([] { io::parse_algebra(json::parse(R"({"dim": 2, "brackets": [{"left": 0, "right": 2, "value": [0, 0]}]})")); });
  EXPECT_EQ(e.witness(), "/brackets/0");

  e = error_of([] { io::parse_algebra(json::parse(R"({"dim": 1, "brackets": [{"left": 0, "right": 0, "value": [1]},
                                                                             {"left": 0, "right": 0, "value": [1]}]})")); });
  EXPECT_EQ(e.witness(), "/brackets/1");

  e = error_of([] { io::parse_algebra(json::parse(R"({"dim": 2, "basis": ["a"]})")); });
  EXPECT_EQ(e.witness(), "/basis");

  e = error_of([] { io::parse_algebra(json::parse(R"({"brackets": []})")); });
  EXPECT_EQ(e.witness(), "/dim");
}

TEST(PxmJson, RoundTrip) {
  for (const auto& x : {PrecrossedModule::conjugation(symmetric(3)), PrecrossedModule::over_trivial(cyclic(4))}) {
    auto j = io::to_json(x);
    auto back = io::parse_pxm(j);
    EXPECT_EQ(io::to_json(back), j);
  }
}

TEST(PxmJson, ErrorsNameTheField) {
  auto j = io::to_json(PrecrossedModule::conjugation(cyclic(2)));
  j["action"][1][0] = "zero";
  EXPECT_EQ(error_of([&] { io::parse_pxm(j); }).witness(), "/action/1/0");

  j = io::to_json(PrecrossedModule::conjugation(cyclic(2)));
  j.erase("boundary");
  EXPECT_EQ(error_of([&] { io::parse_pxm(j); }).witness(), "/boundary");

  j = io::to_json(PrecrossedModule::conjugation(cyclic(2)));
  j["G"]["table"] = {{0, 1}, {1, 1}};
  // Structural errors carry their own witness rather than a field path.
  auto e = error_of([&] { io::parse_pxm(j, "/case"); });
  EXPECT_EQ(e.kind(), ErrorKind::NotLatinSquare);
  EXPECT_FALSE(e.witness().empty());
}

TEST(JsonFile, ByteOffsetIsReported) {
  auto path = std::filesystem::temp_directory_path() / "birkhoff_io_bad.json";
  {
    std::ofstream out(path);
    out << "{\"order\": 2,, }";
  }
  auto e = error_of([&] { io::read_json_file(path.string()); });
  EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  EXPECT_NE(e.witness().find("byte 13"), std::string::npos) << e.witness();
  std::filesystem::remove(path);

  EXPECT_EQ(error_of([] { io::read_json_file("/nonexistent/birkhoff.json"); }).kind(), ErrorKind::ParseError);
}

// ---- properties

TEST(IoProperty, RandomAlgebrasSurviveRoundTrip) {
  gen::Rng rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = gen::random_leibniz(rng);
    auto text = io::to_json(g).dump();
    auto back = io::parse_algebra(json::parse(text));
    EXPECT_EQ(io::to_json(back).dump(), text);
  }
}

TEST(IoProperty, RandomModulesSurviveRoundTrip) {
  gen::Rng rng(72);
  for (int trial = 0; trial < 60; ++trial) {
    auto x = gen::random_pxm(rng);
    auto text = io::to_json(x).dump();
    EXPECT_EQ(io::to_json(io::parse_pxm(json::parse(text))).dump(), text);
  }
}
