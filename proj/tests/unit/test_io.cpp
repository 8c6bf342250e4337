#include <cstdlib>
#include <filesystem>

#include "doctest.h"
#include "pha/errors.hpp"
#include "pha/io.hpp"

using namespace pha;
using io::json;

namespace {

io::Source src() { return {"<test>", "0"}; }

}  // namespace

TEST_CASE("scalars, vectors and matrices from JSON") {
  Field q;
  CHECK(io::scalar_from(json("3/4"), q, "x") == Scalar(3, 4));
  CHECK(io::scalar_from(json(5), q, "x") == Scalar(5));
  CHECK(io::vec_from(json::array({"1", 2, "-1/2"}), q, "v") == Vec{1, 2, Scalar(-1, 2)});
  CHECK_THROWS_AS(io::scalar_from(json("1/0"), q, "x"), Error);
  CHECK_THROWS_AS(io::mat_from(json::parse(R"([["1","2"],["3"]])"), q, "m"), Error);
  CHECK(io::to_json(Scalar(-2, 6)) == json("-1/3"));
  CHECK(io::to_json(Scalar::parse("4", Field::prime(7))) == json(4));
}

TEST_CASE("documents resolve by name") {
  io::Library lib(Field{});
  lib.add(json::parse(R"({"kind":"group","name":"Z2","cyclic":2})"), src());
  lib.add(json::parse(R"({"kind":"hopf","name":"kZ2","type":"group_algebra","group":"Z2"})"), src());
  lib.add(json::parse(R"({"kind":"algebra","name":"Q","builtin":"field"})"), src());
  json act = json::parse(R"({"kind":"action","name":"z","hopf":"kZ2","algebra":"Q","operators":[[["1"]],[["0"]]]})");
  lib.add(act, src());
  PartialAction pa = lib.action(act);
  CHECK(verify_partial_action(pa).ok());
  CHECK(lib.hopf(json("kZ2")).dim() == 2);
  CHECK_THROWS_AS(lib.add(json::parse(R"({"kind":"group","name":"Z2","cyclic":3})"), src()), Error);
  CHECK_NOTHROW(lib.add(json::parse(R"({"kind":"group","name":"Z2","cyclic":2})"), src()));
  CHECK_THROWS_AS(lib.by_name("missing"), Error);
  CHECK_THROWS_AS(lib.add(json::parse(R"({"kind":"nonsense","name":"x"})"), src()), Error);
}

TEST_CASE("algebras from products and builtins") {
  io::Library lib(Field{});
  json a = json::parse(R"({"kind":"algebra","name":"dual","dim":2,"products":[[0,0,["1","0"]],[0,1,["0","1"]],[1,0,["0","1"]]],"unit":["1","0"]})");
  lib.add(a, src());
  CHECK(lib.algebra(a) == truncated_polynomial(2));
  json m = json::parse(R"({"kind":"algebra","name":"m","builtin":"matrix","n":2})");
  lib.add(m, src());
  CHECK(lib.algebra(m) == matrix_algebra(2));
}

TEST_CASE("document field overrides the library default") {
  io::Library lib(Field{});
  json a = json::parse(R"({"kind":"algebra","name":"F","builtin":"field","field":"fp:5"})");
  lib.add(a, src());
  CHECK(lib.algebra(a).field() == Field::prime(5));
}

TEST_CASE("checked-in data files load") {
  std::filesystem::path dir = PHA_TEST_DATA;
  for (const char* f : {"zero_on_g.json", "half_scaling.json", "swap_global.json", "grading_z2.json",
                        "grading_z4_cocycle.json", "group_action_qxq.json", "matrix_units.json"}) {
    CAPTURE(f);
    io::Library lib(Field{});
    CHECK_NOTHROW(lib.load_file((dir / f).string()));
  }
  io::Library lib(Field{});
  CHECK_THROWS_AS(lib.load_file((dir / "malformed.json").string()), std::exception);
  auto docs = lib.load_file((dir / "grading_z2.json").string());
  GoodGradingSpec s = lib.grading(docs.back());
  CHECK(s.n == 2);
}

TEST_CASE("hashes are stable") {
  CHECK(io::hex64(io::fnv1a("")) == "cbf29ce484222325");
  CHECK(io::hex64(io::fnv1a("a")) == "af63dc4c8601ec8c");
}

TEST_CASE("reports serialize with their checks") {
  Report r("x");
  r.pass("a");
  r.fail("b", "w");
  json j = io::to_json(r);
  CHECK(j["ok"] == false);
  CHECK(j["checks"].size() == 2);
}
