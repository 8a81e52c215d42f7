#include "doctest.h"
#include "gerbal/cohomology.hpp"
#include "gerbal/error.hpp"
#include "gerbal/io.hpp"

using namespace gerbal;

namespace {

// [[x]]
Json single(const Json& x) { return Json::array({Json::array({x})}); }

}  // namespace

TEST_CASE("group references") {
  Decoder dec;
  auto a = dec.group("product:(cyclic:2,cyclic:2)");
  CHECK(a == dec.group("product:(cyclic:2,cyclic:2)"));
  CHECK(group_reference(*a) == Json("product:(cyclic:2,cyclic:2)"));

  auto h = SubgroupRef(make_symmetric(3), {0, 3, 4}).as_group();
  const Json inline_group = group_reference(*h);
  REQUIRE(inline_group.is_object());
  auto back = dec.group(inline_group);
  CHECK(back->table() == h->table());
  CHECK(back == dec.group(inline_group));

  CHECK_THROWS_AS(dec.group(Json(3)), ValidationError);
  CHECK_THROWS_AS(dec.group("cyclic:x"), ValidationError);
  Json bad = {{"table", {{0, 1}, {1, 1}}}};
  CHECK_THROWS_AS(dec.group(bad), ValidationError);
  Json wrong_order = {{"order", 3}, {"table", {{0, 1}, {1, 0}}}};
  CHECK_THROWS_AS(dec.group(wrong_order), ValidationError);
}

TEST_CASE("cochain round trip") {
  for (const char* spec : {"cyclic:4", "symmetric:3", "quaternion:8"}) {
    Decoder dec;
    auto g = dec.group(spec);
    for (int degree = 0; degree <= 3; ++degree) {
      auto c = random_cochain(g, degree, 5, 17 + degree);
      const Json j = cochain_to_json(c);
      auto back = dec.cochain(j);
      CHECK(back.group_ptr() == g);
      CHECK(back == c);
      for (const auto& [k, v] : j["entries"].items()) CHECK(v.get<Int>() != 0);
    }
  }
}

TEST_CASE("cochain specs") {
  Decoder dec;
  Json empty = {{"group", "cyclic:3"}, {"degree", 2}, {"modulus", 3}};
  CHECK(dec.cochain(empty).is_zero());
  Json z2 = {{"kind", "standard_cyclic"}, {"n", 2}, {"k", 1}};
  auto gen = dec.cochain(z2);
  CHECK(gen == standard_cyclic_3cocycle(dec.group("cyclic:2"), 1));

  Json inflated = {{"kind", "inflate"},
                   {"group", "product:(cyclic:2,cyclic:2)"},
                   {"map", {0, 0, 1, 1}},
                   {"cochain", z2}};
  auto v4 = dec.cochain(inflated);
  CHECK(v4.normalized());
  CHECK(is_cocycle(v4).cocycle);
  CHECK(v4.group_ptr() == dec.group("product:(cyclic:2,cyclic:2)"));

  Json prod = {{"kind", "product"}, {"left", z2}, {"right", z2}};
  auto p = dec.cochain(prod);
  CHECK(p.group().order() == 4);
  CHECK(is_cocycle(p).cocycle);

  Json rnd = {{"kind", "random"}, {"group", "symmetric:3"}, {"degree", 2}, {"modulus", 6},
              {"seed", 9}};
  CHECK(dec.cochain(rnd) == dec.cochain(rnd));
  Json cob = {{"kind", "coboundary"}, {"cochain", rnd}};
  CHECK(dec.cochain(cob) == coboundary(dec.cochain(rnd)));
  Json unseeded = {{"kind", "random"}, {"group", "symmetric:3"}, {"degree", 2}, {"modulus", 6}};
  dec.default_seed = 9;
  CHECK(dec.cochain(unseeded) == dec.cochain(rnd));

  Json too_big = {{"group", "cyclic:2"}, {"degree", 1}, {"modulus", 2}, {"entries", {{"1", 2}}}};
  CHECK_THROWS_AS(dec.cochain(too_big), ValidationError);
  Json arity = {{"group", "cyclic:2"}, {"degree", 2}, {"modulus", 2}, {"entries", {{"1", 1}}}};
  CHECK_THROWS_AS(dec.cochain(arity), ValidationError);
  Json range = {{"group", "cyclic:2"}, {"degree", 1}, {"modulus", 2}, {"entries", {{"2", 1}}}};
  CHECK_THROWS_AS(dec.cochain(range), ValidationError);
  Json junk = {{"group", "cyclic:2"}, {"degree", 1}, {"modulus", 2}, {"entries", {{"a", 1}}}};
  CHECK_THROWS_AS(dec.cochain(junk), ValidationError);
  Json nogroup = {{"degree", 1}, {"modulus", 2}};
  CHECK_THROWS_AS(dec.cochain(nogroup), ValidationError);
  CHECK_THROWS_AS(dec.cochain(Json{{"kind", "mystery"}}), ValidationError);
  Json bad_map = inflated;
  bad_map["map"] = {0, 1, 1, 1};
  CHECK_THROWS_AS(dec.cochain(bad_map), ValidationError);
}

TEST_CASE("groupoid cochains and structure constants") {
  Decoder dec;
  auto alpha = standard_cyclic_3cocycle(dec.group("cyclic:3"), 1);
  auto psi = transgress3(alpha);
  auto back = dec.groupoid_cochain2(groupoid_cochain_to_json(psi));
  CHECK(back.entries() == psi.entries());
  CHECK(back.modulus() == psi.modulus());

  auto d = twisted_drinfeld_double(alpha);
  auto j = structure_constants_to_json(d);
  CHECK(j["products"].size() == d.dim() * d.dim());
  std::size_t zeros = 0;
  for (const auto& p : j["products"]) zeros += p[2].is_string();
  CHECK(zeros == d.dim() * d.dim() - 27);  // 27 composable pairs
  CHECK(j["basis"].size() == 9);
  CHECK(j["unit"].size() == 3);
}

TEST_CASE("character round trip") {
  Decoder dec;
  auto g = dec.group("dihedral:4");
  auto theta = random_cochain(g, 2, 8, 3);
  auto c = basic_character(theta);
  auto j = character_to_json(c);
  CHECK(j["beta"].size() == 64);
  auto back = dec.character(j);
  REQUIRE(back.exact());
  CHECK(back.dims == c.dims);
  for (std::size_t i = 0; i < 64; ++i)
    CHECK(std::get<0>(back.beta)[i](0, 0) == std::get<0>(c.beta)[i](0, 0));

  // non-monomial and signed entries survive
  auto z = Cyclotomic::root(8, 1) + Cyclotomic::integer(8, 2);
  auto jz = cyclotomic_to_json(z);
  CHECK(jz.contains("coefficients"));
  Json one = {{"group", "cyclic:1"}, {"modulus", 8}, {"beta", Json::object()}};
  one["beta"]["0,0"] = single(jz);
  CHECK(std::get<0>(dec.character(one).beta)[0](0, 0) == z);
  CHECK(cyclotomic_to_json(Cyclotomic::integer(4, -1)) == Json{{"e", 2}, {"order", 4}});
  CHECK(cyclotomic_to_json(Cyclotomic::integer(4, 3)) == Json{{"e", 0}, {"order", 4}, {"c", 3}});

  Json fl = j;
  fl["beta"]["1,1"] = single(Json{{"re", 1.0}, {"im", 0.0}});
  auto f = dec.character(fl);
  CHECK_FALSE(f.exact());
  CHECK(std::abs(std::get<1>(f.beta)[9](0, 0) - std::complex<double>(1, 0)) < 1e-12);
  auto fj = character_to_json(f);
  CHECK(fj.contains("tolerance"));
  CHECK_FALSE(dec.character(fj).exact());

  Json missing = j;
  missing["beta"].erase("3,2");
  CHECK_THROWS_AS(dec.character(missing), ValidationError);
  Json ragged = j;
  ragged["beta"]["1,1"] = Json::array({Json::array({Json{{"e", 0}}}), Json::array()});
  CHECK_THROWS_AS(dec.character(ragged), ValidationError);
  Json bare = j;
  bare["beta"]["1,1"] = single(1);
  CHECK_THROWS_AS(dec.character(bare), ValidationError);
}

TEST_CASE("two-group and label JSON") {
  Decoder dec;
  Json z4 = {{"kind", "standard_cyclic"}, {"n", 4}, {"k", 1}};
  Json tg = {{"alpha", z4}};
  Json hom = {{"source", tg},
              {"target", tg},
              {"rho", {0, 1, 2, 3}},
              {"f", 1},
              {"gamma", {{"degree", 2}, {"modulus", 4}}}};
  auto h = dec.two_group_hom(hom);
  CHECK(verify_hom(h).valid);
  Json t = {{"s", 0}, {"eta", {{"degree", 1}, {"modulus", 4}}}};
  CHECK(verify_transformation(dec.transformation(t, h), h, h).valid);
  Json bad_s = {{"s", 9}, {"eta", {{"degree", 1}, {"modulus", 4}}}};
  CHECK_THROWS_AS(dec.transformation(bad_s, h), ValidationError);
  Json bad_action = {{"alpha", z4}, {"action", {1, 2, 1, 2}}};
  CHECK_THROWS_AS(dec.two_group(bad_action), ValidationError);

  auto g = dec.group("product:(cyclic:2,cyclic:2)");
  Cochain zero(g, 3, 2);
  for (const auto& l : enumerate_indecomposables(zero)) {
    auto back = dec.label(label_to_json(l), g);
    CHECK(back.subgroup == l.subgroup);
    CHECK(back.theta.entries() == l.theta.entries());
    CHECK(label_problem(back, zero).empty());
  }
  Json not_sub = {{"subgroup", {0, 1, 2}}, {"theta", {{"degree", 2}, {"modulus", 8}}}};
  CHECK_THROWS_AS(dec.label(not_sub, g), ValidationError);
  Json report = {{"entries",
                  {{{"subgroup", {0}}, {"theta", {{"degree", 2}, {"modulus", 8}}}, {"multiplicity", 2}}}}};
  auto r = dec.decomposition(report, g);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].multiplicity == 2);
  CHECK(verify_decomposition(r, zero, 8).valid);
}
