#include "doctest.h"
#include "gerbal/inertia.hpp"

using namespace gerbal;

namespace {

// Independent associativity scan over all composable triples of decorated arrows
// with zero decorations (decorations are central, so this is enough).
bool extension_associative(const GroupoidCochain2& psi) {
  const FiniteGroup& G = psi.group();
  const Element n = static_cast<Element>(G.order());
  for (Element g = 0; g < n; ++g)
    for (Element s = 0; s < n; ++s)
      for (Element t = 0; t < n; ++t)
        for (Element u = 0; u < n; ++u) {
          DecoratedArrow a{0, {g, s}};
          DecoratedArrow b{0, {G.conj(s, g), t}};
          DecoratedArrow c{0, {G.conj(G.mul(t, s), g), u}};
          auto left = extension_compose(psi, extension_compose(psi, a, b), c);
          auto right = extension_compose(psi, a, extension_compose(psi, b, c));
          if (!(left == right)) return false;
        }
  return true;
}

std::vector<Cochain> sample_3cocycles() {
  std::vector<Cochain> out;
  for (std::size_t n : {2, 3, 4})
    for (Int k = 0; k < static_cast<Int>(n); ++k) out.push_back(standard_cyclic_3cocycle(n, k));
  auto z2 = make_cyclic(2);
  auto v4 = make_direct_product(*z2, *z2);
  auto a = standard_cyclic_3cocycle(z2, 1);
  out.push_back(external_product(a, Cochain(z2, 3, 2), v4));
  out.push_back(external_product(a, a, v4));
  // inflation along S3 -> Z/2 (sign)
  auto s3 = make_symmetric(3);
  std::vector<Element> sign(s3->order());
  for (Element x = 0; x < s3->order(); ++x) sign[x] = s3->element_order(x) == 2 ? 1 : 0;
  out.push_back(inflate(a, s3, sign));
  // inflation along Z/8 -> Z/4
  auto z8 = make_cyclic(8);
  std::vector<Element> red(8);
  for (Element x = 0; x < 8; ++x) red[x] = x % 4;
  out.push_back(inflate(standard_cyclic_3cocycle(4, 1), z8, red));
  return out;
}

}  // namespace

TEST_CASE("build_inertia counts") {
  auto z2 = build_inertia(make_cyclic(2));
  CHECK(z2.object_count() == 2);
  CHECK(z2.arrow_count() == 4);
  CHECK(z2.components().size() == 2);

  auto s3 = build_inertia(make_symmetric(3));
  CHECK(s3.arrow_count() == 36);
  CHECK(s3.components().size() == 3);
  for (Element g = 0; g < 6; ++g)
    CHECK(s3.automorphisms(g).order() * conjugacy_class(s3.group(), g).size() == 6);

  auto one = build_inertia(make_cyclic(1));
  CHECK(one.object_count() == 1);
  CHECK(one.arrow_count() == 1);
}

TEST_CASE("inertia groupoid axioms") {
  auto lambda = build_inertia(make_symmetric(3));
  const auto& G = lambda.group();
  for (std::size_t i = 0; i < lambda.arrow_count(); ++i) {
    Arrow a = lambda.arrow_at(i);
    CHECK(lambda.arrow_index(a) == i);
    CHECK(lambda.compose(lambda.identity(a.source), a) == a);
    CHECK(lambda.compose(a, lambda.identity(lambda.target(a))) == a);
    CHECK(lambda.compose(a, lambda.inverse(a)) == lambda.identity(a.source));
    for (Element t = 0; t < G.order(); ++t) {
      Arrow b{lambda.target(a), t};
      for (Element u = 0; u < G.order(); ++u) {
        Arrow c{lambda.target(b), u};
        CHECK(lambda.compose(lambda.compose(a, b), c) == lambda.compose(a, lambda.compose(b, c)));
      }
    }
  }
  // identity arrow at 0 ends at 0, not at 1
  Arrow bad{0, 1};
  Arrow other{1, 0};
  CHECK_THROWS_AS(lambda.compose(bad, other), ValidationError);
}

TEST_CASE("transgress3 examples") {
  auto zero = transgress3(Cochain(make_cyclic(3), 3, 3));
  CHECK(zero.is_zero());

  auto psi = transgress3(standard_cyclic_3cocycle(2, 1));
  CHECK(psi(1, 1, 1) == 1);
  for (Element s = 0; s < 2; ++s)
    for (Element t = 0; t < 2; ++t) CHECK(psi(0, s, t) == 0);
  CHECK(psi.normalized());

  const Element t111[] = {1, 1, 1};
  Cochain bad(make_cyclic(3), 3, 3);
  bad.set(t111, 1);
  CHECK_THROWS_AS(transgress3(bad), ValidationError);
  CHECK_THROWS_AS(transgress3(Cochain(make_cyclic(2), 2, 2)), ValidationError);
}

TEST_CASE("transgress2 examples") {
  auto z3 = make_cyclic(3);
  CHECK(transgress2(Cochain(z3, 2, 3)).is_zero());

  auto v4 = make_direct_product(*make_cyclic(2), *make_cyclic(2));
  // element (a1,a2) has index 2*a1 + a2
  Cochain theta(v4, 2, 2);
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) {
      const Element xy[] = {x, y};
      theta.set(xy, (x % 2) * (y / 2));
    }
  auto xi = transgress2(theta);
  CHECK(xi(2, 1) == 1);  // g = (1,0), h = (0,1)
  CHECK(xi(1, 2) == 1);  // symmetric: -1 = +1 mod 2
  for (Element g = 0; g < 4; ++g)
    for (Element h = 0; h < 4; ++h) CHECK(xi(g, h) == mod(theta(h, g) - theta(g, h), 2));

  // commuting pairs in S3
  auto s3 = make_symmetric(3);
  auto th = random_cochain(s3, 2, 5, 9);
  auto x = transgress2(th);
  for (Element g = 0; g < 6; ++g)
    for (Element h = 0; h < 6; ++h)
      if (s3->mul(g, h) == s3->mul(h, g)) CHECK(x(g, h) == mod(th(h, g) - th(g, h), 5));
  CHECK(x.normalized());
}

TEST_CASE("chain map: transgress3(d theta) = d(transgress2 theta)") {
  int checked = 0;
  for (const char* spec : {"cyclic:4", "symmetric:3"}) {
    auto g = parse_group_spec(spec);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Int m = 2 + static_cast<Int>(seed % 5);
      auto theta = random_cochain(g, 2, m, seed);
      CHECK(transgress3(coboundary(theta)) == groupoid_coboundary(transgress2(theta)));
      ++checked;
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("transgressions of 3-cocycles are groupoid 2-cocycles") {
  for (const auto& a : sample_3cocycles()) {
    REQUIRE(is_cocycle(a).cocycle);
    auto psi = transgress3(a);
    CHECK(is_groupoid_2cocycle(psi).cocycle);
    CHECK(is_groupoid_2cocycle(psi, Jobs{3}).cocycle);
  }
  CHECK(is_groupoid_2cocycle(GroupoidCochain2(make_symmetric(3), 4)).cocycle);
  // d of any groupoid 1-cochain
  auto s3 = make_symmetric(3);
  GroupoidCochain1 xi(s3, 7);
  for (Element g = 0; g < 6; ++g)
    for (Element s = 0; s < 6; ++s) xi.set(g, s, g * 3 + s * s + 1);
  CHECK(is_groupoid_2cocycle(groupoid_coboundary(xi)).cocycle);
}

TEST_CASE("corrupting one entry is caught with a witness") {
  auto psi = transgress3(standard_cyclic_3cocycle(4, 1));
  psi.set(1, 2, 3, psi(1, 2, 3) + 1);
  auto v = is_groupoid_2cocycle(psi);
  CHECK_FALSE(v.cocycle);
  REQUIRE(v.witness);
  const auto& w = *v.witness;
  const auto& G = psi.group();
  const Element h1 = G.conj(w[1], w[0]);
  CHECK(mod(psi(w[0], w[1], w[2]) + psi(w[0], G.mul(w[2], w[1]), w[3]) - psi(h1, w[2], w[3]) -
                psi(w[0], w[1], G.mul(w[3], w[2])),
            4) != 0);
  auto v4 = is_groupoid_2cocycle(psi, Jobs{4});
  CHECK(v4.witness == v.witness);
}

TEST_CASE("extension_compose") {
  auto z2 = make_cyclic(2);
  GroupoidCochain2 zero(z2, 2);
  auto r = extension_compose(zero, {1, {1, 1}}, {0, {1, 0}});
  CHECK(r == DecoratedArrow{1, {1, 1}});

  auto psi = transgress3(standard_cyclic_3cocycle(2, 1));
  auto c = extension_compose(psi, {0, {1, 1}}, {0, {1, 1}});
  CHECK(c == DecoratedArrow{1, {1, 0}});

  auto s3 = make_symmetric(3);
  GroupoidCochain2 z(s3, 3);
  CHECK_THROWS_AS(extension_compose(z, {0, {0, 1}}, {0, {1, 0}}), ValidationError);
}

TEST_CASE("extension associativity iff groupoid 2-cocycle") {
  std::vector<GroupoidCochain2> cases;
  for (const auto& a : sample_3cocycles())
    if (a.group().order() <= 6) cases.push_back(transgress3(a));
  // random cochains on small groups: mostly non-cocycles
  for (const char* spec : {"cyclic:2", "cyclic:3", "symmetric:3"}) {
    auto g = parse_group_spec(spec);
    const std::size_t n = g->order();
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      auto base = random_cochain(g, 3, 3, seed);
      GroupoidCochain2 psi(g, 3, base.entries());
      cases.push_back(psi);
      // corrupt a cocycle in one spot
      auto good = transgress3(Cochain(g, 3, 3));
      good.set(static_cast<Element>(seed % n), 1 % n, 1 % n, 1);
      cases.push_back(good);
    }
  }
  int cocycles = 0, non = 0;
  for (const auto& psi : cases) {
    const bool c = is_groupoid_2cocycle(psi).cocycle;
    CHECK(extension_associative(psi) == c);
    (c ? cocycles : non)++;
  }
  CHECK(cocycles > 0);
  CHECK(non > 0);
}
