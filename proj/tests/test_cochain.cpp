#include <random>

#include "doctest.h"
#include "gerbal/cochain.hpp"
#include "gerbal/cohomology.hpp"

using namespace gerbal;

namespace {

GroupPtr v4() { return parse_group_spec("product:(cyclic:2,cyclic:2)"); }

}  // namespace

TEST_CASE("coboundary examples") {
  auto s3 = make_symmetric(3);
  CHECK(coboundary(Cochain(s3, 2, 5)).is_zero());

  // theta(1,1) = 1 on Z/2, N = 2: all 8 triples of d theta vanish.
  auto z2 = make_cyclic(2);
  Cochain theta(z2, 2, 2);
  const Element t11[] = {1, 1};
  theta.set(t11, 1);
  auto dt = coboundary(theta);
  CHECK(dt.degree() == 3);
  CHECK(dt.size() == 8);
  CHECK(dt.is_zero());

  CHECK_THROWS_AS(coboundary(Cochain(z2, 4, 2)), UnsupportedError);
}

TEST_CASE("degree-2 coboundary has the alternating-sum form") {
  auto s3 = make_symmetric(3);
  auto theta = random_cochain(s3, 2, 7, 99);
  auto a = coboundary(theta);
  for (Element g = 0; g < 6; ++g)
    for (Element h = 0; h < 6; ++h)
      for (Element k = 0; k < 6; ++k) {
        const Int expect = mod(theta(h, k) - theta(s3->mul(g, h), k) +
                                   theta(g, s3->mul(h, k)) - theta(g, h),
                               7);
        CHECK(a(g, h, k) == expect);
      }
}

TEST_CASE("d o d = 0 over Z/4, V4, S3") {
  int count = 0;
  for (auto g : {make_cyclic(4), v4(), make_symmetric(3)})
    for (int degree = 0; degree <= 2; ++degree)
      for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Cochain c = random_cochain(g, degree, 6, seed * 31 + degree);
        // non-normalised inputs too
        if (seed % 2 && c.size() > 0) c.set_index(0, 5);
        CHECK(coboundary(coboundary(c)).is_zero());
        ++count;
      }
  CHECK(count >= 200);
}

TEST_CASE("normalised input gives normalised coboundary") {
  auto s3 = make_symmetric(3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto c = random_cochain(s3, 2, 4, seed);
    CHECK(c.normalized());
    CHECK(coboundary(c).normalized());
  }
}

TEST_CASE("is_cocycle") {
  auto s3 = make_symmetric(3);
  auto alpha = coboundary(random_cochain(s3, 2, 6, 5));
  auto v = is_cocycle(alpha);
  CHECK(v.cocycle);
  CHECK(v.checked == 6 * 6 * 6 * 6);

  // full 4^3-tuple brute force via the identity from the definition
  auto std4 = standard_cyclic_3cocycle(4, 1);
  CHECK(is_cocycle(std4).cocycle);
  const auto& z4 = std4.group();
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b)
      for (Element c = 0; c < 4; ++c)
        for (Element d = 0; d < 4; ++d) {
          const Int lhs = std4(z4.mul(a, b), c, d) + std4(a, b, z4.mul(c, d));
          const Int rhs = std4(b, c, d) + std4(a, z4.mul(b, c), d) + std4(a, b, c);
          CHECK(mod(lhs - rhs, 4) == 0);
        }

  // corrupt one entry of a valid cocycle
  Cochain bad = alpha;
  const Element at[] = {1, 2, 3};
  bad.set(at, bad.at(at) + 1);
  auto w = is_cocycle(bad);
  CHECK_FALSE(w.cocycle);
  REQUIRE(w.witness.has_value());
  CHECK(w.witness->size() == 4);
  CHECK(coboundary(bad).at(*w.witness) != 0);
  // lexicographically first
  const auto db = coboundary(bad);
  for (std::size_t i = 0; i < db.index(*w.witness); ++i) CHECK(db.at_index(i) == 0);

  CHECK_THROWS_AS(is_cocycle(Cochain(s3, 0, 2)), UnsupportedError);

  // parallel scan returns the same witness
  auto wp = is_cocycle(bad, Jobs{4});
  CHECK(wp.witness == w.witness);
}

TEST_CASE("standard cyclic 3-cocycle") {
  auto a2 = standard_cyclic_3cocycle(2, 1);
  for (std::size_t i = 0; i < 8; ++i) CHECK(a2.at_index(i) == (i == 7 ? 1 : 0));
  CHECK(standard_cyclic_3cocycle(5, 0).is_zero());
  for (std::size_t n : {2, 3, 4, 6, 8})
    for (Int k = 0; k < static_cast<Int>(n); ++k) {
      auto a = standard_cyclic_3cocycle(n, k);
      CHECK(a.normalized());
      CHECK(is_cocycle(a).cocycle);
    }
}

TEST_CASE("restrict") {
  auto z4 = make_cyclic(4);
  auto a = standard_cyclic_3cocycle(z4, 1);
  CHECK(restrict(a, trivial_subgroup(z4)).is_zero());
  auto r = restrict(a, SubgroupRef(z4, {0, 2}));
  CHECK(r.group().order() == 2);
  CHECK(r.modulus() == 4);
  CHECK(r(1, 1, 1) == 2);
  CHECK(r(0, 1, 1) == 0);
  CHECK(r.normalized());
  CHECK(is_cocycle(r).cocycle);

  // restriction commutes with coboundary
  auto s3 = make_symmetric(3);
  for (const auto& cls : enumerate_subgroups(s3))
    for (const auto& h : cls) {
      auto theta = random_cochain(s3, 2, 5, h.order());
      auto lhs = restrict(coboundary(theta), h);
      auto rhs = coboundary(restrict(theta, h));
      CHECK(lhs.entries() == rhs.entries());
    }
}

TEST_CASE("inflation and external products preserve cocycles") {
  auto g = v4();
  auto z2 = make_cyclic(2);
  const Element proj1[] = {0, 0, 1, 1};  // (a, b) -> a
  auto infl = inflate(standard_cyclic_3cocycle(z2, 1), g, proj1);
  CHECK(infl.normalized());
  CHECK(is_cocycle(infl).cocycle);

  const Element not_hom[] = {0, 1, 1, 1};
  CHECK_THROWS_AS(inflate(standard_cyclic_3cocycle(z2, 1), g, not_hom), ValidationError);

  auto z4 = make_cyclic(4);
  auto prod = make_direct_product(*z2, *z4);
  auto ext = external_product(standard_cyclic_3cocycle(z2, 1),
                              standard_cyclic_3cocycle(z4, 3), prod);
  CHECK(ext.modulus() == 4);
  CHECK(is_cocycle(ext).cocycle);
}

TEST_CASE("random cochains are reproducible") {
  auto s3 = make_symmetric(3);
  auto a = random_cochain(s3, 2, 9, 1234);
  auto b = random_cochain(s3, 2, 9, 1234);
  CHECK(a == b);
  CHECK(coboundary(a) == coboundary(b));
  CHECK_FALSE(random_cochain(s3, 2, 9, 1235) == a);
}
