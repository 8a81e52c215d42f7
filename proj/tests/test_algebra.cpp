#include <random>

#include "doctest.h"
#include "gerbal/algebra.hpp"
#include "gerbal/cohomology.hpp"

using namespace gerbal;

namespace {

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-8; }

Cyclotomic random_cyclotomic(Int n, std::mt19937_64& rng) {
  Cyclotomic z(n);
  for (Int e = 0; e < n; ++e) {
    const Int c = static_cast<Int>(rng() % 7) - 3;
    z = z + Cyclotomic::integer(n, c) * Cyclotomic::root(n, e);
  }
  return z;
}

// Number of classes of the subgroup `members` of g consisting of theta-regular
// elements: x with theta(x,y) = theta(y,x) for every y in the subgroup
// commuting with x.
template <class Theta>
std::size_t regular_classes(const FiniteGroup& g, const std::vector<Element>& members, Theta theta,
                            Int n) {
  std::vector<bool> seen(g.order(), false);
  std::size_t count = 0;
  for (Element x : members) {
    if (seen[x]) continue;
    for (Element y : members) seen[g.conj(y, x)] = true;
    bool regular = true;
    for (Element y : members)
      if (g.mul(x, y) == g.mul(y, x) && mod(theta(x, y) - theta(y, x), n) != 0) regular = false;
    count += regular;
  }
  return count;
}

std::size_t twisted_group_algebra_center_oracle(const Cochain& theta) {
  const auto& g = theta.group();
  std::vector<Element> all(g.order());
  for (Element x = 0; x < g.order(); ++x) all[x] = x;
  return regular_classes(g, all, [&](Element x, Element y) { return theta(x, y); },
                         theta.modulus());
}

// Sum over class representatives g of the regular classes of C(g) for the
// loop cocycle (x, y) -> psi(g, y, x) (b_(g,x) b_(g,y) = zeta^psi(g,y,x) b_(g,xy)).
std::size_t double_center_oracle(const GroupoidCochain2& psi) {
  const auto& g = psi.group();
  std::size_t total = 0;
  for (const auto& cls : conjugacy_classes(g)) {
    const Element rep = cls.front();
    std::vector<Element> cent;
    for (Element x = 0; x < g.order(); ++x)
      if (g.mul(x, rep) == g.mul(rep, x)) cent.push_back(x);
    total += regular_classes(g, cent, [&](Element x, Element y) { return psi(rep, y, x); },
                             psi.modulus());
  }
  return total;
}

Cochain v4_bilinear() {
  auto v4 = parse_group_spec("product:(cyclic:2,cyclic:2)");
  // element (a1,a2) has index 2*a1 + a2; theta = a2 * b1
  Cochain theta(v4, 2, 2);
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) {
      const Element xy[] = {x, y};
      theta.set(xy, (x % 2) * (y / 2));
    }
  return theta;
}

Cochain s3_sign_cocycle() {
  auto s3 = make_symmetric(3);
  std::vector<Element> sign(6);
  for (Element x = 0; x < 6; ++x) sign[x] = s3->element_order(x) == 2 ? 1 : 0;
  return inflate(standard_cyclic_3cocycle(2, 1), s3, sign);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
  for (Int n = 1; n <= 40; ++n)
    CHECK(static_cast<Int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
}

TEST_CASE("cyclotomic arithmetic") {
  auto z3 = Cyclotomic::root(3, 1);
  CHECK((Cyclotomic::integer(3, 1) + z3 + z3 * z3).is_zero());
  CHECK(Cyclotomic::root(4, 2) == Cyclotomic::integer(4, -1));
  CHECK(Cyclotomic::root(2, 1) == Cyclotomic::integer(1, -1));
  CHECK(Cyclotomic::root(6, 2) == Cyclotomic::root(3, 1));
  CHECK(Cyclotomic::root(6, 1).lift_to(12) == Cyclotomic::root(12, 2));
  CHECK_THROWS_AS(Cyclotomic::root(4, 1).lift_to(6), ValidationError);
  CHECK(Cyclotomic(5).to_string() == "0");

  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Int n = 1 + static_cast<Int>(rng() % 24), m = 1 + static_cast<Int>(rng() % 12);
    auto a = random_cyclotomic(n, rng), b = random_cyclotomic(m, rng);
    CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
    CHECK(close((a + b).to_complex(), a.to_complex() + b.to_complex()));
    CHECK(close((a - b).to_complex(), a.to_complex() - b.to_complex()));
    // equality agrees with numerical equality
    CHECK((a == b) == close(a.to_complex(), b.to_complex()));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("modular embeddings") {
  CHECK(is_prime(2));
  CHECK(is_prime(1000000007));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(1000000007LL * 3));
  for (Int n : {1, 2, 3, 4, 6, 8, 12, 24}) {
    auto primes = admissible_primes(n, 3);
    REQUIRE(primes.size() == 3);
    for (Int p : primes) {
      CHECK(p > (Int{1} << 30));
      CHECK(p < (Int{1} << 31));
      auto emb = make_modular_embedding(n, p);
      CHECK(pow_mod(emb.root, n, p) == 1);
      for (Int d = 1; d < n; ++d)
        if (n % d == 0) CHECK(pow_mod(emb.root, d, p) != 1);
    }
  }
  CHECK_THROWS_AS(make_modular_embedding(4, 7), ValidationError);   // 7 != 1 mod 4
  CHECK_THROWS_AS(make_modular_embedding(4, 21), ValidationError);  // not prime
  // ring homomorphism
  auto emb = make_modular_embedding(12, 13);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    auto a = random_cyclotomic(12, rng), b = random_cyclotomic(4, rng);
    CHECK(emb.embed(a * b) == emb.embed(a) * emb.embed(b) % 13);
    CHECK(emb.embed(a + b) == (emb.embed(a) + emb.embed(b)) % 13);
  }
  CHECK_THROWS_AS(emb.embed(Cyclotomic::root(5, 1)), ValidationError);
}

TEST_CASE("twisted group algebra examples") {
  auto z2 = make_cyclic(2);
  auto plain = twisted_group_algebra(Cochain(z2, 2, 2));
  CHECK(plain.product(1, 1) == ProductEntry{0, 0});

  Cochain theta(z2, 2, 2);
  const Element t11[] = {1, 1};
  theta.set(t11, 1);
  auto s = twisted_group_algebra(theta);
  CHECK(s.product(1, 1) == ProductEntry{0, 1});  // e1^2 = -e0

  // (e1 + e0)(e1 - e0) = e1^2 - e1 e0 + e0 e1 - e0^2 = -e0 - e1 + e1 - e0 = -2 e0
  ExactElement x, y;
  x.coefficients = {{0, Cyclotomic::integer(2, 1)}, {1, Cyclotomic::integer(2, 1)}};
  y.coefficients = {{0, Cyclotomic::integer(2, -1)}, {1, Cyclotomic::integer(2, 1)}};
  auto xy = multiply(s, x, y);
  ExactElement expected;
  expected.coefficients = {{0, Cyclotomic::integer(2, -2)}};
  CHECK(xy == expected);

  auto v4 = twisted_group_algebra(v4_bilinear());
  CHECK(center_dimension_multi(v4).dimension == 1);
  auto z3 = twisted_group_algebra(Cochain(make_cyclic(3), 2, 3));
  CHECK(center_dimension_multi(z3).dimension == 3);

  // non-cocycles and unnormalised cochains are refused
  Cochain bad(make_cyclic(3), 2, 3);
  bad.set(t11, 1);
  CHECK_THROWS_AS(twisted_group_algebra(bad), ValidationError);
  Cochain unnorm(z2, 2, 2, {1, 1, 1, 1});
  CHECK_THROWS_AS(twisted_group_algebra(unnorm), ValidationError);
}

TEST_CASE("twisted Drinfeld double examples") {
  auto z2 = make_cyclic(2);
  auto d0 = twisted_drinfeld_double(Cochain(z2, 3, 2));
  CHECK(d0.dim() == 4);
  CHECK(center_dimension_multi(d0).dimension == 4);
  // commutative
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(d0.product(i, j) == d0.product(j, i));

  auto d1 = twisted_drinfeld_double(standard_cyclic_3cocycle(2, 1));
  const std::size_t a10 = d1.index_of({1, 0}), a11 = d1.index_of({1, 1});
  const std::size_t a00 = d1.index_of({0, 0}), a01 = d1.index_of({0, 1});
  CHECK(d1.product(a11, a11) == ProductEntry{a10, 1});
  CHECK(d1.product(a01, a01) == ProductEntry{a00, 0});
  CHECK_FALSE(d1.product(a01, a11).has_value());
  CHECK(center_dimension_multi(d1).dimension == 4);
  CHECK(check_unit(d1));

  for (const auto& a : {standard_cyclic_3cocycle(3, 1), standard_cyclic_3cocycle(4, 2),
                        s3_sign_cocycle(), Cochain(make_symmetric(3), 3, 6)}) {
    auto d = twisted_drinfeld_double(a);
    CHECK(d.dim() == a.group().order() * a.group().order());
  }
  // untwisted D(S3) has 8 simple modules
  CHECK(center_dimension_multi(twisted_drinfeld_double(Cochain(make_symmetric(3), 3, 2)))
            .dimension == 8);
  CHECK_THROWS_AS(twisted_drinfeld_double(Cochain(z2, 2, 2)), ValidationError);
}

TEST_CASE("centre dimension matches the regular-class count") {
  std::vector<Cochain> thetas{v4_bilinear()};
  for (const char* spec : {"cyclic:4", "product:(cyclic:2,cyclic:2)", "symmetric:3", "dihedral:4",
                           "quaternion:8", "product:(cyclic:2,cyclic:4)"}) {
    auto g = parse_group_spec(spec);
    for (Int n : {2, 4}) {
      auto gens = cocycle_generators(g, 2, n);
      std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 31 + g->order());
      for (int trial = 0; trial < 3; ++trial) {
        Cochain theta = coboundary(random_cochain(g, 1, n, rng()));
        for (const auto& z : gens)
          for (Int r = static_cast<Int>(rng() % 2); r > 0; --r) theta = theta + z;
        thetas.push_back(theta);
      }
    }
  }
  for (const auto& theta : thetas) {
    CAPTURE(theta.group().name());
    auto s = twisted_group_algebra(theta);
    auto r = center_dimension_multi(s);
    CHECK(r.consistent);
    CHECK(r.per_prime.size() == 3);
    CHECK(r.dimension == twisted_group_algebra_center_oracle(theta));
  }

  std::vector<Cochain> alphas{standard_cyclic_3cocycle(2, 1), standard_cyclic_3cocycle(3, 1),
                              standard_cyclic_3cocycle(4, 1), standard_cyclic_3cocycle(4, 2),
                              s3_sign_cocycle()};
  auto z2 = make_cyclic(2);
  auto v4 = make_direct_product(*z2, *z2);
  auto a = standard_cyclic_3cocycle(z2, 1);
  alphas.push_back(external_product(a, a, v4));
  alphas.push_back(external_product(a, Cochain(z2, 3, 2), v4));
  for (const char* spec : {"dihedral:4", "quaternion:8"}) {
    auto g = parse_group_spec(spec);
    auto gens = cocycle_generators(g, 3, 2);
    alphas.push_back(Cochain(g, 3, 2));
    if (!gens.empty()) alphas.push_back(gens.front());
    if (gens.size() > 1) alphas.push_back(gens.back());
  }
  for (const auto& alpha : alphas) {
    CAPTURE(alpha.group().name());
    auto psi = transgress3(alpha);
    auto d = twisted_drinfeld_double(alpha);
    auto r = center_dimension_multi(d);
    CHECK(r.consistent);
    CHECK(r.dimension == double_center_oracle(psi));
  }
}

TEST_CASE("centre dimension guards") {
  auto s = twisted_group_algebra(v4_bilinear());
  CHECK_THROWS_AS(center_dimension(s, make_modular_embedding(2, 3)), ValidationError);  // p small
  CHECK_THROWS_AS(center_dimension(s, make_modular_embedding(3, 1000003)), ValidationError);
  CHECK(center_dimension(s, make_modular_embedding(2, 1000003)) == 1);
  // several primes, including small admissible ones, agree
  auto r = center_dimension_multi(s, {11, 13, 17, 1000003});
  CHECK(r.consistent);
}

TEST_CASE("associativity iff cocycle") {
  std::mt19937_64 rng(8);
  for (const char* spec : {"cyclic:2", "cyclic:3", "cyclic:4", "product:(cyclic:2,cyclic:2)",
                           "symmetric:3", "cyclic:6"}) {
    auto g = parse_group_spec(spec);
    for (int trial = 0; trial < 10; ++trial) {
      const Int n = 2 + static_cast<Int>(rng() % 3);
      Cochain theta = coboundary(random_cochain(g, 1, n, rng()));
      if (trial % 2) {
        const std::size_t idx = rng() % theta.size();
        theta.set_index(idx, theta.at_index(idx) + 1 + static_cast<Int>(rng() % (n - 1)));
      }
      const bool cocycle = is_cocycle(theta).cocycle;
      auto v = check_associativity(group_algebra_table(theta));
      CHECK(v.associative == cocycle);
      CHECK(check_associativity(group_algebra_table(theta), Jobs{4}).witness == v.witness);
    }
  }
  // groupoid algebras
  for (const char* spec : {"cyclic:2", "cyclic:3", "symmetric:3"}) {
    auto g = parse_group_spec(spec);
    for (int trial = 0; trial < 8; ++trial) {
      GroupoidCochain1 xi(g, 3);
      for (Element x = 0; x < g->order(); ++x)
        for (Element s = 1; s < g->order(); ++s) xi.set(x, s, static_cast<Int>(rng() % 3));
      auto psi = groupoid_coboundary(xi);
      if (trial % 2) {
        const Element x = static_cast<Element>(rng() % g->order());
        const Element s = static_cast<Element>(1 + rng() % (g->order() - 1));
        const Element t = static_cast<Element>(1 + rng() % (g->order() - 1));
        psi.set(x, s, t, psi(x, s, t) + 1);
      }
      CHECK(check_associativity(twisted_groupoid_algebra(psi)).associative ==
            is_groupoid_2cocycle(psi).cocycle);
    }
  }
}

TEST_CASE("corrupted hand-built table") {
  auto s = twisted_group_algebra(Cochain(make_cyclic(3), 2, 3));
  std::vector<std::optional<ProductEntry>> products;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) products.push_back(s.product(i, j));
  products[1 * 3 + 2]->e = 1;  // e1 e2 = zeta e0
  StructureConstants bad(s.labels(), 3, products, s.unit());
  auto v = check_associativity(bad);
  CHECK_FALSE(v.associative);
  REQUIRE(v.witness);
  const auto& w = *v.witness;
  auto lhs = multiply(bad, multiply(bad, basis_element(bad, w[0]), basis_element(bad, w[1])),
                      basis_element(bad, w[2]));
  auto rhs = multiply(bad, basis_element(bad, w[0]),
                      multiply(bad, basis_element(bad, w[1]), basis_element(bad, w[2])));
  CHECK_FALSE(lhs == rhs);

  CHECK_THROWS_AS(StructureConstants(s.labels(), 3, {}, {0}), ValidationError);
  products[0]->k = 7;
  CHECK_THROWS_AS(StructureConstants(s.labels(), 3, products, {0}), ValidationError);
}

TEST_CASE("multiply in the three embeddings") {
  auto d = twisted_drinfeld_double(s3_sign_cocycle());
  const std::size_t dim = d.dim();
  auto one = unit_element(d);
  std::mt19937_64 rng(3);
  auto random_element = [&]() {
    ExactElement x;
    for (int i = 0; i < 5; ++i)
      x.coefficients[rng() % dim] = Cyclotomic::integer(2, static_cast<Int>(rng() % 5) + 1);
    return x;
  };
  auto emb = make_modular_embedding(2, admissible_primes(2, 1).front());
  for (int i = 0; i < 30; ++i) {
    auto x = random_element(), y = random_element(), z = random_element();
    CHECK(multiply(d, one, y) == y);
    CHECK(multiply(d, y, one) == y);
    auto xy = multiply(d, x, y);
    CHECK(multiply(d, multiply(d, x, y), z) == multiply(d, x, multiply(d, y, z)));
    CHECK(to_modular(xy, emb) == multiply(d, to_modular(x, emb), to_modular(y, emb), emb));
    auto f = multiply(d, to_float(x), to_float(y), FloatEmbedding{});
    auto fx = to_float(xy);
    CHECK(f.coefficients.size() == fx.coefficients.size());
    for (const auto& [k, c] : fx.coefficients) CHECK(close(f.coefficients[k], c));
  }
  // basis-by-basis products reproduce the table
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      auto p = multiply(d, basis_element(d, i), basis_element(d, j));
      if (auto e = d.product(i, j)) {
        REQUIRE(p.coefficients.size() == 1);
        CHECK(p.coefficients.begin()->first == e->k);
        CHECK(p.coefficients.begin()->second == Cyclotomic::root(2, e->e));
      } else {
        CHECK(p.coefficients.empty());
      }
    }
  ExactElement stray;
  stray.coefficients[dim] = Cyclotomic::integer(2, 1);
  CHECK_THROWS_AS(multiply(d, stray, one), ValidationError);
  CHECK_THROWS_AS(d.index_of({9, 9}), ValidationError);
}

TEST_CASE("abelian doubles split into one block per object") {
  for (const auto& alpha : {standard_cyclic_3cocycle(4, 1), standard_cyclic_3cocycle(3, 2)}) {
    auto d = twisted_drinfeld_double(alpha);
    const std::size_t n = alpha.group().order();
    std::vector<std::size_t> block(n, 0);
    for (std::size_t i = 0; i < d.dim(); ++i) {
      const Element g = d.labels()[i][0];
      ++block[g];
      for (std::size_t j = 0; j < d.dim(); ++j)
        if (d.product(i, j)) CHECK(d.labels()[j][0] == g);
    }
    std::size_t total = 0;
    for (std::size_t b : block) total += b;
    CHECK(total == n * n);
  }
}
