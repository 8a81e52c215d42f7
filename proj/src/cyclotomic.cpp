#include "gerbal/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "gerbal/error.hpp"

namespace gerbal {

namespace {

// Exact quotient of a by the monic polynomial b.
std::vector<Int> divide_exact(std::vector<Int> a, const std::vector<Int>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<Int> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const Int c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

// Remainder of `powers` (coefficients of 1, x, x^2, ...) modulo phi.
std::vector<Int> reduce(std::vector<Int> powers, const std::vector<Int>& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = powers.size(); i-- > d;) {
    const Int c = powers[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) powers[i - d + j] -= c * phi[j];
  }
  powers.resize(d, 0);
  return powers;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(Int n) {
  if (n < 1) throw ValidationError("cyclotomic order must be positive");
  static std::mutex lock;
  static std::map<Int, std::vector<Int>> cache;
  {
    std::lock_guard<std::mutex> g(lock);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Int> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (Int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> g(lock);
  cache.emplace(n, p);
  return p;
}

Int euler_phi(Int n) {
  Int r = n;
  for (Int q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      r -= r / q;
    }
  if (n > 1) r -= r / n;
  return r;
}

Cyclotomic::Cyclotomic(Int n) : n_(n) {
  if (n < 1) throw ValidationError("cyclotomic order must be positive");
  c_.assign(static_cast<std::size_t>(euler_phi(n)), 0);
}

Cyclotomic Cyclotomic::from_powers(Int n, const std::vector<Int>& powers) {
  return Cyclotomic(n, reduce(powers, cyclotomic_polynomial(n)));
}

Cyclotomic Cyclotomic::integer(Int n, Int value) {
  Cyclotomic z(n);
  z.c_[0] = value;
  return z;
}

Cyclotomic Cyclotomic::root(Int n, Int e) {
  if (n < 1) throw ValidationError("cyclotomic order must be positive");
  std::vector<Int> powers(static_cast<std::size_t>(n), 0);
  powers[static_cast<std::size_t>(mod(e, n))] = 1;
  return from_powers(n, powers);
}

bool Cyclotomic::is_zero() const noexcept {
  for (Int x : c_)
    if (x != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::lift_to(Int m) const {
  if (m % n_ != 0)
    throw ValidationError("cannot view Z[zeta_" + std::to_string(n_) + "] inside Z[zeta_" +
                          std::to_string(m) + "]");
  if (m == n_) return *this;
  std::vector<Int> powers(static_cast<std::size_t>(m), 0);
  const Int step = m / n_;
  for (std::size_t i = 0; i < c_.size(); ++i) powers[i * static_cast<std::size_t>(step)] = c_[i];
  return from_powers(m, powers);
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0)
      z += static_cast<double>(c_[i]) *
           std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_));
  return z;
}

Int Cyclotomic::to_modular(Int p, Int root) const {
  Int acc = 0, power = 1;
  for (Int c : c_) {
    acc = mod(acc + mod(c, p) * power, p);
    power = power * root % p;
  }
  return acc;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Int c = c_[i];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Int a = c < 0 ? -c : c;
    if (i == 0) {
      out += std::to_string(a);
      continue;
    }
    if (a != 1) out += std::to_string(a) + "*";
    out += "z" + std::to_string(n_);
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (Int& x : r.c_) x = -x;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    const Int m = lcm(a.n_, b.n_);
    return a.lift_to(m) + b.lift_to(m);
  }
  Cyclotomic r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    const Int m = lcm(a.n_, b.n_);
    return a.lift_to(m) * b.lift_to(m);
  }
  if (a.c_.empty() || b.c_.empty()) return Cyclotomic(a.n_);
  std::vector<Int> prod(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != 0)
      for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
  return Cyclotomic::from_powers(a.n_, prod);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    const Int m = lcm(a.n_, b.n_);
    return a.lift_to(m).c_ == b.lift_to(m).c_;
  }
  return a.c_ == b.c_;
}

Int pow_mod(Int a, Int e, Int m) noexcept {
  using U = unsigned __int128;
  Int r = 1 % m;
  a = mod(a, m);
  while (e > 0) {
    if (e & 1) r = static_cast<Int>(static_cast<U>(r) * static_cast<U>(a) % static_cast<U>(m));
    a = static_cast<Int>(static_cast<U>(a) * static_cast<U>(a) % static_cast<U>(m));
    e >>= 1;
  }
  return r;
}

bool is_prime(Int p) noexcept {
  if (p < 2) return false;
  for (Int q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (p % q == 0) return p == q;
  }
  Int d = p - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  using U = unsigned __int128;
  for (Int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = pow_mod(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = static_cast<Int>(static_cast<U>(x) * static_cast<U>(x) % static_cast<U>(p));
      if (x == p - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

Int ModularEmbedding::zeta(Int e) const { return pow_mod(root, mod(e, n), p); }

Int ModularEmbedding::embed(const Cyclotomic& z) const {
  if (n % z.order() != 0)
    throw ValidationError("scalar of order " + std::to_string(z.order()) +
                          " does not live in the modular embedding of order " + std::to_string(n));
  return z.to_modular(p, pow_mod(root, n / z.order(), p));
}

ModularEmbedding make_modular_embedding(Int n, Int p) {
  if (n < 1) throw ValidationError("root order must be positive");
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if ((p - 1) % n != 0)
    throw ValidationError("prime " + std::to_string(p) + " is not 1 mod " + std::to_string(n));
  std::vector<Int> factors;
  Int m = p - 1;
  for (Int q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) factors.push_back(m);
  Int gen = 1;
  for (Int a = 2; a < p; ++a) {
    bool ok = true;
    for (Int q : factors)
      if (pow_mod(a, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen = a;
      break;
    }
  }
  return {n, p, pow_mod(gen, (p - 1) / n, p)};
}

std::vector<Int> admissible_primes(Int n, std::size_t count, Int above) {
  std::vector<Int> out;
  const Int limit = Int{1} << 31;
  for (Int p = (above / n + 1) * n + 1; p < limit && out.size() < count; p += n)
    if (is_prime(p)) out.push_back(p);
  if (out.size() < count)
    throw UnsupportedError("not enough primes = 1 mod " + std::to_string(n) + " below 2^31");
  return out;
}

}  // namespace gerbal
