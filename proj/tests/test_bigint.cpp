#include <random>

#include "doctest.h"

#include "coxaff/bigint.hpp"
#include "coxaff/rational.hpp"

using coxaff::BigInt;
using coxaff::Rational;

TEST_CASE("bigint basics") {
  CHECK(BigInt(0).is_zero());
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-1).to_string() == "-1");
  CHECK((BigInt(1) + BigInt(-1)).is_zero());
  CHECK(BigInt::from_string("-00012").to_string() == "-12");
  CHECK(BigInt(1000000007LL).to_string() == "1000000007");
  CHECK((BigInt::from_string("18446744073709551616") -
         BigInt::from_string("18446744073709551615")).is_one());
}

namespace {
std::string i128_str(__int128 p) {
  bool neg = p < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(p) : static_cast<unsigned __int128>(p);
  std::string s;
  while (u) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (s.empty()) s = "0";
  if (neg && s != "0") s.insert(s.begin(), '-');
  return s;
}
}  // namespace

TEST_CASE("bigint agrees with native arithmetic on random 64-bit operands") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 2000; ++t) {
    long long a = static_cast<long long>(rng() >> (1 + rng() % 40));
    long long b = static_cast<long long>(rng() >> (1 + rng() % 40));
    if (rng() % 2) a = -a;
    if (rng() % 2) b = -b;
    BigInt A(a), B(b);
    CHECK((A + B).to_string() == i128_str(static_cast<__int128>(a) + b));
    CHECK((A - B).to_string() == i128_str(static_cast<__int128>(a) - b));
    CHECK((A * B).to_string() == i128_str(static_cast<__int128>(a) * b));
    if (b != 0) {
      CHECK((A / B).to_string() == std::to_string(a / b));
      CHECK((A % B).to_string() == std::to_string(a % b));
    }
  }
}

TEST_CASE("bigint division identity on large operands") {
  std::mt19937_64 rng(7);
  auto big = [&rng](int limbs) {
    BigInt x(1);
    for (int i = 0; i < limbs; ++i) x = x * BigInt(static_cast<long long>(rng() | 1));
    return rng() % 2 ? -x : x;
  };
  for (int t = 0; t < 300; ++t) {
    BigInt a = big(1 + static_cast<int>(rng() % 4));
    BigInt b = big(1 + static_cast<int>(rng() % 3));
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    CHECK((a * b) / b == a);
    CHECK(((a * b) % b).is_zero());
  }
}

TEST_CASE("bigint gcd") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(-18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(0), BigInt(-5)) == BigInt(5));
  BigInt a = BigInt::from_string("123456789012345678901234567890");
  CHECK(BigInt::gcd(a * BigInt(77), a * BigInt(34)) == a);
}

TEST_CASE("rational normalization and field axioms") {
  CHECK(Rational(BigInt(2), BigInt(-4)).to_string() == "-1/2");
  CHECK(Rational(BigInt(0), BigInt(-7)) == Rational(0));
  CHECK(Rational::from_string("6/4") == Rational(BigInt(3), BigInt(2)));
  std::mt19937_64 rng(11);
  auto rnd = [&rng] {
    long long n = static_cast<long long>(rng() % 2000) - 1000;
    long long d = 1 + static_cast<long long>(rng() % 60);
    return Rational(BigInt(n), BigInt(d));
  };
  for (int t = 0; t < 500; ++t) {
    Rational a = rnd(), b = rnd();
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("rational ordering and hashing") {
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(-2) < Rational(BigInt(1), BigInt(9)));
  CHECK(Rational(BigInt(2), BigInt(4)).hash() == Rational(BigInt(1), BigInt(2)).hash());
}
