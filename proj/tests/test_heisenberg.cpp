#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "heiscurve/heisenberg.hpp"
#include "heiscurve/nilpotent.hpp"

using namespace heis;

namespace {

FreeWord random_word(std::mt19937& rng, int runs) {
  std::uniform_int_distribution<int> exp_d(-3, 3);
  std::uniform_int_distribution<int> gen_d(0, 1);
  std::vector<Letter> raw;
  for (int i = 0; i < runs; ++i)
    raw.push_back({gen_d(rng) ? Gen::A : Gen::B, exp_d(rng)});
  return FreeWord::reduce(raw);
}

std::vector<HeisParams> valid_triples(long long max_size) {
  std::vector<HeisParams> out;
  for (long long m = 1; m <= max_size; ++m)
    for (long long n = 1; m * n <= max_size; ++n) {
      long long g = std::gcd(m, n);
      for (long long l = 1; l <= g; ++l)
        if (g % l == 0 && m * n * l <= max_size) out.push_back({m, n, l});
    }
  return out;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(Heisenberg({4, 2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Heisenberg({0, 1, 1}), std::invalid_argument);
  CHECK_NOTHROW(Heisenberg({4, 2, 2}));
}

TEST_CASE("group law basics") {
  Heisenberg h({3, 3, 3});
  CHECK(h.mul(h.identity(), h.x()) == h.x());
  CHECK(h.mul(h.x(), h.y()) == h.make(1, 0, 1));
  CHECK(h.mul(h.y(), h.x()) == h.make(1, -1, 1));
  // [x, y] = z
  HeisElement c = h.mul(h.mul(h.x(), h.y()), h.mul(h.inv(h.x()), h.inv(h.y())));
  CHECK(c == h.z());
  CHECK(h.mul(h.make(1, 0, 1), h.make(1, 0, 0)) == h.make(2, -1, 1));
  CHECK(h.mul(h.make(1, 0, 1), h.inv(h.make(1, 0, 1))) == h.identity());
}

TEST_CASE("associativity, exhaustively for small groups") {
  for (const HeisParams& p : valid_triples(64)) {
    Heisenberg h(p);
    auto elems = h.elements();
    bool ok = true;
    for (const auto& a : elems)
      for (const auto& b : elems)
        for (const auto& c : elems)
          ok = ok && h.mul(h.mul(a, b), c) == h.mul(a, h.mul(b, c));
    CAPTURE(p.m);
    CAPTURE(p.n);
    CAPTURE(p.l);
    CHECK(ok);
  }
}

TEST_CASE("powers: closed form vs iteration") {
  for (const HeisParams& p : valid_triples(60)) {
    Heisenberg h(p);
    std::mt19937 rng(p.m * 100 + p.n * 10 + p.l);
    std::uniform_int_distribution<long long> d(0, h.size() - 1);
    for (int t = 0; t < 10; ++t) {
      HeisElement g = h.element_at(d(rng));
      for (long long k : {0LL, 1LL, 2LL, 5LL, 7LL, -3LL})
        CHECK(h.pow(g, k) == h.pow_iterative(g, k));
    }
  }
}

TEST_CASE("from_word is a homomorphism and matches collection") {
  std::mt19937 rng(808);
  Heisenberg h({3, 3, 3});
  for (int t = 0; t < 100; ++t) {
    FreeWord u = random_word(rng, 6), v = random_word(rng, 6);
    CHECK(h.from_word(u * v) == h.mul(h.from_word(u), h.from_word(v)));
    // image factors through the class-3 quotient
    Class3Element c = collect(u);
    HeisElement viac =
        h.mul(h.mul(h.pow(h.x(), mpz_class(c.a % 3).get_si()),
                    h.pow(h.z(), mpz_class(c.c % 3).get_si())),
              h.pow(h.y(), mpz_class(c.b % 3).get_si()));
    // x^a z^c y^b with the same normal-form ordering
    CHECK(h.from_word(u) == viac);
  }
  CHECK(h.from_word(word_C()) == h.z());
  CHECK(h.from_word(word_A().pow(3)) == h.identity());
}

TEST_CASE("orders") {
  Heisenberg h333({3, 3, 3});
  CHECK(h333.order(h333.identity()) == 1);
  CHECK(h333.order(h333.mul(h333.x(), h333.y())) == 3);
  Heisenberg h222({2, 2, 2});
  CHECK(h222.order(h222.mul(h222.inv(h222.x()), h222.y())) == 4);
  for (const HeisParams& p : valid_triples(216)) {
    Heisenberg h(p);
    long long e = h.exponent_closed_form();
    bool ok = true;
    for (const auto& g : h.elements()) ok = ok && e % h.order(g) == 0;
    CHECK(ok);
  }
}

TEST_CASE("exponent closed form vs brute force") {
  for (long long m = 1; m <= 12; ++m)
    for (long long n = 1; n <= 12; ++n) {
      if (std::lcm(m, n) > 12) continue;
      long long g = std::gcd(m, n);
      for (long long l = 1; l <= g; ++l) {
        if (g % l != 0) continue;
        Heisenberg h({m, n, l});
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(l);
        CHECK(h.exponent() == h.exponent_closed_form());
      }
    }
  CHECK(Heisenberg({3, 3, 3}).exponent() == 3);
  CHECK(Heisenberg({2, 2, 2}).exponent() == 4);
  CHECK(Heisenberg({4, 2, 2}).exponent() == 4);
}

TEST_CASE("center order") {
  CHECK(Heisenberg({3, 3, 3}).center_order() == 3);
  CHECK(Heisenberg({5, 5, 5}).center_order() == 5);
  for (long long n : {2LL, 3LL, 4LL, 5LL})
    CHECK(Heisenberg({n, n, 1}).center_order() == n * n);
}

TEST_CASE("coset actions") {
  Heisenberg h333({3, 3, 3});
  CHECK(h333.coset_action({}).degree == 27);
  CHECK(h333.regular_action().degree == 27);

  Heisenberg h555({5, 5, 5});
  PermAction c5 = h555.coset_action({h555.y()});
  CHECK(c5.degree == 25);
  CHECK(c5.transitive());

  for (long long n : {3LL, 4LL, 5LL}) {
    Heisenberg h({n, n, 1});
    CHECK(h.coset_action({h.x()}).degree == static_cast<std::size_t>(n));
  }
}

TEST_CASE("kernel of the word map is Phi'_N") {
  std::mt19937 rng(616);
  for (long long n : {3LL, 4LL, 5LL}) {
    LevelParams lp = LevelParams::for_level(n);
    Heisenberg h({n, n, lp.n_prime});
    int in_count = 0;
    for (int t = 0; t < 300; ++t) {
      FreeWord w = random_word(rng, 8);
      if (t % 3 == 0) {
        FreeWord u = random_word(rng, 3), v = random_word(rng, 3);
        w = u.pow(n) * FreeWord::commutator(u, v).pow(lp.n_prime) * w.pow(n);
      }
      Membership m = membership(w, lp);
      bool deep = m == Membership::phi_prime ||
                  m == Membership::phi_double_prime;
      bool in_kernel = h.from_word(w) == h.identity();
      if (in_kernel) ++in_count;
      CHECK(deep == in_kernel);
    }
    CHECK(in_count > 0);  // the sample actually hits the kernel
  }
}
