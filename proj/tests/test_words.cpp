#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "heiscurve/words.hpp"

using namespace heis;

namespace {

// letter-by-letter stack reducer, independent of the run-length path
std::vector<std::pair<Gen, int>> naive_reduce(const FreeWord& w) {
  std::vector<std::pair<Gen, int>> stack;
  for (const Letter& l : w.letters()) {
    long long e = l.exp < 0 ? -l.exp : l.exp;
    int s = l.exp < 0 ? -1 : 1;
    for (long long i = 0; i < e; ++i) {
      if (!stack.empty() && stack.back().first == l.gen &&
          stack.back().second == -s)
        stack.pop_back();
      else
        stack.emplace_back(l.gen, s);
    }
  }
  return stack;
}

FreeWord random_word(std::mt19937& rng, int runs) {
  std::uniform_int_distribution<int> exp_d(-3, 3);
  std::uniform_int_distribution<int> gen_d(0, 1);
  std::vector<Letter> raw;
  for (int i = 0; i < runs; ++i)
    raw.push_back({gen_d(rng) ? Gen::A : Gen::B, exp_d(rng)});
  return FreeWord::reduce(raw);
}

}  // namespace

TEST_CASE("reduction basics") {
  CHECK(FreeWord::reduce({{Gen::A, 1}, {Gen::A, -1}}).empty());
  CHECK(FreeWord::reduce({{Gen::A, 2}, {Gen::B, 0}, {Gen::A, 3}}) ==
        FreeWord::gen(Gen::A, 5));
  CHECK((word_C() * word_C().inverse()).empty());
  CHECK(FreeWord::parse("ABab") == word_C());
  CHECK(FreeWord::parse("ABab").str() == "ABab");
}

TEST_CASE("reduce matches the letterwise oracle and is idempotent") {
  std::mt19937 rng(314);
  for (int t = 0; t < 200; ++t) {
    FreeWord w = random_word(rng, 12);
    auto oracle = naive_reduce(w);
    // re-run reduce over the reduced letters: must be a fixed point
    CHECK(FreeWord::reduce(w.letters()) == w);
    long long olen = static_cast<long long>(oracle.size());
    CHECK(w.length() == olen);
    // same word letter by letter
    std::size_t k = 0;
    bool same = true;
    for (const Letter& l : w.letters()) {
      long long e = l.exp < 0 ? -l.exp : l.exp;
      int s = l.exp < 0 ? -1 : 1;
      for (long long i = 0; i < e; ++i, ++k)
        same = same && k < oracle.size() && oracle[k] ==
                           std::make_pair(l.gen, s);
    }
    CHECK(same);
  }
}

TEST_CASE("group law sanity on random words") {
  std::mt19937 rng(2718);
  for (int t = 0; t < 100; ++t) {
    FreeWord u = random_word(rng, 5), v = random_word(rng, 5),
             w = random_word(rng, 5);
    CHECK((u * v) * w == u * (v * w));
    CHECK((u * u.inverse()).empty());
    CHECK(u.pow(3) == u * u * u);
    CHECK(u.pow(-2) == (u * u).inverse());
  }
}

TEST_CASE("exponent sums") {
  CHECK(word_C().exponent_sums() == std::make_pair(0LL, 0LL));
  CHECK((FreeWord::gen(Gen::A, 2) * FreeWord::gen(Gen::B, 3)).exponent_sums() ==
        std::make_pair(2LL, 3LL));
  std::mt19937 rng(99);
  for (int t = 0; t < 100; ++t) {
    FreeWord u = random_word(rng, 6), v = random_word(rng, 6);
    auto [ua, ub] = u.exponent_sums();
    auto [va, vb] = v.exponent_sums();
    CHECK((u * v).exponent_sums() == std::make_pair(ua + va, ub + vb));
    CHECK(FreeWord::commutator(u, v).exponent_sums() ==
          std::make_pair(0LL, 0LL));
  }
}

TEST_CASE("product relation between the Phi_N generators") {
  for (long long n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(verify_phi_relation(n));
  }
}

TEST_CASE("conjugation expansion of A B^N A^-1 B^-N") {
  for (long long n : {1LL, 2LL, 3LL, 5LL, 6LL}) {
    CAPTURE(n);
    CHECK(verify_conjugation_expansion(n));
  }
}
