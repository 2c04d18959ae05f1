#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "regtess/criterion.hpp"
#include "regtess/errors.hpp"

using namespace regtess;
using namespace regtess::criterion;
using perm::Permutation;

namespace {

/// T(n) = T(n-1) + (n-1) T(n-2), T(0) = T(1) = 1.
std::size_t telephone(unsigned n)
{
  std::size_t a = 1, b = 1;
  for (unsigned k = 2; k <= n; ++k) {
    auto const c = b + (k - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

bool has_small_divisor(unsigned q, unsigned p)
{
  for (unsigned d = 2; d <= p; ++d) {
    if (q % d == 0)
      return true;
  }
  return false;
}

} // namespace

TEST_CASE("tessellation type guards the hyperbolic domain")
{
  CHECK_NOTHROW(TessellationType::make(3, 7));
  CHECK_NOTHROW(TessellationType::make(4, 5));
  CHECK_THROWS_AS(TessellationType::make(3, 5), NotHyperbolic);
  CHECK_THROWS_AS(TessellationType::make(3, 6), NotHyperbolic);
  CHECK_THROWS_AS(TessellationType::make(4, 4), NotHyperbolic);
  CHECK_THROWS_AS(TessellationType::make(6, 3), NotHyperbolic);
  CHECK_THROWS_AS(TessellationType::make(2, 9), InvalidInput);

  // The integer test matches the rational one across a grid.
  for (int p = 3; p <= 20; ++p) {
    for (int q = 3; q <= 20; ++q)
      CHECK(TessellationType::is_hyperbolic(p, q) == (2 * (p + q) < p * q));
  }
}

TEST_CASE("smallest prime factor")
{
  CHECK(smallest_prime_factor(7) == 7);
  CHECK(smallest_prime_factor(6) == 2);
  CHECK(smallest_prime_factor(35) == 5);
  CHECK(smallest_prime_factor(2) == 2);
  CHECK(smallest_prime_factor(49) == 7);
  CHECK_THROWS_AS(smallest_prime_factor(1), InvalidInput);
}

TEST_CASE("decide")
{
  CHECK_FALSE(decide(TessellationType::make(3, 7)));
  CHECK(decide(TessellationType::make(3, 8)));
  CHECK_FALSE(decide(TessellationType::make(4, 5)));
  CHECK(qualifying_prime(TessellationType::make(3, 8)) == 2u);
  CHECK(qualifying_prime(TessellationType::make(5, 25)) == 5u);

  // Not monotone in q.
  CHECK(decide(TessellationType::make(3, 8)) !=
        decide(TessellationType::make(3, 7)));
  CHECK(decide(TessellationType::make(4, 9)) !=
        decide(TessellationType::make(4, 11)));
}

TEST_CASE("construct_sigma examples")
{
  auto const w52 = construct_sigma(5, 2);
  CHECK(w52.sigma == Permutation::from_cycles(5, {{2, 5}, {3, 4}}));
  CHECK(w52.sigma_rho() == Permutation::from_cycles(5, {{1, 5}, {2, 4}}));
  CHECK(perm::order(w52.sigma_rho()) == 2);

  auto const w55 = construct_sigma(5, 5);
  CHECK(w55.sigma.is_identity());
  CHECK(w55.sigma_rho() == perm::rho(5));

  auto const w73 = construct_sigma(7, 3);
  CHECK(w73.sigma == Permutation::from_cycles(7, {{3, 7}, {5, 6}}));
  CHECK(perm::cycle_decomposition(w73.sigma_rho()) ==
        std::vector<perm::Cycle>{{1, 2, 7}, {3, 4, 6}, {5}});
  CHECK(w73.m == 3);

  CHECK_THROWS_AS(construct_sigma(5, 6), InvalidInput);
  CHECK_THROWS_AS(construct_sigma(5, 1), InvalidInput);
}

TEST_CASE("construct_sigma for all 2 <= m <= p <= 12")
{
  for (unsigned p = 3; p <= 12; ++p) {
    for (unsigned m = 2; m <= p; ++m) {
      CAPTURE(p);
      CAPTURE(m);
      auto const w = construct_sigma(p, m);
      CHECK(perm::is_involution(w.sigma));
      CHECK(perm::order(w.sigma_rho()) == m);

      bool saw_m = false;
      for (auto const &c : perm::cycle_decomposition(w.sigma_rho())) {
        CHECK((c.size() == m || c.size() == 1));
        saw_m = saw_m || c.size() == m;
      }
      CHECK(saw_m);

      // The transpositions are disjoint: a involution's 2-cycles, counted
      // against the formula's (a - 1) + r factors.
      unsigned const a = p / m, r = p % m;
      std::size_t two_cycles = 0;
      for (auto const &c : perm::cycle_decomposition(w.sigma))
        two_cycles += c.size() == 2;
      CHECK(two_cycles == (a - 1) + r);
    }
  }
}

TEST_CASE("involution enumeration")
{
  auto const three = enumerate_involutions(3);
  REQUIRE(three.size() == 4);
  // One-line order: [1,2,3] < [1,3,2] < [2,1,3] < [3,2,1].
  CHECK(three[0].is_identity());
  CHECK(three[1] == Permutation::from_cycles(3, {{2, 3}}));
  CHECK(three[2] == Permutation::from_cycles(3, {{1, 2}}));
  CHECK(three[3] == Permutation::from_cycles(3, {{1, 3}}));

  CHECK(enumerate_involutions(4).size() == 10);
  CHECK(enumerate_involutions(1).size() == 1);

  for (unsigned n = 1; n <= 10; ++n) {
    auto const all = enumerate_involutions(n);
    CHECK(all.size() == telephone(n));
    std::set<Permutation> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](Permutation const &a, Permutation const &b) {
                           return a.images() < b.images();
                         }));
    for (auto const &x : all)
      CHECK(perm::is_involution(x));
  }

  CHECK_THROWS_AS(enumerate_involutions(13), LimitExceeded);
}

TEST_CASE("oracle search")
{
  auto const none = oracle_search_counted(TessellationType::make(3, 7));
  CHECK_FALSE(none.witness.has_value());
  CHECK(none.candidates_examined == 4);

  auto const w36 = oracle_search(TessellationType::make(3, 8));
  REQUIRE(w36.has_value());
  CHECK(perm::is_involution(w36->sigma));

  // (3,6) is Euclidean, so the identity-first example is exercised on the
  // hyperbolic (3,9): identity comes first and rho has order 3 | 9.
  auto const w39 = oracle_search(TessellationType::make(3, 9));
  REQUIRE(w39.has_value());
  CHECK(w39->sigma.is_identity());
  CHECK(w39->m == 3);
}

TEST_CASE("three routes agree on the sweep")
{
  for (int p = 3; p <= 8; ++p) {
    for (int q = 3; q <= 30; ++q) {
      if (!TessellationType::is_hyperbolic(p, q))
        continue;
      CAPTURE(p);
      CAPTURE(q);
      auto const t = TessellationType::make(p, q);
      auto const oracle = oracle_search(t);
      CHECK(decide(t) == oracle.has_value());
      CHECK(decide(t) == has_small_divisor(q, p));
      if (oracle) {
        CHECK(perm::is_involution(oracle->sigma));
        CHECK(q % oracle->m == 0);
        CHECK(perm::power(oracle->sigma_rho(), q).is_identity());
      }
    }
  }
}
