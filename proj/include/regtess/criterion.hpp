#ifndef REGTESS_CRITERION_HPP
#define REGTESS_CRITERION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "regtess/perm.hpp"

namespace regtess::criterion {

/// Largest degree for which involutions are enumerated exhaustively.
inline constexpr unsigned kEnumerationCap = 12;

/// A hyperbolic {p,q}: p-gons, q around each vertex, 1/p + 1/q < 1/2.
class TessellationType {
public:
  /// Throws InvalidInput for p < 3 or q < 3 and NotHyperbolic when
  /// 1/p + 1/q >= 1/2.
  static TessellationType make(int p, int q);

  /// Integer form of 1/p + 1/q < 1/2.
  static bool is_hyperbolic(int p, int q) { return (p - 2) * (q - 2) > 4; }

  unsigned p() const { return p_; }
  unsigned q() const { return q_; }

private:
  TessellationType(unsigned p, unsigned q) : p_(p), q_(q) {}

  unsigned p_;
  unsigned q_;
};

/// An involution sigma of degree p together with m = order(sigma rho).
struct Witness {
  perm::Permutation sigma;
  unsigned m;

  perm::Permutation sigma_rho() const
  {
    return perm::compose(sigma, perm::rho(sigma.degree()));
  }
};

unsigned smallest_prime_factor(unsigned long long q);

/// True iff the least prime factor of q is at most p.
bool decide(TessellationType const &t);

/// The smallest prime factor of q when it is <= p.
std::optional<unsigned> qualifying_prime(TessellationType const &t);

/// Explicit involution sigma in S_p with order(sigma rho) == m.
///
/// Writing p = a*m + r with 0 <= r < m, sigma is the product of the disjoint
/// transpositions
///   (j(m-1)+1, p-(j-1))        for j = 1..a-1
///   (p-a-2k, p-a-2k+1)         for k = 0..r-1
/// where either product may be empty. sigma rho then consists of a
/// m-cycles and r fixed points.
Witness construct_sigma(unsigned p, unsigned m);

/// Every involution of S_p (identity included) in lexicographic order of
/// one-line notation. p must not exceed kEnumerationCap.
std::vector<perm::Permutation> enumerate_involutions(unsigned p);

struct OracleResult {
  std::optional<Witness> witness;
  std::size_t candidates_examined = 0;
};

/// Exhaustive scan over enumerate_involutions(p); stops at the first sigma
/// with (sigma rho)^q == 1.
OracleResult oracle_search_counted(TessellationType const &t);

std::optional<Witness> oracle_search(TessellationType const &t);

} // namespace regtess::criterion

#endif // REGTESS_CRITERION_HPP
