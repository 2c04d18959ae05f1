#ifndef REGTESS_PERM_HPP
#define REGTESS_PERM_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "regtess/errors.hpp"

namespace regtess::perm {

using Point = unsigned;
using Cycle = std::vector<Point>;

class PermError : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

/// Element of S_p in one-line notation on the points 1..p.
///
/// Storage is 0-based internally; every public accessor speaks 1-based
/// points. Values are immutable once constructed.
class Permutation {
public:
  /// Identity on `degree` points.
  static Permutation identity(unsigned degree);

  /// Builds from 1-based one-line images. Throws PermError unless the
  /// images form a bijection on 1..images.size().
  static Permutation from_images(std::span<Point const> images);

  /// Builds from disjoint cycles of 1-based points; unlisted points are fixed.
  static Permutation from_cycles(unsigned degree,
                                 std::vector<Cycle> const &cycles);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  /// Image of the 1-based point x.
  Point operator()(Point x) const;

  /// 1-based one-line notation.
  std::vector<Point> images() const;

  bool is_identity() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  explicit Permutation(std::vector<unsigned> zero_based)
      : images_(std::move(zero_based)) {}

  std::vector<unsigned> images_;
};

/// The p-cycle (1 2 ... p).
Permutation rho(unsigned p);

/// c(i) = a(b(i)): the right factor is applied first.
Permutation compose(Permutation const &a, Permutation const &b);

Permutation inverse(Permutation const &x);

/// x^n for n >= 0.
Permutation power(Permutation const &x, unsigned long long n);

/// Least n >= 1 with x^n = identity (lcm of the cycle lengths).
unsigned long long order(Permutation const &x);

/// Cycles starting at their minimum, sorted by minimum, fixed points
/// included as 1-cycles.
std::vector<Cycle> cycle_decomposition(Permutation const &x);

bool is_involution(Permutation const &x);

/// Disjoint-cycle string with fixed points omitted, "()" for the identity.
std::string to_cycle_string(Permutation const &x);

} // namespace regtess::perm

#endif // REGTESS_PERM_HPP
