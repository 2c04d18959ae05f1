#include "regtess/criterion.hpp"

#include <stdexcept>
#include <string>

#include "regtess/errors.hpp"

namespace regtess::criterion {

TessellationType TessellationType::make(int p, int q)
{
  if (p < 3 || q < 3)
    throw InvalidInput("p and q must both be >= 3 (p=" + std::to_string(p) +
                       ", q=" + std::to_string(q) + ")");
  if (!is_hyperbolic(p, q))
    throw NotHyperbolic("not hyperbolic: 1/p+1/q ≥ 1/2 (p=" +
                        std::to_string(p) + ", q=" + std::to_string(q) + ")");
  return TessellationType(static_cast<unsigned>(p), static_cast<unsigned>(q));
}

unsigned smallest_prime_factor(unsigned long long q)
{
  if (q < 2)
    throw InvalidInput("smallest_prime_factor requires q >= 2, got " +
                       std::to_string(q));

  for (unsigned long long d = 2; d * d <= q; ++d) {
    if (q % d == 0)
      return static_cast<unsigned>(d);
  }
  return static_cast<unsigned>(q);
}

std::optional<unsigned> qualifying_prime(TessellationType const &t)
{
  auto const prime = smallest_prime_factor(t.q());
  if (prime <= t.p())
    return prime;
  return std::nullopt;
}

bool decide(TessellationType const &t)
{
  return qualifying_prime(t).has_value();
}

Witness construct_sigma(unsigned p, unsigned m)
{
  if (p < 3)
    throw InvalidInput("construct_sigma requires p >= 3, got " +
                       std::to_string(p));
  if (m < 2 || m > p)
    throw InvalidInput("construct_sigma requires 2 <= m <= p (p=" +
                       std::to_string(p) + ", m=" + std::to_string(m) + ")");

  unsigned const a = p / m;
  unsigned const r = p % m;

  std::vector<perm::Cycle> transpositions;
  for (unsigned j = 1; j + 1 <= a; ++j)
    transpositions.push_back({j * (m - 1) + 1, p - (j - 1)});
  for (unsigned k = 0; k < r; ++k)
    transpositions.push_back({p - a - 2 * k, p - a - 2 * k + 1});

  auto sigma = perm::Permutation::from_cycles(p, transpositions);
  Witness w{std::move(sigma), m};

  if (perm::order(w.sigma_rho()) != m)
    throw std::logic_error("construct_sigma produced order " +
                        std::to_string(perm::order(w.sigma_rho())) +
                        " instead of " + std::to_string(m));
  return w;
}

namespace {

void extend_involutions(std::vector<perm::Point> &images, unsigned next,
                        std::vector<perm::Permutation> &out)
{
  auto const p = static_cast<unsigned>(images.size());
  while (next <= p && images[next - 1] != 0)
    ++next;

  if (next > p) {
    out.push_back(perm::Permutation::from_images(images));
    return;
  }

  // Fixing `next` gives the smaller image at position `next`, so it precedes
  // every pairing (next j) with j > next.
  images[next - 1] = next;
  extend_involutions(images, next + 1, out);
  images[next - 1] = 0;

  for (unsigned j = next + 1; j <= p; ++j) {
    if (images[j - 1] != 0)
      continue;
    images[next - 1] = j;
    images[j - 1] = next;
    extend_involutions(images, next + 1, out);
    images[next - 1] = 0;
    images[j - 1] = 0;
  }
}

} // namespace

std::vector<perm::Permutation> enumerate_involutions(unsigned p)
{
  if (p < 1)
    throw InvalidInput("enumerate_involutions requires p >= 1");
  if (p > kEnumerationCap)
    throw LimitExceeded("enumerate_involutions is capped at p <= " +
                        std::to_string(kEnumerationCap) + ", got " +
                        std::to_string(p));

  std::vector<perm::Point> images(p, 0);
  std::vector<perm::Permutation> out;
  extend_involutions(images, 1, out);
  return out;
}

OracleResult oracle_search_counted(TessellationType const &t)
{
  OracleResult result;
  auto const rho = perm::rho(t.p());

  for (auto const &sigma : enumerate_involutions(t.p())) {
    ++result.candidates_examined;
    auto const ord = perm::order(perm::compose(sigma, rho));
    if (t.q() % ord == 0) {
      result.witness = Witness{sigma, static_cast<unsigned>(ord)};
      break;
    }
  }
  return result;
}

std::optional<Witness> oracle_search(TessellationType const &t)
{
  return oracle_search_counted(t).witness;
}

} // namespace regtess::criterion
