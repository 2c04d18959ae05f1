#include "regtess/perm.hpp"

#include <numeric>

namespace regtess::perm {

Permutation Permutation::identity(unsigned degree)
{
  if (degree == 0)
    throw PermError("permutation degree must be at least 1");

  std::vector<unsigned> v(degree);
  std::iota(v.begin(), v.end(), 0u);
  return Permutation(std::move(v));
}

Permutation Permutation::from_images(std::span<Point const> images)
{
  if (images.empty())
    throw PermError("permutation degree must be at least 1");

  auto const n = images.size();
  std::vector<unsigned> v(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    Point const y = images[i];
    if (y < 1 || y > n)
      throw PermError("image " + std::to_string(y) + " outside 1.." +
                      std::to_string(n));
    if (seen[y - 1])
      throw PermError("image " + std::to_string(y) + " repeated");
    seen[y - 1] = true;
    v[i] = y - 1;
  }
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(unsigned degree,
                                     std::vector<Cycle> const &cycles)
{
  auto result = identity(degree).images_;
  std::vector<bool> used(degree, false);

  for (auto const &cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point const x = cycle[k];
      Point const y = cycle[(k + 1) % cycle.size()];
      if (x < 1 || x > degree)
        throw PermError("cycle point " + std::to_string(x) + " outside 1.." +
                        std::to_string(degree));
      if (used[x - 1])
        throw PermError("cycles are not disjoint at point " +
                        std::to_string(x));
      used[x - 1] = true;
      result[x - 1] = y - 1;
    }
  }
  return Permutation(std::move(result));
}

Point Permutation::operator()(Point x) const
{
  if (x < 1 || x > degree())
    throw PermError("point " + std::to_string(x) + " outside 1.." +
                    std::to_string(degree()));
  return images_[x - 1] + 1;
}

std::vector<Point> Permutation::images() const
{
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[i] = images_[i] + 1;
  return out;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

Permutation rho(unsigned p)
{
  if (p < 3)
    throw PermError("rho requires degree p >= 3, got " + std::to_string(p));

  std::vector<Point> images(p);
  for (unsigned i = 1; i <= p; ++i)
    images[i - 1] = i % p + 1;
  return Permutation::from_images(images);
}

Permutation compose(Permutation const &a, Permutation const &b)
{
  if (a.degree() != b.degree())
    throw PermError("degree mismatch: " + std::to_string(a.degree()) +
                    " vs " + std::to_string(b.degree()));

  std::vector<Point> images(a.degree());
  for (Point i = 1; i <= a.degree(); ++i)
    images[i - 1] = a(b(i));
  return Permutation::from_images(images);
}

Permutation inverse(Permutation const &x)
{
  std::vector<Point> images(x.degree());
  for (Point i = 1; i <= x.degree(); ++i)
    images[x(i) - 1] = i;
  return Permutation::from_images(images);
}

Permutation power(Permutation const &x, unsigned long long n)
{
  auto result = Permutation::identity(x.degree());
  auto base = x;
  while (n > 0) {
    if (n & 1u)
      result = compose(base, result);
    base = compose(base, base);
    n >>= 1u;
  }
  return result;
}

unsigned long long order(Permutation const &x)
{
  unsigned long long l = 1;
  for (auto const &cycle : cycle_decomposition(x))
    l = std::lcm(l, static_cast<unsigned long long>(cycle.size()));
  return l;
}

std::vector<Cycle> cycle_decomposition(Permutation const &x)
{
  std::vector<Cycle> cycles;
  std::vector<bool> visited(x.degree(), false);

  // Scanning in increasing order makes each cycle start at its minimum and
  // emits cycles sorted by minimum.
  for (Point start = 1; start <= x.degree(); ++start) {
    if (visited[start - 1])
      continue;

    Cycle cycle;
    for (Point y = start; !visited[y - 1]; y = x(y)) {
      visited[y - 1] = true;
      cycle.push_back(y);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

bool is_involution(Permutation const &x)
{
  for (Point i = 1; i <= x.degree(); ++i) {
    if (x(x(i)) != i)
      return false;
  }
  return true;
}

std::string to_cycle_string(Permutation const &x)
{
  std::string out;
  for (auto const &cycle : cycle_decomposition(x)) {
    if (cycle.size() == 1)
      continue;
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k)
        out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

} // namespace regtess::perm
