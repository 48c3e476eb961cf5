#ifndef COLORPART_COMPOSITIONS_HPP
#define COLORPART_COMPOSITIONS_HPP

#include <stdexcept>
#include <type_traits>
#include <utility>

#include "colorpart/errors.hpp"

namespace colorpart {

/// Largest n for which the exponential composition sums may be evaluated.
/// Summing over all part counts visits 2^(n-1) compositions.
inline constexpr unsigned kCompositionGuard = 25;

namespace detail {

template <class Acc, class Step, class Leaf>
void fold_compositions_from(unsigned remaining, unsigned parts_left, const Acc& acc, Step& step, Leaf& leaf) {
  if (parts_left == 1) {
    leaf(step(acc, remaining, remaining));
    return;
  }
  const unsigned largest = remaining - (parts_left - 1);
  for (unsigned part = 1; part <= largest; ++part) {
    fold_compositions_from(remaining - part, parts_left - 1, step(acc, remaining, part), step, leaf);
  }
}

}  // namespace detail

/// Walks every composition (b1, ..., bm) of n into m positive parts in
/// lexicographic order, threading an accumulator along the path.
///
/// For the i-th part, `step(acc, before, part)` is called with `before` the
/// amount not yet consumed (n for the first part, then n - b1, ...). This is
/// the decreasing chain n = a0 > a1 > ... > a(m-1) > a(m) = 0 with
/// part = a(i-1) - a(i). `leaf` receives the accumulator after the last part.
/// Prefix work is shared between compositions with a common prefix.
///
/// Nothing is visited when m == 0 or m > n.
template <class Acc, class Step, class Leaf>
void fold_compositions(unsigned n, unsigned m, const Acc& init, Step&& step, Leaf&& leaf) {
  static_assert(std::is_invocable_r_v<Acc, Step&, const Acc&, unsigned, unsigned>);
  if (m == 0 || m > n) return;
  detail::fold_compositions_from(n, m, init, step, leaf);
}

}  // namespace colorpart

#endif  // COLORPART_COMPOSITIONS_HPP
