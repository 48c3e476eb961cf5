// Prints the composition-sum formula for p_{-r}(n) with both choices of the
// single-part term next to the true counts.
#include <iostream>

#include "colorpart/colorpart.hpp"

int main() {
  using namespace colorpart;
  constexpr unsigned kMaxN = 8;
  for (unsigned r = 1; r <= 3; ++r) {
    const auto truth = p_color_series(r, kMaxN);
    std::cout << "r = " << r << '\n';
    for (unsigned n = 2; n <= kMaxN; ++n) {
      const ExactRat scaled = colored_count_by_compositions(n, r, LeadingTerm::r_theta);
      const ExactRat bare = colored_count_by_compositions(n, r, LeadingTerm::theta);
      std::cout << "  n=" << n << "  p=" << truth[n] << "  r*theta lead: " << scaled
                << "  theta lead: " << bare << (bare == ExactRat(truth[n]) ? "" : "  (wrong)") << '\n';
    }
  }
}
