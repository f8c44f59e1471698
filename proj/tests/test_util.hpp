#ifndef RANKCODES_TEST_UTIL_HPP
#define RANKCODES_TEST_UTIL_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "core/linalg.hpp"

namespace testutil {

// Visit every matrix in GF(p)^{rows x cols}.
inline void for_each_matrix(unsigned p, unsigned rows, unsigned cols,
                            const std::function<void(const rankcodes::linalg::Mat&)>& fn) {
  rankcodes::linalg::Mat x(p, rows, cols);
  std::vector<unsigned> digits(std::size_t{rows} * cols, 0);
  while (true) {
    fn(x);
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
    if (k == digits.size()) break;
    for (std::size_t i = 0; i <= k; ++i)
      x.set(static_cast<unsigned>(i / cols), static_cast<unsigned>(i % cols), digits[i]);
  }
}

// All q^dim elements of a subspace, as coefficient combinations of its basis.
inline std::vector<std::vector<unsigned>> subspace_elements(const rankcodes::linalg::Subspace& u) {
  unsigned p = u.p(), n = u.ambient(), r = u.dim();
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> coeff(r, 0);
  while (true) {
    std::vector<unsigned> v(n, 0);
    for (unsigned i = 0; i < r; ++i)
      for (unsigned j = 0; j < n; ++j) v[j] = (v[j] + coeff[i] * u.basis().at(i, j)) % p;
    out.push_back(std::move(v));
    std::size_t k = 0;
    while (k < coeff.size() && ++coeff[k] == p) coeff[k++] = 0;
    if (k == coeff.size()) break;
  }
  return out;
}

}  // namespace testutil

#endif
