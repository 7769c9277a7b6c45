#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cremona/error.hpp"

namespace cremona {

/// A finite (Z/p)^r given by all its elements; elements[0] is the identity
/// and element sum_i e_i p^i (0 <= e_i < p) equals prod_i basis[i]^e_i.
template <class T>
struct ElementaryClosure {
  unsigned p = 0;
  std::vector<T> basis;
  std::vector<T> elements;
};

/// Closes a list of generators to an elementary abelian p-group, checking
/// the orders of the generators and that they commute. Generators already in
/// the group (and the identity) are skipped, so the basis is a sublist of `gens`.
template <class T>
ElementaryClosure<T> elementary_closure(const std::vector<T>& gens, unsigned p, unsigned max_rank, const T& identity,
                                        const std::string& module) {
  ElementaryClosure<T> out;
  out.p = p;
  out.elements.push_back(identity);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const T& g = gens[gi];
    if (g.is_identity()) continue;
    T power = g;
    for (unsigned i = 1; i < p; ++i) {
      if (power.is_identity()) {
        fail(ErrorKind::WrongOrder, module, "generator " + std::to_string(gi) + " does not have order " + std::to_string(p));
      }
      power = power * g;
    }
    if (!power.is_identity()) {
      fail(ErrorKind::WrongOrder, module, "generator " + std::to_string(gi) + " does not have order " + std::to_string(p));
    }
    for (const T& b : out.basis) {
      if (!(b * g == g * b)) fail(ErrorKind::NonCommuting, module, "generator " + std::to_string(gi) + " does not commute");
    }
    if (std::find(out.elements.begin(), out.elements.end(), g) != out.elements.end()) continue;
    if (out.basis.size() >= max_rank) fail(ErrorKind::ClosureExceeded, module, "group rank exceeds " + std::to_string(max_rank));
    const std::size_t n = out.elements.size();
    T step = g;
    for (unsigned i = 1; i < p; ++i) {
      for (std::size_t j = 0; j < n; ++j) out.elements.push_back(out.elements[j] * step);
      step = step * g;
    }
    out.basis.push_back(g);
  }
  return out;
}

}  // namespace cremona
