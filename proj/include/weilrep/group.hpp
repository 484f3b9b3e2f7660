#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "weilrep/sl2.hpp"

namespace weilrep {

struct GroupTable {
  std::int64_t n = 1;
  std::vector<Sl2Elem> elements;
  std::unordered_map<std::uint64_t, std::size_t> index;

  static std::uint64_t key(const Mat2& m);
  /// Position of g, or elements.size() when absent.
  std::size_t index_of(const Sl2Elem& g) const;
};

/// n^3 prod_{p | n} (1 - p^-2).
std::int64_t sl2_order(std::int64_t n);

/// All of SL2(Z/nZ). Throws TooLarge when the order exceeds max_size.
GroupTable enumerate_sl2(std::int64_t n, std::size_t max_size = 100000);

/// Exponent of G / [G, G], with [G, G] the normal closure of the commutator of
/// Upper(1) and Lower(1).
std::int64_t abelianization_exponent(std::int64_t n, std::size_t max_size = 100000);

/// tr^2 - 4 is nonzero mod every prime dividing n.
bool is_regular_semisimple(const Sl2Elem& g);

/// Some g in SL2 with g g0 g^-1 = S g0 S^-1, by exhaustive search at
/// squarefree n <= 15. Throws NotRegularSemisimple, InvalidParams, NotFound.
Sl2Elem find_conjugator(const Sl2Elem& g0, const Mat2& s);

}  // namespace weilrep
