#include "weilrep/group.hpp"

#include <deque>
#include <numeric>
#include <unordered_set>

#include "weilrep/errors.hpp"

namespace weilrep {

std::uint64_t GroupTable::key(const Mat2& m) {
  const auto n = static_cast<std::uint64_t>(m.modulus());
  return ((static_cast<std::uint64_t>(m.a.value()) * n + static_cast<std::uint64_t>(m.b.value())) * n +
          static_cast<std::uint64_t>(m.c.value())) * n +
         static_cast<std::uint64_t>(m.d.value());
}

std::size_t GroupTable::index_of(const Sl2Elem& g) const {
  auto it = index.find(key(g.matrix()));
  return it == index.end() ? elements.size() : it->second;
}

std::int64_t sl2_order(std::int64_t n) {
  std::int64_t order = n * n * n;
  for (auto p : prime_divisors(n)) order = order / (p * p) * (p * p - 1);
  return order;
}

GroupTable enumerate_sl2(std::int64_t n, std::size_t max_size) {
  if (n < 1 || n % 2 == 0) throw InvalidParams("n must be odd");
  if (static_cast<std::size_t>(sl2_order(n)) > max_size) {
    throw TooLarge("|SL2(Z/" + std::to_string(n) + ")| exceeds the enumeration bound");
  }
  GroupTable table;
  table.n = n;
  const std::int64_t one = 1 % n;
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      for (std::int64_t c = 0; c < n; ++c) {
        for (std::int64_t d = 0; d < n; ++d) {
          if (mod_floor(a * d - b * c, n) != one) continue;
          Sl2Elem g(a, b, c, d, n);
          if (table.index.emplace(GroupTable::key(g.matrix()), table.elements.size()).second) {
            table.elements.push_back(g);
          }
        }
      }
    }
  }
  return table;
}

std::int64_t abelianization_exponent(std::int64_t n, std::size_t max_size) {
  const GroupTable table = enumerate_sl2(n, max_size);
  const Sl2Elem up = Sl2Elem::upper(Residue(1, n));
  const Sl2Elem low = Sl2Elem::lower(Residue(1, n));
  const Sl2Elem commutator = up * low * up.inverse() * low.inverse();

  // generators of the normal closure: all conjugates of the commutator
  std::vector<Sl2Elem> gens;
  std::unordered_set<std::uint64_t> seen_gens;
  for (const auto& g : table.elements) {
    Sl2Elem c = g * commutator * g.inverse();
    if (seen_gens.insert(GroupTable::key(c.matrix())).second) gens.push_back(c);
  }
  std::vector<char> in_k(table.elements.size(), 0);
  std::deque<std::size_t> queue;
  const std::size_t e = table.index_of(Sl2Elem::identity(n));
  in_k[e] = 1;
  queue.push_back(e);
  while (!queue.empty()) {
    const Sl2Elem x = table.elements[queue.front()];
    queue.pop_front();
    for (const auto& g : gens) {
      const std::size_t y = table.index_of(x * g);
      if (!in_k[y]) {
        in_k[y] = 1;
        queue.push_back(y);
      }
    }
  }
  auto order_mod_k = [&](const Sl2Elem& g) {
    std::int64_t m = 1;
    Sl2Elem power = g;
    while (!in_k[table.index_of(power)]) {
      power = power * g;
      ++m;
    }
    return m;
  };
  return std::lcm(order_mod_k(up), order_mod_k(low));
}

bool is_regular_semisimple(const Sl2Elem& g) {
  const std::int64_t tr = g.trace().value();
  for (auto p : prime_divisors(g.modulus())) {
    if (mod_floor(tr * tr - 4, p) == 0) return false;
  }
  return true;
}

Sl2Elem find_conjugator(const Sl2Elem& g0, const Mat2& s) {
  const std::int64_t n = g0.modulus();
  if (s.modulus() != n) throw ModulusMismatch("S and g0 live mod different n");
  if (!is_squarefree(n) || n > 15) throw InvalidParams("conjugator search needs squarefree n <= 15");
  if (!is_regular_semisimple(g0)) throw NotRegularSemisimple("g0 is not regular semisimple");
  if (!s.det().is_unit()) throw InvalidParams("det S must be a unit");
  const Mat2 target = s * g0.matrix() * s.inverse();
  for (const auto& g : enumerate_sl2(n).elements) {
    // g g0 g^-1 = target, checked without inverting g
    if (g.matrix() * g0.matrix() == target * g.matrix()) return g;
  }
  throw NotFound("no conjugator in SL2(Z/" + std::to_string(n) + ")");
}

}  // namespace weilrep
