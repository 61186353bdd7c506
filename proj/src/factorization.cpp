#include "numsgp/factorization.hpp"

#include <string>

namespace numsgp {

Int degree_of(const NumericalSemigroup& sg, const Exponents& coeffs) {
  Int d = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    d = checked_add(d, checked_mul(coeffs[i], sg.generator(i)));
  return d;
}

namespace {

struct Walker {
  const NumericalSemigroup& sg;
  const std::function<bool(const Exponents&)>& visit;
  bool ascending;
  Exponents current;
  bool stopped = false;

  // Fill coordinate i given remaining budget; remaining is known to lie in
  // the submonoid generated by n_i..n_e.
  void walk(std::size_t i, Int remaining) {
    const std::size_t e = current.size();
    const Int n = sg.generator(i);
    if (i + 1 == e) {
      current[i] = remaining / n;
      stopped = !visit(current);
      current[i] = 0;
      return;
    }
    const Int top = remaining / n;
    for (Int k = 0; k <= top && !stopped; ++k) {
      Int c = ascending ? k : top - k;
      Int rest = remaining - c * n;
      if (!sg.suffix_contains(i + 1, rest)) continue;
      current[i] = c;
      walk(i + 1, rest);
    }
    current[i] = 0;
  }
};

}  // namespace

void for_each_factorization(const NumericalSemigroup& sg, Int h,
                            const std::function<bool(const Exponents&)>& visit,
                            EnumerationOrder order) {
  if (!sg.contains(h)) return;
  Walker w{sg, visit, order == EnumerationOrder::LexAscending,
           Exponents(sg.embedding_dimension(), 0)};
  w.walk(0, h);
}

std::vector<Factorization> factorizations(const NumericalSemigroup& sg, Int h,
                                          std::size_t cap) {
  std::vector<Factorization> out;
  for_each_factorization(sg, h, [&](const Exponents& c) {
    if (out.size() >= cap)
      throw Error(ErrorKind::EnumerationOverflow,
                  "more than " + std::to_string(cap) + " factorizations of " +
                      std::to_string(h),
                  static_cast<Int>(cap));
    out.push_back({c, h});
    return true;
  });
  return out;
}

std::size_t count_factorizations(const NumericalSemigroup& sg, Int h,
                                 std::size_t limit) {
  std::size_t count = 0;
  for_each_factorization(sg, h, [&](const Exponents&) {
    return ++count < limit;
  });
  return count;
}

bool has_uf(const NumericalSemigroup& sg, Int h) {
  if (!sg.contains(h))
    throw Error(ErrorKind::NotMember,
                std::to_string(h) + " is not in " + sg.to_string());
  return count_factorizations(sg, h, 2) == 1;
}

AlphaTable alphas(const NumericalSemigroup& sg) {
  const std::size_t e = sg.embedding_dimension();
  if (e < 2)
    throw Error(ErrorKind::PrecondFailed, "alphas needs at least two generators");
  const auto& gens = sg.generators();
  AlphaTable table;
  table.alpha.resize(e);
  table.witnesses.resize(e);
  for (std::size_t i = 0; i < e; ++i) {
    std::vector<Int> others;
    for (std::size_t j = 0; j < e; ++j)
      if (j != i) others.push_back(gens[j]);
    ResidueTable sub(others.front(),
                     std::span<const Int>(others).subspan(1));
    Int k = 1;
    while (!sub.contains(checked_mul(k, gens[i]))) ++k;
    table.alpha[i] = k;
    // The only factorization using n_i is k*e_i itself, so the first other
    // tuple in ascending order is the smallest witness.
    for_each_factorization(
        sg, k * gens[i],
        [&](const Exponents& c) {
          if (c[i] != 0) return true;
          table.witnesses[i] = c;
          return false;
        },
        EnumerationOrder::LexAscending);
  }
  return table;
}

}  // namespace numsgp
