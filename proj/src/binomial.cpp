#include "numsgp/binomial.hpp"

#include <algorithm>
#include <sstream>

namespace numsgp {

std::optional<Binomial> Binomial::from_pair(const NumericalSemigroup& sg,
                                            Exponents u, Exponents v) {
  if (u.size() != sg.embedding_dimension() || v.size() != u.size())
    throw Error(ErrorKind::InvalidInput, "exponent vector has wrong length");
  Int du = degree_of(sg, u);
  Int dv = degree_of(sg, v);
  if (du != dv)
    throw Error(ErrorKind::NotInIdeal,
                "binomial sides have degrees " + std::to_string(du) + " and " +
                    std::to_string(dv));
  for (std::size_t i = 0; i < u.size(); ++i) {
    Int m = std::min(u[i], v[i]);
    u[i] -= m;
    v[i] -= m;
  }
  if (u == v) return std::nullopt;
  if (u < v) std::swap(u, v);
  Binomial b{std::move(u), {}, 0};
  b.minus = std::move(v);
  b.degree = degree_of(sg, b.plus);
  return b;
}

std::optional<Binomial> Binomial::from_difference(const NumericalSemigroup& sg,
                                                  const Exponents& diff) {
  Exponents u(diff.size(), 0), v(diff.size(), 0);
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (diff[i] > 0) u[i] = diff[i];
    else v[i] = -diff[i];
  }
  return from_pair(sg, std::move(u), std::move(v));
}

Exponents Binomial::difference() const {
  Exponents d(plus.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = plus[i] - minus[i];
  return d;
}

namespace {

std::vector<std::size_t> support(const Exponents& v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > 0) s.push_back(i);
  return s;
}

void write_monomial(std::ostream& os, const Exponents& v) {
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first) os << '*';
    os << 'x' << (i + 1);
    if (v[i] > 1) os << '^' << v[i];
    first = false;
  }
  if (first) os << '1';
}

}  // namespace

std::vector<std::size_t> Binomial::plus_support() const { return support(plus); }
std::vector<std::size_t> Binomial::minus_support() const { return support(minus); }

std::string Binomial::to_string() const {
  std::ostringstream os;
  write_monomial(os, plus);
  os << " - ";
  write_monomial(os, minus);
  return os.str();
}

std::vector<Binomial> canonical_set(std::vector<Binomial> binomials) {
  std::sort(binomials.begin(), binomials.end());
  binomials.erase(std::unique(binomials.begin(), binomials.end()),
                  binomials.end());
  return binomials;
}

}  // namespace numsgp
