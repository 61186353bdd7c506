// Brute-force reference computations for tests. Deliberately naive: sieves
// and plain recursion, no Apéry tables, so they share no code path with the
// library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Int = std::int64_t;

struct Sieve {
  std::vector<char> member;
  Int frobenius = -1;
};

// Membership up to the point where min(gens) consecutive members appear.
inline Sieve sieve(const std::vector<Int>& gens) {
  Sieve s;
  Int n1 = *std::min_element(gens.begin(), gens.end());
  Int run = 0;
  for (Int x = 0; run < n1; ++x) {
    bool in = x == 0;
    for (Int g : gens)
      if (!in && x >= g && s.member[static_cast<std::size_t>(x - g)]) in = true;
    s.member.push_back(in);
    if (in) {
      ++run;
    } else {
      run = 0;
      s.frobenius = x;
    }
  }
  return s;
}

inline bool in_sieve(const Sieve& s, Int x) {
  if (x < 0) return false;
  if (x >= static_cast<Int>(s.member.size())) return true;
  return s.member[static_cast<std::size_t>(x)];
}

struct PF {
  Int frobenius = -1;
  Int genus = 0;
  std::vector<Int> pf;
  bool almost_symmetric = false;  // pairing f_i + f_{t-i} = F
};

inline PF pseudo_frobenius(const std::vector<Int>& gens) {
  Sieve s = sieve(gens);
  PF out;
  out.frobenius = s.frobenius;
  for (Int x = 1; x <= s.frobenius; ++x) {
    if (in_sieve(s, x)) continue;
    ++out.genus;
    bool pf = std::all_of(gens.begin(), gens.end(), [&](Int g) { return in_sieve(s, x + g); });
    if (pf) out.pf.push_back(x);
  }
  if (!out.pf.empty()) {
    out.almost_symmetric = true;
    std::size_t t = out.pf.size();
    for (std::size_t i = 0; i + 1 < t; ++i)
      if (out.pf[i] + out.pf[t - 2 - i] != out.frobenius) out.almost_symmetric = false;
  }
  return out;
}

inline bool minimal_generating_set(const std::vector<Int>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Int> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (others.empty()) continue;
    // gens[i] in the monoid of the others?
    std::vector<char> reach(static_cast<std::size_t>(gens[i] + 1), 0);
    reach[0] = 1;
    for (Int x = 1; x <= gens[i]; ++x)
      for (Int g : others)
        if (x >= g && reach[static_cast<std::size_t>(x - g)]) reach[static_cast<std::size_t>(x)] = 1;
    if (reach[static_cast<std::size_t>(gens[i])]) return false;
  }
  return true;
}

inline void factorizations_rec(const std::vector<Int>& gens, Int h, std::size_t i,
                               std::vector<Int>& cur, std::vector<std::vector<Int>>& out) {
  if (i == gens.size()) {
    if (h == 0) out.push_back(cur);
    return;
  }
  for (Int c = 0; c * gens[i] <= h; ++c) {
    cur[i] = c;
    factorizations_rec(gens, h - c * gens[i], i + 1, cur, out);
  }
  cur[i] = 0;
}

// All factorizations of h, lexicographically descending.
inline std::vector<std::vector<Int>> factorizations(const std::vector<Int>& gens, Int h) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(gens.size(), 0);
  if (h >= 0) factorizations_rec(gens, h, 0, cur, out);
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline std::vector<Int> alphas(const std::vector<Int>& gens) {
  std::vector<Int> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Int> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    for (Int a = 1;; ++a) {
      if (!factorizations(others, a * gens[i]).empty()) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

// Degrees of the minimal generators of the ideal of elements without unique
// factorization, up to `bound`.
inline std::vector<Int> non_uf_ideal_generators(const std::vector<Int>& gens, Int bound) {
  std::vector<char> non_uf(static_cast<std::size_t>(bound + 1), 0);
  std::vector<Int> out;
  for (Int h = 0; h <= bound; ++h) {
    if (factorizations(gens, h).size() < 2) continue;
    non_uf[static_cast<std::size_t>(h)] = 1;
    bool minimal = true;
    for (Int g : gens)
      if (h >= g && non_uf[static_cast<std::size_t>(h - g)]) minimal = false;
    if (minimal) out.push_back(h);
  }
  return out;
}

// Sorted 4-tuples n1<n2<n3<n4<=max_n4 with gcd 1, minimally generating and
// almost symmetric (PF pairing) of type >= min_type.
inline std::vector<std::vector<Int>> almost_symmetric_corpus(Int max_n4, std::size_t min_type = 1) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> n(4);
  for (n[0] = 2; n[0] <= max_n4; ++n[0])
    for (n[1] = n[0] + 1; n[1] <= max_n4; ++n[1])
      for (n[2] = n[1] + 1; n[2] <= max_n4; ++n[2])
        for (n[3] = n[2] + 1; n[3] <= max_n4; ++n[3]) {
          Int g = std::gcd(std::gcd(n[0], n[1]), std::gcd(n[2], n[3]));
          if (g != 1) continue;
          // cheap minimality: n_j a non-negative combination of smaller ones
          bool redundant = false;
          for (std::size_t j = 1; j < 4 && !redundant; ++j) {
            std::vector<Int> smaller(n.begin(), n.begin() + static_cast<std::ptrdiff_t>(j));
            redundant = !factorizations(smaller, n[j]).empty();
          }
          if (redundant) continue;
          PF pf = pseudo_frobenius(n);
          if (pf.almost_symmetric && pf.pf.size() >= min_type) out.push_back(n);
        }
  return out;
}

}  // namespace oracle
