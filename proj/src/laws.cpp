#include "numsgp/laws.hpp"

#include <algorithm>

#include "numsgp/factorization.hpp"

namespace numsgp {

namespace {

bool in_apery(const NumericalSemigroup& sg, Int a, Int x) {
  return sg.contains(x) && !sg.contains(x - a);
}

}  // namespace

Report verify_semigroup_laws(const NumericalSemigroup& sg) {
  Report r("semigroup-laws", sg.to_string());
  PFData pf = sg.pseudo_frobenius();
  const auto& n = sg.generators();
  const Int F = pf.frobenius;

  bool sizes = true, closure = true, maxima = true;
  const Int bound = 2 * n.back();
  for (Int a = 1; a <= bound; ++a) {
    if (!sg.contains(a)) continue;
    AperyTable ap = sg.apery(a);
    sizes = sizes && static_cast<Int>(ap.elements.size()) == a;
    maxima = maxima && ap.elements.back() == a + F;
    for (Int w : ap.elements)
      for (Int g : n)
        if (sg.contains(w - g) && !in_apery(sg, a, w - g)) closure = false;
  }
  r.check("|Ap(a,H)| = a for a in H up to 2 n_e", sizes);
  r.check("max Ap(a,H) = a + F", maxima);
  r.check("Ap(a,H) closed under <=_H divisors", closure);

  bool symmetric_t = pf.type == 1, symmetric_g = 2 * pf.genus == F + 1;
  if (!sg.is_natural_numbers()) {
    r.check("t = 1 iff 2g = F + 1", symmetric_t == symmetric_g);
    r.check("symmetric classification iff t = 1",
            (pf.classification == Classification::Symmetric) == symmetric_t);
  }
  r.check("2g >= F + t", 2 * pf.genus >= F + pf.type);

  bool paired = !pf.pf.empty();
  for (std::size_t i = 0; i < pf.pf_prime.size(); ++i)
    paired = paired && pf.pf_prime[i] + pf.pf_prime[pf.pf_prime.size() - 1 - i] == F;
  r.check("PF pairing f_i + f_{t-i} = F iff 2g = F + t",
          sg.is_natural_numbers() || paired == (2 * pf.genus == F + pf.type));

  if (pf.almost_symmetric()) {
    bool dichotomy = true;
    for (Int a : n) {
      for (Int h : sg.apery(a).elements) {
        bool mirrored = in_apery(sg, a, a + F - h);
        bool pseudo = std::binary_search(pf.pf_prime.begin(), pf.pf_prime.end(), h - a);
        dichotomy = dichotomy && (mirrored || pseudo);
      }
    }
    r.check("almost symmetric Apery dichotomy", dichotomy);
  }
  return r;
}

Report verify_factorization_laws(const NumericalSemigroup& sg) {
  Report r("factorization-laws", sg.to_string());
  const std::size_t e = sg.embedding_dimension();
  if (e < 2) {
    r.mark_not_applicable("needs H != N");
    return r;
  }
  const auto& n = sg.generators();
  PFData pf = sg.pseudo_frobenius();
  AlphaTable al = alphas(sg);
  const Int F = pf.frobenius;

  for (std::size_t i = 0; i < e; ++i) {
    Int lhs = al.alpha[i] * n[i], rhs = 0;
    for (std::size_t j = 0; j < e; ++j) rhs += al.witnesses[i][j] * n[j];
    r.check("alpha_" + std::to_string(i + 1) + " witness", lhs == rhs && al.witnesses[i][i] == 0);
    r.check("alpha_" + std::to_string(i + 1) + " >= 2", al.alpha[i] >= 2);
    bool apery = true;
    for (std::size_t k = 0; k < e; ++k)
      if (k != i) apery = apery && in_apery(sg, n[k], (al.alpha[i] - 1) * n[i]);
    r.check("(alpha_" + std::to_string(i + 1) + "-1) n_i in every Ap(n_k)", apery);
  }

  bool pure_bound = true, above_alpha = true;
  for (Int f : pf.pf) {
    for (std::size_t k = 0; k < e; ++k) {
      auto facs = factorizations(sg, f + n[k]);
      for (const auto& x : facs) {
        std::size_t nz = 0, at = 0;
        for (std::size_t j = 0; j < e; ++j)
          if (x.coeffs[j] > 0) {
            ++nz;
            at = j;
          }
        if (nz == 1 && x.coeffs[at] < al.alpha[at] - 1) pure_bound = false;
      }
      if (e == 4 && facs.size() > 1) {
        bool some = false;
        for (std::size_t i = 0; i < e; ++i)
          some = some || sg.contains(f + n[k] - al.alpha[i] * n[i]);
        above_alpha = above_alpha && some;
      }
    }
  }
  r.check("f + n_k = b n_i forces b >= alpha_i - 1", pure_bound);
  if (e == 4) r.check("non-UF f + n_k lies above some alpha_i n_i", above_alpha);

  if (!pf.almost_symmetric() || sg.is_natural_numbers()) return r;

  bool lift = true, uf_rule = true, counting = true;
  for (std::size_t k = 0; k < e; ++k) {
    auto top = factorizations(sg, F + n[k]);
    for (Int f : pf.pf_prime) {
      for (const auto& x : factorizations(sg, f + n[k])) {
        std::size_t nz = 0;
        for (std::size_t i = 0; i < e; ++i) {
          if (x.coeffs[i] == 0) continue;
          ++nz;
          bool found = std::any_of(top.begin(), top.end(), [&](const Factorization& y) {
            for (std::size_t j = 0; j < e; ++j) {
              if (j == i ? y.coeffs[j] != x.coeffs[j] - 1 : y.coeffs[j] < x.coeffs[j])
                return false;
            }
            return true;
          });
          lift = lift && found;
        }
        if (nz >= 2 && top.size() == 1) uf_rule = false;
      }
    }
    if (top.size() == 1) {
      Int prod = 1;
      for (std::size_t j = 0; j < e; ++j)
        if (j != k) prod = checked_mul(prod, top.front().coeffs[j] + 1);
      counting = counting && n[k] == prod + pf.type - 1;
    }
  }
  r.check("factorizations of f + n_k lift to F + n_k", lift);
  r.check("two-term factorization of f + n_k rules out UF of F + n_k", uf_rule);
  r.check("UF of F + n_k gives n_k = prod(beta_j + 1) + t - 1", counting);
  return r;
}

}  // namespace numsgp
