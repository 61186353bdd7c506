#include "numsgp/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "numsgp/betti.hpp"
#include "numsgp/factorization.hpp"

namespace numsgp {

namespace {

std::string join(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string join_binomials(const std::vector<Binomial>& bs) {
  std::string s;
  for (std::size_t i = 0; i < bs.size(); ++i) s += (i ? ", " : "") + bs[i].to_string();
  return s;
}

// Canonical exponent vector c (index p) to sorted labels (index perm[p]).
Exponents to_sorted(const std::vector<std::size_t>& perm, const Exponents& c) {
  Exponents out(c.size(), 0);
  for (std::size_t p = 0; p < c.size(); ++p) out[perm[p]] = c[p];
  return out;
}

// Same ideal: same number of minimal generators, each set generating.
bool same_ideal(const NumericalSemigroup& sg, const std::vector<Binomial>& listed,
                const std::vector<Binomial>& minimal) {
  return listed.size() == minimal.size() && generates_check(sg, listed);
}

}  // namespace

std::vector<Int> KomedaForm::generators(const NumericalSemigroup& sg) const {
  std::vector<Int> out;
  for (std::size_t p : perm) out.push_back(sg.generator(p));
  return out;
}

RFMatrix komeda_matrix(Int f, const std::vector<Int>& a, Int b) {
  return RFMatrix::from_rows(f, {{-1, a[1] - 1, 0, 0},
                                 {0, -1, a[2] - 1, 0},
                                 {a[0] - 1, 0, -1, a[3] - 1},
                                 {a[0] - 1, b, 0, -1}});
}

KomedaForm komeda_form(const NumericalSemigroup& sg) {
  if (sg.embedding_dimension() != 4)
    throw Error(ErrorKind::NotPseudoSymmetric,
                sg.to_string() + " is not 4-generated");
  PFData pf = sg.pseudo_frobenius();
  if (pf.classification != Classification::PseudoSymmetric)
    throw Error(ErrorKind::NotPseudoSymmetric,
                sg.to_string() + " is " + to_string(pf.classification) +
                    " of type " + std::to_string(pf.type));
  const Int half = pf.frobenius / 2;
  for (std::size_t k = 0; k < 4; ++k)
    if (!has_uf(sg, half + sg.generator(k)))
      throw Error(ErrorKind::NoCanonicalForm,
                  "F/2 + n_" + std::to_string(k + 1) + " has several factorizations");
  RFMatrix m = rf_matrices(sg, half).front();
  AlphaTable al = alphas(sg);
  std::vector<std::size_t> perm{0, 1, 2, 3};
  do {
    std::vector<Int> a;
    for (std::size_t p : perm) a.push_back(al.alpha[p]);
    RFMatrix r = m.relabeled(perm);
    Int b = r.at(3, 1);
    if (b >= 0 && r == komeda_matrix(half, a, b)) return {perm, a, b, r};
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw Error(ErrorKind::NoCanonicalForm,
              "no relabeling of RF(F/2) = " + m.to_string() + " is canonical");
}

std::vector<Binomial> komeda_generators(const NumericalSemigroup& sg,
                                        const KomedaForm& form) {
  const auto& a = form.alphas;
  const Int b = form.alpha42;
  const Int a12 = a[1] - 1 - b;
  std::vector<std::pair<Exponents, Exponents>> sides{
      {{0, a[1], 0, 0}, {1, 0, a[2] - 1, 0}},
      {{a[0], 0, 0, 0}, {0, a12, 0, 1}},
      {{0, 0, a[2], 0}, {a[0] - 1, 1, 0, a[3] - 1}},
      {{0, 0, a[2] - 1, 1}, {a[0] - 1, b + 1, 0, 0}},
      {{0, 0, 0, a[3]}, {0, b, 1, 0}},
  };
  std::vector<Binomial> out;
  for (const auto& [u, v] : sides) {
    if (*std::min_element(v.begin(), v.end()) < 0)
      throw Error(ErrorKind::NotInIdeal, "negative exponent in canonical generator");
    if (auto bn = Binomial::from_pair(sg, to_sorted(form.perm, u), to_sorted(form.perm, v)))
      out.push_back(*bn);
  }
  return canonical_set(std::move(out));
}

Report verify_type2_structure(const NumericalSemigroup& sg) {
  KomedaForm form = komeda_form(sg);
  Report r("type2-structure", sg.to_string());
  auto n = form.generators(sg);
  const auto& a = form.alphas;
  r.witness("relabeling", join(n));
  r.witness("alphas", join(a));
  r.witness("alpha42", std::to_string(form.alpha42));
  // alpha12 read off alpha1 n1 = alpha12 n2 + n4, against a2 - 1 - alpha42.
  const Int a12_spelled = a[1] - 1 - form.alpha42;
  const Int rest = a[0] * n[0] - n[3];
  const Int a12_direct = rest >= 0 && rest % n[1] == 0 ? rest / n[1] : -1;
  r.witness("alpha12", std::to_string(a12_direct));
  r.witness("alpha2-1-alpha42", std::to_string(a12_spelled));
  r.witness("RF(F/2)", form.matrix.to_string());

  r.check("n2 = a1*a4*(a3-1) + 1", n[1] == a[0] * a[3] * (a[2] - 1) + 1,
          std::to_string(n[1]) + " vs " + std::to_string(a[0] * a[3] * (a[2] - 1) + 1));
  r.check("alpha42 > 0", form.alpha42 > 0);
  r.check("alpha12 = alpha2 - 1 - alpha42", a12_direct == a12_spelled);
  r.check("F + n2 has UF", has_uf(sg, sg.frobenius() + n[1]));

  auto minimal = minimal_generators(sg);
  r.witness("mu", std::to_string(minimal.size()));
  r.check("mu = 5", minimal.size() == 5);
  try {
    auto listed = komeda_generators(sg, form);
    r.witness("generators", join_binomials(listed));
    r.check("I_H is generated by the five canonical binomials",
            same_ideal(sg, listed, minimal));
  } catch (const Error& e) {
    r.check("I_H is generated by the five canonical binomials", false, e.what());
  }
  PFData pf = sg.pseudo_frobenius();
  r.check("almost symmetric of type 2", pf.almost_symmetric() && pf.type == 2);
  return r;
}

Report verify_type_bound(const NumericalSemigroup& sg) {
  Report r("type-bound", sg.to_string());
  if (sg.embedding_dimension() != 4) {
    r.mark_not_applicable("embedding dimension is not 4");
    return r;
  }
  PFData pf = sg.pseudo_frobenius();
  if (!pf.almost_symmetric()) {
    r.mark_not_applicable("not almost symmetric");
    return r;
  }
  r.witness("type", std::to_string(pf.type));
  r.witness("F", std::to_string(pf.frobenius));
  r.check("type <= 3", pf.type <= 3);
  if (pf.frobenius % 2 == 0) r.check("F even implies type 2", pf.type == 2);
  return r;
}

Report verify_seven_gen(const NumericalSemigroup& sg) {
  Report r("seven-generators", sg.to_string());
  if (sg.embedding_dimension() != 4) {
    r.mark_not_applicable("embedding dimension is not 4");
    return r;
  }
  PFData pf = sg.pseudo_frobenius();
  if (!pf.almost_symmetric() || pf.type != 3) {
    r.mark_not_applicable("not almost symmetric of type 3");
    return r;
  }
  const auto& n = sg.generators();
  auto minimal = minimal_generators(sg);
  r.witness("mu", std::to_string(minimal.size()));
  r.check("mu in {6,7}", minimal.size() == 6 || minimal.size() == 7);
  if (minimal.size() == 7) {
    r.check("n1 + n4 = n2 + n3", n[0] + n[3] == n[1] + n[2]);
    auto b = Binomial::from_pair(sg, {1, 0, 0, 1}, {0, 1, 1, 0});
    r.check("x1*x4 - x2*x3 is a minimal generator", is_minimal_generator(sg, *b));
    auto rel = all_rf_relations(sg, pf.pf_prime);
    r.check("x1*x4 - x2*x3 is an RF-relation",
            std::find(rel.begin(), rel.end(), *b) != rel.end());
  }
  return r;
}

Report verify_rf_generation(const NumericalSemigroup& sg) {
  Report r("rf-generation", sg.to_string());
  const std::size_t e = sg.embedding_dimension();
  PFData pf = sg.pseudo_frobenius();
  std::vector<Int> source;
  if (e == 3) {
    source = pf.type == 1 ? std::vector<Int>{pf.frobenius} : pf.pf_prime;
  } else if (e == 4 && pf.almost_symmetric() && pf.type >= 2) {
    source = pf.pf_prime;
  } else {
    r.mark_not_applicable(e == 4 ? "needs almost symmetric of type >= 2"
                                 : "needs embedding dimension 3 or 4");
    return r;
  }
  auto rel = all_rf_relations(sg, source);
  r.witness("pf used", join(source));
  r.witness("relations", std::to_string(rel.size()));
  r.check("RF-relations generate I_H", generates_check(sg, rel));
  return r;
}

RFMatrix cyclic_matrix(Int f, const std::vector<Int>& a) {
  return RFMatrix::from_rows(f, {{-1, a[1] - 1, 0, 0},
                                 {0, -1, a[2] - 1, 0},
                                 {0, 0, -1, a[3] - 1},
                                 {a[0] - 1, 0, 0, -1}});
}

RFMatrix cyclic_partner_matrix(Int f, const std::vector<Int>& a) {
  return RFMatrix::from_rows(f, {{-1, a[1] - 2, a[2] - 1, 0},
                                 {0, -1, a[2] - 2, a[3] - 1},
                                 {a[0] - 1, 0, -1, a[3] - 2},
                                 {a[0] - 2, a[1] - 1, 0, -1}});
}

std::vector<Int> cyclic_generators(const std::vector<Int>& a) {
  return {(a[1] - 1) * (a[2] - 1) * a[3] + a[1], (a[2] - 1) * (a[3] - 1) * a[0] + a[2],
          (a[3] - 1) * (a[0] - 1) * a[1] + a[3], (a[0] - 1) * (a[1] - 1) * a[2] + a[0]};
}

Report analyze_cyclic_rf(const NumericalSemigroup& sg) {
  PFData pf = sg.pseudo_frobenius();
  if (sg.embedding_dimension() != 4 || !pf.almost_symmetric() || pf.frobenius % 2 == 0)
    throw Error(ErrorKind::PrecondFailed,
                sg.to_string() + " is not 4-generated almost symmetric with odd F");
  AlphaTable al = alphas(sg);
  for (Int f : pf.pf_prime) {
    for (const auto& m : rf_matrices(sg, f)) {
      std::vector<std::size_t> next(4);
      bool one_each = true;
      for (std::size_t i = 0; i < 4 && one_each; ++i) {
        std::size_t count = 0;
        for (std::size_t j = 0; j < 4; ++j)
          if (j != i && m.at(i, j) > 0) {
            ++count;
            next[i] = j;
          }
        one_each = count == 1;
      }
      if (!one_each) continue;

      Report r("cyclic-rf", sg.to_string());
      r.witness("f", std::to_string(f));
      r.witness("RF(f)", m.to_string());
      // Follow the positive entries from generator 1.
      std::vector<std::size_t> perm{0};
      while (perm.size() < 4 && next[perm.back()] != 0) perm.push_back(next[perm.back()]);
      bool four_cycle = perm.size() == 4 && next[perm.back()] == 0;
      r.check("positive entries form a 4-cycle", four_cycle);
      if (!four_cycle) return r;

      std::vector<Int> a, n;
      for (std::size_t p : perm) {
        a.push_back(al.alpha[p]);
        n.push_back(sg.generator(p));
      }
      r.witness("relabeling", join(n));
      r.witness("alphas", join(a));
      RFMatrix canon = m.relabeled(perm);
      r.check("RF(f) is the cyclic matrix", canon == cyclic_matrix(f, a));

      Int f2 = pf.frobenius - f;
      bool partner = false;
      std::size_t partner_count = 0;
      if (std::find(pf.pf.begin(), pf.pf.end(), f2) != pf.pf.end()) {
        auto ms = rf_matrices(sg, f2);
        partner_count = ms.size();
        RFMatrix want = cyclic_partner_matrix(f2, a);
        for (const auto& x : ms) partner = partner || x.relabeled(perm) == want;
      }
      r.check("RF(F-f) is the partner matrix", partner,
              std::to_string(partner_count) + " matrices");

      r.check("type 3 with PF = {f, F-f, F}",
              pf.type == 3 && std::find(pf.pf.begin(), pf.pf.end(), f2) != pf.pf.end());
      auto minimal = minimal_generators(sg);
      r.witness("mu", std::to_string(minimal.size()));
      r.check("mu = 6", minimal.size() == 6);
      std::vector<Binomial> rows;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
          if (auto b = rf_relation(sg, m, i, j)) rows.push_back(*b);
      rows = canonical_set(std::move(rows));
      r.witness("generators", join_binomials(rows));
      r.check("I_H is generated by the row differences of RF(f)",
              same_ideal(sg, rows, minimal));
      r.check("generators follow from the alphas", n == cyclic_generators(a),
              join(cyclic_generators(a)));
      return r;
    }
  }
  throw Error(ErrorKind::PatternNotFound,
              "no RF(f) of " + sg.to_string() + " has one positive entry per row");
}

std::vector<CyclicWitness> cyclic_family_search(Int max_alpha) {
  std::vector<CyclicWitness> out;
  std::vector<Int> a(4);
  for (a[0] = 2; a[0] <= max_alpha; ++a[0])
    for (a[1] = 2; a[1] <= max_alpha; ++a[1])
      for (a[2] = 2; a[2] <= max_alpha; ++a[2])
        for (a[3] = 2; a[3] <= max_alpha; ++a[3]) {
          auto n = cyclic_generators(a);
          if (std::set<Int>(n.begin(), n.end()).size() != 4 || gcd_of(n) != 1) continue;
          if (minimalize(n).size() != 4) continue;
          NumericalSemigroup sg(n);
          PFData pf = sg.pseudo_frobenius();
          if (!pf.almost_symmetric() || pf.frobenius % 2 == 0) continue;
          try {
            Report r = analyze_cyclic_rf(sg);
            out.push_back({a, n, r.passed()});
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::PatternNotFound) throw;
          }
        }
  return out;
}

}  // namespace numsgp
