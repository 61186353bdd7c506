#include "numsgp/rf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "numsgp/betti.hpp"
#include "numsgp/factorization.hpp"

namespace numsgp {

RFMatrix::RFMatrix(Int f, std::size_t e, std::vector<Int> entries)
    : f_(f), e_(e), entries_(std::move(entries)) {
  if (entries_.size() != e_ * e_)
    throw Error(ErrorKind::InvalidInput, "RF-matrix has wrong number of entries");
}

Exponents RFMatrix::row(std::size_t i) const {
  return Exponents(entries_.begin() + static_cast<std::ptrdiff_t>(i * e_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * e_));
}

RFMatrix RFMatrix::relabeled(const std::vector<std::size_t>& perm) const {
  std::vector<Int> out(e_ * e_);
  for (std::size_t p = 0; p < e_; ++p)
    for (std::size_t q = 0; q < e_; ++q) out[p * e_ + q] = at(perm[p], perm[q]);
  return RFMatrix(f_, e_, std::move(out));
}

RFMatrix RFMatrix::from_rows(Int f, const std::vector<std::vector<Int>>& rows) {
  std::vector<Int> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return RFMatrix(f, rows.size(), std::move(flat));
}

std::string RFMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < e_; ++i) {
    os << (i ? ", " : "") << '(';
    for (std::size_t j = 0; j < e_; ++j) os << (j ? "," : "") << at(i, j);
    os << ')';
  }
  os << ']';
  return os.str();
}

void require_pseudo_frobenius(const NumericalSemigroup& sg, Int f) {
  bool ok = !sg.contains(f) && f > 0;
  for (Int n : sg.generators()) ok = ok && sg.contains(f + n);
  if (!ok)
    throw Error(ErrorKind::PrecondFailed,
                std::to_string(f) + " is not a pseudo-Frobenius number of " +
                    sg.to_string());
}

std::vector<std::vector<Exponents>> rf_row_choices(const NumericalSemigroup& sg,
                                                   Int f) {
  require_pseudo_frobenius(sg, f);
  const std::size_t e = sg.embedding_dimension();
  std::vector<std::vector<Exponents>> rows(e);
  for (std::size_t i = 0; i < e; ++i) {
    for (auto& fac : factorizations(sg, f + sg.generator(i))) {
      fac.coeffs[i] = -1;  // never used: f would lie in H otherwise
      rows[i].push_back(std::move(fac.coeffs));
    }
  }
  return rows;
}

std::vector<RFMatrix> rf_matrices(const NumericalSemigroup& sg, Int f,
                                  std::size_t cap) {
  auto rows = rf_row_choices(sg, f);
  const std::size_t e = rows.size();
  std::size_t total = 1;
  bool overflow = false;
  for (const auto& r : rows) {
    if (total > cap / r.size() + 1) overflow = true;
    total *= r.size();
  }
  if (overflow || total > cap) {
    std::ostringstream os;
    os << "RF-matrices of " << f << " exceed cap " << cap << "; row counts";
    for (const auto& r : rows) os << ' ' << r.size();
    throw Error(ErrorKind::EnumerationOverflow, os.str(), static_cast<Int>(cap));
  }
  std::vector<RFMatrix> out;
  out.reserve(total);
  std::vector<std::size_t> pick(e, 0);
  while (true) {
    std::vector<Int> flat;
    flat.reserve(e * e);
    for (std::size_t i = 0; i < e; ++i)
      flat.insert(flat.end(), rows[i][pick[i]].begin(), rows[i][pick[i]].end());
    out.emplace_back(f, e, std::move(flat));
    std::size_t k = e;
    while (k > 0) {
      --k;
      if (++pick[k] < rows[k].size()) break;
      pick[k] = 0;
      if (k == 0) return out;
    }
  }
}

std::optional<Binomial> rf_relation(const NumericalSemigroup& sg,
                                    const RFMatrix& m, std::size_t i,
                                    std::size_t j) {
  Exponents d(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) d[k] = m.at(i, k) - m.at(j, k);
  return Binomial::from_difference(sg, d);
}

std::vector<Binomial> rf_relations(const NumericalSemigroup& sg, Int f,
                                   const std::vector<RFMatrix>& matrices) {
  std::vector<Binomial> out;
  for (const auto& m : matrices) {
    if (m.f() != f)
      throw Error(ErrorKind::PrecondFailed, "matrix belongs to a different f");
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (auto b = rf_relation(sg, m, i, j)) out.push_back(*b);
  }
  return canonical_set(std::move(out));
}

std::vector<Binomial> all_rf_relations(const NumericalSemigroup& sg,
                                       const std::vector<Int>& pfs) {
  std::vector<Binomial> out;
  for (Int f : pfs) {
    auto rel = rf_relations(sg, f, rf_matrices(sg, f));
    out.insert(out.end(), rel.begin(), rel.end());
  }
  return canonical_set(std::move(out));
}

std::vector<SpecialRow> special_rows(const NumericalSemigroup& sg,
                                     const RFMatrix& m,
                                     const std::vector<Int>& alpha) {
  (void)sg;
  std::vector<SpecialRow> out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    std::size_t positives = 0, carrier = 0;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != k && m.at(k, j) > 0) {
        ++positives;
        carrier = j;
      }
    if (positives == 1 && m.at(k, carrier) == alpha[carrier] - 1)
      out.push_back({k, carrier, m.at(k, carrier)});
  }
  return out;
}

std::vector<SpecialRow> special_rows(const NumericalSemigroup& sg,
                                     const RFMatrix& m) {
  return special_rows(sg, m, alphas(sg).alpha);
}

namespace {

// positive[i][j]: some factorization of f + n_i uses n_j.
std::vector<std::vector<bool>> positive_pattern(
    const std::vector<std::vector<Exponents>>& rows) {
  const std::size_t e = rows.size();
  std::vector<std::vector<bool>> p(e, std::vector<bool>(e, false));
  for (std::size_t i = 0; i < e; ++i)
    for (const auto& r : rows[i])
      for (std::size_t j = 0; j < e; ++j)
        if (j != i && r[j] > 0) p[i][j] = true;
  return p;
}

}  // namespace

Report verify_pairwise_zero(const NumericalSemigroup& sg, Int f, Int f2) {
  require_pseudo_frobenius(sg, f);
  require_pseudo_frobenius(sg, f2);
  if (sg.contains(f + f2))
    throw Error(ErrorKind::PrecondFailed,
                std::to_string(f) + " + " + std::to_string(f2) + " lies in H");
  Report r("pairwise-zero", sg.to_string());
  r.witness("f", std::to_string(f));
  r.witness("f'", std::to_string(f2));
  // Rows vary independently, so a violating pair of matrices exists exactly
  // when a_ij > 0 is possible in some RF(f) and b_ji > 0 in some RF(f').
  auto pa = positive_pattern(rf_row_choices(sg, f));
  auto pb = positive_pattern(rf_row_choices(sg, f2));
  const std::size_t e = sg.embedding_dimension();
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) {
      if (i == j) continue;
      bool ok = !(pa[i][j] && pb[j][i]);
      r.check("a_" + std::to_string(i + 1) + std::to_string(j + 1) + " * b_" +
                  std::to_string(j + 1) + std::to_string(i + 1) + " = 0",
              ok);
    }
  return r;
}

Report verify_positive_columns(const NumericalSemigroup& sg, Int f) {
  PFData pf = sg.pseudo_frobenius();
  if (std::find(pf.pf_prime.begin(), pf.pf_prime.end(), f) == pf.pf_prime.end())
    throw Error(ErrorKind::PrecondFailed,
                std::to_string(f) + " is not in PF'(H) of " + sg.to_string());
  Report r("positive-columns", sg.to_string());
  r.witness("f", std::to_string(f));
  const std::size_t e = sg.embedding_dimension();
  if (e != 4 || !pf.almost_symmetric()) {
    r.mark_informational();
    r.note("law only holds for 4-generated almost symmetric semigroups");
  }
  auto rows = rf_row_choices(sg, f);
  for (std::size_t j = 0; j < e; ++j) {
    // Some matrix has column j without positive entry iff every other row
    // admits a factorization avoiding n_j.
    bool can_vanish = true;
    for (std::size_t i = 0; i < e && can_vanish; ++i) {
      if (i == j) continue;
      can_vanish = std::any_of(rows[i].begin(), rows[i].end(),
                               [&](const Exponents& x) { return x[j] == 0; });
    }
    r.check("column " + std::to_string(j + 1) + " has a positive entry",
            !can_vanish);
  }
  return r;
}

bool generates_check(const NumericalSemigroup& sg,
                     const std::vector<Binomial>& binomials) {
  for (const auto& b : binomials) {
    Int dp = degree_of(sg, b.plus), dm = degree_of(sg, b.minus);
    if (dp != dm)
      throw Error(ErrorKind::NotInIdeal,
                  b.to_string() + " has sides of degree " + std::to_string(dp) +
                      " and " + std::to_string(dm));
  }
  std::set<Int> degrees;
  for (const auto& g : minimal_generators(sg)) degrees.insert(g.degree);

  for (Int d : degrees) {
    auto fibre = factorizations(sg, d);
    std::map<Exponents, std::size_t> index;
    for (std::size_t v = 0; v < fibre.size(); ++v) index[fibre[v].coeffs] = v;
    std::vector<std::size_t> parent(fibre.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t components = fibre.size();
    for (std::size_t v = 0; v < fibre.size(); ++v) {
      const auto& u = fibre[v].coeffs;
      for (const auto& b : binomials) {
        for (int side = 0; side < 2; ++side) {
          const auto& from = side ? b.minus : b.plus;
          const auto& to = side ? b.plus : b.minus;
          bool fits = true;
          for (std::size_t k = 0; k < u.size() && fits; ++k) fits = u[k] >= from[k];
          if (!fits) continue;
          Exponents w = u;
          for (std::size_t k = 0; k < u.size(); ++k) w[k] += to[k] - from[k];
          auto it = index.find(w);
          if (it == index.end()) continue;
          std::size_t a = find(v), c = find(it->second);
          if (a != c) {
            parent[std::max(a, c)] = std::min(a, c);
            --components;
          }
        }
      }
    }
    if (components != 1) return false;
  }
  return true;
}

Report verify_rf_laws(const NumericalSemigroup& sg) {
  Report r("rf-laws", sg.to_string());
  PFData pf = sg.pseudo_frobenius();
  const std::size_t e = sg.embedding_dimension();
  if (sg.is_natural_numbers() || e < 2) {
    r.mark_not_applicable("needs H != N");
    return r;
  }
  const auto& n = sg.generators();

  // Row-difference binomials sit below f + n_i + n_j, for every f in PF(H).
  bool degree_ok = true;
  std::string offender;
  for (Int f : pf.pf) {
    for (const auto& m : rf_matrices(sg, f)) {
      for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = i + 1; j < e; ++j) {
          auto b = rf_relation(sg, m, i, j);
          if (b && !sg.leq(b->degree, f + n[i] + n[j]) && degree_ok) {
            degree_ok = false;
            offender = b->to_string();
          }
        }
    }
  }
  r.check("RF-relation degree <=_H f+n_i+n_j", degree_ok, offender);

  for (std::size_t x = 0; x < pf.pf.size(); ++x)
    for (std::size_t y = x; y < pf.pf.size(); ++y) {
      Int f = pf.pf[x], g = pf.pf[y];
      if (sg.contains(f + g)) continue;
      Report sub = verify_pairwise_zero(sg, f, g);
      r.check("pairwise zeros for (" + std::to_string(f) + "," + std::to_string(g) + ")",
              sub.passed());
    }

  if (e != 4 || !pf.almost_symmetric() || pf.type < 2) {
    r.note("4-generated almost symmetric laws skipped");
    return r;
  }

  AlphaTable al = alphas(sg);
  for (Int f : pf.pf_prime) {
    auto rows = rf_row_choices(sg, f);
    Report cols = verify_positive_columns(sg, f);
    r.check("positive column entries for f=" + std::to_string(f), cols.passed());
    for (std::size_t i = 0; i < 4; ++i) {
      bool zero_each = std::all_of(rows[i].begin(), rows[i].end(), [&](const Exponents& x) {
        std::size_t positives = 0;
        for (std::size_t j = 0; j < 4; ++j) positives += (j != i && x[j] > 0);
        return positives <= 2;
      });
      r.check("f=" + std::to_string(f) + " row " + std::to_string(i + 1) +
                  ": every choice has a zero and at most two generators",
              zero_each);
      bool common_zero = false;
      for (std::size_t j = 0; j < 4; ++j) {
        if (j == i) continue;
        common_zero = common_zero ||
                      std::all_of(rows[i].begin(), rows[i].end(),
                                  [&](const Exponents& x) { return x[j] == 0; });
      }
      r.check("f=" + std::to_string(f) + " row " + std::to_string(i + 1) +
                  ": zero position shared by all choices",
              common_zero);
      for (const auto& x : rows[i]) {
        std::size_t positives = 0, carrier = 0;
        for (std::size_t j = 0; j < 4; ++j)
          if (j != i && x[j] > 0) {
            ++positives;
            carrier = j;
          }
        if (positives != 1) continue;
        Int b = x[carrier];
        bool ok = b == al.alpha[carrier] - 1;
        if (!ok && b >= al.alpha[carrier]) {
          for (std::size_t j = 0; j < 4; ++j)
            if (j != carrier && j != i &&
                al.alpha[carrier] * n[carrier] == al.alpha[j] * n[j])
              ok = true;
        }
        r.check("f=" + std::to_string(f) + ": f+n_" + std::to_string(i + 1) + " = " +
                    std::to_string(b) + " n_" + std::to_string(carrier + 1) +
                    " has b = alpha-1 or tied alphas",
                ok);
      }
    }
  }

  // Collisions f + n_k = f' + n_l.
  std::map<Int, std::vector<std::pair<Int, std::size_t>>> hits;
  for (Int f : pf.pf_prime)
    for (std::size_t k = 0; k < 4; ++k) hits[f + n[k]].push_back({f, k});
  for (const auto& [value, list] : hits) {
    std::set<std::size_t> indices;
    for (const auto& [f, k] : list) indices.insert(k);
    r.check("no triple collision at " + std::to_string(value), indices.size() <= 2);
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        if (list[a].first == list[b].first) continue;
        std::size_t k = list[a].second, l = list[b].second;
        bool ok = false;
        for (std::size_t i = 0; i < 4; ++i)
          if (i != k && i != l && value == (al.alpha[i] - 1) * n[i]) ok = true;
        r.check("collision " + std::to_string(value) + " equals (alpha_i-1) n_i", ok);
      }
  }

  // Special rows.
  auto special_row_sources = [&](Int f) {
    std::set<std::size_t> src;
    for (const auto& m : rf_matrices(sg, f))
      for (const auto& s : special_rows(sg, m, al.alpha)) src.insert(s.source);
    return src.size();
  };
  if (pf.type == 2) {
    auto ms = rf_matrices(sg, pf.pf_prime.front());
    bool ok = ms.size() == 1 && special_rows(sg, ms.front(), al.alpha).size() == 2;
    r.check("RF(F/2) has exactly two special rows", ok);
  }
  for (std::size_t x = 0; x < pf.pf_prime.size(); ++x)
    for (std::size_t y = x + 1; y < pf.pf_prime.size(); ++y) {
      Int f = pf.pf_prime[x], g = pf.pf_prime[y];
      if (sg.contains(f + g)) continue;
      std::size_t count = special_row_sources(f) + special_row_sources(g);
      r.check("at least 4 special rows in RF(" + std::to_string(f) + "), RF(" +
                  std::to_string(g) + ")",
              count >= 4, std::to_string(count));
    }
  return r;
}

}  // namespace numsgp
