#include "numsgp/shifted.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "numsgp/betti.hpp"
#include "numsgp/factorization.hpp"
#include "numsgp/rf.hpp"

namespace numsgp {

namespace {

std::string join(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<Int> shifted_tuple(const NumericalSemigroup& sg, Int m) {
  std::vector<Int> out;
  for (Int n : sg.generators()) out.push_back(checked_add(n, m));
  return out;
}

bool is_type3_as(const ShiftScanRecord& r) {
  return r.valid && r.minimal && r.generators.size() == 4 &&
         r.classification == Classification::AlmostSymmetric && r.type == 3;
}

// PF data from Ap(n_1) alone; enough for classification during searches.
PFData quick_pf(const std::vector<Int>& n) {
  ResidueTable ap(n[0], std::span<const Int>(n).subspan(1));
  PFData data;
  Int maxw = 0;
  for (Int w : ap.values()) {
    maxw = std::max(maxw, w);
    data.genus += w / n[0];
  }
  data.frobenius = maxw - n[0];
  for (Int w : ap.values()) {
    if (w == 0) continue;
    Int x = w - n[0];
    if (std::all_of(n.begin(), n.end(), [&](Int g) { return ap.contains(x + g); }))
      data.pf.push_back(x);
  }
  std::sort(data.pf.begin(), data.pf.end());
  data.type = static_cast<Int>(data.pf.size());
  if (!data.pf.empty()) data.pf_prime.assign(data.pf.begin(), data.pf.end() - 1);
  if (2 * data.genus == data.frobenius + data.type)
    data.classification = data.type == 1   ? Classification::Symmetric
                          : data.type == 2 ? Classification::PseudoSymmetric
                                           : Classification::AlmostSymmetric;
  return data;
}

}  // namespace

ShiftInvariants shift_invariants(const NumericalSemigroup& sg) {
  const auto& n = sg.generators();
  ShiftInvariants inv;
  inv.s = n.back() - n.front();
  for (Int x : n) inv.d = std::gcd(inv.d, x - n.front());
  inv.s_prime = inv.d ? inv.s / inv.d : 0;
  return inv;
}

ShiftResult shift(const NumericalSemigroup& sg, Int m) {
  if (m < 0) throw Error(ErrorKind::InvalidInput, "shift must be non-negative");
  auto raw = shifted_tuple(sg, m);
  NumericalSemigroup out(raw);
  return {out, out.embedding_dimension() == raw.size()};
}

ShiftScanRecord scan_one(const NumericalSemigroup& sg, Int m) {
  ShiftScanRecord r;
  r.m = m;
  auto raw = shifted_tuple(sg, m);
  r.valid = gcd_of(raw) == 1;
  if (!r.valid) return r;
  ShiftResult sh = shift(sg, m);
  const auto& h = sh.semigroup;
  r.minimal = sh.minimal;
  r.generators = h.generators();
  PFData pf = h.pseudo_frobenius();
  r.classification = pf.classification;
  r.type = pf.type;
  r.frobenius = pf.frobenius;
  r.pf = pf.pf;
  if (h.embedding_dimension() >= 2) r.alphas = alphas(h).alpha;
  if (is_type3_as(r)) {
    r.f = pf.pf_prime[0];
    r.f_prime = pf.pf_prime[1];
  }
  return r;
}

std::vector<ShiftScanRecord> scan(const NumericalSemigroup& sg, Int m_max, Int from_m,
                                  unsigned threads) {
  if (from_m < 0) from_m = 0;
  if (m_max < from_m) return {};
  const std::size_t count = static_cast<std::size_t>(m_max - from_m + 1);
  std::vector<ShiftScanRecord> out(count);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = scan_one(sg, from_m + static_cast<Int>(i));
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < count; i = next++)
          out[i] = scan_one(sg, from_m + static_cast<Int>(i));
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

Int default_scan_limit(const NumericalSemigroup& sg) {
  Int ne = sg.generators().back();
  return std::min<Int>(20 * ne * ne, 1'000'000);
}

Report type2_window(const NumericalSemigroup& sg, Int m_max) {
  Report r("type2-window", sg.to_string());
  if (sg.embedding_dimension() != 4) {
    r.mark_not_applicable("embedding dimension is not 4");
    return r;
  }
  std::vector<Int> hits;
  for (const auto& rec : scan(sg, m_max))
    if (rec.valid && rec.minimal && rec.classification == Classification::PseudoSymmetric)
      hits.push_back(rec.m);
  Int last = hits.empty() ? -1 : hits.back();
  r.witness("type-2 shifts", join(hits));
  r.witness("last type-2 shift", std::to_string(last));
  r.check("no type-2 shift in the second half of [0, " + std::to_string(m_max) + "]",
          last <= m_max / 2);
  return r;
}

Report alpha_growth(const NumericalSemigroup& sg, Int m_lo, Int m_hi) {
  Report r("alpha-growth", sg.to_string());
  const std::size_t e = sg.embedding_dimension();
  if (e < 3) {
    r.mark_not_applicable("needs embedding dimension >= 3");
    return r;
  }
  ShiftInvariants inv = shift_invariants(sg);
  const Int n1 = sg.generator(0);
  r.witness("s", std::to_string(inv.s));
  r.witness("d", std::to_string(inv.d));
  r.witness("s'", std::to_string(inv.s_prime));
  std::optional<std::vector<Int>> middle;
  bool constant = true, lower1 = true, lower_e = true, diff_ok = true;
  Int dev1 = 0, dev_e = 0, as_shifts = 0;
  for (const auto& rec : scan(sg, m_hi, m_lo)) {
    if (!rec.valid || !rec.minimal || rec.generators.size() != e) continue;
    std::vector<Int> mid(rec.alphas.begin() + 1, rec.alphas.end() - 1);
    if (!middle) middle = mid;
    constant = constant && mid == *middle;
    Int base = rec.m + n1;
    Int a1 = rec.alphas.front() * inv.s_prime - base;
    Int ae = rec.alphas.back() * inv.s_prime - base;
    lower1 = lower1 && a1 >= 0;
    lower_e = lower_e && ae + inv.s_prime >= 0;
    dev1 = std::max(dev1, a1);
    dev_e = std::max(dev_e, ae);
    if (e == 4 && is_type3_as(rec)) {
      ++as_shifts;
      diff_ok = diff_ok && rec.alphas.front() - rec.alphas.back() == inv.d;
    }
  }
  if (middle) r.witness("alpha_2..alpha_{e-1}", join(*middle));
  r.witness("max s'*alpha_1(m) - (m+n_1)", std::to_string(dev1));
  r.witness("max s'*alpha_e(m) - (m+n_1)", std::to_string(dev_e));
  r.check("alpha_2..alpha_{e-1} constant", constant);
  r.check("alpha_1(m) >= (m+n_1)/s'", lower1);
  r.check("alpha_e(m) >= (m+n_1)/s' - 1", lower_e);
  if (as_shifts > 0)
    r.check("alpha_1(m) - alpha_4(m) = d at almost symmetric type-3 shifts", diff_ok,
            std::to_string(as_shifts) + " shifts");
  return r;
}

Report frobenius_growth(const NumericalSemigroup& sg, Int m_max) {
  Report r("frobenius-growth", sg.to_string());
  ShiftInvariants inv = shift_invariants(sg);
  if (inv.s == 0) {
    r.mark_not_applicable("single generator");
    return r;
  }
  Int last_violation = -1;
  for (const auto& rec : scan(sg, m_max))
    if (rec.valid && rec.frobenius * inv.s < rec.m * rec.m) last_violation = rec.m;
  r.witness("last m with F(H+m) < m^2/s", std::to_string(last_violation));
  r.check("F(H+m) >= m^2/s on the second half of the window",
          last_violation <= m_max / 2);
  return r;
}

Report homogeneous_relations(const NumericalSemigroup& sg, Int m_max) {
  Report r("homogeneous-relations", sg.to_string());
  std::vector<Binomial> homogeneous;
  for (const auto& b : minimal_generators(sg)) {
    Int p = std::accumulate(b.plus.begin(), b.plus.end(), Int{0});
    Int q = std::accumulate(b.minus.begin(), b.minus.end(), Int{0});
    if (p == q) homogeneous.push_back(b);
  }
  r.witness("homogeneous generators", std::to_string(homogeneous.size()));
  const auto& n = sg.generators();
  for (const auto& b : homogeneous) {
    bool ok = true;
    for (Int m = 0; m <= m_max && ok; ++m) {
      Int lhs = 0, rhs = 0;
      for (std::size_t i = 0; i < n.size(); ++i) {
        lhs += b.plus[i] * (n[i] + m);
        rhs += b.minus[i] * (n[i] + m);
      }
      ok = lhs == rhs;
    }
    r.check(b.to_string() + " is a relation of every H+m", ok);
  }
  return r;
}

std::vector<Int> type3_shifts(const NumericalSemigroup& sg, Int m_max) {
  std::vector<Int> out;
  for (const auto& rec : scan(sg, m_max))
    if (is_type3_as(rec)) out.push_back(rec.m);
  return out;
}

void validate(const FamilyParams& p) {
  std::string why;
  if (p.a < 3 || p.a % 2 == 0) why = "a must be odd and at least 3";
  else if (p.d < 1 || p.d % 2 == 0) why = "d must be odd and positive";
  else if (std::gcd(p.a, p.d) != 1) why = "gcd(a,d) must be 1";
  else if (p.b < p.d + 2) why = "b must be at least d+2";
  if (!why.empty()) throw Error(ErrorKind::InvalidParams, why);
}

NumericalSemigroup construct_family(const FamilyParams& p) {
  validate(p);
  const Int step = 2 * p.a - 2;
  const Int n1 = 2 * p.a + (p.b - p.d - 2) * step;
  std::vector<Int> n{n1, n1 + (p.a - 2) * p.d, n1 + p.a * p.d, 2 * p.a + (p.b - 2) * step};
  if (n[3] != n1 + step * p.d)
    throw Error(ErrorKind::InvalidParams, "n4 differs from n1 + (2a-2)d");
  if (gcd_of(n) != 1 || minimalize(n).size() != 4)
    throw Error(ErrorKind::InvalidParams, "parameters give " + join(n) +
                                              ", not a 4-generated numerical semigroup");
  return NumericalSemigroup(n);
}

std::vector<Binomial> family_binomials(const NumericalSemigroup& sg, const FamilyParams& p) {
  const Int a = p.a, b = p.b, d = p.d;
  std::vector<std::pair<Exponents, Exponents>> sides{
      {{1, 0, 0, 1}, {0, 1, 1, 0}},
      {{0, a, 0, 0}, {2, 0, a - 2, 0}},
      {{0, 0, a, 0}, {0, a - 2, 0, 2}},
      {{1, 0, a - 1, 0}, {0, a - 1, 0, 1}},
      {{b, 0, 0, 0}, {0, 0, 2, b - d - 2}},
      {{0, 0, 0, b - d}, {b - 2, 2, 0, 0}},
      {{b - 1, 1, 0, 0}, {0, 0, 1, b - d - 1}},
  };
  std::vector<Binomial> out;
  for (const auto& [u, v] : sides)
    if (auto x = Binomial::from_pair(sg, u, v)) out.push_back(*x);
  return canonical_set(std::move(out));
}

Report verify_family(const FamilyParams& p, Int steps) {
  validate(p);
  Report r("family", "H(" + std::to_string(p.a) + "," + std::to_string(p.b) + ";" +
                         std::to_string(p.d) + ")");
  const Int a = p.a, d = p.d;
  for (Int k = 0; k <= steps; ++k) {
    FamilyParams q{a, p.b + k, d};
    const Int b = q.b;
    NumericalSemigroup sg = construct_family(q);
    const auto& n = sg.generators();
    const std::string tag = sg.to_string() + ": ";
    r.witness("b=" + std::to_string(b), sg.to_string());
    PFData pf = sg.pseudo_frobenius();
    r.check(tag + "almost symmetric of type 3",
            pf.classification == Classification::AlmostSymmetric && pf.type == 3);
    const Int f = (a - 1) * n[1] - n[0];
    const Int f2 = (b - 1) * n[0] - n[2];
    r.check(tag + "PF = {(a-1)n2-n1, (b-1)n1-n3, F}",
            pf.pf == std::vector<Int>{std::min(f, f2), std::max(f, f2), f + f2},
            join(pf.pf));
    if (pf.pf.size() == 3) {
      RFMatrix want_f = RFMatrix::from_rows(
          f, {{-1, a - 1, 0, 0}, {1, -1, a - 2, 0}, {0, a - 2, -1, 1}, {0, 0, a - 1, -1}});
      RFMatrix want_f2 = RFMatrix::from_rows(f2, {{-1, 0, 1, b - d - 2},
                                                  {0, -1, 0, b - d - 1},
                                                  {b - 1, 0, -1, 0},
                                                  {b - 2, 1, 0, -1}});
      // Rows with several factorizations give several matrices; the displayed
      // one must be among them.
      auto has = [](const std::vector<RFMatrix>& ms, const RFMatrix& m) {
        return std::find(ms.begin(), ms.end(), m) != ms.end();
      };
      try {
        auto ms_f = rf_matrices(sg, f);
        auto ms_f2 = rf_matrices(sg, f2);
        r.check(tag + "RF(f) contains the a-matrix", has(ms_f, want_f),
                std::to_string(ms_f.size()) + " matrices");
        r.check(tag + "RF(f') contains the b-matrix", has(ms_f2, want_f2),
                std::to_string(ms_f2.size()) + " matrices");
      } catch (const Error& e) {
        r.check(tag + "RF-matrices of f and f'", false, e.what());
      }
    }
    auto minimal = minimal_generators(sg);
    auto listed = family_binomials(sg, q);
    // At b = d+2 the binomial x^b - z^2 makes one of the seven redundant.
    const std::size_t want_mu = b == d + 2 ? 6 : 7;
    r.check(tag + "mu = " + std::to_string(want_mu), minimal.size() == want_mu,
            std::to_string(minimal.size()));
    r.check(tag + "I_H is generated by the seven binomials",
            listed.size() == 7 && generates_check(sg, listed));
    r.check(tag + "n1 + n4 = n2 + n3", n[0] + n[3] == n[1] + n[2]);
    NumericalSemigroup next = construct_family({a, b + 1, d});
    ShiftResult sh = shift(sg, 2 * a - 2);
    r.check(tag + "next member is the shift by 2a-2", sh.minimal && sh.semigroup == next,
            next.to_string());
  }
  return r;
}

std::vector<OddSearchHit> odd_generator_search(Int bound, Int min_n4) {
  std::vector<OddSearchHit> out;
  std::vector<Int> n(4);
  for (n[3] = std::max<Int>(min_n4, 4); n[3] <= bound; ++n[3])
    for (n[0] = 1; n[0] < n[3]; ++n[0])
      for (n[1] = n[0] + 1; n[1] < n[3]; ++n[1])
        for (n[2] = n[1] + 1; n[2] < n[3]; ++n[2]) {
          if (gcd_of(n) != 1 || minimalize(n).size() != 4) continue;
          PFData pf = quick_pf(n);
          if (pf.classification != Classification::AlmostSymmetric || pf.type != 3)
            continue;
          Int d = 0;
          for (Int x : n) d = std::gcd(d, x - n[0]);
          bool all_odd = std::all_of(n.begin(), n.end(), [](Int x) { return x % 2 != 0; });
          if (d > 1 || all_odd) out.push_back({n, d, all_odd});
        }
  return out;
}

}  // namespace numsgp
