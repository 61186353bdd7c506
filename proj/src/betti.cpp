#include "numsgp/betti.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace numsgp {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::string join_ints(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

}  // namespace

FiberGraph fiber_graph(const NumericalSemigroup& sg, Int degree,
                       std::size_t cap) {
  FiberGraph g;
  g.degree = degree;
  for (auto& f : factorizations(sg, degree, cap)) g.vertices.push_back(std::move(f.coeffs));
  const std::size_t e = sg.embedding_dimension();
  const std::size_t n = g.vertices.size();
  DisjointSets sets(n);
  for (std::size_t k = 0; k < e; ++k) {
    std::size_t first = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (g.vertices[v][k] == 0) continue;
      if (first == n) first = v;
      else sets.join(first, v);
    }
  }
  // Vertices are in descending order, so the smallest vertex of a
  // component is the last one seen.
  std::vector<std::size_t> smallest(n, n);
  for (std::size_t v = 0; v < n; ++v) smallest[sets.find(v)] = v;
  std::vector<std::size_t> roots;
  for (std::size_t v = 0; v < n; ++v)
    if (sets.find(v) == v) roots.push_back(v);
  std::sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) {
    return g.vertices[smallest[a]] < g.vertices[smallest[b]];
  });
  std::vector<std::size_t> id(n, 0);
  for (std::size_t c = 0; c < roots.size(); ++c) {
    id[roots[c]] = c;
    g.representatives.push_back(smallest[roots[c]]);
  }
  g.component.resize(n);
  for (std::size_t v = 0; v < n; ++v) g.component[v] = id[sets.find(v)];
  g.components = roots.size();
  return g;
}

std::vector<Binomial> minimal_generators(const NumericalSemigroup& sg) {
  std::vector<Binomial> out;
  if (sg.embedding_dimension() < 2) return out;
  const Int bound = sg.frobenius() + sg.generator_sum();
  for (Int d = 2 * sg.generator(0); d <= bound; ++d) {
    if (count_factorizations(sg, d, 2) < 2) continue;
    FiberGraph g = fiber_graph(sg, d);
    const auto& base = g.vertices[g.representatives.front()];
    for (std::size_t c = 1; c < g.components; ++c) {
      auto b = Binomial::from_pair(sg, g.vertices[g.representatives[c]], base);
      out.push_back(*b);
    }
  }
  return out;
}

bool is_minimal_generator(const NumericalSemigroup& sg, const Binomial& b) {
  FiberGraph g = fiber_graph(sg, b.degree);
  auto index = [&](const Exponents& v) {
    auto it = std::find(g.vertices.begin(), g.vertices.end(), v);
    return it == g.vertices.end() ? g.vertices.size()
                                  : static_cast<std::size_t>(it - g.vertices.begin());
  };
  std::size_t u = index(b.plus), v = index(b.minus);
  if (u == g.vertices.size() || v == g.vertices.size()) return false;
  return g.component[u] != g.component[v];
}

DivisorComplex divisor_complex(const NumericalSemigroup& sg, Int h) {
  const std::size_t e = sg.embedding_dimension();
  if (e > 16) throw Error(ErrorKind::PrecondFailed, "too many generators");
  DivisorComplex c{h, e, {}};
  for (unsigned mask = 0; mask < (1u << e); ++mask) {
    Int rest = h;
    for (std::size_t i = 0; i < e; ++i)
      if (mask & (1u << i)) rest -= sg.generator(i);
    if (sg.contains(rest)) c.faces.push_back(mask);
  }
  return c;
}

Int exact_rank(std::vector<std::vector<Int>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto& p = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      Int factor = rows[r][col];
      if (factor == 0) continue;
      Int pc = p[col];
      Int g = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = checked_add(checked_mul(pc, rows[r][k]),
                                 -checked_mul(factor, p[k]));
        g = std::gcd(g, rows[r][k]);
      }
      if (g > 1)
        for (auto& x : rows[r]) x /= g;
    }
    ++rank;
  }
  return static_cast<Int>(rank);
}

std::vector<Int> reduced_homology(const DivisorComplex& complex) {
  const std::size_t e = complex.vertices;
  // faces grouped by cardinality; index k holds faces with k vertices.
  std::vector<std::vector<unsigned>> by_size(e + 1);
  for (unsigned f : complex.faces) by_size[std::popcount(f)].push_back(f);

  // rank of the boundary from size-k faces to size-(k-1) faces.
  std::vector<Int> boundary_rank(e + 2, 0);
  for (std::size_t k = 1; k <= e; ++k) {
    const auto& top = by_size[k];
    const auto& low = by_size[k - 1];
    if (top.empty() || low.empty()) continue;
    std::vector<std::vector<Int>> m(top.size(), std::vector<Int>(low.size(), 0));
    for (std::size_t r = 0; r < top.size(); ++r) {
      int sign = 1;
      for (std::size_t v = 0; v < e; ++v) {
        if (!(top[r] & (1u << v))) continue;
        unsigned face = top[r] & ~(1u << v);
        auto it = std::lower_bound(low.begin(), low.end(), face);
        if (it != low.end() && *it == face)
          m[r][static_cast<std::size_t>(it - low.begin())] = sign;
        sign = -sign;
      }
    }
    boundary_rank[k] = exact_rank(std::move(m));
  }
  std::vector<Int> h(e + 1, 0);
  for (std::size_t k = 0; k <= e; ++k) {
    Int dim = static_cast<Int>(by_size[k].size());
    h[k] = dim - boundary_rank[k] - boundary_rank[k + 1];
  }
  return h;
}

Int BettiTable::total(std::size_t i) const {
  Int s = 0;
  if (i < graded.size())
    for (const auto& [d, b] : graded[i]) s += b;
  return s;
}

std::vector<Int> BettiTable::degrees(std::size_t i) const {
  std::vector<Int> out;
  if (i < graded.size())
    for (const auto& [d, b] : graded[i]) out.insert(out.end(), static_cast<std::size_t>(b), d);
  return out;
}

BettiTable graded_betti(const NumericalSemigroup& sg) {
  const std::size_t e = sg.embedding_dimension();
  if (e > 6)
    throw Error(ErrorKind::PrecondFailed, "graded_betti supports e <= 6");
  BettiTable t;
  t.e = e;
  t.graded.resize(e);
  const Int bound = sg.frobenius() + sg.generator_sum();
  for (Int h = 0; h <= bound; ++h) {
    if (!sg.contains(h)) continue;
    DivisorComplex c = divisor_complex(sg, h);
    if (c.faces.size() == (std::size_t{1} << e) && e > 0) continue;  // full simplex
    auto hom = reduced_homology(c);
    for (std::size_t i = 0; i < e; ++i)
      if (hom[i] != 0) t.graded[i][h] = hom[i];
  }
  t.mu = e >= 2 ? t.total(1) : 0;
  if (e >= 2) t.a_degrees = t.degrees(1);
  if (e >= 3) t.b_degrees = t.degrees(2);
  t.last_degrees = t.degrees(e - 1);
  Int type = sg.pseudo_frobenius().type;
  t.m0 = type > 0 ? 3 * (type - 1) : 0;
  t.surplus = t.mu - t.m0;
  return t;
}

namespace {

bool take_submultiset(std::vector<Int>& pool, const std::vector<Int>& part) {
  std::vector<Int> rest = pool;
  for (Int x : part) {
    auto it = std::find(rest.begin(), rest.end(), x);
    if (it == rest.end()) return false;
    rest.erase(it);
  }
  pool = std::move(rest);
  return true;
}

std::vector<Int> sorted(std::vector<Int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Report verify_comparison(const NumericalSemigroup& sg) {
  if (sg.embedding_dimension() != 4 || !sg.pseudo_frobenius().almost_symmetric())
    throw Error(ErrorKind::PrecondFailed,
                "degree comparison needs a 4-generated almost symmetric semigroup");
  return verify_comparison(sg, graded_betti(sg));
}

Report verify_comparison(const NumericalSemigroup& sg, const BettiTable& table) {
  PFData pf = sg.pseudo_frobenius();
  if (sg.embedding_dimension() != 4 || !pf.almost_symmetric())
    throw Error(ErrorKind::PrecondFailed,
                "degree comparison needs a 4-generated almost symmetric semigroup");
  Report r("degree-comparison", sg.to_string());
  const auto& n = sg.generators();
  const Int top = pf.frobenius + sg.generator_sum();
  const Int m0 = table.m0;
  const Int m = table.mu;
  r.witness("F+N", std::to_string(top));
  r.witness("mu", std::to_string(m));
  r.witness("m0", std::to_string(m0));
  r.witness("s", std::to_string(m - m0));
  r.witness("a_degrees", join_ints(table.a_degrees));
  r.witness("b_degrees", join_ints(table.b_degrees));
  if (!r.check("mu >= 3(t-1)", m >= m0)) return r;

  std::vector<Int> pair_degrees, b_target;
  for (Int f : pf.pf_prime) {
    for (std::size_t i = 0; i < 4; ++i) {
      b_target.push_back(f + sg.generator_sum() - n[i]);
      for (std::size_t j = i + 1; j < 4; ++j) pair_degrees.push_back(f + n[i] + n[j]);
    }
  }
  pair_degrees = sorted(pair_degrees);

  // Find a size-m0 part A0 of the a-degrees with A0 + (F+N - A0) equal to
  // the f+n_i+n_j multiset.
  const auto& a = table.a_degrees;
  std::vector<Int> a0, as;
  bool found = false;
  std::vector<bool> choose(a.size(), false);
  std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(m0), true);
  // iterate over combinations via prev_permutation on a sorted selector
  do {
    std::vector<Int> part, rest, mirrored;
    for (std::size_t i = 0; i < a.size(); ++i) (choose[i] ? part : rest).push_back(a[i]);
    mirrored = part;
    for (Int x : part) mirrored.push_back(top - x);
    if (sorted(mirrored) == pair_degrees) {
      a0 = part;
      as = rest;
      found = true;
      break;
    }
  } while (std::prev_permutation(choose.begin(), choose.end()));
  r.check("a-degrees: A0 + (F+N-A0) = {f+n_i+n_j : f in PF'}", found,
          "target " + join_ints(pair_degrees));
  if (!found) return r;
  r.witness("A0", join_ints(a0));
  r.witness("surplus_a", join_ints(as));

  std::vector<Int> b_rest = table.b_degrees;
  bool b_ok = take_submultiset(b_rest, b_target);
  r.check("b-degrees contain {f+N-n_i : f in PF'}", b_ok,
          "target " + join_ints(sorted(b_target)));
  if (!b_ok) return r;
  r.witness("surplus_b", join_ints(sorted(b_rest)));

  std::vector<Int> paired;
  for (Int x : as) paired.push_back(top - x);
  r.check("surplus pairing a = F+N - b", sorted(paired) == sorted(b_rest),
          "F+N - surplus_a = " + join_ints(sorted(paired)));

  std::vector<Int> printed;
  for (Int x : as) printed.push_back(pf.frobenius - x);
  bool printed_ok = sorted(printed) == sorted(b_rest);
  r.witness("pairing_against_F_alone_holds", printed_ok ? "true" : "false");
  if (!as.empty() && !printed_ok)
    r.note("surplus pairs against F(H)+N; the variant a = F(H) - b does not hold");
  return r;
}

Report verify_betti_laws(const NumericalSemigroup& sg) {
  Report r("betti-laws", sg.to_string());
  const std::size_t e = sg.embedding_dimension();
  if (e < 2 || e > 6) {
    r.mark_not_applicable("needs 2 <= e <= 6");
    return r;
  }
  PFData pf = sg.pseudo_frobenius();
  BettiTable t = graded_betti(sg);
  r.check("beta_0 = 1 in degree 0", t.total(0) == 1 && t.graded[0].count(0) == 1);

  std::vector<Int> expected_last;
  for (Int f : pf.pf) expected_last.push_back(f + sg.generator_sum());
  r.check("beta_{e-1} = t(H)", t.total(e - 1) == pf.type,
          std::to_string(t.total(e - 1)) + " vs " + std::to_string(pf.type));
  r.check("last shifts = {f+N : f in PF}", t.last_degrees == expected_last,
          join_ints(t.last_degrees));

  Int alternating = 0;
  for (std::size_t i = 0; i < e; ++i)
    alternating += (i % 2 ? -1 : 1) * t.total(i);
  r.check("alternating Betti sum is zero", alternating == 0,
          std::to_string(alternating));

  auto gens = minimal_generators(sg);
  r.check("mu agrees between fiber graphs and divisor complexes",
          static_cast<Int>(gens.size()) == t.mu,
          std::to_string(gens.size()) + " vs " + std::to_string(t.mu));

  if (e == 4 && pf.almost_symmetric())
    r.check("mu >= 3(t-1)", t.mu >= 3 * (pf.type - 1));

  // Minimal generators of the ideal of non-UF elements.
  const Int bound = pf.frobenius + sg.generator_sum();
  std::vector<char> non_uf(static_cast<std::size_t>(bound + 1), 0);
  Int ideal_gens = 0;
  for (Int h = 0; h <= bound; ++h) {
    if (!sg.contains(h)) continue;
    if (count_factorizations(sg, h, 2) < 2) continue;
    non_uf[static_cast<std::size_t>(h)] = 1;
    bool minimal = true;
    for (Int g : sg.generators())
      if (h - g >= 0 && non_uf[static_cast<std::size_t>(h - g)]) minimal = false;
    if (minimal) ++ideal_gens;
  }
  r.check("minimal generators of the non-UF ideal <= mu", ideal_gens <= t.mu,
          std::to_string(ideal_gens) + " <= " + std::to_string(t.mu));

  bool bound_ok = true;
  std::string offender;
  for (const auto& b : gens) {
    for (std::size_t i : b.plus_support())
      for (std::size_t j : b.minus_support()) {
        bool any = std::any_of(pf.pf.begin(), pf.pf.end(), [&](Int f) {
          return sg.leq(b.degree, f + sg.generator(i) + sg.generator(j));
        });
        if (!any && bound_ok) {
          bound_ok = false;
          offender = b.to_string();
        }
      }
  }
  r.check("every minimal generator degree <=_H f+n_i+n_j", bound_ok, offender);
  return r;
}

}  // namespace numsgp
