#include "numsgp/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

namespace numsgp {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::EnumerationOverflow: return "EnumerationOverflow";
    case ErrorKind::PrecondFailed: return "PrecondFailed";
    case ErrorKind::NotPseudoSymmetric: return "NotPseudoSymmetric";
    case ErrorKind::NoCanonicalForm: return "NoCanonicalForm";
    case ErrorKind::PatternNotFound: return "PatternNotFound";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NotInIdeal: return "NotInIdeal";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Symmetric: return "symmetric";
    case Classification::PseudoSymmetric: return "pseudo-symmetric";
    case Classification::AlmostSymmetric: return "almost-symmetric";
    case Classification::None: return "none";
  }
  return "none";
}

ResidueTable::ResidueTable(Int modulus, std::span<const Int> weights)
    : modulus_(modulus), least_(static_cast<std::size_t>(modulus), kUnreachable) {
  using Entry = std::pair<Int, Int>;  // (value, residue)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  least_[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [value, r] = queue.top();
    queue.pop();
    if (value != least_[static_cast<std::size_t>(r)]) continue;
    for (Int w : weights) {
      Int next = checked_add(value, w);
      auto nr = static_cast<std::size_t>(next % modulus_);
      if (least_[nr] == kUnreachable || next < least_[nr]) {
        least_[nr] = next;
        queue.emplace(next, static_cast<Int>(nr));
      }
    }
  }
}

bool ResidueTable::contains(Int x) const {
  if (x < 0) return false;
  Int w = least_[static_cast<std::size_t>(x % modulus_)];
  return w != kUnreachable && x >= w;
}

Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

std::vector<Int> minimalize(std::span<const Int> values) {
  std::vector<Int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Int> kept;
  ResidueTable table;
  for (Int g : sorted) {
    if (!kept.empty() && table.contains(g)) continue;
    kept.push_back(g);
    table = ResidueTable(kept.front(),
                         std::span<const Int>(kept).subspan(1));
  }
  return kept;
}

NumericalSemigroup::NumericalSemigroup(std::initializer_list<Int> raw)
    : NumericalSemigroup(std::span<const Int>(raw.begin(), raw.size())) {}

NumericalSemigroup::NumericalSemigroup(std::span<const Int> raw) {
  if (raw.empty()) throw Error(ErrorKind::EmptyInput, "no generators given");
  for (Int v : raw)
    if (v < 1)
      throw Error(ErrorKind::InvalidInput,
                  "generators must be positive, got " + std::to_string(v));
  Int g = gcd_of(raw);
  if (g != 1)
    throw Error(ErrorKind::GcdNotOne,
                "generators have gcd " + std::to_string(g), g);

  gens_ = minimalize(raw);
  sum_ = 0;
  for (Int v : gens_) sum_ = checked_add(sum_, v);

  std::span<const Int> all(gens_);
  suffix_.reserve(gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i)
    suffix_.emplace_back(gens_[i], all.subspan(i + 1));

  const auto& ap = suffix_.front().values();
  Int n1 = gens_.front();
  frobenius_ = *std::max_element(ap.begin(), ap.end()) - n1;
  genus_ = 0;
  for (Int w : ap) genus_ += w / n1;
}

bool NumericalSemigroup::contains(Int h) const {
  return suffix_.front().contains(h);
}

bool NumericalSemigroup::suffix_contains(std::size_t i, Int x) const {
  return suffix_[i].contains(x);
}

AperyTable NumericalSemigroup::apery(Int a) const {
  if (a <= 0 || !contains(a))
    throw Error(ErrorKind::NotMember,
                std::to_string(a) + " is not a positive element of " + to_string());
  AperyTable table{a, {}};
  table.elements.reserve(static_cast<std::size_t>(a));
  for (Int r = 0; r < a; ++r) {
    Int x = r;
    while (!contains(x)) x += a;
    table.elements.push_back(x);
  }
  std::sort(table.elements.begin(), table.elements.end());
  return table;
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  for (Int x = 1; x <= frobenius_; ++x)
    if (!contains(x)) out.push_back(x);
  return out;
}

PFData NumericalSemigroup::pseudo_frobenius() const {
  PFData data;
  data.frobenius = frobenius_;
  data.genus = genus_;
  if (is_natural_numbers()) return data;

  Int n1 = gens_.front();
  for (Int w : apery_min()) {
    if (w == 0) continue;
    Int x = w - n1;
    bool maximal = std::all_of(gens_.begin(), gens_.end(),
                               [&](Int n) { return contains(x + n); });
    if (maximal) data.pf.push_back(x);
  }
  std::sort(data.pf.begin(), data.pf.end());
  data.type = static_cast<Int>(data.pf.size());
  data.pf_prime.assign(data.pf.begin(), data.pf.end() - 1);

  if (2 * genus_ == frobenius_ + data.type) {
    if (data.type == 1)
      data.classification = Classification::Symmetric;
    else if (data.type == 2)
      data.classification = Classification::PseudoSymmetric;
    else
      data.classification = Classification::AlmostSymmetric;
  }
  return data;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << gens_[i];
  os << '>';
  return os.str();
}

}  // namespace numsgp
