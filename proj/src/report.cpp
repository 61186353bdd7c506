#include "numsgp/report.hpp"

#include <algorithm>
#include <sstream>

namespace numsgp {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::NotApplicable: return "N/A";
    case Verdict::Informational: return "INFO";
  }
  return "?";
}

Verdict Report::verdict() const {
  if (not_applicable_) return Verdict::NotApplicable;
  if (informational_) return Verdict::Informational;
  bool ok = std::all_of(checks_.begin(), checks_.end(),
                        [](const Check& c) { return c.passed; });
  return ok ? Verdict::Pass : Verdict::Fail;
}

std::vector<Check> Report::failures() const {
  std::vector<Check> out;
  for (const auto& c : checks_)
    if (!c.passed) out.push_back(c);
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << name_ << ' ' << subject_ << ": " << to_string(verdict()) << '\n';
  for (const auto& c : checks_) {
    os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << '\n';
  }
  for (const auto& [k, v] : witnesses_) os << "  " << k << ": " << v << '\n';
  for (const auto& n : notes_) os << "  note: " << n << '\n';
  return os.str();
}

}  // namespace numsgp
