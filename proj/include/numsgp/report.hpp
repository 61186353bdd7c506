#pragma once

#include <string>
#include <utility>
#include <vector>

namespace numsgp {

enum class Verdict { Pass, Fail, NotApplicable, Informational };

const char* to_string(Verdict v);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of a verifier. The verdict is Pass only when every
/// recorded check passed; informational reports never fail.
class Report {
 public:
  Report() = default;
  Report(std::string name, std::string subject)
      : name_(std::move(name)), subject_(std::move(subject)) {}

  const std::string& name() const noexcept { return name_; }
  const std::string& subject() const noexcept { return subject_; }

  bool check(std::string name, bool ok, std::string detail = {}) {
    checks_.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  }
  void witness(std::string key, std::string value) {
    witnesses_.emplace_back(std::move(key), std::move(value));
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }

  void mark_not_applicable(std::string reason) {
    not_applicable_ = true;
    notes_.push_back(std::move(reason));
  }
  void mark_informational() { informational_ = true; }

  Verdict verdict() const;
  bool passed() const { return verdict() == Verdict::Pass; }
  bool failed() const { return verdict() == Verdict::Fail; }

  const std::vector<Check>& checks() const noexcept { return checks_; }
  const std::vector<std::pair<std::string, std::string>>& witnesses() const noexcept {
    return witnesses_;
  }
  const std::vector<std::string>& notes() const noexcept { return notes_; }
  std::vector<Check> failures() const;

  /// Multi-line human summary.
  std::string to_text() const;

 private:
  std::string name_;
  std::string subject_;
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, std::string>> witnesses_;
  std::vector<std::string> notes_;
  bool not_applicable_ = false;
  bool informational_ = false;
};

}  // namespace numsgp
