#pragma once

// Shared PASS/FAIL/INCONCLUSIVE reporting for all law checkers. Each law
// records at most the first counterexample found.

#include <string>
#include <vector>

namespace hopfkit {

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* toString(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

struct LawCheck {
  std::string law;
  Verdict status = Verdict::Pass;
  std::string counterexample;  // empty on PASS
};

class LawReport {
 public:
  void pass(const std::string& law) { checks_.push_back({law, Verdict::Pass, ""}); }
  void fail(const std::string& law, const std::string& counterexample) {
    checks_.push_back({law, Verdict::Fail, counterexample});
  }
  void inconclusive(const std::string& law, const std::string& why) {
    checks_.push_back({law, Verdict::Inconclusive, why});
  }
  void record(const std::string& law, bool ok, const std::string& counterexample) {
    if (ok)
      pass(law);
    else
      fail(law, counterexample);
  }
  void merge(const LawReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  bool allPass() const {
    for (const auto& c : checks_)
      if (c.status != Verdict::Pass) return false;
    return true;
  }
  bool anyFail() const {
    for (const auto& c : checks_)
      if (c.status == Verdict::Fail) return true;
    return false;
  }
  bool anyInconclusive() const {
    for (const auto& c : checks_)
      if (c.status == Verdict::Inconclusive) return true;
    return false;
  }
  const std::vector<LawCheck>& checks() const { return checks_; }

  const LawCheck* find(const std::string& law) const {
    for (const auto& c : checks_)
      if (c.law == law) return &c;
    return nullptr;
  }

  std::string summary() const {
    std::string out;
    for (const auto& c : checks_) {
      out += c.law;
      out += ": ";
      out += toString(c.status);
      if (!c.counterexample.empty()) {
        out += " [";
        out += c.counterexample;
        out += "]";
      }
      out += "\n";
    }
    return out;
  }

 private:
  std::vector<LawCheck> checks_;
};

}  // namespace hopfkit
