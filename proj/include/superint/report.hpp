#pragma once

#include "superint/rational.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace superint {

/// One checked identity instance.
struct CaseResult {
  std::string suite;
  std::string id;
  nlohmann::json params = nlohmann::json::object();
  bool pass = false;
  /// Present iff pass is false: the serialized difference or counterexample.
  std::optional<std::string> witness;
};

/// Pass/fail record for a suite of identities.
class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CaseResult>& cases() const { return cases_; }
  const std::vector<std::string>& notes() const { return notes_; }

  /// Records a case. The witness is kept only for failures.
  void record(std::string id, nlohmann::json params, bool pass, std::string witness = {});
  void add_note(std::string note);
  /// Appends the cases and notes of another report (suite names of cases are kept).
  void merge(const VerificationReport& other);

  bool pass() const;
  std::size_t passed() const;
  std::size_t failed() const { return cases_.size() - passed(); }

  double elapsed_ms = 0.0;

  nlohmann::json to_json(bool include_timing = true) const;

 private:
  std::string suite_;
  std::vector<CaseResult> cases_;
  std::vector<std::string> notes_;
};

/// ["p/q", ...] for a parameter vector.
nlohmann::json rationals_json(std::span<const Rational> values);

}  // namespace superint
