#include "superint/report.hpp"

#include <algorithm>

namespace superint {

void VerificationReport::record(std::string id, nlohmann::json params, bool pass, std::string witness) {
  CaseResult c;
  c.suite = suite_;
  c.id = std::move(id);
  c.params = std::move(params);
  c.pass = pass;
  if (!pass) c.witness = witness.empty() ? std::string("(no witness)") : std::move(witness);
  cases_.push_back(std::move(c));
}

void VerificationReport::add_note(std::string note) {
  if (std::find(notes_.begin(), notes_.end(), note) == notes_.end()) notes_.push_back(std::move(note));
}

void VerificationReport::merge(const VerificationReport& other) {
  cases_.insert(cases_.end(), other.cases_.begin(), other.cases_.end());
  for (const auto& n : other.notes_) add_note(n);
  elapsed_ms += other.elapsed_ms;
}

bool VerificationReport::pass() const {
  return std::all_of(cases_.begin(), cases_.end(), [](const CaseResult& c) { return c.pass; });
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(cases_.begin(), cases_.end(), [](const CaseResult& c) { return c.pass; }));
}

nlohmann::json VerificationReport::to_json(bool include_timing) const {
  nlohmann::json j;
  j["suite"] = suite_;
  j["pass"] = pass();
  j["summary"] = {{"total", cases_.size()}, {"passed", passed()}, {"failed", failed()}};
  j["notes"] = notes_;
  auto arr = nlohmann::json::array();
  for (const auto& c : cases_) {
    nlohmann::json jc = {{"suite", c.suite}, {"case", c.id}, {"params", c.params}, {"pass", c.pass}};
    if (c.witness) jc["witness"] = *c.witness;
    arr.push_back(std::move(jc));
  }
  j["cases"] = std::move(arr);
  if (include_timing) j["timing_ms"] = elapsed_ms;
  return j;
}

nlohmann::json rationals_json(std::span<const Rational> values) {
  auto arr = nlohmann::json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

}  // namespace superint
