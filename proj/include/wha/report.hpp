#pragma once

/**
 * @file report.hpp
 * @brief Named verification checks with counterexample witnesses.
 *
 * A report is a flat list of (check name, pass/fail, optional witness) in
 * a deterministic order. Witnesses carry the basis indices of the first
 * failing tuple plus both sides of the failed equality, printed in
 * canonical scalar form, so identical inputs always serialize to identical
 * bytes. to_text()/parse() round-trip losslessly.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wha {

struct Witness {
  std::vector<std::size_t> indices;  // basis tuple of the counterexample
  std::string lhs, rhs;              // canonical vector spellings
  bool operator==(const Witness&) const = default;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::optional<Witness> witness;
  bool operator==(const CheckResult&) const = default;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  void set_suite(std::string s) { suite_ = std::move(s); }

  void pass(const std::string& name);
  void fail(const std::string& name, Witness w);
  /// Records pass/fail with no witness payload.
  void record(const std::string& name, bool ok);

  /// Appends another report's checks, prefixing their names.
  void merge(const std::string& prefix, const Report& sub);

  const std::vector<CheckResult>& checks() const { return checks_; }
  std::size_t passed_count() const;
  std::size_t failed_count() const { return checks_.size() - passed_count(); }
  bool all_passed() const { return passed_count() == checks_.size(); }

  /// First failing check, if any.
  const CheckResult* first_failure() const;

  /// Machine-readable structured text (deterministic).
  std::string to_text() const;
  /// One-line human summary.
  std::string summary() const;

  static Report parse(std::string_view text);

  bool operator==(const Report&) const = default;

 private:
  std::string suite_;
  std::vector<CheckResult> checks_;
};

}  // namespace wha
