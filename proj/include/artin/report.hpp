#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace artin {

enum class Status {
  Pass,
  Fail,
  ExpectedFail,  // fails, and the map lacks a hypothesis the property needs
  Rejected,      // the map fails the axioms, so gated operations refuse it
  Skipped,       // does not apply to this subject
  Unknown,       // a search budget ran out before an answer
};

std::string status_name(Status s);

struct Check {
  std::string subject;
  std::string property;
  Status status = Status::Pass;
  std::size_t cases = 0;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const Report& other);
  /// No Fail and no Unknown.
  bool ok() const;
  std::size_t count(Status s) const;
};

/// Aligned table, one row per check, then a one-line tally.
std::string render_human(const Report& r);
/// One JSON object per line: subject, property, status, cases, detail.
std::string render_records(const Report& r);

}  // namespace artin
