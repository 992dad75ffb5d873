#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wittmod {

enum class Status {
  Pass,
  Fail,
  EvidenceNotSimple,
  EvidenceReachedOne,
  Inconclusive,
};

const char* to_string(Status status);

/// Printed expressions that witness a failed identity. Each field re-parses
/// with the expression grammar; fields that do not apply are empty.
struct Counterexample {
  std::string x;
  std::string y;
  std::string f;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct Stats {
  std::uint64_t pairs_checked = 0;
  std::int64_t elapsed_ms = 0;
};

struct Report {
  std::string check_name;
  Status status = Status::Pass;
  std::string spec;  // module description, empty for spec-free suites
  std::optional<Counterexample> counterexample;
  std::optional<std::string> certificate;
  std::vector<std::string> witness;
  std::vector<Report> subchecks;
  Stats stats;

  bool passed() const { return status == Status::Pass; }
};

}  // namespace wittmod
