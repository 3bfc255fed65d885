// report.hpp -- verification reports: named checks with per-assertion status,
// margins, witnesses, and text/CSV/JSON renderings.

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "abcv/vreal.hpp"

namespace abcv {

enum class Status { PASS, FAIL, UNDECIDED };

const char* status_name(Status s);
Status status_from_tri(Tri t);  // yes -> PASS, no -> FAIL, unknown -> UNDECIDED

// Margin snapshot: decimal midpoint/radius captured when the assertion is
// recorded, so reports do not keep live mpfr state.
struct Margin {
  std::string midpoint;
  std::string radius;
  double midpoint_d = 0.0;

  static Margin of(const VReal& v, int digits = 12);
};

struct Assertion {
  std::string label;
  Status status = Status::PASS;
  std::optional<Margin> margin;
  std::vector<std::string> witness;  // integers as decimal strings
  std::string note;
};

struct VerificationReport {
  std::string check_name;
  Status status = Status::PASS;
  std::string provenance;  // which published statement the check mechanizes
  double elapsed_seconds = 0.0;
  std::vector<Assertion> assertions;

  void add(Assertion a);
  void add(const std::string& label, Status st);
  void add(const std::string& label, Status st, const VReal& margin);
  void add(const std::string& label, Status st, const VReal& margin,
           std::vector<mpz_class> witness);
  void add_note(const std::string& label, Status st, const std::string& note);
  // status is FAIL iff any assertion failed, else UNDECIDED iff any
  // assertion is undecided, else PASS
  void recompute_status();

  std::size_t count(Status s) const;
  const Assertion* find(const std::string& label) const;

  std::string to_text() const;
  std::string to_csv() const;
  std::string to_json_string(int indent = 2) const;
};

std::vector<std::string> witness_strings(const std::vector<mpz_class>& w);

// renders several reports as one JSON array
std::string reports_to_json(const std::vector<VerificationReport>& rs, int indent = 2);

}  // namespace abcv
