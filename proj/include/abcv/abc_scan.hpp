// abc_scan.hpp -- enumeration of coprime a + b = c triples with radical,
// quality, and margin checks against the conjectured bounds; plus ingestion
// of triple files.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "abcv/report.hpp"
#include "abcv/vreal.hpp"

namespace abcv {

struct AbcTriple {
  uint64_t a = 0, b = 0, c = 0;  // a <= b, a + b = c
  uint64_t radical = 0;
  unsigned omega = 0;
  double quality_d = 0.0;  // ranking key only; reported values are verified
  std::optional<Margin> quality;
  std::optional<Margin> baker_margin;  // bound - c
};

struct ScanSummary {
  uint64_t c_max = 0;
  uint64_t triple_count = 0;
  uint64_t baker_violations = 0;
  uint64_t n74_violations = 0;
  std::vector<AbcTriple> top;       // by quality desc, then c asc, then a asc
  std::vector<AbcTriple> boundary;  // the known boundary triple (1,1,2)
  std::optional<Margin> min_baker_margin;
  uint64_t min_margin_a = 0, min_margin_c = 0;
  VerificationReport report;
};

// Enumerates every coprime triple with a <= b and a + b = c <= c_max,
// asserting c < (6/5) N (log N)^w / w! and c < N^{7/4} for each.  The unique
//(1,1,2) triple, where the first bound is 1.66 < 2, is reported as a
// boundary case rather than counted as a violation.  Deterministic output
// for any thread count.
ScanSummary enumerate_and_check(uint64_t c_max, unsigned top_q, mpfr_prec_t prec,
                                unsigned threads);

class TripleParseError : public std::runtime_error {
 public:
  TripleParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Whitespace-separated "a b c" lines; blank lines and '#' comments ignored.
// Each triple is validated (positivity, a + b = c, pairwise coprimality) and
// checked against both bounds.  Throws TripleParseError with the line number.
std::vector<AbcTriple> ingest_triples(std::istream& in, mpfr_prec_t prec);

std::string triples_to_csv(const std::vector<AbcTriple>& ts);
std::string triples_to_json(const std::vector<AbcTriple>& ts, int indent = 2);
std::string scan_to_json(const ScanSummary& s, int indent = 2);

}  // namespace abcv
