#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "frankl/family.hpp"
#include "frankl/search.hpp"
#include "frankl/weights.hpp"

namespace frankl::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kInvalidInput = 3,
  kResourceGuard = 4,
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One (family, weights) pair. On disk each record is a single JSON object per
// line: {"label": "...", "family": [[0,1],[1,2]], "weights": [1,2,0]}.
struct CandidateRecord {
  std::string label;
  std::vector<std::vector<ElementId>> family;
  std::vector<Weight> weights;
};

/// Throws ParseError on malformed JSON, unsorted or repeated elements
/// inside a member set, or a weight vector that does not cover every element.
CandidateRecord parse_record(std::string_view line);
/// The coverage rule parse_record applies, for records assembled elsewhere.
void validate_record(const CandidateRecord& record);
/// Blank lines and lines starting with '#' are skipped.
std::vector<CandidateRecord> parse_records(std::istream& in);
std::vector<CandidateRecord> load_records(const std::string& path);

/// A JSON array of arrays, e.g. "[[0,1],[1,2]]".
std::vector<std::vector<ElementId>> parse_family_arg(std::string_view text);
/// Either a JSON array "[1,2,0]" or comma-separated "1,2,0".
std::vector<Weight> parse_weights_arg(std::string_view text);

Family family_of(const CandidateRecord& record);

enum class Outcome { Certified, NotCertified, Error };
const char* to_string(Outcome outcome) noexcept;

struct RunReport {
  std::string label;
  Outcome verdict = Outcome::Error;
  std::optional<Family> witness;
  std::string error;
  int error_exit = kOk;
  double elapsed_ms = 0.0;
  SearchStats stats;
};

RunReport run_record(const CandidateRecord& record);

/// One line of key=value fields. Without timing the line is a pure function
/// of the input record.
std::string format_report(const RunReport& report, bool with_timing = true);

struct OutputOptions {
  bool timing = true;
};

int cmd_verify(const CandidateRecord& record, std::ostream& out, std::ostream& err,
               const OutputOptions& options = {});

/// Runs every record, `threads` at a time, and reports in input order.
int cmd_table(const std::vector<CandidateRecord>& records, unsigned threads, std::ostream& out,
              std::ostream& err, const OutputOptions& options = {});
int cmd_table_file(const std::string& path, unsigned threads, std::ostream& out,
                   std::ostream& err, const OutputOptions& options = {});

struct NefRequest {
  unsigned n = 0;
  unsigned k = 0;
  unsigned m = 0;
  bool not533 = false;
  bool not634 = false;
  bool allow_large = false;
};

/// Parses "not533,not634" (either order, either alone, or empty).
void parse_nef_filters(std::string_view text, NefRequest& request);

int cmd_nef(const NefRequest& request, std::ostream& out, std::ostream& err);

// Differential suites comparing the search against the brute-force oracle.
struct DiffReport {
  std::uint64_t cases = 0;
  std::uint64_t discrepancies = 0;
  // Cases where some extension has a negative share (uce-vs-ssn only).
  std::uint64_t negative_cases = 0;
  std::string first_counterexample;
};

/// Every family of 1..max_sets distinct subsets of {0..n-1} and every weight
/// vector in {0..max_weight}^n that is positive somewhere on the family's
/// union: the abstract search must agree with the minimum share over the
/// enumerated extensions, the refined search must agree with the abstract
/// one, and every refined witness must be a negative-share extension.
DiffReport uce_vs_ssn(unsigned n, unsigned max_sets, Weight max_weight);

/// Refined against abstract on every nonempty subfamily of pow({0..n-1})
/// with weights in {0..max_weight}^n, under each prune toggle and a
/// shuffled branching order.
DiffReport refine_exhaustive(unsigned n, Weight max_weight, std::uint64_t seed);

/// Same comparison on random instances over domains of size <= max_n.
DiffReport refine_random(unsigned max_n, std::uint64_t trials, std::uint64_t seed);

/// closure() against closure_oracle() on random families.
DiffReport closure_random(unsigned n, unsigned max_size, std::uint64_t trials,
                          std::uint64_t seed);

/// Replays the worked examples on shares, hypercubes, hyper-shares and
/// projections. Writes one line per check.
DiffReport worked_examples(std::ostream& out);

struct OracleRequest {
  std::string subcommand;
  unsigned n = 3;
  unsigned max_sets = 3;
  Weight max_weight = 2;
  unsigned max_size = 5;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  bool allow_large = false;
};

int cmd_oracle(const OracleRequest& request, std::ostream& out, std::ostream& err);

}  // namespace frankl::cli
