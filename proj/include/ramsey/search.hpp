#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/checker.hpp"

namespace ramsey {

// Outcome of the smallest-prime search for one color count.
struct SearchRecord {
  u64 m = 0;
  u64 smallest_p = 0;  // 0: no prime passes below cap_used
  u64 cap_used = 0;
  u64 candidates_tested = 0;
  u64 pruned_by_formal_sum = 0;
  double elapsed_ms = 0;
};

// Smallest prime p == 1 (mod 2m) whose coset partition passes fast_check,
// scanning ascending from the proven floor (2m^2-2m+1 for m > 6, else the
// least candidate 2m+1) to `cap` (default m^4+5; a given cap is clamped to
// that, never raised). Candidates failing the formal-sum cardinality test
// are pruned without a check. m = 1 is the one non-coset case: p = 2,
// confirmed through the relational verifier.
SearchRecord smallest_modulus(u64 m, std::optional<u64> cap = std::nullopt);

// Every prime p == 1 (mod 2m) with p <= m^4+5, each given a real check
// (no pruning), with its outcome. Nonexistence holds iff no verdict is true.
std::vector<std::pair<u64, CheckOutcome>> verify_nonexistence(u64 m);

// One record per m in [m_lo, m_hi], ascending. `jobs` workers split the m
// values; records are identical regardless of jobs (elapsed aside).
std::vector<SearchRecord> search_range(u64 m_lo, u64 m_hi,
                                       std::optional<u64> cap = std::nullopt,
                                       unsigned jobs = 1);

struct BFileError : std::runtime_error {
  std::size_t line;
  BFileError(std::size_t line_no, const std::string& what)
      : std::runtime_error("b-file line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

// Integer sequence keyed by index, as published in OEIS b-files.
struct SequenceTable {
  std::map<u64, u64> entries;
};

// "n a(n)" per line, '#' comments and blank lines skipped.
// Throws BFileError on malformed tokens or duplicate indices.
SequenceTable parse_bfile(std::string_view text);
SequenceTable load_bfile(const std::string& path);

struct Discrepancy {
  u64 m = 0;
  u64 computed = 0;
  u64 published = 0;
};

// Mismatches between computed records and a published table; records whose
// m the table lacks are skipped. Empty result = full agreement.
std::vector<Discrepancy> compare_with_oeis(const std::vector<SearchRecord>& records,
                                           const SequenceTable& table);

}  // namespace ramsey
