#include "ramsey/search.hpp"

#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "ramsey/bounds.hpp"

namespace ramsey {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point start) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - start)
      .count();
}

}  // namespace

SearchRecord smallest_modulus(u64 m, std::optional<u64> cap) {
  if (m < 1) throw std::invalid_argument("smallest_modulus: m must be >= 1");
  const auto start = clock_type::now();
  SearchRecord rec;
  rec.m = m;

  if (m == 1) {
    // p = 2 sits outside the k-even coset frame; the relational verifier
    // confirms the 1-color algebra on the 2-element base set directly.
    rec.cap_used = cap.value_or(bounds_for(1).upper);
    rec.candidates_tested = 1;
    if (!verify_relational(2, {ResidueSet::of(2, {1})}))
      throw std::logic_error("smallest_modulus: p = 2 relational check failed");
    rec.smallest_p = 2;
    rec.elapsed_ms = ms_since(start);
    return rec;
  }

  const BoundsReport b = bounds_for(m);
  const u64 floor = b.applicable ? b.lower : 2 * m + 1;
  rec.cap_used = std::min(cap.value_or(b.upper), b.upper);
  if (rec.cap_used < floor)
    throw std::invalid_argument("smallest_modulus: cap below the search floor");

  for (u64 p : primes_in_progression(m, floor, rec.cap_used)) {
    if (!formal_sum_feasible(p, m)) {
      ++rec.pruned_by_formal_sum;
      continue;
    }
    ++rec.candidates_tested;
    const auto dec = CosetDecomposition::build(p, m, primitive_root(p));
    if (fast_check(dec).verdict) {
      rec.smallest_p = p;
      break;
    }
  }
  rec.elapsed_ms = ms_since(start);
  return rec;
}

std::vector<std::pair<u64, CheckOutcome>> verify_nonexistence(u64 m) {
  if (m < 1) throw std::invalid_argument("verify_nonexistence: m must be >= 1");
  std::vector<std::pair<u64, CheckOutcome>> out;
  for (u64 p : primes_in_progression(m, 2, bounds_for(m).upper)) {
    const auto dec = CosetDecomposition::build(p, m, primitive_root(p));
    out.emplace_back(p, fast_check(dec));
  }
  return out;
}

std::vector<SearchRecord> search_range(u64 m_lo, u64 m_hi,
                                       std::optional<u64> cap, unsigned jobs) {
  if (m_lo > m_hi)
    throw std::invalid_argument("search_range: m_lo must be <= m_hi");
  const std::size_t count = static_cast<std::size_t>(m_hi - m_lo + 1);
  std::vector<SearchRecord> records(count);

  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      records[i] = smallest_modulus(m_lo + i, cap);
    return records;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      records[i] = smallest_modulus(m_lo + i, cap);
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(count));
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return records;
}

namespace {

u64 parse_u64_token(std::string_view tok, std::size_t line_no, const char* what) {
  u64 value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw BFileError(line_no, std::string("malformed ") + what + " '" +
                                  std::string(tok) + "'");
  return value;
}

}  // namespace

SequenceTable parse_bfile(std::string_view text) {
  SequenceTable table;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    };
    auto token = [&]() -> std::string_view {
      const std::size_t begin = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      return line.substr(begin, i - begin);
    };

    skip_ws();
    if (i == line.size() || line[i] == '#') continue;

    const std::string_view tok_n = token();
    skip_ws();
    const std::string_view tok_v = token();
    skip_ws();
    if (tok_v.empty()) throw BFileError(line_no, "missing value");
    if (i != line.size()) throw BFileError(line_no, "trailing content");

    const u64 n = parse_u64_token(tok_n, line_no, "index");
    if (n == 0) throw BFileError(line_no, "index must be positive");
    const u64 v = parse_u64_token(tok_v, line_no, "value");
    if (!table.entries.emplace(n, v).second)
      throw BFileError(line_no, "duplicate index " + std::to_string(n));
  }
  return table;
}

SequenceTable load_bfile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open b-file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bfile(buf.str());
}

std::vector<Discrepancy> compare_with_oeis(const std::vector<SearchRecord>& records,
                                           const SequenceTable& table) {
  std::vector<Discrepancy> out;
  for (const auto& rec : records) {
    const auto it = table.entries.find(rec.m);
    if (it == table.entries.end()) continue;
    if (it->second != rec.smallest_p)
      out.push_back({rec.m, rec.smallest_p, it->second});
  }
  return out;
}

}  // namespace ramsey
