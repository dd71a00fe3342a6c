#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ramsey/bounds.hpp"
#include "ramsey/checker.hpp"
#include "ramsey/coset.hpp"
#include "ramsey/fourier.hpp"
#include "ramsey/modarith.hpp"
#include "ramsey/search.hpp"

namespace ramsey::cli {

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  u64 lo = 0, hi = 0;
};

u64 parse_u64(const std::string& text, const char* what) {
  u64 value = 0;
  const auto* begin = text.data();
  const auto* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw std::invalid_argument(std::string(what) + ": expected a nonnegative integer, got '" +
                                text + "'");
  return value;
}

// `a..b` inclusive; a bare `a` means a..a.
Range parse_range(const std::string& text, const char* what) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const u64 v = parse_u64(text, what);
    return {v, v};
  }
  Range r{parse_u64(text.substr(0, dots), what),
          parse_u64(text.substr(dots + 2), what)};
  if (r.lo > r.hi)
    throw std::invalid_argument(std::string(what) + ": range '" + text + "' is reversed");
  return r;
}

// Output goes to --out if given, else stdout.
struct Sink {
  std::ostream* out = &std::cout;
  std::ofstream file;

  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file.open(path, std::ios::binary);
    if (!file) throw IoError("cannot open output file: " + path);
    out = &file;
  }

  void finish() {
    out->flush();
    if (!*out) throw IoError("write failed");
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

// RAMSEY_CACHE_DIR caches the generator per (p, m); rebuilding the labels
// from a cached g skips the primitive-root hunt. Cache misses and I/O
// hiccups silently fall back to a fresh computation.
CosetDecomposition build_decomposition(u64 p, u64 m) {
  const char* env = std::getenv("RAMSEY_CACHE_DIR");
  if (env == nullptr || *env == '\0')
    return CosetDecomposition::build(p, m, primitive_root(p));

  namespace fs = std::filesystem;
  const fs::path path = fs::path(env) / ("dec_p" + std::to_string(p) + "_m" +
                                         std::to_string(m) + ".txt");
  std::error_code ec;
  if (fs::exists(path, ec)) {
    std::ifstream in(path);
    u64 fp = 0, fm = 0, fg = 0;
    if (in >> fp >> fm >> fg && fp == p && fm == m) {
      try {
        return CosetDecomposition::build(p, m, fg);
      } catch (const std::invalid_argument&) {
        // stale entry; fall through and rewrite
      }
    }
  }
  auto dec = CosetDecomposition::build(p, m, primitive_root(p));
  fs::create_directories(fs::path(env), ec);
  if (std::ofstream cache(path); cache)
    cache << p << ' ' << m << ' ' << dec.g() << '\n';
  return dec;
}

int cmd_check(u64 m, u64 p, bool naive, const std::string& format,
              const std::string& out_path) {
  const auto dec = build_decomposition(p, m);
  const CheckOutcome outcome = naive ? naive_check(dec) : fast_check(dec);
  const std::string witness =
      outcome.witness ? describe(*outcome.witness) : std::string();

  Sink sink(out_path);
  if (format == "csv") {
    *sink.out << "p,m,verdict,witness\n"
              << p << ',' << m << ',' << bool_str(outcome.verdict) << ','
              << witness << '\n';
  } else if (format == "json") {
    json j;
    j["p"] = p;
    j["m"] = m;
    j["verdict"] = outcome.verdict;
    if (outcome.witness) j["witness"] = witness;
    *sink.out << j.dump() << '\n';
  } else {
    *sink.out << (outcome.verdict ? "pass" : "fail: " + witness) << '\n';
  }
  sink.finish();
  return outcome.verdict ? 0 : 1;
}

int cmd_search(Range ms, std::optional<u64> cap, unsigned jobs,
               const std::string& format, const std::string& out_path,
               bool stable, bool compare, const std::string& oeis_path) {
  if (compare && oeis_path.empty())
    throw std::invalid_argument("--compare requires --oeis <path>");

  const auto records = search_range(ms.lo, ms.hi, cap, jobs);

  Sink sink(out_path);
  if (format == "json") {
    for (const auto& rec : records) {
      json j;
      j["m"] = rec.m;
      j["smallest_p"] = rec.smallest_p;
      j["cap"] = rec.cap_used;
      j["candidates"] = rec.candidates_tested;
      j["pruned"] = rec.pruned_by_formal_sum;
      if (!stable) j["elapsed_ms"] = rec.elapsed_ms;
      *sink.out << j.dump() << '\n';
    }
  } else {
    *sink.out << (stable ? "m,smallest_p,cap,candidates,pruned\n"
                         : "m,smallest_p,cap,candidates,pruned,elapsed_ms\n");
    for (const auto& rec : records) {
      *sink.out << rec.m << ',' << rec.smallest_p << ',' << rec.cap_used << ','
                << rec.candidates_tested << ',' << rec.pruned_by_formal_sum;
      if (!stable) *sink.out << ',' << fmt(rec.elapsed_ms);
      *sink.out << '\n';
    }
  }
  sink.finish();

  if (compare) {
    const auto table = load_bfile(oeis_path);
    const auto diffs = compare_with_oeis(records, table);
    for (const auto& d : diffs)
      std::cerr << "mismatch: m=" << d.m << " computed=" << d.computed
                << " published=" << d.published << '\n';
    if (!diffs.empty()) return 1;
  }
  return 0;
}

int cmd_verify_none(u64 m, const std::string& out_path) {
  if (m < 2) throw std::invalid_argument("verify-none: m must be >= 2");
  const auto outcomes = verify_nonexistence(m);

  Sink sink(out_path);
  *sink.out << "p,verdict,witness\n";
  u64 passing = 0;
  for (const auto& [p, outcome] : outcomes) {
    *sink.out << p << ',' << bool_str(outcome.verdict) << ','
              << (outcome.witness ? describe(*outcome.witness) : std::string())
              << '\n';
    if (outcome.verdict && passing == 0) passing = p;
  }
  sink.finish();
  if (passing != 0) {
    std::cout << passing << '\n';
    return 1;
  }
  return 0;
}

void write_fourier_rows(Sink& sink, u64 m, Range range) {
  *sink.out << "p,delta,alpha_max,delta_sq,certified,solutions\n";
  for (const auto& prof : scan_uniformity(m, range.lo, range.hi)) {
    *sink.out << prof.p << ',' << fmt(prof.delta) << ',' << fmt(prof.alpha_max)
              << ',' << fmt(prof.threshold) << ','
              << bool_str(prof.certified_not_sumfree) << ','
              << prof.solutions_exact << '\n';
  }
}

int cmd_fourier(u64 m, Range range, const std::string& out_path) {
  Sink sink(out_path);
  write_fourier_rows(sink, m, range);
  sink.finish();
  return 0;
}

int cmd_bounds(u64 m, const std::string& out_path) {
  const auto b = bounds_for(m);
  Sink sink(out_path);
  *sink.out << "m,lower,upper,ramsey\n"
            << b.m << ',' << b.lower << ',' << b.upper << ','
            << (b.ramsey ? to_string_u128(*b.ramsey) : std::string()) << '\n';
  sink.finish();
  return 0;
}

int cmd_plotdata(const std::string& kind, Range ms, std::optional<Range> range,
                 std::optional<u64> cap, unsigned jobs,
                 const std::string& out_path) {
  Sink sink(out_path);
  if (kind == "fig3") {
    if (!range)
      throw std::invalid_argument("plotdata fig3 requires --range a..b");
    if (ms.lo != ms.hi)
      throw std::invalid_argument("plotdata fig3 takes a single --m");
    write_fourier_rows(sink, ms.lo, *range);
    sink.finish();
    return 0;
  }
  const auto records = search_range(ms.lo, ms.hi, cap, jobs);
  if (kind == "fig1") {
    *sink.out << "m,smallest_p\n";
    for (const auto& rec : records)
      *sink.out << rec.m << ',' << rec.smallest_p << '\n';
  } else {
    *sink.out << "m,smallest_p,lower,upper\n";
    for (const auto& rec : records) {
      const auto b = bounds_for(rec.m);
      *sink.out << rec.m << ',' << rec.smallest_p << ',' << b.lower << ','
                << b.upper << '\n';
    }
  }
  sink.finish();
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"coset-partition Ramsey algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  bool stable = false;
  app.add_flag("--stable-output", stable,
               "suppress elapsed-time fields for byte-identical reruns");

  // check
  auto* check = app.add_subcommand("check", "check one (p, m) decomposition");
  u64 check_m = 0, check_p = 0;
  bool check_naive = false;
  std::string check_format = "text", check_out;
  check->add_option("--m", check_m, "number of colors")->required();
  check->add_option("--p", check_p, "prime modulus")->required();
  check->add_flag("--naive", check_naive, "use the literal sumset oracle");
  check->add_option("--format", check_format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  check->add_option("--out", check_out, "output path (default stdout)");

  // search
  auto* search = app.add_subcommand("search", "smallest passing prime per m");
  std::string search_ms, search_out, search_oeis, search_format = "csv";
  u64 search_cap = 0;
  unsigned search_jobs = 1;
  bool search_compare = false;
  search->add_option("--m", search_ms, "m or m_lo..m_hi")->required();
  auto* cap_opt = search->add_option("--cap", search_cap,
                                     "prime cap (clamped to m^4+5)");
  search->add_option("--jobs", search_jobs, "worker threads");
  search->add_option("--format", search_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  search->add_option("--out", search_out, "output path (default stdout)");
  search->add_flag("--compare", search_compare, "compare against --oeis table");
  search->add_option("--oeis", search_oeis, "OEIS b-file path");

  // verify-none
  auto* vnone = app.add_subcommand("verify-none",
                                   "exhaust the window, expecting no hit");
  u64 vnone_m = 0;
  std::string vnone_out;
  vnone->add_option("--m", vnone_m, "number of colors")->required();
  vnone->add_option("--out", vnone_out, "report path (default stdout)");

  // fourier
  auto* fourier = app.add_subcommand("fourier", "uniformity profiles of X_0");
  u64 fourier_m = 0;
  std::string fourier_range, fourier_out;
  fourier->add_option("--m", fourier_m, "number of colors")->required();
  fourier->add_option("--range", fourier_range, "prime range lo..hi")->required();
  fourier->add_option("--out", fourier_out, "output path (default stdout)");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "search window for one m");
  u64 bounds_m = 0;
  std::string bounds_out;
  bounds->add_option("--m", bounds_m, "number of colors")->required();
  bounds->add_option("--out", bounds_out, "output path (default stdout)");

  // plotdata
  auto* plot = app.add_subcommand("plotdata", "figure data surfaces");
  std::string plot_kind, plot_ms, plot_range, plot_out;
  u64 plot_cap = 0;
  unsigned plot_jobs = 1;
  plot->add_option("kind", plot_kind, "fig1, fig2, or fig3")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  plot->add_option("--m", plot_ms, "m or m_lo..m_hi")->required();
  plot->add_option("--range", plot_range, "prime range lo..hi (fig3)");
  auto* plot_cap_opt = plot->add_option("--cap", plot_cap, "prime cap");
  plot->add_option("--jobs", plot_jobs, "worker threads");
  plot->add_option("--out", plot_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check)
      return cmd_check(check_m, check_p, check_naive, check_format, check_out);
    if (*search)
      return cmd_search(parse_range(search_ms, "--m"),
                        cap_opt->count() ? std::optional<u64>(search_cap)
                                         : std::nullopt,
                        search_jobs, search_format, search_out, stable,
                        search_compare, search_oeis);
    if (*vnone) return cmd_verify_none(vnone_m, vnone_out);
    if (*fourier)
      return cmd_fourier(fourier_m, parse_range(fourier_range, "--range"),
                         fourier_out);
    if (*bounds) return cmd_bounds(bounds_m, bounds_out);
    if (*plot)
      return cmd_plotdata(plot_kind, parse_range(plot_ms, "--m"),
                          plot_range.empty()
                              ? std::nullopt
                              : std::optional<Range>(
                                    parse_range(plot_range, "--range")),
                          plot_cap_opt->count() ? std::optional<u64>(plot_cap)
                                               : std::nullopt,
                          plot_jobs, plot_out);
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const BFileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace ramsey::cli
