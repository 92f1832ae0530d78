#ifndef STRUCTDET_CLI_HPP
#define STRUCTDET_CLI_HPP

// Command-line front end. Kept in a header so tests can drive it in-process;
// tools/structdet.cpp is a thin main() around run_cli.

#include <structdet/bfile.hpp>
#include <structdet/bigint.hpp>
#include <structdet/prime_sequence.hpp>
#include <structdet/structured_det.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace structdet::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kUsage = 2,
  kDomain = 3,
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
  bool color = false;
};

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) items.push_back(item);
  if (!text.empty() && text.back() == ',') items.emplace_back();
  return items;
}

inline DiagonalShifts parse_diag(const std::string& text) {
  std::vector<BigInt> values;
  for (const auto& item : split_list(text)) values.push_back(parse_bigint(item));
  if (values.empty()) throw std::invalid_argument("--diag needs at least one integer");
  return DiagonalShifts(std::move(values));
}

inline std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  for (const auto& item : split_list(text)) {
    BigInt v = parse_bigint(item);
    if (v < 1 || !v.fits_ulong_p()) throw std::invalid_argument("sizes must be positive integers: '" + item + "'");
    sizes.push_back(static_cast<std::size_t>(v.get_ui()));
  }
  if (sizes.empty()) throw std::invalid_argument("expected a comma-separated list of sizes");
  return sizes;
}

inline std::string paint(const Streams& io, const std::string& text, bool good) {
  if (!io.color) return text;
  return std::string(good ? "\033[32m" : "\033[31m") + text + "\033[0m";
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string diag;
  std::string method = "expanded";
  bool dump_matrix = false;
};

inline int cmd_eval(const EvalArgs& args, const Streams& io) {
  std::optional<DiagonalShifts> parsed;
  try {
    parsed = parse_diag(args.diag);
  } catch (const std::invalid_argument& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  }
  const DiagonalShifts& shifts = *parsed;
  if ((args.method == "closed" || args.method == "elimination") && shifts.has_zero()) {
    io.err << "error: zero shift not allowed for this method\n";
    return kDomain;
  }
  if (args.dump_matrix) render(io.out, materialize_matrix(shifts));
  if (args.method == "closed") {
    io.out << to_string(det_closed_form(shifts)) << '\n';
  } else if (args.method == "elimination") {
    auto result = det_elimination(shifts);
    io.out << to_string(result.value) << '\n';
    io.out << "pivot_b " << to_string(result.trace.pivot_b) << '\n';
  } else if (args.method == "bareiss") {
    io.out << to_string(det_bareiss(materialize_matrix(shifts))) << '\n';
  } else {
    io.out << to_string(det_expanded(shifts)) << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------- sequence

struct SequenceArgs {
  std::size_t count = 0;
  std::string format = "plain";
  bool check_known = false;
};

inline void write_records(std::ostream& out, const std::vector<SequenceRecord>& records, const std::string& format) {
  if (format == "json") {
    auto rows = nlohmann::json::array();
    for (const auto& r : records) {
      rows.push_back({{"n", std::to_string(r.n)},
                      {"p_n", std::to_string(r.p_n)},
                      {"P_n", to_string(r.P_n)},
                      {"D_n", to_string(r.D_n)}});
    }
    out << rows.dump() << '\n';
  } else if (format == "csv") {
    out << "n,p_n,P_n,D_n\n";
    for (const auto& r : records)
      out << r.n << ',' << r.p_n << ',' << to_string(r.P_n) << ',' << to_string(r.D_n) << '\n';
  } else {
    for (const auto& r : records) out << to_string(r.D_n) << '\n';
  }
}

inline int cmd_sequence(const SequenceArgs& args, const Streams& io) {
  const auto records = D_sequence(args.count);
  write_records(io.out, records, args.format);
  if (args.check_known) {
    const auto mismatches = check_known(records);
    for (const auto& m : mismatches) {
      io.err << "mismatch at n=" << m.n << ": expected " << to_string(m.expected) << ", got "
             << to_string(m.actual) << '\n';
    }
    if (!mismatches.empty()) return kMismatch;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::size_t count = 1;
  std::size_t oracle_cutoff = 64;
  unsigned workers = 1;
  std::string bfile;
};

inline int cmd_verify(const VerifyArgs& args, const Streams& io) {
  VerifyOptions options;
  options.oracle_cutoff = args.oracle_cutoff;
  options.workers = args.workers;
  const bool have_bfile = !args.bfile.empty();
  if (have_bfile) {
    try {
      options.reference = read_bfile(args.bfile);
    } catch (const BFileError& e) {
      io.err << "error: " << e.what() << '\n';
      return kUsage;
    }
  }

  const auto report = verify_sequence(args.count, options);
  auto status = [&](bool present, bool agrees) {
    if (!present) return std::string("skip");
    return paint(io, agrees ? "ok" : "FAIL", agrees);
  };
  std::size_t direct_ok = 0, oracle_ok = 0, reference_ok = 0;
  for (const auto& e : report.entries) {
    direct_ok += e.direct_agrees();
    oracle_ok += e.oracle.has_value() && e.oracle_agrees();
    reference_ok += e.reference.has_value() && e.reference_agrees();
    io.out << "n=" << e.n << " D_n=" << to_string(e.recurrence) << " direct=" << status(true, e.direct_agrees())
           << " bareiss=" << status(e.oracle.has_value(), e.oracle_agrees())
           << " bfile=" << status(e.reference.has_value(), e.reference_agrees()) << '\n';
  }
  io.out << "recurrence vs direct: " << direct_ok << '/' << report.entries.size() << " agree\n";
  io.out << "recurrence vs bareiss: " << oracle_ok << '/' << report.oracle_checks()
         << " agree (cutoff " << args.oracle_cutoff << ")\n";
  if (have_bfile) io.out << "recurrence vs b-file: " << reference_ok << '/' << report.reference_checks() << " agree\n";
  io.out << paint(io, report.passed() ? "PASS" : "FAIL", report.passed()) << '\n';

  if (!report.passed()) {
    io.err << "verification failed: first divergence at n=" << *report.first_failure << '\n';
    return kMismatch;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string sizes;
  std::string methods = "expanded,bareiss";
  unsigned repeat = 3;
  bool force = false;
  std::size_t bareiss_cap = 400;
};

inline double median(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t m = samples.size();
  return m % 2 ? samples[m / 2] : 0.5 * (samples[m / 2 - 1] + samples[m / 2]);
}

// Median wall time in seconds of one determinant evaluation on the D_n shifts.
inline double time_method(const std::string& method, std::size_t n, unsigned repeat) {
  const DiagonalShifts shifts = prime_shifts(n);
  const StructuredMatrix matrix = materialize_matrix(shifts);
  std::vector<double> samples;
  BigInt sink;
  for (unsigned r = 0; r < repeat; ++r) {
    const auto start = std::chrono::steady_clock::now();
    if (method == "closed") {
      sink = det_closed_form(shifts);
    } else if (method == "elimination") {
      sink = det_elimination(shifts).value;
    } else if (method == "bareiss") {
      sink = det_bareiss(matrix);
    } else if (method == "prefix-suffix") {
      sink = det_expanded_prefix_suffix(shifts);
    } else {
      sink = det_expanded(shifts);
    }
    const auto stop = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double>(stop - start).count());
    if (sink <= 0) throw std::logic_error("non-positive determinant for prime shifts");
  }
  return median(std::move(samples));
}

inline int cmd_bench(const BenchArgs& args, const Streams& io) {
  std::vector<std::size_t> sizes;
  try {
    sizes = parse_sizes(args.sizes);
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  }
  const auto methods = split_list(args.methods);
  for (const auto& m : methods) {
    if (m != "closed" && m != "expanded" && m != "elimination" && m != "bareiss" &&
        m != "prefix-suffix") {
      io.err << "error: unknown method '" << m << "'\n";
      return kUsage;
    }
  }

  io.out << "method,n,median_seconds\n";
  for (const auto& method : methods) {
    for (std::size_t n : sizes) {
      if (method == "bareiss" && n > args.bareiss_cap && !args.force) {
        io.err << "skipping bareiss at n=" << n << " (above cap " << args.bareiss_cap << "; use --force)\n";
        continue;
      }
      std::ostringstream seconds;
      seconds << std::setprecision(9) << time_method(method, n, args.repeat);
      io.out << method << ',' << n << ',' << seconds.str() << '\n';
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------- dispatch

inline int run_cli(std::vector<std::string> argv, const Streams& io) {
  CLI::App app{"Exact determinants of all-ones-plus-diagonal matrices", "structdet"};
  app.require_subcommand(1);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Determinant of J + diag(a)");
  eval_cmd->add_option("--diag", eval.diag, "Comma-separated shifts a_1,...,a_n")->required();
  eval_cmd->add_option("--method", eval.method, "closed | expanded | elimination | bareiss")
      ->check(CLI::IsMember({"closed", "expanded", "elimination", "bareiss"}));
  eval_cmd->add_flag("--dump-matrix", eval.dump_matrix, "Print the materialized matrix first");

  SequenceArgs seq;
  auto* seq_cmd = app.add_subcommand("sequence", "D_n for n = 1..count (OEIS A067549)");
  seq_cmd->add_option("count", seq.count, "Number of terms")->required();
  seq_cmd->add_option("--format", seq.format, "plain | json | csv")->check(CLI::IsMember({"plain", "json", "csv"}));
  seq_cmd->add_flag("--check-known", seq.check_known, "Compare the first terms against 2,5,22,140,1448,17856");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Cross-check recurrence, closed form and Bareiss");
  ver_cmd->add_option("count", ver.count, "Number of terms")->required()->check(CLI::PositiveNumber);
  ver_cmd->add_option("--oracle-cutoff", ver.oracle_cutoff, "Largest n checked with Bareiss");
  ver_cmd->add_option("--workers", ver.workers, "Threads for the Bareiss checks")->check(CLI::PositiveNumber);
  ver_cmd->add_option("--bfile", ver.bfile, "OEIS b-file with reference values");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Median timings as CSV");
  bench_cmd->add_option("sizes", bench.sizes, "Comma-separated matrix sizes")->required();
  bench_cmd->add_option("--methods", bench.methods,
                        "Comma-separated: closed, expanded, prefix-suffix, elimination, bareiss");
  bench_cmd->add_option("--repeat", bench.repeat, "Runs per measurement")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--force", bench.force, "Run bareiss above the size cap");
  bench_cmd->add_option("--bareiss-cap", bench.bareiss_cap, "Largest n timed with bareiss without --force");

  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(std::move(argv));
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    io.err << "run 'structdet --help' for usage\n";
    return kUsage;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(eval, io);
    if (seq_cmd->parsed()) return cmd_sequence(seq, io);
    if (ver_cmd->parsed()) return cmd_verify(ver, io);
    return cmd_bench(bench, io);
  } catch (const DomainError& e) {
    io.err << "error: " << e.what() << '\n';
    return kDomain;
  }
}

}  // namespace structdet::cli

#endif  // STRUCTDET_CLI_HPP
