// Command-line front end: Pascal triangles mod p, column-sum reports,
// single binomial queries, holomorph group summaries, and verification
// sweeps. Data goes to stdout, diagnostics to stderr.
//
// Exit codes: 0 = success, 1 = a mathematical check failed (this signals an
// implementation bug, not bad input), 2 = usage or size error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "modpascal/binom_sums.hpp"
#include "modpascal/fpmatrix.hpp"
#include "modpascal/holomorph.hpp"
#include "modpascal/modp.hpp"

namespace {

using modpascal::FpMatrix;
using modpascal::HolElement;
using modpascal::HolGroup;
using modpascal::PrimeModulus;
using modpascal::Residue;
using modpascal::SumReport;
using Row = nlohmann::ordered_json;

constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;

enum class Format { kAscii, kCsv, kJsonLines };

Format parse_format(const std::string& name) {
  if (name == "ascii-table") return Format::kAscii;
  if (name == "csv") return Format::kCsv;
  return Format::kJsonLines;
}

void add_format_flag(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"ascii-table", "csv", "json-lines"}))
      ->default_val("ascii-table");
}

// csv and json-lines renderings carry the same records field-by-field; the
// ascii rendering is command-specific and handled by each command.
void emit_records(Format format, const std::vector<std::string>& columns,
                  const std::vector<Row>& rows) {
  if (format == Format::kCsv) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      std::cout << (i ? "," : "") << columns[i];
    }
    std::cout << "\n";
    for (const Row& row : rows) {
      bool first = true;
      for (const auto& col : columns) {
        std::cout << (first ? "" : ",");
        first = false;
        const auto& cell = row.at(col);
        if (cell.is_string()) {
          std::cout << cell.get<std::string>();
        } else {
          std::cout << cell.dump();
        }
      }
      std::cout << "\n";
    }
  } else {
    for (const Row& row : rows) std::cout << row.dump() << "\n";
  }
}

// ---------------------------------------------------------------- pascal --

int cmd_pascal(std::uint32_t prime, std::uint32_t rows_wanted,
               const std::string& format_name) {
  const PrimeModulus p(prime);
  const Format format = parse_format(format_name);
  const std::uint32_t pv = p.value();

  std::vector<Row> records;
  std::vector<std::uint32_t> row(rows_wanted, 0);
  row[0] = 1 % pv;
  for (std::uint32_t r = 0; r < rows_wanted; ++r) {
    if (r > 0) {
      for (std::uint32_t j = r; j >= 1; --j) {
        const std::uint32_t s = row[j] + row[j - 1];
        row[j] = s >= pv ? s - pv : s;
      }
    }
    if (format == Format::kAscii) {
      for (std::uint32_t j = 0; j <= r; ++j) {
        std::cout << (j ? " " : "") << row[j];
      }
      std::cout << "\n";
    } else {
      for (std::uint32_t j = 0; j <= r; ++j) {
        records.push_back(Row{{"row", r}, {"k", j}, {"value", row[j]}});
      }
    }
  }
  if (format != Format::kAscii) {
    emit_records(format, {"row", "k", "value"}, records);
  }
  return 0;
}

// ------------------------------------------------------------------ sums --

int cmd_sums(std::uint32_t prime, std::uint32_t power,
             const std::string& format_name) {
  const PrimeModulus p(prime);
  const Format format = parse_format(format_name);
  const SumReport report = modpascal::sum_report(p, power);

  if (format == Format::kAscii) {
    for (std::size_t i = 0; i < report.residues.size(); ++i) {
      std::cout << i << " " << report.residues[i].value() << "\n";
    }
    std::cout << "verdict " << (report.verdict ? "PASS" : "FAIL") << "\n";
  } else {
    std::vector<Row> records;
    records.reserve(report.residues.size());
    for (std::size_t i = 0; i < report.residues.size(); ++i) {
      records.push_back(Row{{"i", i}, {"residue", report.residues[i].value()}});
    }
    emit_records(format, {"i", "residue"}, records);
  }
  if (!report.verdict) {
    std::cerr << "column-sum verdict failed for p=" << prime
              << " n=" << power << "\n";
    return kExitMathFail;
  }
  return 0;
}

// ----------------------------------------------------------------- binom --

int cmd_binom(std::uint64_t n, std::uint64_t k, std::uint32_t prime,
              const std::string& method, bool valuation,
              const std::string& format_name) {
  const PrimeModulus p(prime);
  const Format format = parse_format(format_name);

  std::string mode;
  std::uint64_t value = 0;
  if (valuation) {
    if (k > n) {
      throw std::domain_error("valuation requires k <= n, got k=" +
                              std::to_string(k) + ", n=" + std::to_string(n));
    }
    mode = "valuation";
    value = modpascal::kummer_carries(k, n - k, p);
  } else if (method == "pascal") {
    mode = "pascal";
    value = modpascal::binom_pascal(n, k, p).value();
  } else {
    mode = "lucas";
    value = modpascal::binom_lucas(n, k, p).value();
  }

  if (format == Format::kAscii) {
    std::cout << value << "\n";
  } else {
    emit_records(format, {"n", "k", "prime", "mode", "value"},
                 {Row{{"n", n},
                      {"k", k},
                      {"prime", prime},
                      {"mode", mode},
                      {"value", value}}});
  }
  return 0;
}

// ------------------------------------------------------------- holomorph --

int cmd_holomorph(std::uint32_t prime, std::uint32_t dim,
                  const std::string& exponent_method, bool witness,
                  const std::string& format_name) {
  const PrimeModulus p(prime);
  const Format format = parse_format(format_name);

  std::uint32_t level = 0;
  std::uint64_t order = 0, exponent = 0;
  std::string branch;
  bool witness_pass = true;

  if (dim == 1) {
    // No level n >= 1 satisfies p^(n-1) < 1; alpha is trivial and the group
    // degenerates to the vector group V itself, with exponent p.
    branch = "degenerate";
    order = prime;
    exponent = prime;
    if (witness) {
      throw std::invalid_argument(
          "witness requires the boundary case m = p^n with m >= 2");
    }
    if (exponent_method == "brute" && order > modpascal::kBruteForceCap) {
      throw std::length_error("brute-force cap exceeded: |G|=" +
                              std::to_string(order) + ", cap=" +
                              std::to_string(modpascal::kBruteForceCap));
    }
  } else {
    const HolGroup g = modpascal::hol_group(p, dim);
    level = g.level();
    order = g.order();
    branch = dim < g.alpha_order() ? "m<p^n" : "m=p^n";
    if (exponent_method == "brute") {
      exponent = modpascal::exponent_brute(g).exponent;
    } else {
      exponent = modpascal::exponent_formula(g);
    }
    if (witness) witness_pass = modpascal::witness_check(g);
  }

  if (format == Format::kAscii) {
    std::cout << "p " << prime << "\n"
              << "m " << dim << "\n"
              << "n " << level << "\n"
              << "order " << order << "\n"
              << "exponent " << exponent << "\n"
              << "branch " << branch << "\n";
    if (witness) {
      std::cout << "witness " << (witness_pass ? "PASS" : "FAIL") << "\n";
    }
  } else {
    Row row{{"p", prime},     {"m", dim},
            {"n", level},     {"order", order},
            {"exponent", exponent}, {"branch", branch}};
    std::vector<std::string> columns{"p", "m", "n", "order", "exponent",
                                     "branch"};
    if (witness) {
      row["witness"] = witness_pass ? "PASS" : "FAIL";
      columns.push_back("witness");
    }
    emit_records(format, columns, {row});
  }
  return witness_pass ? 0 : kExitMathFail;
}

// ---------------------------------------------------------------- verify --

struct SweepResult {
  std::vector<Row> rows;
  bool all_pass = true;
};

void record(SweepResult& out, Format format, const std::string& suite,
            const std::string& instance, bool pass) {
  if (format == Format::kAscii) {
    std::cout << suite << " " << instance << " " << (pass ? "PASS" : "FAIL")
              << "\n";
  } else {
    out.rows.push_back(Row{{"suite", suite},
                           {"instance", instance},
                           {"result", pass ? "PASS" : "FAIL"}});
  }
  out.all_pass = out.all_pass && pass;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
  std::vector<std::uint32_t> primes;
  for (std::uint32_t x = 2; x <= bound; ++x) {
    if (modpascal::is_prime(x)) primes.push_back(x);
  }
  return primes;
}

void sweep_sums(SweepResult& out, Format format, std::uint32_t max_prime,
                std::uint64_t max_size) {
  for (std::uint32_t pv : primes_up_to(max_prime)) {
    const PrimeModulus p(pv);
    for (std::uint32_t n = 1;; ++n) {
      std::uint64_t q;
      try {
        q = modpascal::checked_pow_u64(pv, n);
      } catch (const std::overflow_error&) {
        break;
      }
      if (q > max_size) break;
      const SumReport report = modpascal::sum_report(p, n, max_size);
      bool pass = report.verdict;
      for (std::uint64_t i = 0; i < q && pass; ++i) {
        const Residue direct = modpascal::column_sum(p, n, i, max_size);
        pass = direct == modpascal::column_sum_hockeystick(p, n, i, max_size) &&
               direct == report.residues[i];
      }
      record(out, format, "sums",
             "p=" + std::to_string(pv) + " n=" + std::to_string(n), pass);
    }
  }
}

void sweep_matrix(SweepResult& out, Format format, std::uint32_t max_prime,
                  std::uint64_t max_size) {
  for (std::uint32_t pv : primes_up_to(max_prime)) {
    const PrimeModulus p(pv);
    for (std::uint64_t q = pv; q <= max_size; q *= pv) {
      bool pass = true;
      for (std::size_t m = 1; m < q && pass; ++m) {
        pass = modpascal::geometric_sum(modpascal::jordan_unipotent(m, p), q)
                   .is_zero();
      }
      record(out, format, "matrix",
             "p=" + std::to_string(pv) + " q=" + std::to_string(q) +
                 " m=1.." + std::to_string(q - 1),
             pass);
      if (q > max_size / pv) break;  // q * pv would overflow past max_size
    }
  }
}

void sweep_poly(SweepResult& out, Format format, std::uint32_t max_prime,
                std::uint64_t max_size) {
  for (std::uint32_t pv : primes_up_to(max_prime)) {
    const PrimeModulus p(pv);
    for (std::uint64_t q = pv; q <= max_size; q *= pv) {
      const modpascal::FpPolynomial poly = modpascal::poly_pow_linear(p, q - 1);
      const std::vector<Residue> want(q, Residue(1, p));
      record(out, format, "poly",
             "p=" + std::to_string(pv) + " q=" + std::to_string(q),
             poly.coefficients() == want);
      if (q > max_size / pv) break;
    }
  }
}

void sweep_holomorph(SweepResult& out, Format format, std::uint32_t max_prime,
                     std::uint64_t max_size) {
  for (std::uint32_t pv : primes_up_to(max_prime)) {
    const PrimeModulus p(pv);
    for (std::uint32_t m = 2;; ++m) {
      std::uint64_t order;
      try {
        order = modpascal::checked_pow_u64(pv, m + modpascal::canonical_n(p, m));
      } catch (const std::overflow_error&) {
        break;
      }
      if (order > max_size) break;
      const HolGroup g = modpascal::hol_group(p, m);
      const modpascal::ExponentScan scan =
          modpascal::exponent_brute(g, max_size);
      const bool pass = scan.exponent == modpascal::exponent_formula(g) &&
                        scan.elements == g.order();
      record(out, format, "holomorph",
             "p=" + std::to_string(pv) + " m=" + std::to_string(m), pass);
    }
  }
}

int cmd_verify(const std::string& suite, std::uint32_t max_prime,
               std::uint64_t max_size, const std::string& format_name) {
  const Format format = parse_format(format_name);
  SweepResult out;

  const bool all = suite == "all";
  if (all || suite == "sums") {
    sweep_sums(out, format, max_prime ? max_prime : 13,
               max_size ? max_size : modpascal::kColumnSumCap);
  }
  if (all || suite == "matrix") {
    sweep_matrix(out, format, max_prime ? max_prime : 7,
                 max_size ? max_size : 128);
  }
  if (all || suite == "poly") {
    sweep_poly(out, format, max_prime ? max_prime : 13,
               max_size ? max_size : 256);
  }
  if (all || suite == "holomorph") {
    sweep_holomorph(out, format, max_prime ? max_prime : 13,
                    max_size ? max_size : modpascal::kBruteForceCap);
  }

  if (format != Format::kAscii) {
    emit_records(format, {"suite", "instance", "result"}, out.rows);
  }
  if (!out.all_pass) {
    std::cerr << "verification sweep found failures\n";
    return kExitMathFail;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for Pascal's triangle mod p, Jordan-block "
               "identities, and holomorph group exponents"};
  app.require_subcommand(1);

  // pascal
  std::uint32_t pa_prime = 2, pa_rows = 8;
  std::string pa_format;
  CLI::App* pascal = app.add_subcommand("pascal", "Pascal's triangle mod p");
  pascal->add_option("--prime", pa_prime, "Prime modulus")->required();
  pascal->add_option("--rows", pa_rows, "Number of rows (1..512)")
      ->required()
      ->check(CLI::Range(1u, 512u));
  add_format_flag(pascal, pa_format);

  // sums
  std::uint32_t su_prime = 2, su_power = 1;
  std::string su_format;
  CLI::App* sums = app.add_subcommand("sums", "Column sums of the triangle");
  sums->add_option("--prime", su_prime, "Prime modulus")->required();
  sums->add_option("--power", su_power, "Exponent n of p^n")->required();
  add_format_flag(sums, su_format);

  // binom
  std::uint64_t bi_n = 0, bi_k = 0;
  std::uint32_t bi_prime = 2;
  std::string bi_method = "lucas", bi_format;
  bool bi_valuation = false;
  CLI::App* binom = app.add_subcommand("binom", "Single binomial mod p");
  binom->add_option("--n", bi_n, "Upper index")->required();
  binom->add_option("--k", bi_k, "Lower index")->required();
  binom->add_option("--prime", bi_prime, "Prime modulus")->required();
  binom->add_option("--method", bi_method, "Evaluation method")
      ->check(CLI::IsMember({"lucas", "pascal"}));
  binom->add_flag("--valuation", bi_valuation,
                  "Print the p-adic valuation of C(n,k) instead");
  add_format_flag(binom, bi_format);

  // holomorph
  std::uint32_t ho_prime = 2, ho_dim = 2;
  std::string ho_method = "formula", ho_format;
  bool ho_witness = false;
  CLI::App* holomorph =
      app.add_subcommand("holomorph", "Holomorph group summary");
  holomorph->add_option("--prime", ho_prime, "Prime modulus")->required();
  holomorph->add_option("--dim", ho_dim, "Dimension m of V")
      ->required()
      ->check(CLI::Range(1u, 10000u));
  holomorph
      ->add_option("--exponent-method", ho_method, "Exponent computation")
      ->check(CLI::IsMember({"formula", "brute"}));
  holomorph->add_flag("--witness", ho_witness,
                      "Check the boundary witness (requires m = p^n)");
  add_format_flag(holomorph, ho_format);

  // verify
  std::string ve_suite = "all", ve_format;
  std::uint32_t ve_max_prime = 0;
  std::uint64_t ve_max_size = 0;
  CLI::App* verify = app.add_subcommand("verify", "Invariant sweeps");
  verify->add_option("--suite", ve_suite, "Which sweep to run")
      ->check(CLI::IsMember({"sums", "matrix", "poly", "holomorph", "all"}));
  verify->add_option("--max-prime", ve_max_prime,
                     "Largest prime swept (0 = suite default)");
  verify->add_option("--max-size", ve_max_size,
                     "Size bound for the sweep (0 = suite default)");
  add_format_flag(verify, ve_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (pascal->parsed()) return cmd_pascal(pa_prime, pa_rows, pa_format);
    if (sums->parsed()) return cmd_sums(su_prime, su_power, su_format);
    if (binom->parsed()) {
      return cmd_binom(bi_n, bi_k, bi_prime, bi_method, bi_valuation,
                       bi_format);
    }
    if (holomorph->parsed()) {
      return cmd_holomorph(ho_prime, ho_dim, ho_method, ho_witness, ho_format);
    }
    if (verify->parsed()) {
      return cmd_verify(ve_suite, ve_max_prime, ve_max_size, ve_format);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitMathFail;
  }
  return 0;
}
