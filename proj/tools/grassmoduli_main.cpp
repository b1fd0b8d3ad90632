// Command-line front end: decomposition tables, moduli reports, dimension
// queries, and the oracle-backed verification suites.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grassmoduli/io.hpp"
#include "grassmoduli/moduli.hpp"
#include "grassmoduli/verify.hpp"

namespace {

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    return 2;
  }
  out << text;
  return 0;
}

int run_decompose(int p, int q, int k, const std::string& parity,
                  const std::string& format, const std::string& output) {
  std::vector<grassmoduli::ComponentReport> reports =
      grassmoduli::classify_components(p, q, k);
  if (parity != "both") {
    grassmoduli::Parity keep = parity == "sym"
                                   ? grassmoduli::Parity::symmetric
                                   : grassmoduli::Parity::antisymmetric;
    std::erase_if(reports, [keep](const grassmoduli::ComponentReport& r) {
      return r.parity != keep;
    });
  }
  std::string text;
  if (format == "json")
    text = grassmoduli::io::to_json(reports) + "\n";
  else if (format == "csv")
    text = grassmoduli::io::to_csv(reports);
  else
    text = grassmoduli::io::to_table(reports);
  return write_output(text, output);
}

int run_moduli(int p, int q, int k, const std::string& format,
               const std::string& output) {
  grassmoduli::ModuliReport report = p == q
                                         ? grassmoduli::equal_pq_report(q, k)
                                         : grassmoduli::moduli_report(p, q, k);
  std::string text;
  if (format == "json")
    text = grassmoduli::io::to_json(report) + "\n";
  else if (format == "csv")
    text = grassmoduli::io::to_csv(report);
  else
    text = grassmoduli::io::to_table(report);
  return write_output(text, output);
}

int run_verify(int max_n, int max_k, const std::vector<std::string>& suites) {
  grassmoduli::verify::VerifyOptions options;
  options.max_n = max_n;
  options.max_k = max_k;
  options.suites = suites;
  std::vector<grassmoduli::verify::CheckResult> results =
      grassmoduli::verify::run_verification(options);

  std::size_t failed = 0;
  for (const auto& result : results) {
    std::cout << (result.passed ? "ok   " : "FAIL ") << "[" << result.suite
              << "] " << result.name;
    if (!result.detail.empty()) std::cout << " -- " << result.detail;
    std::cout << "\n";
    // Timing goes to stderr so stdout stays byte-identical across runs.
    std::cerr << "[" << result.suite << "] " << result.name << ": "
              << result.millis << " ms\n";
    if (!result.passed) ++failed;
  }
  std::cout << "verify: " << results.size() << " checks, "
            << results.size() - failed << " passed, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

int run_dim(int n, const std::string& partition_text, bool allow_zero) {
  grassmoduli::Partition lambda;
  try {
    lambda = grassmoduli::Partition::parse(partition_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (lambda.length() > static_cast<std::size_t>(n)) {
    if (allow_zero) {
      std::cout << 0 << "\n";
      return 0;
    }
    std::cerr << "error: partition has more than n rows (pass --allow-zero "
                 "to report 0)\n";
    return 2;
  }
  std::cout << grassmoduli::dim_gl(lambda, n) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact decompositions of the tensor square of the rectangular SU(p+q) "
      "representation, center-character filters, and moduli dimensions for "
      "holomorphic isometric embeddings of Grassmannians into quadrics"};
  app.require_subcommand(1);

  int p = 0, q = 0, k = 0, n = 0;
  int max_n = 6, max_k = 3;
  std::string parity = "both", format = "table", output, partition_text;
  std::vector<std::string> suites;
  bool allow_zero = false;

  CLI::App* decompose =
      app.add_subcommand("decompose", "Decompose the square of F(k w_q)");
  decompose->add_option("--p", p, "Number of rows p")->required();
  decompose->add_option("--q", q, "Number of rows q")->required();
  decompose->add_option("--k", k, "Degree k")->required();
  decompose->add_option("--parity", parity, "Filter: sym, alt or both")
      ->check(CLI::IsMember({"sym", "alt", "both"}));
  decompose->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  decompose->add_option("--output", output, "Output path (default stdout)");

  CLI::App* moduli =
      app.add_subcommand("moduli", "Moduli-dimension report for (p,q,k)");
  moduli->add_option("--p", p, "Number of rows p")->required();
  moduli->add_option("--q", q, "Number of rows q")->required();
  moduli->add_option("--k", k, "Degree k")->required();
  moduli->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  moduli->add_option("--output", output, "Output path (default stdout)");

  CLI::App* verify =
      app.add_subcommand("verify", "Run the oracle-backed invariant suites");
  verify->add_option("--max-n", max_n, "Bound on p+q in the sweeps");
  verify->add_option("--max-k", max_k, "Bound on k in the sweeps");
  verify->add_option("--suite", suites,
                     "Restrict to named suites (repeatable)");

  CLI::App* dim = app.add_subcommand("dim", "Dimension of V(lambda) for GL(n)");
  dim->add_option("--n", n, "Rank n")->required();
  dim->add_option("--partition", partition_text, "Partition, e.g. 2,1,1")
      ->required();
  dim->add_flag("--allow-zero", allow_zero,
                "Report 0 instead of failing when the partition has more "
                "than n rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (decompose->parsed()) {
      if (q < 1 || p < q || k < 0) {
        std::cerr << "error: decompose requires p >= q >= 1 and k >= 0\n";
        return 2;
      }
      return run_decompose(p, q, k, parity, format, output);
    }
    if (moduli->parsed()) {
      if (q < 1 || p < q || k < 0) {
        std::cerr << "error: moduli requires p >= q >= 1 and k >= 0\n";
        return 2;
      }
      return run_moduli(p, q, k, format, output);
    }
    if (verify->parsed()) return run_verify(max_n, max_k, suites);
    if (dim->parsed()) {
      if (n < 1) {
        std::cerr << "error: dim requires n >= 1\n";
        return 2;
      }
      return run_dim(n, partition_text, allow_zero);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
