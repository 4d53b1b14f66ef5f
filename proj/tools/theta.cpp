// theta: exact fixed-point spectra of automorphisms of small finite groups.
//
// Subcommands: abelian, dihedral, oracle, verify. Every run is
// deterministic: repeated invocations produce byte-identical output.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "theta/verify.hpp"

namespace {

using theta::u64;
using json = nlohmann::ordered_json;

constexpr u64 default_max_order = 4096;
constexpr u64 default_oracle_max_order = 512;

struct OutputOptions {
  bool as_json = false;
  bool as_csv = false;
  std::string out_file;
};

struct SpectrumReport {
  std::string group;
  std::string method;
  u64 aut_order = 0;
  std::vector<std::pair<u64, u64>> entries;  // ascending d
  std::vector<theta::Check> checks;
  std::string note;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  auto* j = cmd->add_flag("--json", opts.as_json, "emit a JSON report");
  cmd->add_flag("--csv", opts.as_csv, "emit CSV rows")->excludes(j);
  cmd->add_option("--out", opts.out_file, "write the report to FILE instead of stdout");
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

json checks_to_json(const std::vector<theta::Check>& checks) {
  json arr = json::array();
  for (const theta::Check& c : checks)
    arr.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return arr;
}

std::string render_spectrum(const SpectrumReport& report, const OutputOptions& opts) {
  std::ostringstream out;
  if (opts.as_json) {
    json doc;
    doc["group"] = report.group;
    doc["method"] = report.method;
    doc["aut_order"] = report.aut_order;
    json spectrum = json::array();
    for (const auto& [d, count] : report.entries)
      spectrum.push_back({{"d", d}, {"count", count}});
    doc["spectrum"] = spectrum;
    if (!report.note.empty()) doc["note"] = report.note;
    if (!report.checks.empty()) doc["checks"] = checks_to_json(report.checks);
    out << doc.dump(2) << "\n";
  } else if (opts.as_csv) {
    out << "d,count\n";
    for (const auto& [d, count] : report.entries) out << d << "," << count << "\n";
  } else {
    out << "group: " << report.group << "\n";
    out << "method: " << report.method << "\n";
    out << "aut order: " << report.aut_order << "\n";
    out << "d,count:\n";
    for (const auto& [d, count] : report.entries)
      out << "  " << d << " -> " << count << "\n";
    if (!report.note.empty()) out << "note: " << report.note << "\n";
    if (!report.checks.empty()) {
      out << "checks:\n";
      for (const theta::Check& c : report.checks)
        out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": expected "
            << c.expected << ", got " << c.actual << "\n";
    }
  }
  return out.str();
}

std::string render_verify(const std::string& scope, const std::vector<theta::Check>& checks,
                          const OutputOptions& opts) {
  std::ostringstream out;
  if (opts.as_json) {
    json doc;
    doc["method"] = "verify";
    doc["scope"] = scope;
    doc["checks"] = checks_to_json(checks);
    doc["pass"] = theta::all_pass(checks);
    out << doc.dump(2) << "\n";
  } else if (opts.as_csv) {
    out << "name,expected,actual,pass\n";
    for (const theta::Check& c : checks)
      out << csv_escape(c.name) << "," << csv_escape(c.expected) << ","
          << csv_escape(c.actual) << "," << (c.pass ? "true" : "false") << "\n";
  } else {
    std::size_t passed = 0;
    for (const theta::Check& c : checks) {
      out << "[" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": expected "
          << c.expected << ", got " << c.actual << "\n";
      if (c.pass) ++passed;
    }
    out << passed << "/" << checks.size() << " checks passed\n";
  }
  return out.str();
}

int emit(const std::string& text, const OutputOptions& opts) {
  if (opts.out_file.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(opts.out_file, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << opts.out_file << " for writing\n";
    return 2;
  }
  file << text;
  return 0;
}

int finish_report(const SpectrumReport& report, const OutputOptions& opts) {
  int rc = emit(render_spectrum(report, opts), opts);
  if (rc != 0) return rc;
  return theta::verify_exit_code(report.checks);
}

u64 parse_modulus_token(const std::string& token) {
  auto parse_u64 = [](const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
      throw theta::invalid_input("oracle spec: expected an unsigned integer, got '" + text + "'");
    return static_cast<u64>(std::stoull(text));
  };
  std::size_t caret = token.find('^');
  if (caret == std::string::npos) return parse_u64(token);
  u64 base = parse_u64(token.substr(0, caret));
  u64 exp = parse_u64(token.substr(caret + 1));
  if (exp > 63) throw theta::invalid_input("oracle spec: exponent too large");
  return theta::pow_u64(base, static_cast<unsigned>(exp));
}

struct AbelianArgs {
  u64 p = 0;
  unsigned a = 0, b = 0;
  std::string method = "enumerate";
  unsigned threads = 1;
  u64 max_order = default_max_order;
  OutputOptions out;
};

int run_abelian(const AbelianArgs& args) {
  theta::Rank2PGroup g = theta::Rank2PGroup::make(args.p, args.a, args.b);
  SpectrumReport report;
  report.group = g.name();
  report.method = args.method;
  if (args.method == "enumerate") {
    if (g.order > args.max_order)
      throw theta::unsupported("group order exceeds --max-order; raise the cap to enumerate");
    theta::Spectrum s = theta::theta_spectrum(g, args.threads);
    report.aut_order = s.aut_order;
    report.entries.assign(s.entries.begin(), s.entries.end());
  } else if (args.method == "formula") {
    report.aut_order = theta::aut_order_general(args.p, args.a, args.b);
    if (args.a == 1 && args.b == 2) {
      for (unsigned k = 0; k <= 3; ++k) {
        u64 d = theta::pow_u64(args.p, k);
        report.entries.emplace_back(d, theta::theta_zp_zp2(args.p, d));
      }
    } else {
      report.entries.emplace_back(1, theta::fpf_count_general(args.p, args.a, args.b));
      report.note = "no closed form in source for d > 1";
    }
  } else {  // oracle
    if (g.order > args.max_order || g.order > theta::max_cayley_size)
      throw theta::unsupported("group order exceeds the oracle table cap");
    theta::Spectrum s = theta::oracle_theta_spectrum(theta::build_direct_sum({g.mod_a, g.mod_b}));
    report.aut_order = s.aut_order;
    report.entries.assign(s.entries.begin(), s.entries.end());
  }
  return finish_report(report, args.out);
}

struct DihedralArgs {
  u64 order = 0;  // order of D_n, i.e. the subscript: D_10 <-> -n 10
  std::string method = "enumerate";
  unsigned threads = 1;
  u64 max_order = default_max_order;
  OutputOptions out;
};

int run_dihedral(const DihedralArgs& args) {
  if (args.order < 6 || args.order % 2 != 0)
    throw theta::invalid_input("-n must be the (even) order of the dihedral group, at least 6");
  u64 n = args.order / 2;
  theta::DihedralGroup g = theta::DihedralGroup::make(n);
  bool odd_prime = n != 2 && theta::is_prime(n);
  SpectrumReport report;
  report.group = g.name();
  report.method = args.method;
  if (args.method == "enumerate") {
    if (g.order > args.max_order)
      throw theta::unsupported("group order exceeds --max-order; raise the cap to enumerate");
    theta::Spectrum s = theta::dihedral_theta_spectrum(g, args.threads);
    report.aut_order = s.aut_order;
    report.entries.assign(s.entries.begin(), s.entries.end());
    if (odd_prime) {
      for (const auto& [d, count] : s.entries)
        report.checks.push_back({g.name() + " theta(" + std::to_string(d) + ")",
                                 std::to_string(theta::theta_dihedral_formula(n, d)),
                                 std::to_string(count),
                                 theta::theta_dihedral_formula(n, d) == count});
    }
  } else if (args.method == "formula") {
    report.aut_order = theta::totient(n) * n;
    if (odd_prime) {
      for (u64 d : theta::divisors(g.order))
        report.entries.emplace_back(d, theta::theta_dihedral_formula(n, d));
    } else {
      report.note = "no closed form in source for composite rotation order";
    }
  } else {  // oracle
    if (g.order > args.max_order)
      throw theta::unsupported("group order exceeds --max-order");
    theta::Spectrum s = theta::oracle_theta_spectrum(theta::build_dihedral(n));
    report.aut_order = s.aut_order;
    report.entries.assign(s.entries.begin(), s.entries.end());
  }
  return finish_report(report, args.out);
}

struct OracleArgs {
  std::string spec;
  unsigned threads = 1;  // accepted for interface symmetry; the search is sequential
  u64 max_order = default_oracle_max_order;
  OutputOptions out;
};

int run_oracle(const OracleArgs& args) {
  theta::CayleyGroup table;
  if (args.spec.rfind("zsum:", 0) == 0) {
    std::vector<u64> moduli;
    std::stringstream list(args.spec.substr(5));
    std::string token;
    while (std::getline(list, token, ',')) moduli.push_back(parse_modulus_token(token));
    if (moduli.empty()) throw theta::invalid_input("oracle spec: zsum needs at least one modulus");
    u64 order = 1;
    for (u64 m : moduli) order = theta::mul_checked(order, m);
    if (order > args.max_order)
      throw theta::unsupported("group order exceeds --max-order");
    table = theta::build_direct_sum(moduli);
  } else if (args.spec.rfind("dihedral:", 0) == 0) {
    u64 n = parse_modulus_token(args.spec.substr(9));
    if (n > args.max_order / 2)
      throw theta::unsupported("group order exceeds --max-order");
    table = theta::build_dihedral(n);
  } else {
    throw theta::invalid_input("oracle spec must be 'zsum:m1,m2,...' or 'dihedral:n'");
  }
  theta::Spectrum s = theta::oracle_theta_spectrum(table);
  SpectrumReport report;
  report.group = s.group;
  report.method = "oracle";
  report.aut_order = s.aut_order;
  report.entries.assign(s.entries.begin(), s.entries.end());
  return finish_report(report, args.out);
}

struct VerifyArgs {
  bool paper = false;
  std::vector<u64> primes;
  unsigned threads = 1;
  OutputOptions out;
};

int run_verify(const VerifyArgs& args) {
  std::vector<theta::Check> checks;
  std::string scope;
  if (!args.primes.empty()) {
    for (u64 p : args.primes)
      if (!theta::is_prime(p)) throw theta::invalid_input("--primes entries must be prime");
    checks = theta::abelian_spectrum_checks(args.primes, args.threads);
    scope = "primes";
    for (std::size_t i = 0; i < args.primes.size(); ++i)
      scope += (i ? "," : " ") + std::to_string(args.primes[i]);
  } else {
    checks = theta::paper_checks(args.threads);
    scope = "paper";
  }
  int rc = emit(render_verify(scope, checks, args.out), args.out);
  if (rc != 0) return rc;
  return theta::verify_exit_code(checks);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact automorphism fixed-point spectra for small finite groups"};
  app.require_subcommand(1);

  AbelianArgs abelian;
  CLI::App* cmd_abelian = app.add_subcommand(
      "abelian", "spectrum of Z_{p^a} + Z_{p^b} (requires a < b)");
  cmd_abelian->add_option("-p,--prime", abelian.p, "the prime p")->required();
  cmd_abelian->add_option("-a", abelian.a, "first exponent")->required();
  cmd_abelian->add_option("-b", abelian.b, "second exponent")->required();
  cmd_abelian->add_option("--method", abelian.method, "formula | enumerate | oracle")
      ->check(CLI::IsMember({"formula", "enumerate", "oracle"}));
  cmd_abelian->add_option("--threads", abelian.threads, "worker threads (1 = sequential)");
  cmd_abelian->add_option("--max-order", abelian.max_order, "largest group order to enumerate");
  add_output_flags(cmd_abelian, abelian.out);

  DihedralArgs dihedral;
  CLI::App* cmd_dihedral = app.add_subcommand(
      "dihedral", "spectrum of the dihedral group D_n (use -n 10 for D_10)");
  cmd_dihedral->add_option("-n", dihedral.order, "order of the dihedral group (even, >= 6)")
      ->required();
  cmd_dihedral->add_option("--method", dihedral.method, "formula | enumerate | oracle")
      ->check(CLI::IsMember({"formula", "enumerate", "oracle"}));
  cmd_dihedral->add_option("--threads", dihedral.threads, "worker threads (1 = sequential)");
  cmd_dihedral->add_option("--max-order", dihedral.max_order, "largest group order to enumerate");
  add_output_flags(cmd_dihedral, dihedral.out);

  OracleArgs oracle;
  CLI::App* cmd_oracle = app.add_subcommand(
      "oracle", "brute-force spectrum from a Cayley table: zsum:m1,m2,... or dihedral:n");
  cmd_oracle->add_option("spec", oracle.spec, "group spec, e.g. zsum:2,4 or zsum:3^2,3 or dihedral:5")
      ->required();
  cmd_oracle->add_option("--threads", oracle.threads, "accepted for symmetry; search is sequential");
  cmd_oracle->add_option("--max-order", oracle.max_order, "largest group order to accept");
  add_output_flags(cmd_oracle, oracle.out);

  VerifyArgs verify;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "run the built-in cross-verification suite");
  cmd_verify->add_flag("--paper", verify.paper, "run the full suite (default)");
  cmd_verify->add_option("--primes", verify.primes,
                         "restrict to the rank-2 spectrum checks at these primes")
      ->delimiter(',');
  cmd_verify->add_option("--threads", verify.threads, "worker threads (1 = sequential)");
  add_output_flags(cmd_verify, verify.out);

  try {
    app.parse(argc, argv);
    if (cmd_abelian->parsed()) return run_abelian(abelian);
    if (cmd_dihedral->parsed()) return run_dihedral(dihedral);
    if (cmd_oracle->parsed()) return run_oracle(oracle);
    return run_verify(verify);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
