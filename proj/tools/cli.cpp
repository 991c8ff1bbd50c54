// Command-line front end.  Subcommands: verify, orbits, indicators,
// reproduce, oracle.  Exit codes: 0 success, 1 assertion or exactness
// failure, 2 usage or format error, 3 resource cap.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bismash/errors.hpp"
#include "bismash/factorization.hpp"
#include "bismash/hopf_oracle.hpp"
#include "bismash/indicators.hpp"
#include "bismash/orbits.hpp"
#include "cases.hpp"

namespace {

using bismash::ExactFactorization;

struct Args {
  std::string command;
  std::optional<std::string> file;
  std::optional<std::string> case_name;
  bool all = false;
  bool json = false;
  bool csv = false;
  int threads = 0;
  std::optional<int64_t> cap;
};

int usage(const std::string& msg) {
  if (!msg.empty()) std::cerr << "error: " << msg << "\n\n";
  std::cerr
      << "usage: bismash <command> [options]\n"
         "\n"
         "commands:\n"
         "  verify -f FILE             check that the file's factors multiply\n"
         "                             out to the ambient symmetric group\n"
         "  orbits -f FILE [--json]    F-orbits on G with sizes, stabilizer\n"
         "                             orders, and null indicator flags\n"
         "  indicators -f FILE [--json|--csv]\n"
         "                             simple modules with dimensions and\n"
         "                             Frobenius-Schur indicators\n"
         "  reproduce --case NAME      run one named reproduction case\n"
         "  reproduce --all            run the full acceptance suite\n"
         "  oracle -f FILE [--cap N]   brute-force recheck of the Hopf axioms\n"
         "                             against the engine (default cap 5040)\n"
         "\n"
         "options:\n"
         "  --threads N                worker threads, 0 = hardware default\n"
         "\n"
         "run \"bismash reproduce\" with an unknown case name to list cases.\n";
  return 2;
}

std::optional<Args> parse_args(int argc, char** argv) {
  Args a;
  if (argc < 2) return std::nullopt;
  a.command = argv[1];
  for (int i = 2; i < argc; ++i) {
    std::string opt = argv[i];
    auto value = [&]() -> std::optional<std::string> {
      if (i + 1 >= argc) return std::nullopt;
      return std::string(argv[++i]);
    };
    if (opt == "-f" || opt == "--file") {
      auto v = value();
      if (!v) return std::nullopt;
      a.file = *v;
    } else if (opt == "--case") {
      auto v = value();
      if (!v) return std::nullopt;
      a.case_name = *v;
    } else if (opt == "--all") {
      a.all = true;
    } else if (opt == "--json") {
      a.json = true;
    } else if (opt == "--csv") {
      a.csv = true;
    } else if (opt == "--threads") {
      auto v = value();
      if (!v) return std::nullopt;
      a.threads = std::atoi(v->c_str());
    } else if (opt == "--cap") {
      auto v = value();
      if (!v) return std::nullopt;
      a.cap = std::atoll(v->c_str());
    } else {
      return std::nullopt;
    }
  }
  return a;
}

int cmd_verify(const Args& a) {
  if (!a.file) return usage("verify needs -f FILE");
  auto fact = ExactFactorization::from_spec_file(*a.file);
  std::cout << "exact: |F| = " << fact.left_factor().order() << ", |G| = "
            << fact.right_factor().order() << ", |F| * |G| = "
            << fact.ambient().order() << " = " << fact.degree() << "!\n";
  if (fact.shape_route())
    std::cout << "shape: G sharply " << fact.k()
              << "-transitive, F symmetric on the first "
              << fact.degree() - fact.k() << " points\n";
  else
    std::cout << "shape: generic\n";
  return 0;
}

int cmd_orbits(const Args& a) {
  if (!a.file) return usage("orbits needs -f FILE");
  auto fact = ExactFactorization::from_spec_file(*a.file);
  auto set = bismash::compute_orbits(fact);
  if (a.json) {
    std::ostream& os = std::cout;
    os << "{\n  \"degree\": " << fact.degree()
       << ",\n  \"f_order\": " << fact.left_factor().order()
       << ",\n  \"g_order\": " << fact.right_factor().order()
       << ",\n  \"orbit_count\": " << set.count() << ",\n  \"orbits\": [\n";
    for (int64_t i = 0; i < set.count(); ++i) {
      const auto& rec = set.orbits()[i];
      os << "    {\"index\": " << i << ", \"representative\": \""
         << rec.representative.str() << "\", \"size\": " << rec.size
         << ", \"stabilizer_order\": " << rec.stabilizer.order()
         << ", \"null\": " << (rec.null_indicator ? "true" : "false");
      if (rec.member_class) os << ", \"family\": " << rec.member_class->m;
      os << "}" << (i + 1 < set.count() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return 0;
  }
  std::cout << set.count() << " orbits of F = "
            << fact.left_factor().order() << " acting on G = "
            << fact.right_factor().order() << "\n";
  for (int64_t i = 0; i < set.count(); ++i) {
    const auto& rec = set.orbits()[i];
    std::cout << "orbit " << i << ": representative "
              << rec.representative.str() << ", size " << rec.size
              << ", stabilizer order " << rec.stabilizer.order();
    if (rec.member_class) std::cout << ", family " << rec.member_class->m;
    if (rec.null_indicator) std::cout << ", null";
    std::cout << "\n";
  }
  return 0;
}

int cmd_indicators(const Args& a) {
  if (!a.file) return usage("indicators needs -f FILE");
  if (a.json && a.csv) return usage("choose one of --json and --csv");
  auto fact = ExactFactorization::from_spec_file(*a.file);
  auto rep = bismash::full_report(fact, a.threads);
  if (a.json) {
    std::cout << bismash::report_json(rep);
    return 0;
  }
  if (a.csv) {
    std::cout << bismash::report_csv(rep);
    return 0;
  }
  std::cout << "degree " << rep.degree << ", |F| = " << rep.f_order
            << ", |G| = " << rep.g_order << ", " << rep.orbits.count()
            << " orbits\n";
  std::cout << "antipode trace " << rep.trace_lhs
            << ", ambient involution count " << rep.trace_rhs << "\n";
  std::cout << "indicator histogram:";
  for (const auto& [v, c] : rep.indicator_histogram)
    std::cout << " " << v << " x " << c;
  std::cout << "\n";
  std::cout << (rep.totally_orthogonal
                    ? "totally orthogonal: every indicator is +1\n"
                    : "not totally orthogonal\n");
  for (size_t i = 0; i < rep.orbit_modules.size(); ++i) {
    const auto& rec = rep.orbits.orbits()[i];
    std::cout << "orbit " << i << " (representative "
              << rec.representative.str() << ", size " << rec.size
              << (rec.null_indicator ? ", null" : "") << ")\n";
    for (const auto& m : rep.orbit_modules[i])
      std::cout << "  character " << m.char_index << " of degree "
                << m.char_degree << ": module dimension " << m.dim
                << ", indicator " << m.indicator << "\n";
  }
  return 0;
}

int cmd_reproduce(const Args& a) {
  if (a.all) {
    auto results = bismash::cases::run_acceptance(a.threads, &std::cout);
    bool ok = true;
    for (const auto& c : results) ok = ok && c.ok;
    std::cout << (ok ? "acceptance: PASS" : "acceptance: FAIL") << "\n";
    return ok ? 0 : 1;
  }
  if (!a.case_name) return usage("reproduce needs --case NAME or --all");
  const auto* def = bismash::cases::find_case(*a.case_name);
  if (!def) {
    std::cerr << "unknown case: " << *a.case_name << "\navailable cases:\n";
    for (const auto& d : bismash::cases::registry())
      std::cerr << "  " << d.name << "  (" << d.summary << ")\n";
    return 2;
  }
  auto res = def->run(a.threads);
  for (const auto& note : res.notes) std::cout << "note: " << note << "\n";
  for (const auto& as : res.assertions)
    std::cout << (as.ok ? "PASS " : "FAIL ") << as.label
              << (as.detail.empty() ? "" : " [" + as.detail + "]") << "\n";
  std::cout << "case " << res.name << ": "
            << (res.passed() ? "PASS" : "FAIL") << "\n";
  return res.passed() ? 0 : 1;
}

int cmd_oracle(const Args& a) {
  if (!a.file) return usage("oracle needs -f FILE");
  auto fact = ExactFactorization::from_spec_file(*a.file);
  auto rep = bismash::hopf_oracle(fact, a.cap.value_or(5040));
  std::cout << bismash::oracle_text(rep);
  return rep.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  auto args = parse_args(argc, argv);
  if (!args) return usage(argc < 2 ? "" : "unrecognized arguments");
  try {
    if (args->command == "verify") return cmd_verify(*args);
    if (args->command == "orbits") return cmd_orbits(*args);
    if (args->command == "indicators") return cmd_indicators(*args);
    if (args->command == "reproduce") return cmd_reproduce(*args);
    if (args->command == "oracle") return cmd_oracle(*args);
    return usage("unknown command: " + args->command);
  } catch (const bismash::FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 2;
  } catch (const bismash::NotExactError& e) {
    std::cerr << "not exact: " << e.what() << "\n";
    return 1;
  } catch (const bismash::CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
