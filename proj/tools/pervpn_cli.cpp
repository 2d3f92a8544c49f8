#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "pervpn/scalar.hpp"
#include "pervpn/suites.hpp"

namespace {

std::uint64_t parse_field(const std::string& s) {
  if (s == "rationals" || s == "Q" || s == "0") return 0;
  std::size_t used = 0;
  const unsigned long long p = std::stoull(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad field: " + s);
  pervpn::FieldScope check(p);  // throws unless p is a prime below 2^31
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for the quiver model of perverse sheaves on P^n"};
  app.require_subcommand(1, 1);

  pervpn::RunConfig cfg;
  cfg.workers = pervpn::default_workers();
  std::string field = "rationals";
  app.add_option("--n", cfg.n, "rank n of P^n")->check(CLI::Range(1, 12))->capture_default_str();
  app.add_option("--field", field, "rationals or a prime p < 2^31")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized isomorphism searches")->capture_default_str();
  app.add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"json", "tsv", "text"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "write the report here instead of stdout");
  app.add_flag("--allow-inconclusive", cfg.allow_inconclusive, "inconclusive rows do not fail the run");
  app.add_flag("--timings", cfg.timings, "include wall-clock seconds (reports are then not byte-reproducible)");

  const std::map<std::string, std::vector<std::string>> verbs{
      {"verify-homtables", {"homtables"}},
      {"verify-extalgebra", {"extalgebra"}},
      {"verify-strings", {"strings"}},
      {"verify-cy", {"cy"}},
      {"verify-serre", {"serre"}},
      {"census", {"census"}},
      {"verify-structural", {"structural"}},
      {"verify-plumbing", {"plumbing"}},
      {"verify-all", pervpn::suite_names()},
  };
  for (const auto& [verb, suites] : verbs) {
    auto* sub = app.add_subcommand(verb, "run: " + CLI::detail::join(suites, ", "));
    sub->fallthrough();
    sub->callback([&cfg, s = suites] { cfg.suites = s; });
  }

  try {
    app.parse(argc, argv);
    cfg.prime = parse_field(field);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  pervpn::Report report;
  try {
    report = pervpn::run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const std::string text = pervpn::render(report, cfg.format);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return 2;
    }
    f << text;
  }
  for (const auto& s : report.suites) {
    std::cerr << s.name << ": " << s.count(pervpn::Status::pass) << " pass, " << s.count(pervpn::Status::fail)
              << " fail, " << s.count(pervpn::Status::inconclusive) << " inconclusive\n";
    for (const auto& row : s.rows)
      if (row.status == pervpn::Status::fail)
        std::cerr << "  FAIL " << row.check << " " << row.item << ": expected " << row.expected.dump()
                  << ", computed " << row.computed.dump() << "\n";
  }
  if (report.advisory()) std::cerr << "advisory: characteristic " << cfg.prime << " is not the reference field\n";
  return report.ok() ? 0 : 1;
}
