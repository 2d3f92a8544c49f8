// One PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "pervpn/suites.hpp"

using namespace pervpn;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::string suite;
  std::vector<int> ns;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "hom tables", "homtables", {1, 2, 3}},
      {2, "Ext algebra of the simples", "extalgebra", {1, 2, 3}},
      {3, "string objects are P-like", "strings", {1, 2, 3, 4}},
      {4, "Calabi-Yau classification", "cy", {1, 2, 3}},
      {5, "inverse Serre equals P-twist", "serre", {1, 2, 3}},
      {6, "census of indecomposables", "census", {1, 2, 3}},
      {7, "structural properties", "structural", {1, 2}},
      {8, "exact linear algebra", "plumbing", {}},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    int rows = 0, bad = 0;
    std::string first_bad;
    const std::vector<int> runs = c.ns.empty() ? std::vector<int>{1} : c.ns;
    for (int n : runs) {
      RunConfig cfg;
      cfg.n = n;
      cfg.suites = {c.suite};
      cfg.workers = default_workers();
      auto rep = run(cfg);
      for (const auto& s : rep.suites)
        for (const auto& row : s.rows) {
          ++rows;
          if (row.status != Status::pass) {
            ++bad;
            if (first_bad.empty())
              first_bad = "n=" + std::to_string(n) + " " + row.check + " " + row.item + " [" + to_string(row.status) + "]";
          }
        }
    }
    const bool ok = bad == 0 && rows > 0;
    if (!ok) ++failed;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string ns;
    for (int n : c.ns) ns += (ns.empty() ? "n=" : ",") + std::to_string(n);
    if (ns.empty()) ns = "1000 random matrices";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << ns << ", " << rows
              << " checks, " << buf << ")";
    if (!ok) std::cout << " first failure: " << (first_bad.empty() ? "no checks ran" : first_bad);
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
