#include <map>
#include <memory>
#include <mutex>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pervpn/functors.hpp"
#include "pervpn/suites.hpp"

namespace py = pybind11;
using namespace pervpn;

namespace {

// Sessions are cheap to rebuild but their caches are not; keep one per n.
const Session& session(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Session>> cache;
  std::lock_guard lock(mu);
  auto& s = cache[n];
  if (!s) s = std::make_unique<Session>(n);
  return *s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations in the quiver model of perverse sheaves on P^n";

  m.def("suite_names", &suite_names);
  m.def(
      "run_json",
      [](int n, std::vector<std::string> suites, std::uint64_t seed, std::uint64_t prime, bool allow_inconclusive,
         int workers) {
        RunConfig cfg;
        cfg.n = n;
        cfg.suites = suites.empty() ? suite_names() : std::move(suites);
        cfg.seed = seed;
        cfg.prime = prime;
        cfg.allow_inconclusive = allow_inconclusive;
        cfg.workers = workers > 0 ? workers : default_workers();
        Report r;
        {
          py::gil_scoped_release release;
          r = run(cfg);
        }
        return to_json(r).dump();
      },
      py::arg("n"), py::arg("suites") = std::vector<std::string>{}, py::arg("seed") = 1, py::arg("prime") = 0,
      py::arg("allow_inconclusive") = false, py::arg("workers") = 0);

  m.def(
      "ext_dims",
      [](int n, const std::string& x, const std::string& y) {
        return session(n).ext_dims(ObjectTag::parse(x), ObjectTag::parse(y));
      },
      py::arg("n"), py::arg("x"), py::arg("y"), "dim Hom(X, Y[r]) for r = 0..2n");
  m.def(
      "resolution_json",
      [](int n, const std::string& x) { return session(n).complex(ObjectTag::parse(x))->to_json().dump(); },
      py::arg("n"), py::arg("x"));
  m.def(
      "module_json", [](int n, const std::string& x) { return session(n).module(ObjectTag::parse(x))->to_json().dump(); },
      py::arg("n"), py::arg("x"));
  m.def(
      "census",
      [](int n) {
        std::vector<std::string> out;
        for (const auto& t : session(n).census()) out.push_back(t.str());
        return out;
      },
      py::arg("n"));
  m.def(
      "algebra_dim", [](int n) { return session(n).algebra()->dim(); }, py::arg("n"));
  m.def(
      "cartan_matrix", [](int n) { return session(n).algebra()->cartan_matrix(); }, py::arg("n"));
  m.def(
      "twist_is_inverse_serre",
      [](int n, const std::string& x, std::uint64_t seed) {
        const auto& s = session(n);
        auto ctx = PTwistContext::for_top_simple(s.algebra());
        auto c = s.complex(ObjectTag::parse(x));
        return std::string(to_string(complexes_iso(p_twist(ctx, c), inverse_serre(*c), seed).status));
      },
      py::arg("n"), py::arg("x"), py::arg("seed") = 1);
}
