#include "pervpn/objects.hpp"

#include <regex>
#include <stdexcept>

namespace pervpn {

std::string ObjectTag::str() const {
  switch (kind) {
    case Kind::IC:
      return "IC" + std::to_string(a);
    case Kind::Delta:
      return "D" + std::to_string(a);
    case Kind::Nabla:
      return "N" + std::to_string(a);
    case Kind::P:
      return "P" + std::to_string(a);
    case Kind::I:
      return "I" + std::to_string(a);
    case Kind::ZPlus:
      return "Z+(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::ZMinus:
      return "Z-(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return "?";
}

ObjectTag ObjectTag::parse(const std::string& s) {
  static const std::regex simple_re(R"((IC|D|N|P|I)(\d+))");
  static const std::regex string_re(R"(Z([+-])\((\d+),(\d+)\))");
  std::smatch m;
  if (std::regex_match(s, m, simple_re)) {
    const int k = std::stoi(m[2]);
    const std::string p = m[1];
    if (p == "IC") return ic(k);
    if (p == "D") return delta(k);
    if (p == "N") return nabla(k);
    if (p == "P") return proj(k);
    return inj(k);
  }
  if (std::regex_match(s, m, string_re)) {
    const int a = std::stoi(m[2]), b = std::stoi(m[3]);
    return m[1] == "+" ? zplus(a, b) : zminus(a, b);
  }
  throw std::invalid_argument("unknown object tag: " + s);
}

ObjectTag ic(int k) { return {ObjectTag::Kind::IC, k, 0}; }
ObjectTag delta(int k) { return {ObjectTag::Kind::Delta, k, 0}; }
ObjectTag nabla(int k) { return {ObjectTag::Kind::Nabla, k, 0}; }
ObjectTag proj(int k) { return {ObjectTag::Kind::P, k, 0}; }
ObjectTag inj(int k) { return {ObjectTag::Kind::I, k, 0}; }
ObjectTag zplus(int a, int b) { return {ObjectTag::Kind::ZPlus, a, b}; }
ObjectTag zminus(int a, int b) { return {ObjectTag::Kind::ZMinus, a, b}; }

Module build_object(const AlgebraPtr& alg, const ObjectTag& t) {
  const int n = alg->num_vertices() - 1;
  auto in_range = [n](int k) { return 0 <= k && k <= n; };
  if (!in_range(t.a)) throw std::out_of_range("object index out of range: " + t.str());
  switch (t.kind) {
    case ObjectTag::Kind::IC:
      return simple(alg, t.a);
    case ObjectTag::Kind::Delta:
      return standard(alg, t.a);
    case ObjectTag::Kind::Nabla:
      return costandard(alg, t.a);
    case ObjectTag::Kind::P:
      return projective(alg, t.a);
    case ObjectTag::Kind::I:
      return injective(alg, t.a);
    case ObjectTag::Kind::ZPlus:
      return string_object(alg, 1, t.a, t.b);
    case ObjectTag::Kind::ZMinus:
      return string_object(alg, -1, t.a, t.b);
  }
  throw std::logic_error("bad tag");
}

Session::Session(int n) : n_(n), alg_(build_An(n)) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

std::shared_ptr<const Module> Session::module(const ObjectTag& t) const {
  return modules_.get(t, [&] { return build_object(alg_, t); });
}

std::shared_ptr<const Replacement> Session::resolution(const ObjectTag& t) const {
  return resolutions_.get(t, [&] { return minimal_proj_resolution(*module(t), 2 * n_); });
}

std::vector<int> Session::ext_dims(const ObjectTag& x, const ObjectTag& y) const {
  return *ext_dims_.get({x, y}, [&] {
    GradedHom h(complex(x), stalk(*module(y)), 0, 2 * n_, false);
    std::vector<int> out;
    for (int r = 0; r <= 2 * n_; ++r) out.push_back(h.cohomology_dim(r));
    return out;
  });
}

std::shared_ptr<const GradedHom> Session::ext_space(const ObjectTag& x, const ObjectTag& y) const {
  return *spaces_.get({x, y}, [&] { return hom_complex(complex(x), complex(y), 0, 2 * n_, true); });
}

std::vector<ObjectTag> Session::named_objects() const {
  std::vector<ObjectTag> out;
  for (int k = 0; k <= n_; ++k)
    for (auto t : {ic(k), delta(k), nabla(k), proj(k), inj(k)}) out.push_back(t);
  for (int a = 0; a <= n_; ++a)
    for (int b = 0; b <= a; ++b) {
      out.push_back(zplus(a, b));
      out.push_back(zminus(a, b));
    }
  return out;
}

std::vector<ObjectTag> Session::census() const {
  std::vector<ObjectTag> out;
  for (int k = 0; k < n_; ++k) out.push_back(proj(k));
  for (int a = 0; a <= n_; ++a)
    for (int b = 0; b <= a; ++b) {
      out.push_back(zplus(a, b));
      if (b < a) out.push_back(zminus(a, b));
    }
  return out;
}

}  // namespace pervpn
