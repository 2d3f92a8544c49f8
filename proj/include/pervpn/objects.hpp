#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "pervpn/homalg.hpp"

namespace pervpn {

struct ObjectTag {
  enum class Kind { IC, Delta, Nabla, P, I, ZPlus, ZMinus };
  Kind kind = Kind::IC;
  int a = 0;
  int b = 0;

  // "IC1", "D2", "N0", "P0", "I1", "Z+(2,0)", "Z-(3,1)"
  std::string str() const;
  static ObjectTag parse(const std::string& s);
  friend bool operator<(const ObjectTag& x, const ObjectTag& y) {
    return std::tie(x.kind, x.a, x.b) < std::tie(y.kind, y.a, y.b);
  }
  friend bool operator==(const ObjectTag& x, const ObjectTag& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b;
  }
};

ObjectTag ic(int k);
ObjectTag delta(int k);
ObjectTag nabla(int k);
ObjectTag proj(int k);
ObjectTag inj(int k);
ObjectTag zplus(int a, int b);
ObjectTag zminus(int a, int b);

Module build_object(const AlgebraPtr& alg, const ObjectTag& t);

// Insert-once memo: readers share the lock, the first inserted value wins and
// is never replaced.
template <class K, class V>
class Memo {
 public:
  std::shared_ptr<const V> get(const K& key, const std::function<V()>& make) {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    auto value = std::make_shared<const V>(make());
    std::unique_lock lock(mu_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }
  std::size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<K, std::shared_ptr<const V>> map_;
};

// Per-n state: the algebra plus cached modules, resolutions and Hom spaces.
class Session {
 public:
  explicit Session(int n);

  int n() const { return n_; }
  const AlgebraPtr& algebra() const { return alg_; }

  std::shared_ptr<const Module> module(const ObjectTag& t) const;
  std::shared_ptr<const Replacement> resolution(const ObjectTag& t) const;
  std::shared_ptr<const ProjComplex> complex(const ObjectTag& t) const { return resolution(t)->complex; }
  // dim Hom(X, Y[r]) for r = 0..2n
  std::vector<int> ext_dims(const ObjectTag& x, const ObjectTag& y) const;
  // Hom(res X, res Y) with cohomology bases and chain-map coordinates, r = 0..2n.
  std::shared_ptr<const GradedHom> ext_space(const ObjectTag& x, const ObjectTag& y) const;

  // Every tag that names an object for this n, duplicates included.
  std::vector<ObjectTag> named_objects() const;
  // P_k (k < n), Z+(a,b) (b <= a), Z-(a,b) (b < a).
  std::vector<ObjectTag> census() const;

 private:
  int n_;
  AlgebraPtr alg_;
  mutable Memo<ObjectTag, Module> modules_;
  mutable Memo<ObjectTag, Replacement> resolutions_;
  mutable Memo<std::pair<ObjectTag, ObjectTag>, std::vector<int>> ext_dims_;
  mutable Memo<std::pair<ObjectTag, ObjectTag>, std::shared_ptr<const GradedHom>> spaces_;
};

}  // namespace pervpn
