#pragma once

// Inn(X) as an explicit permutation group, with one shortest word per
// element, plus orbits and connectivity of the Inn(X) action.

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "qrep/errors.hpp"
#include "qrep/permutation.hpp"
#include "qrep/quandle.hpp"

namespace qrep {

struct Generator {
  Element label;  // quandle element x; the generator is R_x
  Permutation perm;
};

/// Words are sequences of generator labels w = (x1, ..., xk) standing for
/// R_x1 o R_x2 o ... o R_xk. The empty word is the identity.
using Word = std::vector<Element>;

class PermutationGroup {
 public:
  /// Breadth-first closure of the generators. Each element keeps the
  /// shortlex-least word: shortest first, then lexicographic in generator
  /// order.
  static PermutationGroup generate(std::size_t degree, std::vector<Generator> generators) {
    std::stable_sort(generators.begin(), generators.end(),
                     [](const Generator& a, const Generator& b) { return a.label < b.label; });
    for (const auto& g : generators)
      if (g.perm.size() != degree) throw domain_error("PermutationGroup: generator has wrong degree");

    PermutationGroup group;
    group.generators_ = std::move(generators);
    group.add(Permutation::identity(degree), {});
    for (std::size_t head = 0; head < group.elements_.size(); ++head) {
      for (const auto& g : group.generators_) {
        Permutation next = group.elements_[head].compose(g.perm);
        if (group.index_.contains(next)) continue;
        Word w = group.words_[head];
        w.push_back(g.label);
        group.add(std::move(next), std::move(w));
      }
    }
    return group;
  }

  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Word>& words() const { return words_; }

  std::optional<std::size_t> index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Permutation& p) const { return index_.contains(p); }

  /// Evaluates a word over generator labels.
  Permutation evaluate(const Word& w) const {
    const std::size_t degree = elements_.front().size();
    Permutation out = Permutation::identity(degree);
    for (Element label : w) out = out.compose(generator(label));
    return out;
  }

  const Permutation& generator(Element label) const {
    for (const auto& g : generators_)
      if (g.label == label) return g.perm;
    throw domain_error("PermutationGroup: unknown generator label");
  }

 private:
  void add(Permutation p, Word w) {
    index_.emplace(p, elements_.size());
    elements_.push_back(std::move(p));
    words_.push_back(std::move(w));
  }

  std::vector<Permutation> elements_;
  std::vector<Generator> generators_;
  std::vector<Word> words_;
  std::map<Permutation, std::size_t> index_;
};

/// Subgroup of Inn(q) generated by R_x for the given labels.
inline PermutationGroup generated_group(const FiniteQuandle& q, const std::vector<Element>& labels) {
  std::vector<Generator> gens;
  for (Element x : labels) gens.push_back({x, right_translation(q, x)});
  return PermutationGroup::generate(q.size(), std::move(gens));
}

/// Inn(q) = < R_x : x in q >.
inline PermutationGroup inner_group(const FiniteQuandle& q) {
  std::vector<Element> all(q.size());
  std::iota(all.begin(), all.end(), Element{0});
  return generated_group(q, all);
}

using Partition = std::vector<std::vector<Element>>;

/// Orbits of Inn(q); each block ascending, blocks ordered by least element.
inline Partition orbits(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  std::vector<std::size_t> block(n, n);
  Partition out;
  for (Element start = 0; start < n; ++start) {
    if (block[start] != n) continue;
    const std::size_t id = out.size();
    out.emplace_back();
    std::deque<Element> queue{start};
    block[start] = id;
    while (!queue.empty()) {
      const Element y = queue.front();
      queue.pop_front();
      out[id].push_back(y);
      for (Element x = 0; x < n; ++x) {
        const Element z = q(y, x);
        if (block[z] == n) {
          block[z] = id;
          queue.push_back(z);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

inline bool is_connected(const FiniteQuandle& q) {
  return orbits(q).size() == 1;
}

/// A small set of elements whose closure under * is all of q, chosen
/// greedily by smallest missing element. Anything commuting with rho at
/// these elements commutes with rho everywhere, since
/// rho(x * y) = rho(y) rho(x) rho(y)^-1.
inline std::vector<Element> quandle_generating_set(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  std::vector<bool> in(n, false);
  std::vector<Element> members;
  std::vector<Element> gens;
  auto close = [&] {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (Element z : {q(members[i], members[j]), q(members[j], members[i])}) {
          if (!in[z]) {
            in[z] = true;
            members.push_back(z);
          }
        }
      }
    }
  };
  for (Element x = 0; x < n; ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    in[x] = true;
    members.push_back(x);
    close();
  }
  return gens;
}

}  // namespace qrep
