#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "sposet/error.hpp"
#include "sposet/poset.hpp"

namespace sposet {
namespace {

using Colour = std::size_t;

// Longest chain ending at each element.  Sorting by |down| gives a linear
// extension because w < v implies down(w) is a proper subset of down(v).
std::vector<std::size_t> topological_order(const Poset& p) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> down_size(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) down_size[i] = kernels::popcount(p.down().row(i));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return down_size[a] < down_size[b]; });
  return order;
}

std::vector<std::size_t> heights(const Poset& p, const std::vector<std::size_t>& topo) {
  std::vector<std::size_t> h(p.size(), 0);
  for (std::size_t v : topo) {
    for (std::size_t l : p.lower_covers(v)) h[v] = std::max(h[v], h[l] + 1);
  }
  return h;
}

struct Refined {
  std::vector<Colour> p;
  std::vector<Colour> q;
  bool compatible = true;
};

std::vector<std::size_t> histogram(const std::vector<Colour>& colours, std::size_t count) {
  std::vector<std::size_t> h(count, 0);
  for (Colour c : colours) ++h[c];
  return h;
}

// Joint colour refinement of both posets with a shared colour table.
Refined refine(const Poset& p, const Poset& q) {
  using Signature = std::vector<std::size_t>;
  auto initial = [](const Poset& x) {
    const auto topo = topological_order(x);
    const auto h = heights(x, topo);
    std::vector<Signature> sig(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      sig[i] = {h[i], x.lower_covers(i).size(), x.upper_covers(i).size(),
                kernels::popcount(x.down().row(i)), kernels::popcount(x.up().row(i)),
                x.has_unique_minimum() ? x.rank(i) : 0};
    }
    return sig;
  };

  std::vector<Signature> sp = initial(p);
  std::vector<Signature> sq = initial(q);
  Refined r;
  std::size_t previous = 0;
  while (true) {
    std::map<Signature, Colour> table;
    for (const auto& s : sp) table.emplace(s, 0);
    for (const auto& s : sq) table.emplace(s, 0);
    Colour next = 0;
    for (auto& [sig, c] : table) c = next++;
    r.p.resize(p.size());
    r.q.resize(q.size());
    for (std::size_t i = 0; i < p.size(); ++i) r.p[i] = table[sp[i]];
    for (std::size_t i = 0; i < q.size(); ++i) r.q[i] = table[sq[i]];
    if (histogram(r.p, next) != histogram(r.q, next)) {
      r.compatible = false;
      return r;
    }
    if (next == previous) return r;
    previous = next;

    auto step = [](const Poset& x, const std::vector<Colour>& colours) {
      std::vector<Signature> sig(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        Signature lower, upper;
        for (std::size_t l : x.lower_covers(i)) lower.push_back(colours[l]);
        for (std::size_t u : x.upper_covers(i)) upper.push_back(colours[u]);
        std::sort(lower.begin(), lower.end());
        std::sort(upper.begin(), upper.end());
        sig[i] = {colours[i], lower.size()};
        sig[i].insert(sig[i].end(), lower.begin(), lower.end());
        sig[i].insert(sig[i].end(), upper.begin(), upper.end());
      }
      return sig;
    };
    sp = step(p, r.p);
    sq = step(q, r.q);
  }
}

class Matcher {
 public:
  Matcher(const Poset& p, const Poset& q, Refined colours)
      : p_(p), q_(q), colours_(std::move(colours)), order_(topological_order(p)),
        image_(p.size(), kUnassigned), used_(q.size(), false) {
    for (std::size_t w = 0; w < q.size(); ++w) by_colour_[colours_.q[w]].push_back(w);
  }

  bool run() { return extend(0); }
  std::vector<std::size_t> image() const { return image_; }

 private:
  static constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

  bool fits(std::size_t v, std::size_t w) const {
    if (used_[w] || colours_.q[w] != colours_.p[v]) return false;
    const auto& qlower = q_.lower_covers(w);
    for (std::size_t l : p_.lower_covers(v)) {
      if (!std::binary_search(qlower.begin(), qlower.end(), image_[l])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t v = order_[depth];
    // Lower covers are already placed; candidates are upper covers of the
    // image of one of them, or any same-coloured element for minimal v.
    const auto& lower = p_.lower_covers(v);
    const std::vector<std::size_t>& candidates =
        lower.empty() ? by_colour_.at(colours_.p[v]) : q_.upper_covers(image_[lower.front()]);
    for (std::size_t w : candidates) {
      if (!fits(v, w)) continue;
      image_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
      image_[v] = kUnassigned;
    }
    return false;
  }

  const Poset& p_;
  const Poset& q_;
  Refined colours_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  std::map<Colour, std::vector<std::size_t>> by_colour_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& p, const Poset& q) {
  if (p.size() > kMaxIsomorphismSize || q.size() > kMaxIsomorphismSize) {
    throw SizeLimitError("isomorphism search is limited to " +
                         std::to_string(kMaxIsomorphismSize) + " elements");
  }
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return std::nullopt;
  Refined colours = refine(p, q);
  if (!colours.compatible) return std::nullopt;
  Matcher matcher(p, q, std::move(colours));
  if (!matcher.run()) return std::nullopt;
  return matcher.image();
}

bool are_isomorphic(const Poset& p, const Poset& q) {
  return find_isomorphism(p, q).has_value();
}

}  // namespace sposet
