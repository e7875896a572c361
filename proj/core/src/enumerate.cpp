#include "mci/enumerate.hpp"

#include <algorithm>
#include <deque>

namespace mci {

void check_size_guard(const Structure& s, std::size_t max_size, const char* what) {
  if (s.size() > max_size)
    throw SizeGuardError(std::string(what) + ": carrier of " + s.name + " has " +
                         std::to_string(s.size()) + " elements, guard is " + std::to_string(max_size));
}

namespace {

// Subgroup generated by `gens`, as a membership mask.
std::vector<bool> span_of(const Structure& s, const std::vector<Elem>& gens) {
  std::vector<bool> in(s.size(), false);
  std::deque<Elem> queue{s.zero};
  in[s.zero] = true;
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (Elem g : gens) {
      const Elem y = s.plus(x, g);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

class Backtracker {
 public:
  Backtracker(const StructurePtr& a, const StructurePtr& b,
              const std::function<bool(const Morphism&)>& visit)
      : a_(a), b_(b), visit_(visit), gens_(generating_set(*a)), images_(gens_.size()) {
    for (Elem y = 0; y < b->size(); ++y) order_b_.push_back(element_order(*b, y));
  }

  void run() { descend(0); }

 private:
  static constexpr Elem kUnset = ~Elem{0};

  // Extends the partial assignment over <g_0..g_k> using f(x + g) = f(x) + f(g).
  bool extend(std::size_t k, std::vector<Elem>& map) const {
    const Structure& a = *a_;
    const Structure& b = *b_;
    map.assign(a.size(), kUnset);
    map[a.zero] = b.zero;
    std::deque<Elem> queue{a.zero};
    while (!queue.empty()) {
      const Elem x = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j <= k; ++j) {
        const Elem y = a.plus(x, gens_[j]);
        const Elem v = b.plus(map[x], images_[j]);
        if (map[y] == kUnset) {
          map[y] = v;
          queue.push_back(y);
        } else if (map[y] != v) {
          return false;
        }
      }
    }
    return true;
  }

  bool descend(std::size_t k) {
    if (k == gens_.size()) {
      std::vector<Elem> map(a_->size(), b_->zero);
      if (!gens_.empty() && !extend(k - 1, map)) return true;
      Morphism f{a_, b_, std::move(map)};
      if (!is_morphism(f)) return true;
      return visit_(f);
    }
    const std::size_t order = element_order(*a_, gens_[k]);
    std::vector<Elem> scratch;
    for (Elem y = 0; y < b_->size(); ++y) {
      if (order_b_[y] == 0 || order % order_b_[y] != 0) continue;
      images_[k] = y;
      if (!extend(k, scratch)) continue;
      if (!descend(k + 1)) return false;
    }
    return true;
  }

  const StructurePtr& a_;
  const StructurePtr& b_;
  const std::function<bool(const Morphism&)>& visit_;
  std::vector<Elem> gens_;
  std::vector<Elem> images_;
  std::vector<std::size_t> order_b_;
};

std::vector<std::size_t> order_profile(const Structure& s) {
  std::vector<std::size_t> orders;
  for (Elem x = 0; x < s.size(); ++x) orders.push_back(element_order(s, x));
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace

std::vector<Elem> generating_set(const Structure& s) {
  std::vector<Elem> gens;
  std::vector<bool> in = span_of(s, gens);
  for (Elem x = 0; x < s.size(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    in = span_of(s, gens);
  }
  return gens;
}

void for_each_morphism(const StructurePtr& a, const StructurePtr& b,
                       const std::function<bool(const Morphism&)>& visit, std::size_t max_size) {
  if (!same_profile(*a, *b))
    throw StructuralError("morphisms " + a->name + " -> " + b->name + ": profiles differ");
  check_size_guard(*a, max_size, "morphism enumeration");
  Backtracker(a, b, visit).run();
}

std::vector<Morphism> enumerate_morphisms(const StructurePtr& a, const StructurePtr& b,
                                          std::size_t max_size) {
  std::vector<Morphism> out;
  for_each_morphism(
      a, b,
      [&](const Morphism& f) {
        out.push_back(f);
        return true;
      },
      max_size);
  std::sort(out.begin(), out.end(), [](const Morphism& x, const Morphism& y) { return x.map < y.map; });
  return out;
}

std::optional<Morphism> find_isomorphism(const StructurePtr& a, const StructurePtr& b,
                                         std::size_t max_size) {
  if (!same_profile(*a, *b))
    throw StructuralError("isomorphism " + a->name + " -> " + b->name + ": profiles differ");
  if (a->size() != b->size()) return std::nullopt;
  check_size_guard(*a, max_size, "isomorphism search");
  if (order_profile(*a) != order_profile(*b)) return std::nullopt;
  std::optional<Morphism> found;
  for_each_morphism(
      a, b,
      [&](const Morphism& f) {
        if (!is_bijective(f)) return true;
        auto inv = inverse(f);
        if (!inv || !is_morphism(*inv)) return true;
        found = f;
        return false;
      },
      max_size);
  return found;
}

}  // namespace mci
