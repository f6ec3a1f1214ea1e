#pragma once

// Finite multisets with the usual bag algebra: max-union, min-intersection,
// sum, monus difference, scaling, image under a function, domain restriction.
// Counts are signed 64-bit and any overflow raises std::overflow_error.

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace procnet {

using count_t = std::int64_t;

namespace detail {

inline count_t checked_add(count_t a, count_t b) {
  count_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("multiset count overflow in addition");
  return r;
}

inline count_t checked_mul(count_t a, count_t b) {
  count_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("multiset count overflow in scaling");
  return r;
}

}  // namespace detail

template <typename X>
class multiset {
 public:
  multiset() = default;

  multiset(std::initializer_list<std::pair<X, count_t>> init) {
    for (const auto& [x, k] : init) add(x, k);
  }

  // Adds k copies of x; k may be zero. Negative k is rejected.
  void add(const X& x, count_t k = 1) {
    if (k < 0) throw std::domain_error("multiset counts are nonnegative");
    if (k == 0) return;
    auto it = entries_.find(x);
    if (it == entries_.end())
      entries_.emplace(x, k);
    else
      it->second = detail::checked_add(it->second, k);
  }

  count_t count(const X& x) const {
    auto it = entries_.find(x);
    return it == entries_.end() ? 0 : it->second;
  }

  bool contains(const X& x) const { return entries_.count(x) != 0; }

  bool empty() const { return entries_.empty(); }

  // |A|: total number of copies.
  count_t size() const {
    count_t total = 0;
    for (const auto& [x, k] : entries_) total = detail::checked_add(total, k);
    return total;
  }

  std::size_t support_size() const { return entries_.size(); }

  const std::map<X, count_t>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool operator==(const multiset&) const = default;
  auto operator<=>(const multiset&) const = default;

 private:
  std::map<X, count_t> entries_;  // only strictly positive counts stored
};

enum class combine_kind { union_max, intersection_min, sum };

template <typename X>
multiset<X> combine(const multiset<X>& a, const multiset<X>& b, combine_kind kind) {
  multiset<X> out;
  switch (kind) {
    case combine_kind::union_max:
      for (const auto& [x, k] : a) out.add(x, std::max(k, b.count(x)));
      for (const auto& [x, k] : b)
        if (!a.contains(x)) out.add(x, k);
      break;
    case combine_kind::intersection_min:
      for (const auto& [x, k] : a) out.add(x, std::min(k, b.count(x)));
      break;
    case combine_kind::sum:
      for (const auto& [x, k] : a) out.add(x, k);
      for (const auto& [x, k] : b) out.add(x, k);
      break;
  }
  return out;
}

template <typename X>
multiset<X> union_of(const multiset<X>& a, const multiset<X>& b) {
  return combine(a, b, combine_kind::union_max);
}

template <typename X>
multiset<X> intersection_of(const multiset<X>& a, const multiset<X>& b) {
  return combine(a, b, combine_kind::intersection_min);
}

template <typename X>
multiset<X> sum_of(const multiset<X>& a, const multiset<X>& b) {
  return combine(a, b, combine_kind::sum);
}

// Monus: counts truncate at zero instead of going negative.
template <typename X>
multiset<X> difference(const multiset<X>& a, const multiset<X>& b) {
  multiset<X> out;
  for (const auto& [x, k] : a)
    if (k > b.count(x)) out.add(x, k - b.count(x));
  return out;
}

template <typename X>
multiset<X> scale(count_t k, const multiset<X>& a) {
  if (k < 0) throw std::domain_error("multiset scale factor is nonnegative");
  multiset<X> out;
  for (const auto& [x, n] : a) out.add(x, detail::checked_mul(k, n));
  return out;
}

// Pointwise order: a(x) <= b(x) everywhere.
template <typename X>
bool leq(const multiset<X>& a, const multiset<X>& b) {
  for (const auto& [x, k] : a)
    if (k > b.count(x)) return false;
  return true;
}

// Image under f: out(y) sums the counts of all x with f(x) = y.
template <typename Y, typename X, typename F>
multiset<Y> image(F&& f, const multiset<X>& a) {
  multiset<Y> out;
  for (const auto& [x, k] : a) out.add(f(x), k);
  return out;
}

// A restricted to dom, keeping multiplicities of the surviving elements.
template <typename X>
multiset<X> restrict_to(const multiset<X>& a, const std::set<X>& dom) {
  multiset<X> out;
  for (const auto& [x, k] : a)
    if (dom.count(x)) out.add(x, k);
  return out;
}

// Renders "{x:2, y:1}" in key order ("{}" when empty).
template <typename X>
std::string to_string(const multiset<X>& a) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [x, k] : a) {
    if (!first) os << ", ";
    first = false;
    os << x << ':' << k;
  }
  os << '}';
  return os.str();
}

}  // namespace procnet
