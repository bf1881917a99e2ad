#ifndef SPNI_POINT_HPP
#define SPNI_POINT_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "spni/errors.hpp"

namespace spni {

/// A natural number or the symbolic value infinity.
///
/// Infinity compares greater than every finite value and equal to itself.
/// It is a separate state, not a reserved integer, so no finite value is
/// ever mistaken for it.
class ExtNat {
public:
  using value_type = std::uint64_t;

  constexpr ExtNat() noexcept = default;
  constexpr ExtNat(value_type v) noexcept : value_(v) {} // NOLINT(implicit)

  static constexpr ExtNat infinity() noexcept {
    ExtNat r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }

  /// Finite value. Throws std::logic_error on infinity.
  constexpr value_type value() const {
    if (infinite_)
      throw std::logic_error("ExtNat::value() called on infinity");
    return value_;
  }

  friend constexpr bool operator==(ExtNat a, ExtNat b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) noexcept {
    if (a.infinite_ || b.infinite_)
      return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  /// Sum with infinity absorbing. Finite overflow throws OverflowError.
  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.infinite_ || b.infinite_)
      return infinity();
    if (a.value_ > std::numeric_limits<value_type>::max() - b.value_)
      throw OverflowError("path length overflow: " + std::to_string(a.value_) +
                          " + " + std::to_string(b.value_));
    return ExtNat(a.value_ + b.value_);
  }

  std::string to_string() const {
    return infinite_ ? std::string("inf") : std::to_string(value_);
  }

  friend std::ostream& operator<<(std::ostream& os, ExtNat v) {
    return os << v.to_string();
  }

private:
  value_type value_ = 0;
  bool infinite_ = false;
};

inline constexpr ExtNat kInfinity = ExtNat::infinity();

/// Pair of shortest path lengths, one per player.
struct Point {
  ExtNat f1;
  ExtNat f2;

  static constexpr Point infinite() noexcept { return {kInfinity, kInfinity}; }

  constexpr bool is_infinite() const noexcept {
    return f1.is_infinite() && f2.is_infinite();
  }

  // Lexicographic (f1, f2); this is the storage order, not the Pareto order.
  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.f1 << ',' << p.f2 << ')';
  }
};

/// Pareto order: a >= b componentwise and a != b.
constexpr bool dominates(const Point& a, const Point& b) noexcept {
  return a.f1 >= b.f1 && a.f2 >= b.f2 && a != b;
}

/// a >= b componentwise (equality allowed).
constexpr bool weakly_dominates(const Point& a, const Point& b) noexcept {
  return a.f1 >= b.f1 && a.f2 >= b.f2;
}

constexpr Point point_add(const Point& a, const Point& b) {
  return {a.f1 + b.f1, a.f2 + b.f2};
}

constexpr Point point_min(const Point& a, const Point& b) noexcept {
  return {a.f1 < b.f1 ? a.f1 : b.f1, a.f2 < b.f2 ? a.f2 : b.f2};
}

} // namespace spni

#endif // SPNI_POINT_HPP
