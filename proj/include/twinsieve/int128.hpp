#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "twinsieve/errors.hpp"

namespace twinsieve {

// Exact signed 128-bit integer with overflow-checked arithmetic.
//
// 128 bits holds every primorial through the 25th prime (97); the 26th
// overflows, and every operation here throws OverflowError rather than wrap.
// Division and remainder truncate toward zero, like the built-in types; all
// counting formulas in this library only ever divide nonnegative values, so
// truncation and floor coincide where it matters.
class Int {
 public:
  constexpr Int() noexcept = default;
  constexpr Int(int v) noexcept : v_(v) {}
  constexpr Int(long v) noexcept : v_(v) {}
  constexpr Int(long long v) noexcept : v_(v) {}
  constexpr Int(unsigned v) noexcept : v_(v) {}
  constexpr Int(unsigned long v) noexcept : v_(v) {}
  constexpr Int(unsigned long long v) noexcept : v_(v) {}

  static constexpr Int from_raw(__int128 v) noexcept {
    Int r;
    r.v_ = v;
    return r;
  }
  static constexpr Int max() noexcept { return from_raw(kMax); }
  static constexpr Int min() noexcept { return from_raw(kMin); }

  // Decimal text, optional leading '-'.  Throws std::invalid_argument on
  // malformed input and OverflowError when the value needs more than 128 bits.
  static Int parse(std::string_view text);

  constexpr __int128 raw() const noexcept { return v_; }
  std::string str() const;
  std::uint64_t to_u64() const;  // throws OverflowError outside [0, 2^64)
  std::int64_t to_i64() const;

  friend Int operator+(const Int& a, const Int& b) {
    __int128 r;
    if (__builtin_add_overflow(a.v_, b.v_, &r))
      throw OverflowError("128-bit overflow in addition");
    return from_raw(r);
  }
  friend Int operator-(const Int& a, const Int& b) {
    __int128 r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r))
      throw OverflowError("128-bit overflow in subtraction");
    return from_raw(r);
  }
  friend Int operator*(const Int& a, const Int& b) {
    __int128 r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r))
      throw OverflowError("128-bit overflow in multiplication");
    return from_raw(r);
  }
  friend Int operator/(const Int& a, const Int& b);
  friend Int operator%(const Int& a, const Int& b);

  Int operator-() const {
    if (v_ == kMin) throw OverflowError("128-bit overflow in negation");
    return from_raw(-v_);
  }
  Int& operator+=(const Int& b) { return *this = *this + b; }
  Int& operator-=(const Int& b) { return *this = *this - b; }
  Int& operator*=(const Int& b) { return *this = *this * b; }
  Int& operator/=(const Int& b) { return *this = *this / b; }
  Int& operator%=(const Int& b) { return *this = *this % b; }
  Int& operator++() { return *this += 1; }

  friend constexpr bool operator==(const Int& a, const Int& b) noexcept { return a.v_ == b.v_; }
  friend constexpr bool operator!=(const Int& a, const Int& b) noexcept { return a.v_ != b.v_; }
  friend constexpr bool operator<(const Int& a, const Int& b) noexcept { return a.v_ < b.v_; }
  friend constexpr bool operator<=(const Int& a, const Int& b) noexcept { return a.v_ <= b.v_; }
  friend constexpr bool operator>(const Int& a, const Int& b) noexcept { return a.v_ > b.v_; }
  friend constexpr bool operator>=(const Int& a, const Int& b) noexcept { return a.v_ >= b.v_; }

 private:
  static constexpr unsigned __int128 kUMax = ~static_cast<unsigned __int128>(0);
  static constexpr __int128 kMax = static_cast<__int128>(kUMax >> 1);
  static constexpr __int128 kMin = -kMax - 1;

  __int128 v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Int& v);

}  // namespace twinsieve

template <>
struct std::hash<twinsieve::Int> {
  std::size_t operator()(const twinsieve::Int& v) const noexcept {
    auto u = static_cast<unsigned __int128>(v.raw());
    auto lo = static_cast<std::uint64_t>(u);
    auto hi = static_cast<std::uint64_t>(u >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ull));
  }
};
