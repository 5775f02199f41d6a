#include "twinsieve/int128.hpp"

#include <ostream>

namespace twinsieve {

Int operator/(const Int& a, const Int& b) {
  if (b.v_ == 0) throw DomainError("division by zero");
  if (a.v_ == Int::kMin && b.v_ == -1)
    throw OverflowError("128-bit overflow in division");
  return Int::from_raw(a.v_ / b.v_);
}

Int operator%(const Int& a, const Int& b) {
  if (b.v_ == 0) throw DomainError("remainder by zero");
  if (a.v_ == Int::kMin && b.v_ == -1) return 0;
  return Int::from_raw(a.v_ % b.v_);
}

Int Int::parse(std::string_view text) {
  bool neg = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i == text.size())
    throw std::invalid_argument("not an integer: \"" + std::string(text) + "\"");

  // Accumulate the magnitude unsigned so the most negative value still parses.
  unsigned __int128 limit = neg ? (kUMax >> 1) + 1 : (kUMax >> 1);
  unsigned __int128 mag = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9')
      throw std::invalid_argument("not an integer: \"" + std::string(text) + "\"");
    unsigned d = static_cast<unsigned>(c - '0');
    if (mag > (limit - d) / 10)
      throw OverflowError("integer literal needs more than 128 bits");
    mag = mag * 10 + d;
  }
  return from_raw(neg ? -static_cast<__int128>(mag) : static_cast<__int128>(mag));
}

std::string Int::str() const {
  if (v_ == 0) return "0";
  unsigned __int128 mag =
      v_ < 0 ? -static_cast<unsigned __int128>(v_) : static_cast<unsigned __int128>(v_);
  char buf[48];
  int pos = 48;
  while (mag > 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<unsigned>(mag % 10));
    mag /= 10;
  }
  std::string out;
  if (v_ < 0) out.push_back('-');
  out.append(buf + pos, buf + 48);
  return out;
}

std::uint64_t Int::to_u64() const {
  if (v_ < 0 || v_ > static_cast<__int128>(UINT64_MAX))
    throw OverflowError("value does not fit in 64 unsigned bits");
  return static_cast<std::uint64_t>(v_);
}

std::int64_t Int::to_i64() const {
  if (v_ < INT64_MIN || v_ > INT64_MAX)
    throw OverflowError("value does not fit in 64 signed bits");
  return static_cast<std::int64_t>(v_);
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }

}  // namespace twinsieve
