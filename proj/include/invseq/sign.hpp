#pragma once

#include <cstdint>
#include <stdexcept>

namespace invseq {

/// A value in {+1, -1}; the element type of the i, t and r sequences.
class Sign {
 public:
  constexpr Sign() = default;

  static constexpr Sign plus() { return Sign(+1); }
  static constexpr Sign minus() { return Sign(-1); }

  /// (-1)^count.
  static constexpr Sign from_parity(std::uint64_t count) {
    return (count & 1u) ? minus() : plus();
  }

  /// Accepts exactly +1 or -1.
  static constexpr Sign from_int(std::int64_t v) {
    if (v != 1 && v != -1) throw std::logic_error("Sign must be +1 or -1");
    return Sign(static_cast<std::int8_t>(v));
  }

  constexpr int value() const { return v_; }

  constexpr Sign operator*(Sign o) const {
    return Sign(static_cast<std::int8_t>(v_ * o.v_));
  }
  constexpr Sign operator-() const { return Sign(static_cast<std::int8_t>(-v_)); }

  friend constexpr bool operator==(Sign, Sign) = default;

 private:
  explicit constexpr Sign(std::int8_t v) : v_(v) {}
  std::int8_t v_ = +1;
};

inline const char* to_cstr(Sign s) { return s.value() > 0 ? "+1" : "-1"; }

}  // namespace invseq
