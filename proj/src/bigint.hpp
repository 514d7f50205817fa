#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace specforge {

// Signed arbitrary-precision integer. Covers exactly what the object
// language needs: reading, printing, comparison and binary addition.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);

  // Accepts [+-]?[0-9]+ with no leading/trailing junk.
  static BigInt parse(const std::string& text);
  static bool looks_like_int(const std::string& text);

  std::string str() const;

  BigInt operator+(const BigInt& rhs) const;
  BigInt operator-() const;
  bool operator==(const BigInt& rhs) const;
  bool operator<(const BigInt& rhs) const;

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }

private:
  // Base 1e9 magnitude, little-endian, no trailing zero limbs; empty = 0.
  std::vector<uint32_t> limbs_;
  bool negative_ = false;

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a,
                     const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
};

}  // namespace specforge
