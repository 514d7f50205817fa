#include "bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace specforge {

namespace {
constexpr uint32_t kBase = 1000000000u;
}

BigInt::BigInt(long long v) {
  negative_ = v < 0;
  // Avoid overflow on LLONG_MIN by peeling limbs from the signed value.
  unsigned long long mag =
      v < 0 ? (unsigned long long)(-(v + 1)) + 1ull : (unsigned long long)v;
  while (mag > 0) {
    limbs_.push_back(static_cast<uint32_t>(mag % kBase));
    mag /= kBase;
  }
}

bool BigInt::looks_like_int(const std::string& text) {
  size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) i++;
  if (i >= text.size()) return false;
  for (; i < text.size(); i++)
    if (text[i] < '0' || text[i] > '9') return false;
  return true;
}

BigInt BigInt::parse(const std::string& text) {
  if (!looks_like_int(text))
    throw std::invalid_argument("not an integer literal: " + text);
  BigInt r;
  size_t start = 0;
  if (text[0] == '+' || text[0] == '-') {
    r.negative_ = text[0] == '-';
    start = 1;
  }
  // Consume decimal digits in 9-digit groups from the right; that yields
  // the little-endian limb order directly.
  size_t end = text.size();
  while (end > start) {
    size_t from = end >= start + 9 ? end - 9 : start;
    r.limbs_.push_back(
        static_cast<uint32_t>(std::stoul(text.substr(from, end - from))));
    end = from;
  }
  r.trim();
  return r;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

std::string BigInt::str() const {
  if (limbs_.empty()) return "0";
  std::string out = negative_ ? "-" : "";
  out += std::to_string(limbs_.back());
  for (size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a,
                    const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r;
  uint32_t carry = 0;
  for (size_t i = 0; i < a.size() || i < b.size() || carry; i++) {
    uint64_t sum = carry;
    if (i < a.size()) sum += a[i];
    if (i < b.size()) sum += b[i];
    r.push_back(static_cast<uint32_t>(sum % kBase));
    carry = static_cast<uint32_t>(sum / kBase);
  }
  return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r;
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); i++) {
    int64_t d = static_cast<int64_t>(a[i]) - borrow -
                (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
    if (d < 0) {
      d += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.push_back(static_cast<uint32_t>(d));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
  BigInt r;
  if (negative_ == rhs.negative_) {
    r.limbs_ = add_mag(limbs_, rhs.limbs_);
    r.negative_ = negative_;
  } else {
    int c = cmp_mag(limbs_, rhs.limbs_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.limbs_ = sub_mag(limbs_, rhs.limbs_);
      r.negative_ = negative_;
    } else {
      r.limbs_ = sub_mag(rhs.limbs_, limbs_);
      r.negative_ = rhs.negative_;
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.limbs_.empty()) r.negative_ = !r.negative_;
  return r;
}

bool BigInt::operator==(const BigInt& rhs) const {
  return negative_ == rhs.negative_ && limbs_ == rhs.limbs_;
}

bool BigInt::operator<(const BigInt& rhs) const {
  if (negative_ != rhs.negative_) return negative_;
  int c = cmp_mag(limbs_, rhs.limbs_);
  return negative_ ? c > 0 : c < 0;
}

}  // namespace specforge
