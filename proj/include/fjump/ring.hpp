#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fjump {

/// Element of F_p, always reduced.
struct FpElement {
  std::uint32_t value = 0;
  friend bool operator==(FpElement, FpElement) = default;
};

/// The ambient ring F_p[x_1..x_n]: a prime 2 <= p < 2^16 and 1..8 variable names.
class RingContext {
 public:
  static std::shared_ptr<const RingContext> make(std::uint32_t p, std::vector<std::string> vars);

  std::uint32_t p() const { return p_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }

  FpElement element(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return FpElement{static_cast<std::uint32_t>(r)};
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a ? p_ - a : 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;

  bool same_as(const RingContext& other) const {
    return this == &other || (p_ == other.p_ && vars_ == other.vars_);
  }

 private:
  RingContext(std::uint32_t p, std::vector<std::string> vars) : p_(p), vars_(std::move(vars)) {}

  std::uint32_t p_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const RingContext>;

bool is_prime(std::uint64_t n);

}  // namespace fjump
