#pragma once

#include <stdexcept>

namespace vvl {

/// A value in (0, +inf]. Infinity is a state of its own, never a large
/// float standing in for one.
class ExtendedReal {
 public:
  static ExtendedReal finite(double value) { return ExtendedReal(value, false); }
  static ExtendedReal infinity() { return ExtendedReal(0.0, true); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Throws std::logic_error when infinite.
  double value() const {
    if (infinite_) throw std::logic_error("ExtendedReal: value() on infinity");
    return value_;
  }

  /// IEEE rendering, for output only.
  double to_double() const;

  bool operator==(const ExtendedReal&) const = default;

 private:
  ExtendedReal(double value, bool infinite) : value_(value), infinite_(infinite) {}
  double value_;
  bool infinite_;
};

}  // namespace vvl
