#pragma once

#include <stdexcept>
#include <utility>

namespace flowrisk {

// Recoverable computation outcomes that are data, not caller bugs.
// `divergent` marks the infinite-value regime (exponential moment of the
// jump measure does not exist); `no_convergence` marks a quadrature that
// hit its subdivision cap before reaching tolerance.
enum class Fail {
  divergent,
  no_convergence,
};

inline const char* to_string(Fail f) {
  switch (f) {
    case Fail::divergent: return "divergent";
    case Fail::no_convergence: return "no_convergence";
  }
  return "unknown";
}

// Minimal value-or-error carrier. Precondition violations still throw
// (std::domain_error / std::invalid_argument); Fallible is reserved for
// outcomes a caller is expected to branch on.
template <typename T>
class Fallible {
 public:
  Fallible(T value) : ok_(true), value_(std::move(value)), fail_(Fail::divergent) {}
  Fallible(Fail f) : ok_(false), value_{}, fail_(f) {}

  bool ok() const { return ok_; }
  bool divergent() const { return !ok_ && fail_ == Fail::divergent; }
  explicit operator bool() const { return ok_; }

  const T& value() const {
    if (!ok_) throw std::logic_error("Fallible::value() on failed result");
    return value_;
  }
  T& value() {
    if (!ok_) throw std::logic_error("Fallible::value() on failed result");
    return value_;
  }
  Fail error() const {
    if (ok_) throw std::logic_error("Fallible::error() on ok result");
    return fail_;
  }

 private:
  bool ok_;
  T value_;
  Fail fail_;
};

}  // namespace flowrisk
