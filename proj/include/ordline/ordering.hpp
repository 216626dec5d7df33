#pragma once

#include <compare>

namespace ordline {

enum class Ordering { lt, eq, gt };

inline Ordering flip(Ordering o) {
  switch (o) {
    case Ordering::lt: return Ordering::gt;
    case Ordering::gt: return Ordering::lt;
    default: return Ordering::eq;
  }
}

inline const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::lt: return "LT";
    case Ordering::gt: return "GT";
    default: return "EQ";
  }
}

template <typename T>
Ordering ordering_of(const T& a, const T& b) {
  if (a < b) return Ordering::lt;
  if (b < a) return Ordering::gt;
  return Ordering::eq;
}

inline Ordering ordering_from(std::strong_ordering c) {
  if (c < 0) return Ordering::lt;
  if (c > 0) return Ordering::gt;
  return Ordering::eq;
}

}  // namespace ordline
