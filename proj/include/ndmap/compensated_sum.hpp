#pragma once

#include <cmath>

namespace ndmap {

/// Neumaier variant of Kahan summation. The compensation also covers the case
/// where the incoming term is larger in magnitude than the running sum.
template <typename T>
class CompensatedSum {
 public:
  CompensatedSum& operator+=(T value) {
    const T t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  T value() const { return sum_ + compensation_; }

 private:
  T sum_{0};
  T compensation_{0};
};

}  // namespace ndmap
