// Copyright 2026 The colorz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COLORZ_LOG_SUM_H
#define COLORZ_LOG_SUM_H

#include <cmath>
#include <limits>

namespace colorz {

/// Sum of exp(term) over many terms, kept as exp(shift) * (sum + comp) with
/// a running max shift and Neumaier compensation.
class LogSumExp {
   public:
    void add(double log_term) {
        if (log_term == -std::numeric_limits<double>::infinity()) {
            return;
        }
        if (log_term > shift_) {
            double scale = std::exp(shift_ - log_term);
            sum_ *= scale;
            comp_ *= scale;
            shift_ = log_term;
        }
        double v = std::exp(log_term - shift_);
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }

    /// Natural log of the sum; -inf when nothing was added.
    double log() const {
        if (sum_ + comp_ <= 0.0) {
            return -std::numeric_limits<double>::infinity();
        }
        return shift_ + std::log(sum_ + comp_);
    }

   private:
    double shift_ = -std::numeric_limits<double>::infinity();
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// log(exp(a) + exp(b)).
inline double log_add(double a, double b) {
    if (a < b) {
        std::swap(a, b);
    }
    if (b == -std::numeric_limits<double>::infinity()) {
        return a;
    }
    return a + std::log1p(std::exp(b - a));
}

}  // namespace colorz

#endif
