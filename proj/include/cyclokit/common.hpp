#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclokit {

// Classical constants as fixed 30-digit literals (rounded to double).
inline constexpr double kEulerGamma = 0.577215664901532860606512090082;
inline constexpr double kLogTwoPi   = 1.837877066409345483560659472811;
inline constexpr double kPi         = 3.141592653589793238462643383280;

/// Thrown when an input exceeds the configured memory budget.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Neumaier-compensated accumulator. Every prime sum in the library runs
/// through one of these in a fixed ascending order, so results are
/// reproducible to the last bit.
class KahanSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

namespace detail {

// p^f as a double, exact whenever p^f fits in 64 bits.
// Returns +inf as an overflow sentinel only in the exp branch guard below.
inline double pow_u64(std::uint64_t p, std::uint64_t f) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < f; ++i) r *= p;
    return static_cast<double>(r);
}

// 1 / p^f. Terms with f*log p > 60 are below 1e-26 and are dropped (they
// are covered by whichever tail bound accompanies the sum).
inline double inv_pow(std::uint64_t p, std::uint64_t f) {
    const double t = static_cast<double>(f) * std::log(static_cast<double>(p));
    if (t > 60.0) return 0.0;
    if (t < 42.0) return 1.0 / pow_u64(p, f);  // p^f < 2^62, exact
    return std::exp(-t);
}

// log p / (p^f - 1), the ubiquitous prime-power weight.
inline double log_over_pow_m1(std::uint64_t p, std::uint64_t f, double log_p) {
    const double t = static_cast<double>(f) * log_p;
    if (t > 60.0) return 0.0;
    if (t < 42.0) return log_p / (pow_u64(p, f) - 1.0);
    const double inv = std::exp(-t);
    return log_p * inv / (1.0 - inv);
}

}  // namespace detail

}  // namespace cyclokit
