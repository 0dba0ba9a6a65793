#pragma once

#include <cmath>
#include <complex>
#include <functional>

namespace primelab {

/// Neumaier-compensated running sum. Used wherever 10^6+ logarithms are accumulated.
class CompensatedSum {
public:
    CompensatedSum() = default;
    explicit CompensatedSum(double initial) : sum_(initial) {}

    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v))
            carry_ += (sum_ - t) + v;
        else
            carry_ += (v - t) + sum_;
        sum_ = t;
    }
    CompensatedSum& operator+=(double v) noexcept {
        add(v);
        return *this;
    }
    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

class ComplexCompensatedSum {
public:
    void add(std::complex<double> v) noexcept {
        re_.add(v.real());
        im_.add(v.imag());
    }
    ComplexCompensatedSum& operator+=(std::complex<double> v) noexcept {
        add(v);
        return *this;
    }
    std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

struct QuadratureResult {
    double value;
    double error_estimate;
};

/// Adaptive 15-point Gauss-Kronrod on [a, b] with relative tolerance `tol`.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol = 1e-12, unsigned max_depth = 15);

}  // namespace primelab
