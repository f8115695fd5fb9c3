#pragma once

#include "prufer/rational.hpp"

#include <string>

namespace prufer {

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt d), d a
/// square-free positive integer fixed per presentation. b == 0 encodes a
/// plain rational. The total order is decided exactly with integer
/// arithmetic (no floating point anywhere).
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    explicit QuadExt(Rat a) : a_(std::move(a)), b_(0), d_(0) {}
    QuadExt(Rat a, Rat b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (b_ == 0) d_ = 0;
    }

    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    int radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    /// -1, 0, +1 of a + b*sqrt(d).
    int sign() const;

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const { return *this + (-o); }

    bool operator==(const QuadExt& o) const { return (*this - o).sign() == 0; }
    bool operator!=(const QuadExt& o) const { return !(*this == o); }
    bool operator<(const QuadExt& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadExt& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const QuadExt& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const QuadExt& o) const { return (*this - o).sign() >= 0; }

    /// Largest integer <= value.
    Int floor() const;
    /// Smallest integer >= value.
    Int ceil() const;

    std::string to_string() const;

private:
    Rat a_;
    Rat b_;
    int d_;  // 0 when b_ == 0
};

}  // namespace prufer
