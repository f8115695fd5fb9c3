#include "prufer/quad_ext.hpp"

namespace prufer {

int QuadExt::sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Mixed signs: compare a^2 against b^2 * d. Equality would force
    // sqrt(d) rational, impossible for square-free d > 1 with b != 0.
    Rat lhs = a_ * a_;
    Rat rhs = b_ * b_ * d_;
    if (sa > 0) return lhs > rhs ? 1 : -1;
    return rhs > lhs ? 1 : -1;
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    if (b_ != 0 && o.b_ != 0 && d_ != o.d_)
        throw Error("QuadExt: mixed radicands " + std::to_string(d_) + " vs " +
                    std::to_string(o.d_));
    int d = b_ != 0 ? d_ : o.d_;
    return QuadExt(a_ + o.a_, b_ + o.b_, d);
}

Int QuadExt::floor() const {
    if (b_ == 0) return floor_rat(a_);
    // Bracket b*sqrt(d) by rational bounds via the integer sqrt, then binary
    // search with the exact comparison.
    Int s = boost::multiprecision::sqrt(Int(d_));
    Rat lo_r = a_ + b_ * Rat(b_ > 0 ? s : s + 1);
    Rat hi_r = a_ + b_ * Rat(b_ > 0 ? s + 1 : s);
    Int lo = floor_rat(lo_r) - 1;
    Int hi = floor_rat(hi_r) + 1;
    // invariant: QuadExt(lo) <= *this < QuadExt(hi+1) after the loop
    while (lo < hi) {
        Int mid = lo + (hi - lo + 1) / 2;
        if (*this >= QuadExt(Rat(mid)))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

Int QuadExt::ceil() const {
    Int f = floor();
    if (*this == QuadExt(Rat(f))) return f;
    return f + 1;
}

std::string QuadExt::to_string() const {
    if (b_ == 0) return rat_to_string(a_);
    std::string rad = (b_ == 1 ? "" : (b_ == -1 ? "-" : rat_to_string(b_) + "*")) + "r";
    if (a_ == 0) return rad;
    if (b_ > 0) return rat_to_string(a_) + "+" + rad;
    return rat_to_string(a_) + (rad[0] == '-' ? "" : "-") + rad;
}

}  // namespace prufer
