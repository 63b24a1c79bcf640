#include "cloudcover/kuratowski.hpp"

#include <memory>

namespace cloudcover {

RationalWindowEnumeration::RationalWindowEnumeration(Scalar radius)
    : radius_(std::move(radius)), next_den_(1) {
    if (radius_ <= 0) throw Error(ErrorKind::BadDimensions, "window radius must be positive");
}

void RationalWindowEnumeration::grow() const {
    // All reduced fractions p/d with |p/d| < radius, ascending numerator.
    BigInt d = next_den_;
    BigInt a = numerator(radius_), b = denominator(radius_);
    BigInt p_max = (a * d - 1) / b;  // largest p with p*b < a*d
    for (BigInt p = -p_max; p <= p_max; ++p) {
        if (gcd(abs(p), d) != 1 && !(p == 0 && d == 1)) continue;
        if (p == 0 && d != 1) continue;
        cache_.push_back(Scalar(p, d));
    }
    ++next_den_;
}

Scalar RationalWindowEnumeration::elem(std::int64_t k) const {
    if (k < 0) throw Error(ErrorKind::BadDimensions, "enumeration index must be nonnegative");
    while (cache_.size() <= static_cast<std::size_t>(k)) grow();
    return cache_[static_cast<std::size_t>(k)];
}

std::int64_t RationalWindowEnumeration::idx(const Scalar& s) const {
    if (scalar_abs(s) >= radius_) throw Error(ErrorKind::OutOfWindow, "value outside the window");
    while (next_den_ <= denominator(s)) grow();
    for (std::size_t i = 0; i < cache_.size(); ++i)
        if (cache_[i] == s) return static_cast<std::int64_t>(i);
    throw Error(ErrorKind::OutOfWindow, "value not reachable by the enumeration");
}

SchmerlDecomposition schmerl_to_decomposition(const SchmerlInstance& inst) {
    auto shared_inst = std::make_shared<SchmerlInstance>(inst);
    auto enumeration = std::make_shared<RationalWindowEnumeration>(inst.epsilon);

    SchmerlDecomposition out;
    out.window.label = "rationals in (-epsilon, epsilon) by denominator, then numerator";
    out.window.idx = [enumeration](const Scalar& s) { return enumeration->idx(s); };
    out.window.elem = [enumeration](std::int64_t k) { return enumeration->elem(k); };

    out.decomposition.n = inst.n;
    out.decomposition.membership = [shared_inst](std::size_t i, const std::vector<Scalar>& tuple) {
        return d_membership(*shared_inst, i, Point(tuple));
    };
    return out;
}

}  // namespace cloudcover
