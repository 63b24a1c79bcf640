#include "cloudcover/scalar.hpp"

#include <cctype>

namespace cloudcover {

int scalar_sign(const Scalar& s) {
    if (s > 0) return 1;
    if (s < 0) return -1;
    return 0;
}

namespace {

bool parse_int(const std::string& text, BigInt& out) {
    if (text.empty()) return false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') i = 1;
    if (i == text.size()) return false;
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
    }
    out = BigInt(text);
    return true;
}

}  // namespace

std::optional<Scalar> parse_scalar(const std::string& text) {
    auto slash = text.find('/');
    BigInt num, den;
    if (slash == std::string::npos) {
        if (!parse_int(text, num)) return std::nullopt;
        return Scalar(num);
    }
    if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
    if (den <= 0) return std::nullopt;
    return Scalar(num, den);
}

std::string scalar_to_string(const Scalar& s) {
    std::string out = numerator(s).str();
    if (denominator(s) != 1) {
        out += "/";
        out += denominator(s).str();
    }
    return out;
}

std::optional<Scalar> exact_sqrt(const Scalar& s) {
    if (s < 0) return std::nullopt;
    BigInt n = numerator(s), d = denominator(s);
    BigInt rn = sqrt(n), rd = sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Scalar(rn, rd);
}

std::pair<Scalar, Scalar> sqrt_bracket(const Scalar& s, const Scalar& tol) {
    if (auto r = exact_sqrt(s)) return {*r, *r};
    // Integer sqrt of floor(s * k^2) / k gives a lower bound within 1/k.
    BigInt k = numerator(Scalar(1) / tol) / denominator(Scalar(1) / tol) + 1;
    BigInt scaled = numerator(s) * k * k / denominator(s);
    BigInt root = sqrt(scaled);
    Scalar lo(root, k);
    Scalar hi(root + 1, k);
    return {lo, hi};
}

}  // namespace cloudcover
