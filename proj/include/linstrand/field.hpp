#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "linstrand/errors.hpp"

namespace linstrand {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Arithmetic in the prime field F_p for a runtime prime p < 2^31.
/// Elements are canonical representatives in [0, p).
class PrimeField {
public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p >= (1u << 31) || !is_prime(p))
            throw std::invalid_argument("characteristic must be a prime < 2^31, got " +
                                        std::to_string(p));
    }

    std::uint32_t characteristic() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(Element a) const { return a == 0; }

    Element from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<Element>(r);
    }

    Element add(Element a, Element b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return s >= p_ ? Element(s - p_) : Element(s);
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const {
        return Element((std::uint64_t(a) * b) % p_);
    }

    Element inv(Element a) const {
        if (a == 0) throw std::domain_error("inverse of zero in F_p");
        // extended Euclid on (a, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        if (t < 0) t += p_;
        return Element(t);
    }

    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    bool eq(Element a, Element b) const { return a == b; }

    /// Symmetric-representative sign used when printing: values above p/2
    /// render as negatives.
    bool prints_negative(Element a) const { return a > p_ / 2; }
    std::string abs_string(Element a) const {
        return std::to_string(prints_negative(a) ? p_ - a : a);
    }

private:
    std::uint32_t p_;
};

/// Exact rational arithmetic; used as a characteristic-zero cross-check.
class RationalField {
public:
    using Element = BigRational;

    std::uint32_t characteristic() const { return 0; }

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    bool is_zero(const Element& a) const { return a == 0; }

    Element from_int(long long v) const { return Element(v); }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    Element div(const Element& a, const Element& b) const { return a / inv_guard(b); }

    bool eq(const Element& a, const Element& b) const { return a == b; }

    bool prints_negative(const Element& a) const { return a < 0; }
    std::string abs_string(const Element& a) const {
        Element m = a < 0 ? Element(-a) : a;
        return m.str();
    }

private:
    static const Element& inv_guard(const Element& b) {
        if (b == 0) throw std::domain_error("division by zero");
        return b;
    }
};

} // namespace linstrand
