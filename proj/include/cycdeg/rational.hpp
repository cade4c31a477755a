#ifndef CYCDEG_RATIONAL_HPP
#define CYCDEG_RATIONAL_HPP

#include <cycdeg/bigint.hpp>

#include <compare>
#include <string>

namespace cycdeg {

/*
 * Exact rational number. Invariants kept after every operation:
 * gcd(|num|, den) = 1 and den > 0.
 */
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}
    Rat(BigInt v) : num_(std::move(v)), den_(1) {}
    Rat(long long num, long long den) : Rat(BigInt(num), BigInt(den)) {}
    Rat(BigInt num, BigInt den);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    // Throws std::logic_error when the value is not integral.
    BigInt to_integer() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

} // namespace cycdeg

#endif // CYCDEG_RATIONAL_HPP
