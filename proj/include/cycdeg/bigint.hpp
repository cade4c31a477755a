#ifndef CYCDEG_BIGINT_HPP
#define CYCDEG_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cycdeg {

/*
 * Arbitrary-precision signed integer, base 2^32 magnitude plus sign.
 * Everything in this project is exact; this is the only numeric type
 * the higher layers ever see (directly or through Rat).
 */
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s);
    static BigInt two_pow(unsigned long long k);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    BigInt& operator/=(const BigInt& o);
    BigInt& operator%=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

    // Truncated division: q = trunc(a/b), r = a - q*b (sign of r follows a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    BigInt abs() const;
    std::string to_string() const;

    // Fits-in-long-long check plus conversion; throws std::overflow_error otherwise.
    long long to_long_long() const;

    friend BigInt gcd(BigInt a, BigInt b);

private:
    int sign_ = 0;                   // -1, 0, +1
    std::vector<uint32_t> limbs_;    // little-endian, no leading zeros, empty iff zero

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
    static uint32_t divmod_small(std::vector<uint32_t>& u, uint32_t d);
    void mul_small_add(uint32_t mul, uint32_t add);
};

// Exact division; throws std::logic_error when b does not divide a.
BigInt divexact(const BigInt& a, const BigInt& b);

} // namespace cycdeg

#endif // CYCDEG_BIGINT_HPP
