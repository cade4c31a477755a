#include <cycdeg/bigint.hpp>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace cycdeg {

namespace {
constexpr uint64_t kBase = 1ull << 32;
} // namespace

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on LLONG_MIN
    unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
                                 : static_cast<unsigned long long>(v);
    limbs_.push_back(static_cast<uint32_t>(m));
    if (m >> 32) limbs_.push_back(static_cast<uint32_t>(m >> 32));
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& lo = a.size() >= b.size() ? a : b;
    const std::vector<uint32_t>& hi = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(lo.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < lo.size(); ++i) {
        uint64_t cur = carry + lo[i] + (i < hi.size() ? hi[i] : 0u);
        r[i] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
    }
    r[lo.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t cur = static_cast<int64_t>(a[i]) - (i < b.size() ? static_cast<int64_t>(b[i]) : 0) - borrow;
        if (cur < 0) {
            cur += static_cast<int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = r[i + j] + ai * b[j] + carry;
            r[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r[i + b.size()] = static_cast<uint32_t>(carry);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

uint32_t BigInt::divmod_small(std::vector<uint32_t>& u, uint32_t d) {
    uint64_t rem = 0;
    for (size_t i = u.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | u[i];
        u[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    while (!u.empty() && u.back() == 0) u.pop_back();
    return static_cast<uint32_t>(rem);
}

namespace {

std::vector<uint32_t> shl_bits(const std::vector<uint32_t>& a, unsigned s) {
    if (s == 0 || a.empty()) return a;
    std::vector<uint32_t> r(a.size() + 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] |= a[i] << s;
        r[i + 1] = static_cast<uint32_t>((static_cast<uint64_t>(a[i]) << s) >> 32);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> shr_bits(const std::vector<uint32_t>& a, unsigned s) {
    if (s == 0 || a.empty()) return a;
    std::vector<uint32_t> r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] >> s;
        if (i + 1 < a.size()) r[i] |= static_cast<uint32_t>(static_cast<uint64_t>(a[i + 1]) << (32 - s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

} // namespace

// Knuth algorithm D on normalized magnitudes.
void BigInt::divmod_mag(const std::vector<uint32_t>& u0, const std::vector<uint32_t>& v0,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.clear();
    r.clear();
    if (v0.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(u0, v0) < 0) {
        r = u0;
        return;
    }
    if (v0.size() == 1) {
        std::vector<uint32_t> tmp = u0;
        uint32_t rem = divmod_small(tmp, v0[0]);
        q = std::move(tmp);
        if (rem) r.push_back(rem);
        return;
    }

    const size_t n = v0.size();
    const size_t m = u0.size() - n;
    const unsigned shift = static_cast<unsigned>(std::countl_zero(v0.back()));
    std::vector<uint32_t> v = shl_bits(v0, shift);
    std::vector<uint32_t> u = shl_bits(u0, shift);
    u.resize(u0.size() + 1, 0);

    q.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t top = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = top / v[n - 1];
        uint64_t rhat = top % v[n - 1];
        if (qhat >= kBase) {
            qhat = kBase - 1;
            rhat = top - qhat * v[n - 1];
        }
        while (rhat < kBase && qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
        }

        // multiply and subtract
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
            if (t < 0) {
                t += static_cast<int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large, add v back
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t cur = c2 + u[i + j] + v[i];
                u[i + j] = static_cast<uint32_t>(cur);
                c2 = cur >> 32;
            }
            t += static_cast<int64_t>(c2);
        }
        u[j + n] = static_cast<uint32_t>(t);
        q[j] = static_cast<uint32_t>(qhat);
    }

    while (!q.empty() && q.back() == 0) q.pop_back();
    u.resize(n);
    while (!u.empty() && u.back() == 0) u.pop_back();
    r = shr_bits(u, shift);
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        limbs_ = add_mag(limbs_, o.limbs_);
        return *this;
    }
    int c = cmp_mag(limbs_, o.limbs_);
    if (c == 0) {
        limbs_.clear();
        sign_ = 0;
    } else if (c > 0) {
        limbs_ = sub_mag(limbs_, o.limbs_);
    } else {
        limbs_ = sub_mag(o.limbs_, limbs_);
        sign_ = o.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
    sign_ *= o.sign_;
    limbs_ = mul_mag(limbs_, o.limbs_);
    if (limbs_.empty()) sign_ = 0;
    return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    r.limbs_ = std::move(rm);
    q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
}

BigInt& BigInt::operator/=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    return *this = std::move(q);
}

BigInt& BigInt::operator%=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    return *this = std::move(r);
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = BigInt::cmp_mag(a.limbs_, b.limbs_) * (a.sign_ < 0 ? -1 : 1);
    return c <=> 0;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::two_pow(unsigned long long k) {
    BigInt r;
    r.sign_ = 1;
    r.limbs_.assign(k / 32 + 1, 0);
    r.limbs_.back() = 1u << (k % 32);
    return r;
}

void BigInt::mul_small_add(uint32_t mul, uint32_t add) {
    uint64_t carry = add;
    for (auto& limb : limbs_) {
        uint64_t cur = static_cast<uint64_t>(limb) * mul + carry;
        limb = static_cast<uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    if (!limbs_.empty() && sign_ == 0) sign_ = 1;
    trim();
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    // consume in chunks of 9 decimal digits
    while (i < s.size()) {
        size_t take = std::min<size_t>(9, s.size() - i);
        uint32_t chunk = 0;
        uint32_t scale = 1;
        for (size_t k = 0; k < take; ++k) {
            char c = s[i + k];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
            scale *= 10;
        }
        r.mul_small_add(scale, chunk);
        i += take;
    }
    if (neg && !r.limbs_.empty()) r.sign_ = -1;
    return r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> tmp = limbs_;
    std::string digits;
    while (!tmp.empty()) {
        uint32_t rem = divmod_small(tmp, 1000000000u);
        if (tmp.empty()) {
            // most significant chunk, no padding
            digits.insert(0, std::to_string(rem));
        } else {
            std::string part = std::to_string(rem);
            digits.insert(0, std::string(9 - part.size(), '0') + part);
        }
    }
    return sign_ < 0 ? "-" + digits : digits;
}

long long BigInt::to_long_long() const {
    if (limbs_.size() > 2) throw std::overflow_error("BigInt: does not fit long long");
    unsigned long long m = 0;
    if (!limbs_.empty()) m = limbs_[0];
    if (limbs_.size() == 2) m |= static_cast<unsigned long long>(limbs_[1]) << 32;
    if (sign_ >= 0) {
        if (m > 0x7fffffffffffffffull) throw std::overflow_error("BigInt: does not fit long long");
        return static_cast<long long>(m);
    }
    if (m > 0x8000000000000000ull) throw std::overflow_error("BigInt: does not fit long long");
    return -static_cast<long long>(m - 1) - 1;
}

BigInt gcd(BigInt a, BigInt b) {
    a.sign_ = a.limbs_.empty() ? 0 : 1;
    b.sign_ = b.limbs_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt divexact(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    if (!r.is_zero()) throw std::logic_error("divexact: not divisible");
    return q;
}

} // namespace cycdeg
