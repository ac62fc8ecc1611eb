#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "error.hpp"

namespace mfwb {

// Exact rational number. Invariants (maintained by GMP canonical form):
// denominator > 0, gcd(|num|, den) = 1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(long n, long d)
    {
        if (d == 0)
            fail(Errc::io, "rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rat(const mpz_class& n) : v_(n) {}

    // Accepts "p" or "p/q" with an optional leading sign on p.
    static Rat from_string(std::string_view s)
    {
        if (s.empty())
            fail(Errc::io, "empty rational literal");
        size_t i = 0;
        if (s[i] == '+' || s[i] == '-')
            ++i;
        size_t digits = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            ++i;
            ++digits;
        }
        if (digits == 0)
            fail(Errc::io, "malformed rational literal '" + std::string(s) + "'");
        if (i != s.size()) {
            if (s[i] != '/')
                fail(Errc::io, "malformed rational literal '" + std::string(s) + "'");
            ++i;
            size_t den_digits = 0;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
                ++i;
                ++den_digits;
            }
            if (den_digits == 0 || i != s.size())
                fail(Errc::io, "malformed rational literal '" + std::string(s) + "'");
        }
        mpq_class v;
        if (v.set_str(std::string(s), 10) != 0)
            fail(Errc::io, "malformed rational literal '" + std::string(s) + "'");
        if (v.get_den() == 0)
            fail(Errc::io, "rational with zero denominator");
        v.canonicalize();
        return Rat(std::move(v), already_canonical{});
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_), already_canonical{}); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o)
    {
        if (o.is_zero())
            fail(Errc::compute, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }

    Rat abs() const { return Rat(mpq_class(::abs(v_)), already_canonical{}); }
    Rat inverse() const
    {
        if (is_zero())
            fail(Errc::compute, "rational division by zero");
        return Rat(mpq_class(1 / v_), already_canonical{});
    }

    std::string to_string() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r)
    {
        return os << r.v_;
    }

private:
    struct already_canonical {};
    Rat(mpq_class v, already_canonical) : v_(std::move(v)) {}

    mpq_class v_;
};

inline Rat binomial(int n, int k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

inline Rat factorial(int n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(f);
}

} // namespace mfwb
