#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace nichols {

/// Exact rational number. Values that fit in 64-bit numerator and
/// denominator are stored inline; larger ones spill to a GMP rational.
class Rational {
public:
    Rational() noexcept = default;
    template <std::integral T>
    Rational(T v) {
        *this = from_i128(static_cast<__int128>(v), 1);
    }
    Rational(long long n, long long d) { *this = from_i128(n, d); }
    explicit Rational(const mpq_class& q) { assign_mpq(q); }
    explicit Rational(const std::string& s) {
        mpq_class q(s);
        q.canonicalize();
        assign_mpq(q);
    }

    Rational(const Rational& o) { copy_from(o); }
    Rational(Rational&& o) noexcept : n_(o.n_), d_(o.d_) {
        o.n_ = 0;
        o.d_ = 1;
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            release();
            copy_from(o);
        }
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) {
            release();
            n_ = o.n_;
            d_ = o.d_;
            o.n_ = 0;
            o.d_ = 1;
        }
        return *this;
    }
    ~Rational() { release(); }

    bool is_small() const noexcept { return d_ != 0; }
    /// Inline numerator and denominator; valid when is_small().
    long long numerator_ll() const noexcept { return n_; }
    long long denominator_ll() const noexcept { return d_; }
    bool is_zero() const noexcept { return d_ == 1 && n_ == 0; }
    bool is_one() const noexcept { return d_ == 1 && n_ == 1; }
    bool is_integer() const noexcept { return is_small() ? d_ == 1 : big()->get_den() == 1; }
    int sign() const noexcept {
        if (is_small()) return (n_ > 0) - (n_ < 0);
        return sgn(*big());
    }

    mpq_class to_mpq() const {
        if (!is_small()) return *big();
        mpq_class q;
        q.get_num() = to_mpz(n_);
        q.get_den() = to_mpz(d_);
        return q;
    }
    mpz_class numerator() const { return is_small() ? to_mpz(n_) : mpz_class(big()->get_num()); }
    mpz_class denominator() const { return is_small() ? to_mpz(d_) : mpz_class(big()->get_den()); }

    std::string to_string() const {
        if (!is_small()) return big()->get_str();
        if (d_ == 1) return std::to_string(n_);
        return std::to_string(n_) + "/" + std::to_string(d_);
    }

    Rational operator-() const {
        if (is_small()) {
            Rational r;
            r.n_ = -n_;
            r.d_ = d_;
            return r;
        }
        return Rational(mpq_class(-*big()));
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.is_small() && b.is_small()) {
            if (a.d_ == 1 && b.d_ == 1) return from_i128(static_cast<i128>(a.n_) + b.n_, 1);
            if (a.d_ == b.d_) return from_i128(static_cast<i128>(a.n_) + b.n_, a.d_);
            i128 num = static_cast<i128>(a.n_) * b.d_ + static_cast<i128>(b.n_) * a.d_;
            i128 den = static_cast<i128>(a.d_) * b.d_;
            return from_i128(num, den);
        }
        return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.is_small() && b.is_small()) {
            if (a.n_ == 0 || b.n_ == 0) return Rational();
            if (a.d_ == 1 && b.d_ == 1) return from_i128(static_cast<i128>(a.n_) * b.n_, 1);
            return from_i128(static_cast<i128>(a.n_) * b.n_, static_cast<i128>(a.d_) * b.d_);
        }
        return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    }
    Rational inverse() const {
        if (is_zero()) throw std::domain_error("division by zero rational");
        if (is_small()) {
            Rational r;
            r.n_ = n_ < 0 ? -d_ : d_;
            r.d_ = n_ < 0 ? -n_ : n_;
            return r;
        }
        return Rational(mpq_class(1 / *big()));
    }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (a.is_small() != b.is_small()) return false;
        if (a.is_small()) return a.n_ == b.n_ && a.d_ == b.d_;
        return *a.big() == *b.big();
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        if (a.is_small() && b.is_small())
            return static_cast<i128>(a.n_) * b.d_ < static_cast<i128>(b.n_) * a.d_;
        return a.to_mpq() < b.to_mpq();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    using i128 = __int128;
    using u128 = unsigned __int128;

    std::int64_t n_ = 0;
    std::int64_t d_ = 1;  // 0 marks a spilled value; n_ then holds the pointer

    mpq_class* big() const noexcept { return reinterpret_cast<mpq_class*>(static_cast<std::intptr_t>(n_)); }

    void release() noexcept {
        if (d_ == 0) delete big();
        n_ = 0;
        d_ = 1;
    }
    void set_big(const mpq_class& q) {
        auto* p = new mpq_class(q);
        n_ = static_cast<std::int64_t>(reinterpret_cast<std::intptr_t>(p));
        d_ = 0;
    }
    void copy_from(const Rational& o) {
        if (o.is_small()) {
            n_ = o.n_;
            d_ = o.d_;
        } else {
            set_big(*o.big());
        }
    }

    static bool fits(i128 v) noexcept {
        return v > static_cast<i128>(std::numeric_limits<std::int64_t>::min()) &&
               v <= static_cast<i128>(std::numeric_limits<std::int64_t>::max());
    }

    static u128 gcd128(u128 a, u128 b) noexcept {
        while (b != 0) {
            if ((a >> 64) == 0 && (b >> 64) == 0)
                return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
            u128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static mpz_class to_mpz(i128 v) {
        bool neg = v < 0;
        u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
        mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
        mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
        mpz_class r = (hi << 64) + lo;
        return neg ? mpz_class(-r) : r;
    }

    static Rational from_i128(i128 num, i128 den) {
        if (den == 0) throw std::domain_error("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Rational r;
        if (num == 0) return r;
        if (den != 1) {
            u128 g = gcd128(static_cast<u128>(num < 0 ? -num : num), static_cast<u128>(den));
            if (g > 1) {
                num /= static_cast<i128>(g);
                den /= static_cast<i128>(g);
            }
        }
        if (fits(num) && fits(den)) {
            r.n_ = static_cast<std::int64_t>(num);
            r.d_ = static_cast<std::int64_t>(den);
            return r;
        }
        mpq_class q;
        q.get_num() = to_mpz(num);
        q.get_den() = to_mpz(den);
        r.set_big(q);
        return r;
    }

    void assign_mpq(const mpq_class& q) {
        const mpz_class& num = q.get_num();
        const mpz_class& den = q.get_den();
        if (mpz_fits_slong_p(num.get_mpz_t()) && mpz_fits_slong_p(den.get_mpz_t())) {
            long nv = num.get_si();
            long dv = den.get_si();
            if (nv != std::numeric_limits<long>::min()) {
                n_ = nv;
                d_ = dv;
                return;
            }
        }
        set_big(q);
    }
};

}  // namespace nichols
