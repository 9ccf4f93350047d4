#pragma once

#include "nichols/rational.hpp"

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nichols {

namespace detail {

inline int& conductor_cap_ref() {
    static int cap = 120;
    return cap;
}

inline int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

/// Per-conductor data: the cyclotomic polynomial and the reductions of x^k.
struct CycTables {
    int N = 1;
    int phi = 1;
    std::vector<std::int64_t> cyclotomic;           // Phi_N, low degree first, monic
    std::vector<std::vector<std::int64_t>> xpow;  // x^k mod Phi_N for 0 <= k < span
};

inline std::vector<std::int64_t> cyclotomic_poly(int N);

inline std::vector<std::int64_t> compute_cyclotomic(int N) {
    // x^N - 1 divided by Phi_d for every proper divisor d
    std::vector<std::int64_t> num(N + 1, 0);
    num[0] = -1;
    num[N] = 1;
    for (int d : divisors(N)) {
        if (d == N) continue;
        const auto den = cyclotomic_poly(d);
        const int dd = static_cast<int>(den.size()) - 1;
        const int nd = static_cast<int>(num.size()) - 1;
        std::vector<std::int64_t> quot(nd - dd + 1, 0);
        for (int k = nd; k >= dd; --k) {
            std::int64_t c = num[k];
            quot[k - dd] = c;
            if (c == 0) continue;
            for (int j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
        }
        num = quot;
    }
    return num;
}

inline std::vector<std::int64_t> cyclotomic_poly(int N) {
    static std::mutex mu;
    static std::map<int, std::vector<std::int64_t>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(N);
        if (it != cache.end()) return it->second;
    }
    auto p = compute_cyclotomic(N);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(N, p);
    return p;
}

inline std::shared_ptr<const CycTables> build_tables(int N) {
    auto t = std::make_shared<CycTables>();
    t->N = N;
    t->cyclotomic = cyclotomic_poly(N);
    t->phi = static_cast<int>(t->cyclotomic.size()) - 1;
    const int phi = t->phi;
    const int span = std::max(N, 2 * phi);
    t->xpow.assign(span, std::vector<std::int64_t>(phi, 0));
    t->xpow[0][0] = 1;
    for (int k = 1; k < span; ++k) {
        const auto& prev = t->xpow[k - 1];
        auto& cur = t->xpow[k];
        std::int64_t top = prev[phi - 1];
        for (int j = phi - 1; j >= 1; --j) cur[j] = prev[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (int j = 0; j < phi; ++j) cur[j] -= top * t->cyclotomic[j];
    }
    return t;
}

inline const CycTables* tables(int N) {
    static thread_local const CycTables* last = nullptr;
    if (last != nullptr && last->N == N) return last;
    if (N < 1) throw std::domain_error("conductor must be positive");
    if (N > conductor_cap_ref())
        throw std::domain_error("conductor " + std::to_string(N) + " exceeds cap " +
                                std::to_string(conductor_cap_ref()));
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it == cache.end()) it = cache.emplace(N, build_tables(N)).first;
    last = it->second.get();
    return last;
}

}  // namespace detail

/// Sets the largest conductor accepted by the field constructors.
inline void set_conductor_cap(int cap) {
    if (cap < 1) throw std::domain_error("conductor cap must be positive");
    detail::conductor_cap_ref() = cap;
}
inline int conductor_cap() { return detail::conductor_cap_ref(); }

/// Element of Q(zeta_N) in the power basis modulo the N-th cyclotomic polynomial.
class CycScalar {
public:
    using Coeffs = boost::container::small_vector<Rational, 8>;

    CycScalar() : N_(1), c_(1) {}
    template <std::integral T>
    CycScalar(T v) : N_(1), c_{Rational(v)} {}
    CycScalar(const Rational& r) : N_(1), c_{r} {}

    /// Builds an element from coordinates of any length; entries beyond deg Phi_N are reduced.
    static CycScalar from_coeffs(int N, const std::vector<Rational>& coeffs) {
        auto t = detail::tables(N);
        CycScalar out;
        out.N_ = N;
        out.c_.assign(static_cast<std::size_t>(t->phi), Rational());
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k].is_zero()) continue;
            const auto& row = t->xpow[k % static_cast<std::size_t>(N)];
            for (int j = 0; j < t->phi; ++j)
                if (row[j] != 0) out.c_[j] += coeffs[k] * Rational(row[j]);
        }
        return out;
    }

    int conductor() const { return N_; }
    const Coeffs& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()); }

    bool is_zero() const {
        for (const auto& r : c_)
            if (!r.is_zero()) return false;
        return true;
    }
    bool is_one() const {
        if (!c_[0].is_one()) return false;
        for (std::size_t j = 1; j < c_.size(); ++j)
            if (!c_[j].is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t j = 1; j < c_.size(); ++j)
            if (!c_[j].is_zero()) return false;
        return true;
    }

    /// Image under Q(zeta_N) -> Q(zeta_M); M must be a multiple of N.
    CycScalar embed(int M) const {
        if (M == N_) return *this;
        if (M % N_ != 0) throw std::domain_error("embedding requires a multiple of the conductor");
        auto t = detail::tables(M);
        const int step = M / N_;
        CycScalar out;
        out.N_ = M;
        out.c_.assign(static_cast<std::size_t>(t->phi), Rational());
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            const auto& row = t->xpow[(k * static_cast<std::size_t>(step)) % static_cast<std::size_t>(M)];
            for (int j = 0; j < t->phi; ++j)
                if (row[j] != 0) out.c_[j] += c_[k] * Rational(row[j]);
        }
        return out;
    }

    CycScalar& operator+=(const CycScalar& o) {
        add_scaled(o, false);
        return *this;
    }
    CycScalar& operator-=(const CycScalar& o) {
        add_scaled(o, true);
        return *this;
    }
    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    CycScalar operator-() const {
        CycScalar out = *this;
        for (auto& r : out.c_)
            if (!r.is_zero()) r = -r;
        return out;
    }

    friend CycScalar operator*(const CycScalar& a, const CycScalar& b) {
        if (a.N_ != b.N_) {
            if (a.N_ == 1) return b.scaled(a.c_[0]);
            if (b.N_ == 1) return a.scaled(b.c_[0]);
            int L = std::lcm(a.N_, b.N_);
            return a.embed(L) * b.embed(L);
        }
        if (a.N_ <= 2) return CycScalar::raw(a.N_, Coeffs{a.c_[0] * b.c_[0]});
        auto t = detail::tables(a.N_);
        const int phi = t->phi;
        boost::container::small_vector<Rational, 16> prod(static_cast<std::size_t>(2 * phi - 1));
        bool any = false;
        for (int i = 0; i < phi; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; j < phi; ++j) {
                if (b.c_[j].is_zero()) continue;
                prod[i + j] += a.c_[i] * b.c_[j];
                any = true;
            }
        }
        if (!any) return CycScalar();
        CycScalar out;
        out.N_ = a.N_;
        out.c_.assign(prod.begin(), prod.begin() + phi);
        for (int k = phi; k < 2 * phi - 1; ++k) {
            if (prod[k].is_zero()) continue;
            const auto& row = t->xpow[k];
            for (int j = 0; j < phi; ++j)
                if (row[j] != 0) out.c_[j] += prod[k] * Rational(row[j]);
        }
        return out;
    }

    CycScalar scaled(const Rational& r) const {
        if (r.is_zero()) return CycScalar();
        CycScalar out = *this;
        if (r.is_one()) return out;
        for (auto& x : out.c_)
            if (!x.is_zero()) x *= r;
        return out;
    }

    /// Multiplicative inverse, by solving the linear system of multiplication by *this.
    CycScalar inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        if (N_ <= 2 || is_rational()) return CycScalar::raw(N_, Coeffs(c_.size(), Rational())).plus_rational(c_[0].inverse());
        auto t = detail::tables(N_);
        const int phi = t->phi;
        // column j of M holds the coordinates of (*this) * zeta^j
        std::vector<std::vector<Rational>> M(phi, std::vector<Rational>(phi + 1));
        for (int j = 0; j < phi; ++j) {
            CycScalar col = *this * CycScalar::raw(N_, unit_coeffs(phi, j));
            for (int i = 0; i < phi; ++i) M[i][j] = col.coeff(i);
        }
        M[0][phi] = Rational(1);
        for (int col = 0; col < phi; ++col) {
            int piv = col;
            while (piv < phi && M[piv][col].is_zero()) ++piv;
            if (piv == phi) throw std::logic_error("singular multiplication matrix");
            std::swap(M[piv], M[col]);
            Rational inv = M[col][col].inverse();
            for (int k = col; k <= phi; ++k) M[col][k] *= inv;
            for (int r = 0; r < phi; ++r) {
                if (r == col || M[r][col].is_zero()) continue;
                Rational f = M[r][col];
                for (int k = col; k <= phi; ++k)
                    if (!M[col][k].is_zero()) M[r][k] -= f * M[col][k];
            }
        }
        Coeffs sol(static_cast<std::size_t>(phi));
        for (int i = 0; i < phi; ++i) sol[i] = M[i][phi];
        return CycScalar::raw(N_, std::move(sol));
    }
    friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }

    CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }

    /// this -= a * b, the update used by elimination loops.
    void sub_mul(const CycScalar& a, const CycScalar& b) {
        if (a.is_zero() || b.is_zero()) return;
        *this -= a * b;
    }

    CycScalar pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        CycScalar result(1);
        CycScalar base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    friend bool operator==(const CycScalar& a, const CycScalar& b) {
        if (a.N_ == b.N_) return a.c_ == b.c_;
        if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
        int L = std::lcm(a.N_, b.N_);
        return a.embed(L).c_ == b.embed(L).c_;
    }
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    /// Human-readable form, e.g. "1 + 2*z - 1/3*z^2" with z = zeta_N.
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            const Rational& r = c_[k];
            if (r.is_zero()) continue;
            std::string s = r.to_string();
            bool neg = r.sign() < 0;
            if (neg) s = s.substr(1);
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            if (k == 0) {
                os << s;
            } else {
                if (s != "1") os << s << "*";
                os << "z" << N_;
                if (k > 1) os << "^" << k;
            }
        }
        if (first) os << "0";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const CycScalar& x) { return os << x.to_string(); }

    /// Direct constructor from already reduced coordinates.
    static CycScalar raw(int N, Coeffs coeffs) {
        CycScalar out;
        out.N_ = N;
        out.c_ = std::move(coeffs);
        return out;
    }
    static CycScalar raw(int N, const std::vector<Rational>& coeffs) {
        return raw(N, Coeffs(coeffs.begin(), coeffs.end()));
    }

private:
    int N_;
    Coeffs c_;

    Rational coeff(int i) const { return static_cast<std::size_t>(i) < c_.size() ? c_[i] : Rational(); }

    CycScalar plus_rational(const Rational& r) && {
        c_[0] += r;
        return std::move(*this);
    }

    void add_scaled(const CycScalar& o, bool negate) {
        if (o.is_zero()) return;
        if (N_ == o.N_) {
            for (std::size_t j = 0; j < c_.size(); ++j) {
                if (o.c_[j].is_zero()) continue;
                if (negate)
                    c_[j] -= o.c_[j];
                else
                    c_[j] += o.c_[j];
            }
            return;
        }
        if (o.N_ == 1) {
            if (negate)
                c_[0] -= o.c_[0];
            else
                c_[0] += o.c_[0];
            return;
        }
        if (N_ == 1) {
            Rational mine = c_[0];
            *this = negate ? -o : o;
            c_[0] += mine;
            return;
        }
        int L = std::lcm(N_, o.N_);
        *this = embed(L);
        add_scaled(o.embed(L), negate);
    }

    static Coeffs unit_coeffs(int phi, int j) {
        Coeffs v(static_cast<std::size_t>(phi));
        v[j] = Rational(1);
        return v;
    }
};

/// zeta_N^k where zeta_N = exp(2 pi i / N).
inline CycScalar root_of_unity(int N, long long k) {
    if (N < 1) throw std::domain_error("root_of_unity: N must be positive");
    auto t = detail::tables(N);
    long long e = ((k % N) + N) % N;
    const auto& row = t->xpow[static_cast<std::size_t>(e)];
    CycScalar::Coeffs c(static_cast<std::size_t>(t->phi));
    for (int j = 0; j < t->phi; ++j) c[j] = Rational(row[j]);
    return CycScalar::raw(N, std::move(c));
}

/// Result of a multiplicative-order query.
struct MultOrder {
    enum class Kind { finite, is_one, not_root };
    Kind kind = Kind::not_root;
    int order = 0;  // meaningful for finite

    bool finite() const { return kind == Kind::finite; }
    bool is_one() const { return kind == Kind::is_one; }
    bool not_root() const { return kind == Kind::not_root; }
};

/// Order of x in the multiplicative group; roots of unity of Q(zeta_N) lie in mu_lcm(2,N).
inline MultOrder mult_order(const CycScalar& x) {
    if (x.is_zero()) throw std::domain_error("mult_order of zero");
    MultOrder r;
    if (x.is_one()) {
        r.kind = MultOrder::Kind::is_one;
        r.order = 1;
        return r;
    }
    const int M = std::lcm(2, x.conductor());
    for (int d : detail::divisors(M)) {
        if (d == 1) continue;
        if (x.pow(d).is_one()) {
            r.kind = MultOrder::Kind::finite;
            r.order = d;
            return r;
        }
    }
    return r;
}

/// Writes x = zeta_M^k with M = lcm(2, conductor), if x is a root of unity.
inline std::optional<std::pair<int, int>> root_exponent(const CycScalar& x) {
    if (x.is_zero()) return std::nullopt;
    const int M = std::lcm(2, x.conductor());
    if (M > conductor_cap()) {
        for (int k = 0; k < x.conductor(); ++k)
            if (root_of_unity(x.conductor(), k) == x) return std::make_pair(x.conductor(), k);
        return std::nullopt;
    }
    CycScalar y = x.embed(M);
    for (int k = 0; k < M; ++k)
        if (root_of_unity(M, k) == y) return std::make_pair(M, k);
    return std::nullopt;
}

/// Quantum integer (n)_q = 1 + q + ... + q^(n-1).
inline CycScalar q_number(int n, const CycScalar& q) {
    if (n < 0) throw std::domain_error("q_number: n must be nonnegative");
    CycScalar sum(0);
    CycScalar p(1);
    for (int j = 0; j < n; ++j) {
        sum += p;
        p = p * q;
    }
    return sum;
}

inline CycScalar q_factorial(int n, const CycScalar& q) {
    if (n < 0) throw std::domain_error("q_factorial: n must be nonnegative");
    CycScalar f(1);
    for (int k = 1; k <= n; ++k) f = f * q_number(k, q);
    return f;
}

/// Gaussian binomial by the Pascal rule binom(n,k) = binom(n-1,k-1) + q^k binom(n-1,k).
inline CycScalar q_binomial(int n, int k, const CycScalar& q) {
    if (n < 0 || k < 0) throw std::domain_error("q_binomial: negative argument");
    if (k > n) throw std::domain_error("q_binomial: k > n");
    std::vector<CycScalar> qp(k + 1);
    qp[0] = CycScalar(1);
    for (int j = 1; j <= k; ++j) qp[j] = qp[j - 1] * q;
    // row[j] holds binom(m, j) for the current m
    std::vector<CycScalar> row(k + 1, CycScalar(0));
    row[0] = CycScalar(1);
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j) row[j] = row[j - 1] + qp[j] * row[j];
    }
    return row[k];
}

}  // namespace nichols
