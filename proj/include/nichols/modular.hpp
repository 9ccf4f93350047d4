#pragma once

#include "nichols/linalg.hpp"

#include <boost/container/small_vector.hpp>

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nichols {

namespace modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 add(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 power(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}
inline u64 inverse(u64 a, u64 p) { return power(a, p - 2, p); }

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = power(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mul(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

/// a/b with |a|, b <= sqrt(p/2) and a = x b mod p, when it exists.
inline std::optional<Rational> reconstruct(u64 x, u64 p) {
    if (x == 0) return Rational(0);
    const long double bound = sqrtl(static_cast<long double>(p) / 2.0L);
    __int128 r0 = p, r1 = x, t0 = 0, t1 = 1;
    while (static_cast<long double>(r1) > bound) {
        __int128 q = r0 / r1;
        __int128 r2 = r0 - q * r1;
        __int128 t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    __int128 tt = t1 < 0 ? -t1 : t1;
    if (static_cast<long double>(tt) > bound) return std::nullopt;
    __int128 num = t1 < 0 ? -r1 : r1;
    return Rational(static_cast<long long>(num), static_cast<long long>(tt));
}

/// Z[zeta_N] modulo a prime p = 1 mod N, stored through the phi evaluations zeta -> r^k, gcd(k, N) = 1.
struct Field {
    u64 p = 0;
    int N = 1;
    int phi = 1;
    std::vector<std::vector<u64>> powers;  // powers[k][j] = r_k^j, j < N
    std::vector<std::vector<u64>> vinv;    // inverse Vandermonde: coefficient j = sum_k vinv[j][k] y_k

    static std::shared_ptr<const Field> make(int N, int attempt) {
        static std::mutex mu;
        static std::map<std::pair<int, int>, std::shared_ptr<const Field>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(N, attempt);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto f = std::make_shared<Field>();
        f->N = N;
        const u64 top = (1ULL << 61);
        u64 k = top / static_cast<u64>(N);
        int found = -1;
        while (true) {
            u64 cand = k * static_cast<u64>(N) + 1;
            if (is_prime(cand) && ++found == attempt) {
                f->p = cand;
                break;
            }
            --k;
        }
        const u64 p = f->p;
        // element of exact order N
        u64 r = 1;
        std::vector<int> primes;
        for (int q = 2, n = N; q <= n; ++q)
            if (n % q == 0) {
                primes.push_back(q);
                while (n % q == 0) n /= q;
            }
        for (u64 a = 2;; ++a) {
            r = power(a, (p - 1) / static_cast<u64>(N), p);
            bool ok = N == 1 ? r == 1 : true;
            for (int q : primes)
                if (power(r, static_cast<u64>(N / q), p) == 1) ok = false;
            if (ok) break;
        }
        std::vector<u64> evals;
        for (int e = 1; e <= N; ++e)
            if (std::gcd(e, N) == 1) evals.push_back(power(r, static_cast<u64>(e % N), p));
        f->phi = static_cast<int>(evals.size());
        const int phi = f->phi;
        f->powers.assign(phi, std::vector<u64>(static_cast<std::size_t>(N), 1));
        for (int i = 0; i < phi; ++i)
            for (int j = 1; j < N; ++j) f->powers[i][j] = mul(f->powers[i][j - 1], evals[i], p);
        // invert V[k][j] = r_k^j (j < phi)
        std::vector<std::vector<u64>> M(phi, std::vector<u64>(2 * phi, 0));
        for (int i = 0; i < phi; ++i) {
            for (int j = 0; j < phi; ++j) M[i][j] = f->powers[i][j];
            M[i][phi + i] = 1;
        }
        for (int c = 0; c < phi; ++c) {
            int piv = c;
            while (M[piv][c] == 0) ++piv;
            std::swap(M[piv], M[c]);
            u64 inv = inverse(M[c][c], p);
            for (auto& x : M[c]) x = mul(x, inv, p);
            for (int i = 0; i < phi; ++i) {
                if (i == c || M[i][c] == 0) continue;
                u64 fct = M[i][c];
                for (int j = 0; j < 2 * phi; ++j) M[i][j] = sub(M[i][j], mul(fct, M[c][j], p), p);
            }
        }
        // M now holds [I | V^{-1}] with rows indexed by evaluation points; V^{-1}[j][k]
        f->vinv.assign(phi, std::vector<u64>(phi));
        for (int j = 0; j < phi; ++j)
            for (int k2 = 0; k2 < phi; ++k2) f->vinv[j][k2] = M[j][phi + k2];
        cache.emplace(key, f);
        return f;
    }

    u64 reduce(const Rational& r) const {
        mpq_class q = r.to_mpq();
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class pm;
        mpz_set_ui(pm.get_mpz_t(), 0);
        mpz_import(pm.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
        mpz_class a = num % pm;
        if (a < 0) a += pm;
        mpz_class b = den % pm;
        if (b == 0) throw std::domain_error("modular: denominator divisible by p");
        u64 av = 0, bv = 0;
        mpz_export(&av, nullptr, 1, sizeof(u64), 0, 0, a.get_mpz_t());
        mpz_export(&bv, nullptr, 1, sizeof(u64), 0, 0, b.get_mpz_t());
        return mul(av, inverse(bv, p), p);
    }
};

using Elem = boost::container::small_vector<u64, 8>;

}  // namespace modp

/// Elimination over Z[zeta_N]/p viewed as a product of prime fields.
class ModTrackedEchelon {
public:
    struct BadPrime : std::runtime_error {
        BadPrime() : std::runtime_error("modular: pivot vanishes in part of the components") {}
    };

    ModTrackedEchelon(std::shared_ptr<const modp::Field> F, std::size_t length) : F_(std::move(F)), n_(length) {}

    modp::Elem convert(const CycScalar& x) const {
        const int phi = F_->phi;
        const modp::u64 p = F_->p;
        modp::Elem out(static_cast<std::size_t>(phi), 0);
        if (x.is_zero()) return out;
        const int N = F_->N;
        if (N % x.conductor() != 0) throw std::domain_error("modular: conductor mismatch");
        const int step = N / x.conductor();
        const auto& c = x.coeffs();
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j].is_zero()) continue;
            modp::u64 cj = small_reduce(c[j]);
            const std::size_t e = (j * static_cast<std::size_t>(step)) % static_cast<std::size_t>(N);
            for (int k = 0; k < phi; ++k) out[k] = modp::add(out[k], modp::mul(cj, F_->powers[k][e], p), p);
        }
        return out;
    }

    std::optional<CycScalar> lift(const modp::Elem& y) const {
        const int phi = F_->phi;
        const modp::u64 p = F_->p;
        std::vector<Rational> coeffs(static_cast<std::size_t>(phi));
        for (int j = 0; j < phi; ++j) {
            modp::u64 s = 0;
            for (int k = 0; k < phi; ++k) s = modp::add(s, modp::mul(F_->vinv[j][k], y[k], p), p);
            auto r = modp::reconstruct(s, p);
            if (!r) return std::nullopt;
            coeffs[j] = *r;
        }
        return CycScalar::from_coeffs(F_->N, coeffs);
    }

    /// Same contract as TrackedEchelon::add, with coordinates modulo p.
    std::optional<std::vector<modp::Elem>> add(std::vector<modp::Elem> v) {
        const int phi = F_->phi;
        const modp::u64 p = F_->p;
        const std::size_t r = rows_.size();
        std::vector<modp::Elem> coords(r, modp::Elem(static_cast<std::size_t>(phi), 0));
        for (std::size_t q = 0; q < r; ++q) {
            const modp::Elem lam = v[pivots_[q]];
            if (is_zero(lam)) continue;
            const auto& row = rows_[q];
            for (std::size_t k = pivots_[q]; k < n_; ++k) {
                if (is_zero(row[k])) continue;
                for (int c = 0; c < phi; ++c) v[k][c] = modp::sub(v[k][c], modp::mul(lam[c], row[k][c], p), p);
            }
            const auto& t = transforms_[q];
            for (std::size_t g = 0; g < t.size(); ++g) {
                if (is_zero(t[g])) continue;
                for (int c = 0; c < phi; ++c)
                    coords[g][c] = modp::add(coords[g][c], modp::mul(lam[c], t[g][c], p), p);
            }
        }
        std::size_t piv = 0;
        while (piv < n_ && is_zero(v[piv])) ++piv;
        if (piv == n_) return coords;
        modp::Elem inv(static_cast<std::size_t>(phi));
        for (int c = 0; c < phi; ++c) {
            if (v[piv][c] == 0) throw BadPrime();
            inv[c] = modp::inverse(v[piv][c], p);
        }
        for (std::size_t k = piv; k < n_; ++k)
            for (int c = 0; c < phi; ++c) v[k][c] = modp::mul(v[k][c], inv[c], p);
        std::vector<modp::Elem> t(r + 1, modp::Elem(static_cast<std::size_t>(phi), 0));
        for (std::size_t g = 0; g < r; ++g)
            for (int c = 0; c < phi; ++c) t[g][c] = modp::sub(0, modp::mul(coords[g][c], inv[c], p), p);
        t[r] = inv;
        for (auto& old : transforms_) old.emplace_back(static_cast<std::size_t>(phi), 0);
        transforms_.push_back(std::move(t));
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return std::nullopt;
    }

private:
    std::shared_ptr<const modp::Field> F_;
    std::size_t n_;
    std::vector<std::vector<modp::Elem>> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<modp::Elem>> transforms_;

    static bool is_zero(const modp::Elem& e) {
        for (auto x : e)
            if (x) return false;
        return true;
    }

    modp::u64 small_reduce(const Rational& r) const {
        const modp::u64 p = F_->p;
        if (r.is_small()) {
            long long n = r.numerator_ll(), d = r.denominator_ll();
            modp::u64 a = n >= 0 ? static_cast<modp::u64>(n) % p : p - (static_cast<modp::u64>(-(n + 1)) + 1) % p;
            if (a == p) a = 0;
            if (d == 1) return a;
            modp::u64 b = static_cast<modp::u64>(d) % p;
            if (b == 0) throw std::domain_error("modular: denominator divisible by p");
            return modp::mul(a, modp::inverse(b, p), p);
        }
        return F_->reduce(r);
    }
};

}  // namespace nichols
