#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace symq {

/// Exact fraction with a 64-bit numerator/denominator, always reduced,
/// denominator > 0. Large enough for every quantity this library tracks
/// exactly (multiplicity estimates, adversary probabilities, L1 distances);
/// intermediate products go through 128-bit arithmetic.
struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;
    Frac(long long n) : num(n), den(1) {}
    Frac(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::invalid_argument("Frac: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Frac operator+(const Frac& a, const Frac& b) {
        __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        return make_checked(n, d);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        __int128 n = static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        return make_checked(n, d);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        __int128 n = static_cast<__int128>(a.num) * b.num;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        return make_checked(n, d);
    }
    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Frac& a, const Frac& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Frac& a, const Frac& b) { return a == b || a < b; }
    friend bool operator>(const Frac& a, const Frac& b) { return b < a; }

    Frac abs() const { return num < 0 ? Frac(-num, den) : *this; }

private:
    static Frac make_checked(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 an = n < 0 ? -n : n;
        __int128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("Frac: 64-bit overflow after reduction");
        Frac f;
        f.num = static_cast<long long>(n);
        f.den = static_cast<long long>(d);
        return f;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a;
    }
};

/// Exponent fraction c = num/den for thresholds of the form y / T^c.
/// Restricted to c in (0, 1].
struct CExp {
    int num = 2;
    int den = 7;

    CExp() = default;
    CExp(int n, int d) : num(n), den(d) {
        if (d <= 0 || n <= 0 || n > d)
            throw std::invalid_argument("CExp: exponent must lie in (0, 1]");
        int g = std::gcd(n, d);
        num = n / g;
        den = d / g;
    }

    double to_double() const { return static_cast<double>(num) / den; }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Parses "2/7" or "1" into a CExp.
inline CExp parse_cexp(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return CExp(std::stoi(s), 1);
    return CExp(std::stoi(s.substr(0, slash)), std::stoi(s.substr(slash + 1)));
}

}  // namespace symq
