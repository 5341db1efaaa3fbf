#include "hmf/hecke.hpp"

#include "hmf/errors.hpp"

#include <algorithm>

namespace hmf {

namespace {

void trim_zeros(std::vector<Rational> & v)
{
    while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<Rational> mul_by_T2(std::vector<Rational> const & v, Rational const & N)
{
    std::vector<Rational> out(v.size() + 1, 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        out[k + 1] += v[k];
        if (k >= 1) {
            out[k] += N * v[k];
            out[k - 1] += N * N * v[k];
        }
    }
    return out;
}

/* T(p^{2m}) as a polynomial in T(p^2). */
std::vector<std::vector<Rational>> basis_in_T2(int mmax, Rational const & N)
{
    std::vector<std::vector<Rational>> P;
    P.push_back({1});
    if (mmax >= 1) P.push_back({0, 1});
    for (int m = 1; m < mmax; ++m) {
        std::vector<Rational> next(m + 2, 0);
        for (std::size_t j = 0; j < P[m].size(); ++j) {
            next[j + 1] += P[m][j];
            next[j] -= N * P[m][j];
        }
        for (std::size_t j = 0; j < P[m - 1].size(); ++j) next[j] -= N * N * P[m - 1][j];
        P.push_back(std::move(next));
    }
    return P;
}

}  // namespace

LocalHeckeElement LocalHeckeElement::unit(PrimeLabel prime, std::int64_t prime_norm)
{
    return basis(prime, prime_norm, 0);
}

LocalHeckeElement LocalHeckeElement::basis(PrimeLabel prime, std::int64_t prime_norm, int k)
{
    if (k < 0) throw InvalidArgument("negative Hecke index");
    if (prime_norm < 2) throw InvalidArgument("prime norm must be at least 2");
    LocalHeckeElement e{prime, prime_norm, std::vector<Rational>(k + 1, 0)};
    e.coeffs[k] = 1;
    return e;
}

void LocalHeckeElement::trim() { trim_zeros(coeffs); }
void SymLaurentPoly::trim() { trim_zeros(coeffs); }

bool operator==(LocalHeckeElement const & a, LocalHeckeElement const & b)
{
    if (a.prime_norm != b.prime_norm) return false;
    std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    for (std::size_t k = 0; k < n; ++k)
        if (a.coefficient(k) != b.coefficient(k)) return false;
    return true;
}

LocalHeckeElement operator+(LocalHeckeElement const & a, LocalHeckeElement const & b)
{
    if (a.prime_norm != b.prime_norm || a.prime != b.prime) throw InvalidArgument("Hecke elements at different primes");
    LocalHeckeElement r = a;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) r.coeffs[k] += b.coeffs[k];
    r.trim();
    return r;
}

LocalHeckeElement operator*(Rational const & s, LocalHeckeElement const & a)
{
    LocalHeckeElement r = a;
    for (auto & c : r.coeffs) c *= s;
    r.trim();
    return r;
}

bool operator==(SymLaurentPoly const & a, SymLaurentPoly const & b)
{
    std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    for (std::size_t k = 0; k < n; ++k)
        if (a.coefficient(k) != b.coefficient(k)) return false;
    return true;
}

double Polynomial::eval(double x) const
{
    double acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i].get_d();
    return acc;
}

Rational Polynomial::eval(Rational const & x) const
{
    Rational acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

bool Polynomial::is_even() const
{
    for (std::size_t i = 1; i < coeffs.size(); i += 2)
        if (coeffs[i] != 0) return false;
    return true;
}

LocalHeckeElement multiply(LocalHeckeElement const & a, LocalHeckeElement const & b)
{
    if (a.prime != b.prime || a.prime_norm != b.prime_norm)
        throw InvalidArgument("cannot multiply Hecke elements at " + a.prime.to_string() + " and " + b.prime.to_string());
    Rational N(static_cast<long>(a.prime_norm));
    LocalHeckeElement out{a.prime, a.prime_norm, {}};
    if (a.coeffs.empty() || b.coeffs.empty()) return out;

    int mmax = static_cast<int>(b.coeffs.size()) - 1;
    auto P = basis_in_T2(mmax, N);
    std::vector<std::vector<Rational>> powers{a.coeffs};  // T(p^2)^j * a
    for (int j = 1; j <= mmax; ++j) powers.push_back(mul_by_T2(powers.back(), N));

    std::vector<Rational> acc(a.coeffs.size() + b.coeffs.size(), 0);
    for (int m = 0; m <= mmax; ++m) {
        if (b.coeffs[m] == 0) continue;
        for (std::size_t j = 0; j < P[m].size(); ++j) {
            if (P[m][j] == 0) continue;
            Rational s = b.coeffs[m] * P[m][j];
            for (std::size_t k = 0; k < powers[j].size(); ++k) acc[k] += s * powers[j][k];
        }
    }
    out.coeffs = std::move(acc);
    out.trim();
    return out;
}

SymLaurentPoly to_sym_laurent(LocalHeckeElement const & a)
{
    Rational N(static_cast<long>(a.prime_norm));
    SymLaurentPoly out{std::vector<Rational>(a.coeffs.size(), 0)};
    Rational Nk = 1;
    for (std::size_t k = 0; k < a.coeffs.size(); ++k, Nk *= N) {
        if (a.coeffs[k] == 0) continue;
        // N^k (1 + sum_{i=1}^k (X^{2i} + X^{-2i}))
        for (std::size_t i = 0; i <= k; ++i) out.coeffs[i] += a.coeffs[k] * Nk;
    }
    out.trim();
    return out;
}

LocalHeckeElement from_sym_laurent(SymLaurentPoly const & f, PrimeLabel prime, std::int64_t prime_norm)
{
    Rational N(static_cast<long>(prime_norm));
    std::vector<Rational> rest = f.coeffs;
    trim_zeros(rest);
    LocalHeckeElement out{prime, prime_norm, std::vector<Rational>(rest.size(), 0)};
    for (std::size_t k = rest.size(); k-- > 0;) {
        if (rest[k] == 0) continue;
        Rational c = rest[k] / ipow(N, static_cast<unsigned>(k));
        out.coeffs[k] = c;
        Rational step = c * ipow(N, static_cast<unsigned>(k));
        for (std::size_t i = 0; i <= k; ++i) rest[i] -= step;
    }
    out.trim();
    return out;
}

SymLaurentPoly laurent_multiply(SymLaurentPoly const & a, SymLaurentPoly const & b)
{
    // (X^{2i} + X^{-2i})(X^{2j} + X^{-2j}) = sym(i+j) + sym(|i-j|), sym(0) = 2
    SymLaurentPoly out{std::vector<Rational>(a.coeffs.size() + b.coeffs.size(), 0)};
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            Rational c = a.coeffs[i] * b.coeffs[j];
            if (c == 0) continue;
            if (i == 0 || j == 0) {
                out.coeffs[i + j] += c;
                continue;
            }
            out.coeffs[i + j] += c;
            std::size_t d = i > j ? i - j : j - i;
            out.coeffs[d] += d == 0 ? Rational(2 * c) : c;
        }
    }
    out.trim();
    return out;
}

Polynomial s_poly(std::int64_t prime_norm, int k)
{
    if (k < 0) throw InvalidArgument("s_poly needs k >= 0");
    // R_{n+1} = x R_n - N R_{n-1}, R_0 = 1, R_1 = x; S_{p,2k} = R_{2k}
    Rational N(static_cast<long>(prime_norm));
    std::vector<Rational> prev{1};
    if (k == 0) return {prev};
    std::vector<Rational> cur{0, 1};
    for (int n = 1; n < 2 * k; ++n) {
        std::vector<Rational> next(cur.size() + 1, 0);
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= N * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {cur};
}

}  // namespace hmf
