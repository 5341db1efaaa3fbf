#include "hmf/rational.hpp"

#include "hmf/errors.hpp"

#include <vector>

namespace hmf {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto strip = [](std::string & t) {
        while (!t.empty() && (t.front() == ' ' || t.front() == '+')) t.erase(t.begin());
        while (!t.empty() && t.back() == ' ') t.pop_back();
    };
    strip(s);
    if (s.empty()) throw InvalidArgument("empty rational literal");
    auto valid = [](std::string const & t) {
        std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    strip(num);
    strip(den);
    if (!valid(num) || !valid(den)) throw InvalidArgument("malformed rational '" + s + "'");
    BigInt n(num), d(den);
    if (d == 0) throw InvalidArgument("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(Rational const & q) { return q.get_str(); }
std::string to_string(BigInt const & z) { return z.get_str(); }

double to_double(Rational const & q) { return q.get_d(); }

Rational frac(Rational const & q)
{
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rational r = q - Rational(fl);
    r.canonicalize();
    return r;
}

BigInt floor_div(BigInt const & a, BigInt const & b)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

std::int64_t to_int64(BigInt const & z)
{
    if (!mpz_fits_slong_p(z.get_mpz_t()))
        throw InvalidArgument("integer " + z.get_str() + " exceeds 64-bit range");
    return z.get_si();
}

BigInt ipow(BigInt const & base, unsigned exponent)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational ipow(Rational const & base, unsigned exponent)
{
    Rational r(ipow(BigInt(base.get_num()), exponent), ipow(BigInt(base.get_den()), exponent));
    r.canonicalize();
    return r;
}

bool is_prime(std::int64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<PrimePower> factor_integer(std::int64_t n)
{
    if (n == 0) throw InvalidArgument("cannot factor 0");
    if (n < 0) n = -n;
    std::vector<PrimePower> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

bool is_squarefree(std::int64_t n)
{
    if (n == 0) return false;
    for (auto const & pp : factor_integer(n))
        if (pp.exponent > 1) return false;
    return true;
}

}  // namespace hmf
