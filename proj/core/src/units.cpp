#include "hmf/units.hpp"

#include "hmf/errors.hpp"

#include <cmath>

namespace hmf {

namespace {

BigInt isqrt(BigInt const & n)
{
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace

bool is_unit(NumberField const & F, FieldElement const & x)
{
    if (!x.is_integral() || x.is_zero()) return false;
    Rational n = F.norm(x);
    return n == 1 || n == -1;
}

UnitGroupData unit_group(NumberField const & F)
{
    UnitGroupData out;
    if (F.degree() == 1) {
        out.signs = {1};
        return out;
    }
    // omega = (P + sqrt D)/Q as a quadratic surd
    BigInt D = F.radicand();
    BigInt P = F.omega_trace();
    BigInt Q = F.omega_trace() == 1 ? 2 : 1;
    BigInt s = isqrt(D);

    BigInt h_prev = 1, h_prev2 = 0;
    BigInt k_prev = 0, k_prev2 = 1;
    BigInt t = F.omega_trace();
    for (int iter = 0; iter < 100000; ++iter) {
        if (Q <= 0) throw IdentityFailure("continued fraction left the reduced range");
        BigInt a = floor_div(P + s, Q);
        BigInt h = a * h_prev + h_prev2;
        BigInt k = a * k_prev + k_prev2;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;

        // h/k approximates omega, so h - k*conj(omega) is the large conjugate
        FieldElement cand = F.make(Rational(h - k * t), Rational(k));
        Rational nm = F.norm(cand);
        if (k > 0 && (nm == 1 || nm == -1) && F.embed(cand)[0] > 1.0) {
            out.fundamental = cand;
            out.fundamental_norm = nm;
            auto e = F.embed(cand);
            out.signs = {e[0] > 0 ? 1 : -1, e[1] > 0 ? 1 : -1};
            out.log_regulator = std::log(e[0]);
            return out;
        }

        BigInt P2 = a * Q - P;
        BigInt Q2 = (D - P2 * P2) / Q;
        P = P2;
        Q = Q2;
    }
    throw BudgetExceededError("continued fraction period too long for " + F.spec());
}

std::optional<FieldElement> unit_square_class(NumberField const & F, FieldElement const & r,
                                              FieldElement const & rp)
{
    if (r.is_zero() || rp.is_zero()) throw InvalidArgument("unit_square_class needs nonzero r, r'");
    FieldElement q = F.div(r, rp);
    if (q == F.one()) return F.one();
    if (F.degree() == 1) return std::nullopt;
    if (!q.is_integral() || F.norm(q) != 1) return std::nullopt;
    auto e = F.embed(q);
    if (e[0] <= 0 || e[1] <= 0) return std::nullopt;

    UnitGroupData U = unit_group(F);
    long k = std::lround(std::log(e[0]) / (2.0 * U.log_regulator));
    FieldElement eps = F.pow(*U.fundamental, k);
    if (F.mul(eps, eps) == q) return eps;
    return std::nullopt;
}

}  // namespace hmf
