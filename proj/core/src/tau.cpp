#include "hmf/tau.hpp"

#include "hmf/errors.hpp"

#include <ostream>

namespace hmf {

std::vector<BigInt> ramanujan_tau(std::int64_t N, std::int64_t max_n)
{
    if (N < 1) throw InvalidArgument("tau table needs N >= 1");
    if (N > max_n) throw BudgetExceededError("tau table limited to N <= " + std::to_string(max_n));

    // prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2} over k in Z
    std::vector<std::pair<long, int>> pent;
    for (long k = 1;; ++k) {
        long a = k * (3 * k - 1) / 2, b = k * (3 * k + 1) / 2;
        if (a > N) break;
        int s = (k % 2) ? -1 : 1;
        pent.emplace_back(a, s);
        if (b <= N) pent.emplace_back(b, s);
    }

    constexpr long alpha = 24;
    std::vector<BigInt> g(static_cast<std::size_t>(N));  // g_n for n < N
    g[0] = 1;
    BigInt acc;
    for (long n = 1; n < N; ++n) {
        acc = 0;
        for (auto const & [k, s] : pent) {
            if (k > n) break;
            long c = (alpha + 1) * k - n;
            if (c == 0) continue;
            BigInt const & gk = g[n - k];
            bool add = (c > 0) == (s > 0);
            unsigned long m = static_cast<unsigned long>(c > 0 ? c : -c);
            if (add) mpz_addmul_ui(acc.get_mpz_t(), gk.get_mpz_t(), m);
            else mpz_submul_ui(acc.get_mpz_t(), gk.get_mpz_t(), m);
        }
        mpz_divexact_ui(g[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
    }

    std::vector<BigInt> tau(static_cast<std::size_t>(N) + 1);
    for (long n = 1; n <= N; ++n) tau[n] = g[n - 1];
    return tau;
}

std::int64_t verify_tau_identities(std::vector<BigInt> const & tau)
{
    std::int64_t N = static_cast<std::int64_t>(tau.size()) - 1;
    if (N < 1) return 0;
    std::vector<std::int64_t> spf(static_cast<std::size_t>(N) + 1, 0);
    for (std::int64_t i = 2; i <= N; ++i)
        if (spf[i] == 0)
            for (std::int64_t j = i; j <= N; j += i)
                if (spf[j] == 0) spf[j] = i;

    if (tau[1] != 1) throw IdentityFailure("tau(1) != 1");
    std::int64_t checked = 0;
    BigInt rhs;
    for (std::int64_t p = 2; p <= N; ++p) {
        if (spf[p] != p) continue;
        BigInt p11 = ipow(BigInt(static_cast<long>(p)), 11);
        // prime-power recurrence, including tau(p^2) = tau(p)^2 - p^11
        std::int64_t prev = 1, cur = p;
        while (cur <= N / p) {
            std::int64_t next = cur * p;
            rhs = tau[p] * tau[cur] - p11 * tau[prev];
            if (tau[next] != rhs)
                throw IdentityFailure("tau(" + std::to_string(next) + ") violates the prime power recurrence");
            ++checked;
            prev = cur;
            cur = next;
        }
    }
    for (std::int64_t n = 2; n <= N; ++n) {
        std::int64_t p = spf[n], pe = 1, m = n;
        while (m % p == 0) {
            m /= p;
            pe *= p;
        }
        if (m == 1) continue;
        rhs = tau[pe] * tau[m];
        if (tau[n] != rhs)
            throw IdentityFailure("tau(" + std::to_string(n) + ") != tau(" + std::to_string(pe) + ") tau(" +
                                  std::to_string(m) + ")");
        ++checked;
    }
    return checked;
}

std::vector<TauPrime> tau_primes(std::vector<BigInt> const & tau)
{
    std::int64_t N = static_cast<std::int64_t>(tau.size()) - 1;
    std::vector<TauPrime> out;
    for (std::int64_t p = 2; p <= N; ++p) {
        if (!is_prime(p)) continue;
        TauPrime tp;
        tp.p = p;
        tp.tau_p = tau[p];
        BigInt pb(static_cast<long>(p));
        tp.lambda = Rational(abs(tau[p]), ipow(pb, 5));
        tp.lambda.canonicalize();
        if (p <= N / p) {
            tp.has_tp2 = true;
            tp.tp2 = Rational(tau[p * p], ipow(pb, 10));
            tp.tp2.canonicalize();
        }
        out.push_back(std::move(tp));
    }
    return out;
}

Dataset tau_dataset(std::vector<TauPrime> const & primes)
{
    Dataset ds;
    ds.field = "Q";
    ds.level = "1";
    ds.provenance["source"] = "Ramanujan tau, weight 12 level 1";
    EigenRecord r;
    r.lambda_inf = {-30.0};
    r.xi = {0};
    for (auto const & tp : primes) r.lambda_p[PrimeLabel{tp.p, 0}] = tp.lambda.get_d();
    r.weight = 1.0;
    r.src = "tau";
    ds.records.push_back(std::move(r));
    return ds;
}

void write_tau_table(std::ostream & out, std::vector<TauPrime> const & primes)
{
    out << "p,tau_p,lambda_p,tp2\n";
    for (auto const & tp : primes) {
        out << tp.p << ',' << tp.tau_p.get_str() << ',' << tp.lambda.get_str() << ',';
        if (tp.has_tp2) out << tp.tp2.get_str();
        out << '\n';
    }
}

}  // namespace hmf
