#include "hmf/cosets.hpp"
#include "hmf/equidist.hpp"
#include "hmf/errors.hpp"
#include "hmf/hecke.hpp"
#include "hmf/kloosterman.hpp"
#include "hmf/measures.hpp"
#include "hmf/satake.hpp"
#include "hmf/tau.hpp"
#include "hmf/units.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace hmf;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, std::string const & what)
    {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

FieldElement random_nonzero(NumberField const & F, std::mt19937_64 & gen, int bound)
{
    std::uniform_int_distribution<int> U(-bound, bound);
    for (;;) {
        FieldElement x = F.degree() == 1 ? F.from_integer(U(gen)) : F.make(U(gen), U(gen));
        if (!x.is_zero()) return x;
    }
}

Outcome hecke_relation()
{
    Outcome o;
    auto start = Clock::now();
    for (std::int64_t p : {2, 3, 5}) {
        auto r = brute_force_convolution(p, 1, 1);
        std::vector<Rational> expected{Rational(p * p), Rational(p), Rational(1)};
        o.require(r.product.coeffs == expected, "T(p^2)*T(p^2) mismatch at p = " + std::to_string(p));
    }
    double t = seconds_since(start);
    o.require(t < 10.0, "runtime " + fmt(t) + " s");
    if (o.pass) o.detail = "p = 2, 3, 5 exact in " + fmt(t) + " s";
    return o;
}

Outcome isomorphism()
{
    Outcome o;
    std::mt19937_64 gen(500);
    std::uniform_int_distribution<int> len(1, 6), num(-50, 50), den(1, 12);
    PrimeLabel label{2, 0};
    for (int i = 0; i < 500; ++i) {
        std::int64_t N = std::vector<std::int64_t>{2, 3, 4, 5, 7, 9}[static_cast<std::size_t>(i % 6)];
        auto draw = [&] {
            LocalHeckeElement e = LocalHeckeElement::unit(label, N);
            e.coeffs.resize(static_cast<std::size_t>(len(gen)));
            for (auto & c : e.coeffs) {
                c = Rational(num(gen), den(gen));
                c.canonicalize();
            }
            e.trim();
            return e;
        };
        auto a = draw(), b = draw();
        auto via = from_sym_laurent(laurent_multiply(to_sym_laurent(a), to_sym_laurent(b)), label, N);
        o.require(multiply(a, b) == via, "pair " + std::to_string(i) + " differs");
    }
    if (o.pass) o.detail = "500 random pairs equal";
    return o;
}

Outcome orthogonality()
{
    Outcome o;
    auto F = NumberField::real_quadratic(5);
    auto inert = prime_from_label(F, {2, 0});
    std::vector<std::pair<PrimeLabel, std::int64_t>> primes{{{2, 0}, 2}, {{3, 0}, 3}, {{5, 0}, 5}, {{7, 0}, 7},
                                                           {inert.label, inert.norm()}};
    o.require(inert.norm() == 4, "prime 2:0 of Q(sqrt 5) is not inert");
    double worst = 0.0;
    for (auto const & [label, N] : primes) {
        SatoTateMeasure mu(label, N);
        o.require(std::abs(mu.polynomial(s_poly(N, 0)) - 1.0) < 1e-12, "Phi(S_0) != 1 at N = " + std::to_string(N));
        for (int k = 1; k <= 6; ++k) {
            double v = std::abs(mu.polynomial(s_poly(N, k)));
            worst = std::max(worst, v);
            o.require(v < 1e-8, "Phi(S_2k) = " + fmt(v) + " at N = " + std::to_string(N));
        }
    }
    if (o.pass) o.detail = "max |Phi(S_2k)| = " + fmt(worst);
    return o;
}

Outcome bookkeeping()
{
    Outcome o;
    o.require(SpectralMeasure::plancherel(0).measure_interval(0.0, 0.0).value == 1.0, "pl0({0}) != 1");
    o.require(SpectralMeasure::plancherel(1).measure_interval(-0.75, -0.75).value == 2.0, "pl1({-3/4}) != 2");
    std::mt19937_64 gen(50);
    std::uniform_real_distribution<double> U(-8.0, 4.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        double a = U(gen), b = U(gen);
        if (a > b) std::swap(a, b);
        auto [npl, pl] = npl_consistency(a, b, i % 2);
        worst = std::max(worst, std::abs(npl - pl));
    }
    o.require(worst < 1e-8, "npl/pl deviation " + fmt(worst));
    if (o.pass) o.detail = "atoms exact, max npl/pl deviation " + fmt(worst);
    return o;
}

Outcome kloosterman_sums()
{
    Outcome o;
    auto start = Clock::now();
    auto Q = NumberField::rational();
    auto chiQ = DirichletCharacter::trivial(Q, Ideal::unit(Q));
    auto S = [&](std::int64_t c) { return kloosterman(Q, chiQ, {Q.from_integer(c), Q.one(), Q.one()}); };
    o.require(std::abs(S(2) - 1.0) < 1e-9, "S(1,1;2)");
    o.require(std::abs(S(3) + 1.0) < 1e-9, "S(1,1;3)");
    o.require(std::abs(S(5) - (3.0 - std::sqrt(5.0)) / 2.0) < 1e-9, "S(1,1;5)");

    auto F = NumberField::real_quadratic(5);
    auto chiF = DirichletCharacter::trivial(F, Ideal::unit(F));
    std::mt19937_64 gen(200);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        NumberField const & K = i % 2 ? F : Q;
        auto const & chi = i % 2 ? chiF : chiQ;
        auto g = inverse_different_generator(K);
        auto c = random_nonzero(K, gen, 12);
        auto r = K.mul(g, random_nonzero(K, gen, 6));
        auto rp = K.mul(g, random_nonzero(K, gen, 6));
        worst = std::max(worst, symmetry_check(K, chi, {c, r, rp}).max_deviation());
    }
    o.require(worst <= 1e-9, "symmetry deviation " + fmt(worst));

    WeilScanOptions opt;
    opt.max_norm = 500;
    auto scan = weil_scan(Q, chiQ, Q.one(), Q.one(), opt);
    double worst_prime = 0.0;
    for (auto const & row : scan.rows)
        if (row.prime_modulus) worst_prime = std::max(worst_prime, row.weil_ratio);
    o.require(scan.rows.size() == 500, "scan covered " + std::to_string(scan.rows.size()) + " moduli");
    o.require(worst_prime <= 1.0 + 1e-9, "prime Weil ratio " + fmt(worst_prime));
    double t = seconds_since(start);
    o.require(t < 60.0, "runtime " + fmt(t) + " s");
    if (o.pass)
        o.detail = "symmetry " + fmt(worst) + ", max prime ratio " + fmt(worst_prime) + ", " + fmt(t) + " s";
    return o;
}

Outcome delta()
{
    Outcome o;
    auto Q = NumberField::rational();
    auto F = NumberField::real_quadratic(5);
    auto chiQ = DirichletCharacter::trivial(Q, Ideal::unit(Q));
    auto chiF = DirichletCharacter::trivial(F, Ideal::unit(F));
    auto gF = inverse_different_generator(F);
    o.require(std::abs(delta_term(Q, chiQ, Q.one(), Q.one(), {0}) - 1.0) < 1e-15, "Q: delta(1, 1) != 1");
    o.require(std::abs(delta_term(F, chiF, gF, gF, {0, 0}) - 1.0) < 1e-15, "Q(sqrt 5): delta(r, r) != 1");

    auto eps = *unit_group(F).fundamental;
    std::mt19937_64 gen(100);
    int cases = 0;
    while (cases < 100) {
        bool quad = cases % 2 == 1;
        NumberField const & K = quad ? F : Q;
        auto g = inverse_different_generator(K);
        auto x = random_nonzero(K, gen, 8), y = random_nonzero(K, gen, 8);
        auto q = K.div(x, y);
        bool square = q == K.one();
        if (quad)
            for (int k = -12; k <= 12; ++k) square = square || q == K.pow(eps, 2 * k);
        if (square) continue;
        auto d = delta_term(K, quad ? chiF : chiQ, K.mul(g, x), K.mul(g, y), std::vector<int>(K.degree(), 0));
        o.require(d == std::complex<double>(0.0), "nonzero delta for " + K.format(q));
        ++cases;
    }
    if (o.pass) o.detail = "delta(r, r) = 1 over Q and Q(sqrt 5); 100 non-square cases give 0";
    return o;
}

Outcome tau_oracle()
{
    Outcome o;
    auto start = Clock::now();
    auto tau = ramanujan_tau(100000);
    o.require(tau[2] == -24 && tau[3] == 252 && tau[4] == -1472, "tau(2), tau(3), tau(4)");
    std::int64_t checked = verify_tau_identities(tau);
    auto primes = tau_primes(tau);
    o.require(!primes.empty() && primes[0].p == 2, "no data at p = 2");
    if (o.pass) {
        o.require(primes[0].lambda == Rational(3, 4), "lambda_2 != 3/4");
        Rational tau4(tau[4], BigInt(1024));
        tau4.canonicalize();
        o.require(s_poly(2, 1).eval(Rational(3, 4)) == tau4, "S_2,2(3/4) != tau(4)/2^10");
        o.require(primes[0].tp2 == tau4, "T(4) eigenvalue != tau(4)/2^10");
    }
    double t = seconds_since(start);
    o.require(t < 30.0, "runtime " + fmt(t) + " s");
    if (o.pass) o.detail = std::to_string(checked) + " identities to 1e5 in " + fmt(t) + " s";
    return o;
}

Outcome closure()
{
    Outcome o;
    auto start = Clock::now();
    // 2 and 3 both split in Q(sqrt 73), so J_2 and J_3 refer to primes of norm 2 and 3
    auto F = NumberField::real_quadratic(73);
    Box box{{0, 0}, {0}, {{1, 0.3, 1.2}}};
    double t = 100.0, covolume = 1.0;
    SynthOptions opt;
    opt.count = 100000;
    opt.seed = 8;
    auto ds = synthesize(F, box, t, {{2, 0}, {3, 0}}, opt);
    calibrate_weights(ds, predict(F, covolume, box, t, {}).total);
    auto J = parse_windows(F, "2:0=0:1,3:0=1:2");
    double ratio = count(ds, box, t, J) / predict(F, covolume, box, t, J).total;
    o.require(ratio >= 0.97 && ratio <= 1.03, "ratio " + fmt(ratio));

    auto ex = parse_windows(F, "2:0=2.8285:3");
    double pred = predict(F, covolume, box, t, ex).total;
    double cnt = count(ds, box, t, ex);
    o.require(pred == 0.0 && cnt == 0.0, "exceptional window: prediction " + fmt(pred) + ", count " + fmt(cnt));
    double secs = seconds_since(start);
    o.require(secs < 60.0, "runtime " + fmt(secs) + " s");
    if (o.pass) o.detail = "ratio " + fmt(ratio) + ", exceptional window 0/0, " + fmt(secs) + " s";
    return o;
}

Outcome parametrization()
{
    Outcome o;
    double worst = 0.0;
    for (std::int64_t N : {2, 3, 4, 5, 7, 9, 11, 13, 25}) {
        PrimeLabel label{2, 0};
        double n = static_cast<double>(N);
        o.require(lambda_from_nu(SatakeParam::imag(label, N, 0.0)).lambda == 2.0 * std::sqrt(n),
                  "lambda(0) != 2 sqrt N at N = " + std::to_string(N));
        o.require(lambda_from_nu(SatakeParam::real(label, N, 0.5)).lambda == n + 1.0,
                  "lambda(1/2) != N + 1 at N = " + std::to_string(N));
        for (int i = 0; i < 1000; ++i) {
            double lam = (n + 1.0) * i / 999.0;
            auto back = lambda_from_nu(nu_from_lambda({label, N, lam})).lambda;
            worst = std::max(worst, std::abs(back - lam));
        }
    }
    o.require(worst <= 1e-12, "roundtrip error " + fmt(worst));
    if (o.pass) o.detail = "max roundtrip error " + fmt(worst) + ", endpoints exact";
    return o;
}

}  // namespace

int main()
{
    std::vector<std::function<Outcome()>> criteria{hecke_relation, isomorphism,  orthogonality,
                                                   bookkeeping,    kloosterman_sums, delta,
                                                   tau_oracle,     closure,      parametrization};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (std::exception const & ex) {
            o.pass = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        std::printf("%s criterion %zu: %s\n", o.pass ? "PASS" : "FAIL", i + 1, o.detail.c_str());
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
