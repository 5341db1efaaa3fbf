#include "hmf/dataset.hpp"
#include "hmf/equidist.hpp"
#include "hmf/errors.hpp"
#include "hmf/hecke.hpp"
#include "hmf/tau.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

using namespace hmf;

namespace {

/* q prod_{n <= N} (1 - q^n)^24 multiplied out factor by factor. */
std::vector<BigInt> naive_tau(int N)
{
    std::vector<BigInt> c(static_cast<std::size_t>(N) + 1, 0);
    c[1] = 1;
    for (int n = 1; n < N; ++n)
        for (int rep = 0; rep < 24; ++rep)
            for (int i = N; i >= n; --i) c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - n)];
    return c;
}

Box closure_box() { return Box{{0, 0}, {0}, {{1, 0.3, 1.2}}}; }

EigenRecord record(std::vector<double> lam, std::vector<int> xi, double w, std::map<PrimeLabel, double> hp = {})
{
    EigenRecord r;
    r.lambda_inf = std::move(lam);
    r.xi = std::move(xi);
    r.weight = w;
    r.lambda_p = std::move(hp);
    return r;
}

}  // namespace

TEST_SUITE("equidist")
{
    TEST_CASE("tau coefficients")
    {
        auto tau = ramanujan_tau(400);
        auto naive = naive_tau(400);
        for (std::size_t n = 0; n <= 400; ++n) CHECK(tau[n] == naive[n]);
        CHECK(tau[1] == 1);
        CHECK(tau[2] == -24);
        CHECK(tau[3] == 252);
        CHECK(tau[4] == -1472);
        CHECK(tau[5] == 4830);
        CHECK(tau[9] == -113643);
        CHECK(verify_tau_identities(tau) > 0);
        CHECK_THROWS_AS(ramanujan_tau(100, 50), BudgetExceededError);
    }

    TEST_CASE("corrupted tau tables fail the identities")
    {
        auto tau = ramanujan_tau(200);
        tau[121] += 1;
        CHECK_THROWS_AS(verify_tau_identities(tau), IdentityFailure);
        tau = ramanujan_tau(200);
        tau[60] += 1;
        CHECK_THROWS_AS(verify_tau_identities(tau), IdentityFailure);
    }

    TEST_CASE("Hecke values of Delta")
    {
        auto primes = tau_primes(ramanujan_tau(100));
        REQUIRE(primes.size() >= 2);
        CHECK(primes[0].p == 2);
        CHECK(primes[0].lambda == Rational(3, 4));
        REQUIRE(primes[0].has_tp2);
        CHECK(primes[0].tp2 == Rational(-23, 16));
        Polynomial S = s_poly(2, 1);
        CHECK(S.eval(primes[0].lambda) == Rational(-23, 16));
        CHECK(primes[1].lambda == Rational(28, 27));
        for (auto const & tp : primes) {
            CHECK(to_double(tp.lambda) <= 2.0 * std::sqrt(static_cast<double>(tp.p)));
            if (tp.has_tp2) CHECK(tp.tp2 == tp.lambda * tp.lambda - tp.p);
        }

        Dataset ds = tau_dataset(primes);
        REQUIRE(ds.size() == 1);
        CHECK(ds.records[0].lambda_inf == std::vector<double>{-30.0});
        CHECK(ds.records[0].xi == std::vector<int>{0});
        CHECK(ds.records[0].lambda_p.at({2, 0}) == 0.75);
        CHECK_NOTHROW(ds.validate(NumberField::rational()));
    }

    TEST_CASE("level index")
    {
        auto Q = NumberField::rational();
        CHECK(level_index(Q, Ideal::unit(Q)) == 1);
        CHECK(level_index(Q, Ideal::principal(Q, Q.from_integer(6))) == 12);
        auto F = NumberField::real_quadratic(5);
        CHECK(level_index(F, Ideal::principal(F, F.parse_element("-1,2"))) == 6);
        CHECK(level_index(F, Ideal::principal(F, F.from_integer(2))) == 5);
    }

    TEST_CASE("window parsing")
    {
        auto F = NumberField::real_quadratic(73);
        auto J = parse_windows(F, "2:0=0:1,3:1=1:2");
        REQUIRE(J.size() == 2);
        CHECK(J[0].prime_norm == 2);
        CHECK(J[1].prime_norm == 3);
        CHECK(J[1].prime.index == 1);
        CHECK(J[1].b == 2.0);
        CHECK_THROWS_AS(parse_windows(F, "2:0=1"), InvalidArgument);
        CHECK_THROWS_AS(parse_windows(F, "2:0=2:1"), InvalidArgument);
        CHECK(parse_windows(F, "").empty());
    }

    TEST_CASE("count")
    {
        auto Q = NumberField::rational();
        Box box{{0}, {0}, {}};
        Dataset empty;
        CHECK(count(empty, box, 10.0, {}) == 0.0);

        Dataset ds;
        ds.records.push_back(record({1.0}, {0}, 2.0, {{{2, 0}, 0.5}}));
        ds.records.push_back(record({5.0}, {0}, 3.0, {{{2, 0}, 2.0}}));
        ds.records.push_back(record({1.0}, {1}, 7.0, {{{2, 0}, 0.5}}));
        HeckeWindow full{{2, 0}, 2, 0.0, 3.0};
        CHECK(count(ds, box, 100.0, {full}) == 5.0);
        CHECK(count(ds, box, 2.0, {full}) == 2.0);
        HeckeWindow low{{2, 0}, 2, 0.0, 1.0};
        CHECK(count(ds, box, 100.0, {low}) == 2.0);
        Box odd{{1}, {0}, {}};
        CHECK(count(ds, odd, 100.0, {full}) == 7.0);
        Dataset single;
        single.records.push_back(record({50.0}, {0}, 1.0));
        CHECK(count(single, box, 10.0, {}) == 0.0);
        CHECK_THROWS(count(ds, box, 100.0, {HeckeWindow{{3, 0}, 3, 0.0, 1.0}}));
    }

    TEST_CASE("count does not depend on the thread count")
    {
        auto F = NumberField::real_quadratic(73);
        SynthOptions opt;
        opt.count = 30000;
        opt.seed = 5;
        auto ds = synthesize(F, closure_box(), 20.0, {{2, 0}, {3, 0}}, opt);
        auto J = parse_windows(F, "2:0=0:1,3:0=1:2");
        double one = count(ds, closure_box(), 10.0, J, 1);
        CHECK(count(ds, closure_box(), 10.0, J, 4) == one);
        CHECK(count(ds, closure_box(), 10.0, J, 3) == one);
    }

    TEST_CASE("prediction")
    {
        auto Q = NumberField::rational();
        Box atom{{0}, {0}, {}};
        auto p = predict(Q, 1.0, atom, 0.25, {});
        CHECK(p.constant == doctest::Approx(2.0 / (2.0 * std::numbers::pi)));
        CHECK(p.total == doctest::Approx(p.constant));
        double top = 2.0 * std::sqrt(2.0);
        auto zero = predict(Q, 1.0, atom, 10.0, {HeckeWindow{{2, 0}, 2, std::nextafter(top, 4.0), 3.0}});
        CHECK(zero.sato_tate == 0.0);
        CHECK(zero.total == 0.0);
        auto whole = predict(Q, 1.0, atom, 10.0, {HeckeWindow{{2, 0}, 2, 0.0, top}});
        CHECK(whole.sato_tate == doctest::Approx(1.0).epsilon(1e-14));

        auto F = NumberField::real_quadratic(5);
        auto q = predict(F, 3.0, Box{{0, 0}, {0, 1}, {}}, 0.25, {});
        CHECK(q.constant == doctest::Approx(2.0 * std::sqrt(5.0) * 3.0 / std::pow(2.0 * std::numbers::pi, 2)));
        CHECK(q.plancherel == 1.0);
        CHECK_THROWS_AS(predict(F, 1.0, atom, 1.0, {}), InvalidArgument);
        CHECK_THROWS_AS(predict(Q, 0.0, atom, 1.0, {}), InvalidArgument);
    }

    TEST_CASE("Sato-Tate sampler")
    {
        for (std::int64_t N : {2, 4}) {
            SatoTateMeasure mu({2, 0}, N);
            auto sampler = sato_tate_sampler(mu);
            std::mt19937_64 gen(99);
            std::vector<double> xs(100000);
            for (auto & x : xs) x = sampler(static_cast<double>(gen() >> 11) * 0x1.0p-53);
            std::sort(xs.begin(), xs.end());
            double ks = 0.0;
            double n = static_cast<double>(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i) {
                double F = mu.cdf(xs[i]);
                ks = std::max({ks, std::abs(F - i / n), std::abs((i + 1) / n - F)});
            }
            CHECK(ks < 0.01);
            CHECK(xs.front() >= 0.0);
            CHECK(xs.back() <= mu.support_end());
        }
    }

    TEST_CASE("synthetic marginals")
    {
        auto F = NumberField::real_quadratic(73);
        SynthOptions opt;
        opt.count = 100000;
        opt.seed = 1;
        auto ds = synthesize(F, closure_box(), 50.0, {{2, 0}}, opt);
        std::vector<double> xs;
        for (auto const & r : ds.records) xs.push_back(r.lambda_p.at({2, 0}));
        std::sort(xs.begin(), xs.end());
        SatoTateMeasure mu({2, 0}, 2);
        double ks = 0.0, n = static_cast<double>(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            double c = mu.cdf(xs[i]);
            ks = std::max({ks, std::abs(c - i / n), std::abs((i + 1) / n - c)});
        }
        CHECK(ks < 0.01);
        for (auto const & r : ds.records) CHECK(closure_box().contains(r.lambda_inf, 50.0));

        SynthOptions one = opt;
        one.count = 1;
        auto single = synthesize(F, closure_box(), 50.0, {{2, 0}}, one);
        REQUIRE(single.size() == 1);
        CHECK(closure_box().contains(single.records[0].lambda_inf, 50.0));
    }

    TEST_CASE("synthesis is deterministic")
    {
        auto F = NumberField::real_quadratic(73);
        SynthOptions opt;
        opt.count = 5000;
        opt.seed = 42;
        auto a = synthesize(F, closure_box(), 30.0, {{2, 0}, {3, 0}}, opt);
        opt.threads = 4;
        auto b = synthesize(F, closure_box(), 30.0, {{2, 0}, {3, 0}}, opt);
        std::ostringstream sa, sb;
        write_jsonl(sa, a);
        write_jsonl(sb, b);
        CHECK(sa.str() == sb.str());
        opt.seed = 43;
        std::ostringstream sc;
        write_jsonl(sc, synthesize(F, closure_box(), 30.0, {{2, 0}, {3, 0}}, opt));
        CHECK(sc.str() != sa.str());
    }

    TEST_CASE("closure after calibration")
    {
        auto F = NumberField::real_quadratic(73);
        Box box = closure_box();
        double t = 100.0, covolume = 1.0;
        SynthOptions opt;
        opt.count = 100000;
        opt.seed = 2024;
        auto ds = synthesize(F, box, t, {{2, 0}, {3, 0}}, opt);
        calibrate_weights(ds, predict(F, covolume, box, t, {}).total);
        double M = 100000.0;

        auto plain = run_report(F, ds, box, {10.0, 50.0, t}, {}, covolume);
        REQUIRE(plain.rows.size() == 3);
        CHECK(std::abs(plain.final_ratio - 1.0) < 3.0 / std::sqrt(M));

        // only a fraction p of the records falls in the windows, so the binomial
        // spread of the ratio is sqrt((1 - p) / (M p))
        auto J = parse_windows(F, "2:0=0:1,3:0=1:2");
        double p = predict(F, covolume, box, t, J).sato_tate;
        double ratio = count(ds, box, t, J) / predict(F, covolume, box, t, J).total;
        CHECK(std::abs(ratio - 1.0) < 0.02);
        CHECK(std::abs(ratio - 1.0) < 3.0 * std::sqrt((1.0 - p) / (M * p)));

        auto rep = run_report(F, ds, box, {t}, J, covolume);
        REQUIRE(rep.rows.size() == 1);
        CHECK(rep.final_ratio == doctest::Approx(ratio));
        CHECK(run_report(F, ds, box, {}, J, covolume).rows.empty());

        auto ex = parse_windows(F, "2:0=2.83:3");
        CHECK(count(ds, box, t, ex) == 0.0);
        CHECK(predict(F, covolume, box, t, ex).total == 0.0);
    }

    TEST_CASE("dataset round trips")
    {
        auto F = NumberField::real_quadratic(73);
        SynthOptions opt;
        opt.count = 200;
        opt.seed = 9;
        auto ds = synthesize(F, closure_box(), 5.0, {{2, 0}, {3, 1}}, opt);
        ds.records[3].weight = 0.123456789012345678;
        ds.records[4].xi = {0, 0};

        std::stringstream js;
        write_jsonl(js, ds);
        auto back = read_jsonl(js);
        REQUIRE(back.size() == ds.size());
        std::stringstream cs;
        write_csv(cs, ds);
        auto back_csv = read_csv(cs);
        REQUIRE(back_csv.size() == ds.size());
        for (std::size_t i = 0; i < ds.size(); ++i) {
            for (auto const * other : {&back, &back_csv}) {
                auto const & r = other->records[i];
                CHECK(r.lambda_inf == ds.records[i].lambda_inf);
                CHECK(r.xi == ds.records[i].xi);
                CHECK(r.lambda_p == ds.records[i].lambda_p);
                CHECK(r.weight == ds.records[i].weight);
            }
        }
        CHECK_NOTHROW(back.validate(F));

        std::stringstream bad("{\"lambda_inf\":[1.0],\"xi\":[2],\"lambda_p\":{},\"weight\":1}\n");
        CHECK_THROWS_AS(read_jsonl(bad).validate(NumberField::rational()), InvalidArgument);
        Dataset neg;
        neg.records.push_back(record({1.0}, {0}, -1.0));
        CHECK_THROWS_AS(neg.validate(NumberField::rational()), InvalidArgument);
        Dataset wide;
        wide.records.push_back(record({1.0}, {0}, 1.0, {{{2, 0}, 3.5}}));
        CHECK_THROWS_AS(wide.validate(NumberField::rational()), InvalidArgument);
    }
}
