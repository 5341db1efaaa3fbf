#include "hmf/cosets.hpp"
#include "hmf/errors.hpp"
#include "hmf/global_hecke.hpp"
#include "hmf/hecke.hpp"
#include "hmf/satake.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hmf;

namespace {

PrimeLabel const p2{2, 0};

LocalHeckeElement make_element(std::int64_t N, std::vector<Rational> coeffs)
{
    LocalHeckeElement e = LocalHeckeElement::unit(p2, N);
    e.coeffs = std::move(coeffs);
    e.trim();
    return e;
}

LocalHeckeElement random_element(std::mt19937_64 & gen, std::int64_t N)
{
    std::uniform_int_distribution<int> len(1, 5);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<Rational> c(static_cast<std::size_t>(len(gen)));
    for (auto & x : c) {
        x = Rational(num(gen), den(gen));
        x.canonicalize();
    }
    return make_element(N, c);
}

/* N^k sum_{j=0}^{2k} X^{2(k-j)} at a point with X^2 + X^-2 = w, using
 * X^{2i} + X^{-2i} = w c_{i-1} - c_{i-2}. */
Rational laurent_side(std::int64_t N, int k, Rational const & w)
{
    Rational sum = 1;
    Rational prev = 2, cur = w;
    for (int i = 1; i <= k; ++i) {
        sum += cur;
        Rational next = w * cur - prev;
        prev = cur;
        cur = next;
    }
    return ipow(Rational(N), static_cast<unsigned>(k)) * sum;
}

}  // namespace

TEST_SUITE("hecke_algebra")
{
    TEST_CASE("Hecke relation in the abstract basis")
    {
        for (std::int64_t N : {2, 3, 4, 5, 9}) {
            auto t2 = LocalHeckeElement::basis(p2, N, 1);
            auto prod = multiply(t2, t2);
            CHECK(prod.coefficient(2) == 1);
            CHECK(prod.coefficient(1) == N);
            CHECK(prod.coefficient(0) == N * N);
        }
        auto t4 = LocalHeckeElement::basis(p2, 2, 2);
        auto t2 = LocalHeckeElement::basis(p2, 2, 1);
        auto prod = multiply(t4, t2);
        CHECK(prod == make_element(2, {0, 4, 2, 1}));
        auto one = LocalHeckeElement::unit(p2, 2);
        CHECK(multiply(one, t4) == t4);
        CHECK(multiply(t4, one) == t4);
    }

    TEST_CASE("Laurent images")
    {
        auto t2 = LocalHeckeElement::basis(p2, 3, 1);
        auto f = to_sym_laurent(t2);
        REQUIRE(f.coeffs.size() == 2);
        CHECK(f.coeffs[0] == 3);
        CHECK(f.coeffs[1] == 3);
        auto g = to_sym_laurent(LocalHeckeElement::basis(p2, 2, 2));
        CHECK(g.coeffs == std::vector<Rational>{4, 4, 4});
        CHECK(to_sym_laurent(LocalHeckeElement::unit(p2, 7)).coeffs == std::vector<Rational>{1});
    }

    TEST_CASE("random pairs multiply the same in both representations")
    {
        std::mt19937_64 gen(20240611);
        for (int i = 0; i < 500; ++i) {
            std::int64_t N = (i % 3 == 0) ? 2 : (i % 3 == 1 ? 4 : 7);
            auto a = random_element(gen, N);
            auto b = random_element(gen, N);
            auto direct = multiply(a, b);
            auto via = from_sym_laurent(laurent_multiply(to_sym_laurent(a), to_sym_laurent(b)), p2, N);
            CHECK(direct == via);
            CHECK(from_sym_laurent(to_sym_laurent(a), p2, N) == a);
            CHECK(multiply(a, b) == multiply(b, a));
        }
    }

    TEST_CASE("S polynomials")
    {
        CHECK(s_poly(5, 0).coeffs == std::vector<Rational>{1});
        CHECK(s_poly(5, 1).coeffs == std::vector<Rational>{-5, 0, 1});
        CHECK(s_poly(3, 2).coeffs == std::vector<Rational>{9, 0, -9, 0, 1});
        for (std::int64_t N : {2, 3, 4, 5, 7, 9}) {
            for (int k = 0; k <= 8; ++k) {
                Polynomial S = s_poly(N, k);
                REQUIRE(S.degree() == 2 * k);
                CHECK(S.is_even());
                CHECK(S.coeffs.back() == 1);
                for (int wi = -3; wi <= k + 2; ++wi) {
                    Rational w(wi * 3 + 1, 3);
                    w.canonicalize();
                    Rational lam2 = Rational(N) * (w + 2);
                    Rational val = 0;
                    for (int i = S.degree(); i >= 0; i -= 2) val = val * lam2 + S.coeffs[static_cast<std::size_t>(i)];
                    CHECK(val == laurent_side(N, k, w));
                }
            }
        }
    }

    TEST_CASE("coset representative counts")
    {
        auto Q = NumberField::rational();
        CHECK(coset_representatives(Q, prime_from_label(Q, {2, 0}), 1).size() == 7);
        CHECK(coset_representatives(Q, prime_from_label(Q, {3, 0}), 1).size() == 13);
        CHECK(coset_representatives(Q, prime_from_label(Q, {2, 0}), 2).size() == 31);
        for (auto const & g : coset_representatives(Q, prime_from_label(Q, {3, 0}), 2))
            CHECK(mat_det(Q, g) == Q.one());
    }

    TEST_CASE("coset representatives are pairwise inequivalent")
    {
        auto Q = NumberField::rational();
        auto reps = coset_representatives(Q, prime_from_label(Q, {2, 0}), 2);
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = 0; j < reps.size(); ++j)
                CHECK(left_equivalent_over_Q(reps[i], reps[j], 2) == (i == j));
    }

    TEST_CASE("brute force convolution agrees with the algebra")
    {
        auto r = brute_force_convolution(2, 1, 1);
        CHECK(r.product == make_element(2, {4, 2, 1}));
        CHECK(r.pair_count == 49);
        CHECK(brute_force_convolution(3, 1, 1).product == make_element(3, {9, 3, 1}));
        CHECK(brute_force_convolution(2, 1, 0).product == LocalHeckeElement::basis(p2, 2, 1));
        for (std::int64_t p : {2, 3}) {
            for (int k = 0; k <= 2; ++k) {
                for (int m = 0; m <= 2; ++m) {
                    auto brute = brute_force_convolution(p, k, m);
                    auto algebra =
                        multiply(LocalHeckeElement::basis(p2, p, k), LocalHeckeElement::basis(p2, p, m));
                    CAPTURE(p);
                    CAPTURE(k);
                    CAPTURE(m);
                    CHECK(brute.product.coeffs == algebra.coeffs);
                }
            }
        }
        CHECK_THROWS_AS(brute_force_convolution(5, 3, 3, 1, 100), BudgetExceededError);
    }

    TEST_CASE("lambda and nu")
    {
        for (std::int64_t N : {2, 3, 4, 5, 7, 9, 11}) {
            double sN = std::sqrt(static_cast<double>(N));
            CHECK(lambda_from_nu(SatakeParam::imag(p2, N, 0.0)).lambda == 2.0 * sN);
            CHECK(lambda_from_nu(SatakeParam::real(p2, N, 0.5)).lambda == static_cast<double>(N + 1));
            auto top = SatakeParam::imag(p2, N, 0.0);
            CHECK(lambda_from_nu(SatakeParam::imag(p2, N, top.max_theta())).lambda == doctest::Approx(0.0));

            for (int i = 0; i <= 1000; ++i) {
                double lam = (N + 1.0) * i / 1000.0;
                auto nu = nu_from_lambda({p2, N, lam});
                CHECK(std::abs(lambda_from_nu(nu).lambda - lam) < 1e-12);
            }
        }
        CHECK_THROWS_AS(nu_from_lambda({p2, 2, 3.5}), InvalidArgument);
        CHECK_THROWS_AS(nu_from_lambda({p2, 2, -0.1}), InvalidArgument);
        CHECK_THROWS_AS(SatakeParam::real(p2, 2, 0.6), InvalidArgument);
        CHECK(HeckeEigenvalue{p2, 2, 2.8}.tempered());
        CHECK_FALSE(HeckeEigenvalue{p2, 2, 2.9}.tempered());
    }

    TEST_CASE("global eigenvalues")
    {
        GlobalHeckeOperator empty;
        CHECK(global_eigenvalue(empty, std::map<PrimeLabel, double>{}) == 1.0);

        GlobalHeckeOperator single;
        single.add({5, 0}, 5, 1);
        CHECK(global_eigenvalue(single, std::map<PrimeLabel, double>{{{5, 0}, 2.0 * std::sqrt(5.0)}}) == doctest::Approx(15.0));
        CHECK(single.coset_bound() == 31.0);

        GlobalHeckeOperator op;
        op.add({2, 0}, 2, 1);
        op.add({3, 0}, 3, 1);
        std::map<PrimeLabel, Rational> lam{{{2, 0}, Rational(3, 4)}, {{3, 0}, Rational(28, 27)}};
        Rational expected(-1472 * -113643, 1024 * 59049);
        expected.canonicalize();
        CHECK(global_eigenvalue(op, lam) == expected);
        std::map<PrimeLabel, double> lamd{{{2, 0}, 0.75}, {{3, 0}, 252.0 / 243.0}};
        CHECK(global_eigenvalue(op, lamd) == doctest::Approx(2.76650).epsilon(1e-4));
        CHECK_THROWS_AS(global_eigenvalue(op, std::map<PrimeLabel, double>{{{2, 0}, 0.75}}), MissingPrimeError);
    }
}
