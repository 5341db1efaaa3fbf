#include "hmf/kloosterman.hpp"

#include "hmf/errors.hpp"
#include "hmf/units.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <numbers>
#include <thread>

namespace hmf {

namespace {

BigInt lcm(BigInt const & a, BigInt const & b)
{
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::int64_t residue(Rational const & q, BigInt const & den)
{
    BigInt num = q.get_num() * (den / q.get_den());
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return to_int64(r);
}

std::complex<double> unit_circle(std::int64_t k, std::int64_t den)
{
    if (k == 0) return {1.0, 0.0};
    double th = 2.0 * std::numbers::pi * (static_cast<double>(k) / static_cast<double>(den));
    return {std::cos(th), std::sin(th)};
}

}  // namespace

void validate_query(NumberField const & F, DirichletCharacter const & chi, KloostermanQuery const & q)
{
    if (q.c.degree() != static_cast<std::size_t>(F.degree()) || q.r.degree() != q.c.degree() ||
        q.rp.degree() != q.c.degree())
        throw InvalidArgument("Kloosterman query elements belong to a different field");
    if (q.c.is_zero()) throw InvalidArgument("Kloosterman modulus c must be nonzero");
    if (!chi.modulus().contains(q.c))
        throw InvalidArgument("modulus c = " + F.format(q.c) + " is not in the level " + chi.modulus().to_string());
    FractionalIdeal od = inverse_different(F);
    if (!od.contains(F, q.r)) throw InvalidArgument("r = " + F.format(q.r) + " is not in the inverse different");
    if (!od.contains(F, q.rp)) throw InvalidArgument("r' = " + F.format(q.rp) + " is not in the inverse different");
}

std::complex<double> kloosterman(NumberField const & F, DirichletCharacter const & chi, KloostermanQuery const & q)
{
    validate_query(F, chi, q);
    ResidueRing R(F, Ideal::principal(F, q.c));

    // S((r' a + r d)/c) is linear in the coordinates of a and d
    FieldElement y = F.div(q.rp, q.c), z = F.div(q.r, q.c);
    bool quad = F.degree() == 2;
    Rational Y0 = F.trace(y), Z0 = F.trace(z);
    Rational Y1 = quad ? F.trace(F.mul(F.omega(), y)) : Rational(0);
    Rational Z1 = quad ? F.trace(F.mul(F.omega(), z)) : Rational(0);

    BigInt den = 1;
    for (auto const * v : {&Y0, &Y1, &Z0, &Z1}) den = lcm(den, v->get_den());
    ResidueRing const & RI = chi.ring();
    std::vector<Rational> chi_phase(static_cast<std::size_t>(RI.size()));
    for (std::int64_t i = 0; i < RI.size(); ++i) {
        auto v = chi.at(RI.element(i));
        if (v) {
            chi_phase[i] = v->phase;
            den = lcm(den, v->phase.get_den());
        }
    }
    if (den > BigInt(1) << 60) throw BudgetExceededError("phase denominator too large");
    std::int64_t D = to_int64(den);
    std::int64_t y0 = residue(Y0, den), y1 = residue(Y1, den), z0 = residue(Z0, den), z1 = residue(Z1, den);
    std::vector<std::int64_t> chi_num(chi_phase.size());
    for (std::size_t i = 0; i < chi_phase.size(); ++i) chi_num[i] = residue(chi_phase[i], den);

    // exact tally of phases k/D, then one exponential per distinct k
    std::map<std::int64_t, std::int64_t> sparse;
    std::vector<std::int64_t> dense;
    bool use_dense = D <= (1 << 22);
    if (use_dense) dense.assign(static_cast<std::size_t>(D), 0);
    for (auto const & [a, d] : R.unit_pairs()) {
        __int128 k = static_cast<__int128>(a[0]) * y0 + static_cast<__int128>(a[1]) * y1 +
                     static_cast<__int128>(d[0]) * z0 + static_cast<__int128>(d[1]) * z1 -
                     chi_num[static_cast<std::size_t>(RI.index_of(d))];
        k %= D;
        if (k < 0) k += D;
        if (use_dense) ++dense[static_cast<std::size_t>(k)];
        else ++sparse[static_cast<std::int64_t>(k)];
    }
    std::complex<double> sum = 0.0;
    if (use_dense) {
        for (std::int64_t k = 0; k < D; ++k)
            if (dense[k]) sum += static_cast<double>(dense[k]) * unit_circle(k, D);
    } else {
        for (auto const & [k, n] : sparse) sum += static_cast<double>(n) * unit_circle(k, D);
    }
    return sum;
}

SymmetryReport symmetry_check(NumberField const & F, DirichletCharacter const & chi, KloostermanQuery const & q)
{
    SymmetryReport out;
    out.value = kloosterman(F, chi, q);
    std::complex<double> swapped_neg = kloosterman(F, chi, {-q.c, q.rp, q.r});
    std::complex<double> swapped = kloosterman(F, chi, {q.c, q.rp, q.r});
    out.conjugate_deviation = std::abs(std::conj(out.value) - swapped_neg);
    out.sign_deviation = std::abs(swapped_neg - static_cast<double>(chi.sign_at_minus_one()) * swapped);
    return out;
}

std::vector<Ideal> ideals_up_to(NumberField const & F, Ideal const & I, std::int64_t max_norm)
{
    std::vector<Ideal> out;
    if (F.degree() == 1) {
        std::int64_t step = I.norm();
        for (std::int64_t n = step; n <= max_norm; n += step) out.push_back(Ideal::principal(F, F.from_integer(n)));
        return out;
    }
    std::int64_t t = F.omega_trace(), sh = F.omega_shift();
    for (std::int64_t n = 1; n <= max_norm; ++n) {
        if (n % I.norm() != 0) continue;
        for (std::int64_t a = 1; a <= n; ++a) {
            if (n % a) continue;
            std::int64_t c = n / a;
            for (std::int64_t b = 0; b < a; ++b) {
                Ideal L = lattice_from_vectors(2, {IntVec{a, 0}, IntVec{b, c}});
                // closed under multiplication by omega
                if (!L.contains(IntVec{0, a}) || !L.contains(IntVec{c * sh, b + c * t})) continue;
                if (!L.is_subset_of(I)) continue;
                out.push_back(L);
            }
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](Ideal const & x, Ideal const & y) { return x.norm() != y.norm() ? x.norm() < y.norm() : x < y; });
    return out;
}

WeilScanResult weil_scan(NumberField const & F, DirichletCharacter const & chi, FieldElement const & r,
                         FieldElement const & rp, WeilScanOptions const & options)
{
    if (options.max_norm < 1) throw InvalidArgument("max norm must be positive");
    if (!(options.eps > 0)) throw InvalidArgument("eps must be positive");
    WeilScanResult out;
    std::vector<PrimeLabel> S;
    if (options.exceptional) S = *options.exceptional;
    else
        for (auto const & f : factor_ideal(F, chi.modulus())) S.push_back(f.prime.label);

    std::int64_t terms = 0;
    std::vector<std::pair<Ideal, FieldElement>> moduli;
    for (auto const & L : ideals_up_to(F, chi.modulus(), options.max_norm)) {
        auto g = find_generator(F, L);
        if (!g) {
            out.skipped.push_back(L);
            continue;
        }
        terms += L.norm();
        if (terms > options.max_terms)
            throw BudgetExceededError("Weil scan needs more than " + std::to_string(options.max_terms) + " terms");
        moduli.emplace_back(L, *g);
    }

    out.rows.resize(moduli.size());
    auto work = [&](std::size_t i) {
        auto const & [L, c] = moduli[i];
        WeilRow row;
        row.c = c;
        row.norm = L.norm();
        row.abs_value = std::abs(kloosterman(F, chi, {c, r, rp}));
        double exceptional = 1.0, generic = 1.0, divisors = 1.0;
        auto factors = factor_ideal(F, L);
        for (auto const & f : factors) {
            double pv = std::pow(static_cast<double>(f.prime.norm()), f.exponent);
            if (std::find(S.begin(), S.end(), f.prime.label) != S.end()) exceptional *= pv;
            else generic *= pv;
            divisors *= f.exponent + 1;
        }
        row.bound = exceptional * std::pow(generic, 0.5 + options.eps);
        row.ratio = row.abs_value / row.bound;
        row.weil_ratio = row.abs_value / (divisors * std::sqrt(static_cast<double>(row.norm)));
        row.prime_modulus = factors.size() == 1 && factors[0].exponent == 1;
        out.rows[i] = std::move(row);
    };
    unsigned T = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(moduli.size())));
    if (T <= 1) {
        for (std::size_t i = 0; i < moduli.size(); ++i) work(i);
    } else {
        std::vector<std::exception_ptr> errors(T);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < T; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < moduli.size(); i += T) work(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto & th : pool) th.join();
        for (auto const & e : errors)
            if (e) std::rethrow_exception(e);
    }
    for (auto const & row : out.rows) out.max_ratio = std::max(out.max_ratio, row.ratio);
    return out;
}

std::complex<double> delta_term(NumberField const & F, DirichletCharacter const & chi, FieldElement const & r,
                                FieldElement const & rp, std::vector<int> const & xi)
{
    if (r.is_zero() || rp.is_zero()) throw InvalidArgument("delta term needs nonzero r and r'");
    if (static_cast<int>(xi.size()) != F.degree()) throw InvalidArgument("parity vector has the wrong length");
    int sign = 1;
    for (int x : xi) {
        if (x != 0 && x != 1) throw InvalidArgument("parity entries must be 0 or 1");
        if (x) sign = -sign;
    }
    if (chi.sign_at_minus_one() != sign)
        throw InvalidArgument("character parity chi(-1) does not match the parity vector");

    auto eps = unit_square_class(F, r, rp);
    if (!eps) return 0.0;
    std::complex<double> sum = 0.0;
    for (FieldElement e : {*eps, -*eps}) {
        std::complex<double> term = chi(F.inverse(e));
        auto images = F.embed(e);
        for (std::size_t j = 0; j < xi.size(); ++j)
            if (xi[j] && images[j] < 0) term = -term;
        sum += term;
    }
    return 0.5 * sum;
}

}  // namespace hmf
