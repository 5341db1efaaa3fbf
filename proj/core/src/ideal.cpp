#include "hmf/ideal.hpp"

#include "hmf/errors.hpp"
#include "hmf/units.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace hmf {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v)
{
    if (v > INT64_MAX || v < INT64_MIN) throw BudgetExceededError("ideal lattice entry overflows 64 bits");
    return static_cast<std::int64_t>(v);
}

i128 floor_div128(i128 a, i128 b)
{
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/* Reduces a set of rows on one column to a single pivot via Euclid.  Rows
 * other than the returned one end up with a zero in that column. */
int euclid_column(std::vector<std::array<i128, 2>> & rows, int col)
{
    for (;;) {
        int best = -1;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i][col] == 0) continue;
            if (best < 0 || (rows[i][col] < 0 ? -rows[i][col] : rows[i][col]) <
                                (rows[best][col] < 0 ? -rows[best][col] : rows[best][col]))
                best = i;
        }
        if (best < 0) return -1;
        bool done = true;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == best || rows[i][col] == 0) continue;
            i128 q = rows[i][col] / rows[best][col];
            rows[i][0] -= q * rows[best][0];
            rows[i][1] -= q * rows[best][1];
            if (rows[i][col] != 0) done = false;
        }
        if (done) {
            if (rows[best][col] < 0) {
                rows[best][0] = -rows[best][0];
                rows[best][1] = -rows[best][1];
            }
            return best;
        }
    }
}

}  // namespace

Ideal lattice_from_vectors(int degree, std::vector<IntVec> const & vecs)
{
    std::vector<std::array<i128, 2>> rows;
    rows.reserve(vecs.size());
    for (auto const & v : vecs) rows.push_back({v[0], degree == 2 ? v[1] : 0});

    std::array<std::array<std::int64_t, 2>, 2> h{};
    if (degree == 2) {
        int piv = euclid_column(rows, 1);
        if (piv < 0) throw InvalidArgument("lattice is not of full rank");
        auto pivot = rows[piv];
        rows.erase(rows.begin() + piv);
        int piv0 = euclid_column(rows, 0);
        if (piv0 < 0) throw InvalidArgument("lattice is not of full rank");
        i128 a = rows[piv0][0];
        i128 b = pivot[0] - floor_div128(pivot[0], a) * a;
        h[0] = {narrow(a), 0};
        h[1] = {narrow(b), narrow(pivot[1])};
    } else {
        int piv0 = euclid_column(rows, 0);
        if (piv0 < 0) throw InvalidArgument("zero ideal");
        h[0] = {narrow(rows[piv0][0]), 0};
        h[1] = {0, 1};
    }
    return Ideal(degree, h);
}

IntVec to_intvec(FieldElement const & x)
{
    if (!x.is_integral()) throw InvalidArgument("element is not integral");
    IntVec v{0, 0};
    for (std::size_t i = 0; i < x.degree(); ++i) v[i] = to_int64(BigInt(x[i].get_num()));
    return v;
}

FieldElement from_intvec(NumberField const & F, IntVec v)
{
    return F.make(Rational(static_cast<long>(v[0])), Rational(F.degree() == 2 ? static_cast<long>(v[1]) : 0L));
}

Ideal Ideal::generated_by(NumberField const & F, std::vector<FieldElement> const & gens)
{
    std::vector<IntVec> vecs;
    for (auto const & g : gens) {
        if (!g.is_integral()) throw InvalidArgument("ideal generator " + F.format(g) + " is not integral");
        vecs.push_back(to_intvec(g));
        if (F.degree() == 2) vecs.push_back(to_intvec(F.mul(g, F.omega())));
    }
    return lattice_from_vectors(F.degree(), vecs);
}

Ideal Ideal::principal(NumberField const & F, FieldElement const & gen)
{
    if (gen.is_zero()) throw InvalidArgument("zero ideal");
    return generated_by(F, {gen});
}

Ideal Ideal::unit(NumberField const & F) { return principal(F, F.one()); }

std::int64_t Ideal::norm() const
{
    if (degree_ == 1) return hnf_[0][0];
    return hnf_[0][0] * hnf_[1][1];
}

IntVec Ideal::reduce(IntVec x) const
{
    if (degree_ == 2) {
        std::int64_t q = floor_div(x[1], hnf_[1][1]);
        x[0] -= q * hnf_[1][0];
        x[1] -= q * hnf_[1][1];
    } else {
        x[1] = 0;
    }
    x[0] = floor_mod(x[0], hnf_[0][0]);
    return x;
}

bool Ideal::contains(IntVec x) const
{
    auto r = reduce(x);
    return r[0] == 0 && r[1] == 0;
}

bool Ideal::contains(FieldElement const & x) const
{
    if (!x.is_integral()) return false;
    return contains(to_intvec(x));
}

bool Ideal::is_subset_of(Ideal const & other) const
{
    if (!other.contains(IntVec{hnf_[0][0], 0})) return false;
    if (degree_ == 2 && !other.contains(IntVec{hnf_[1][0], hnf_[1][1]})) return false;
    return true;
}

std::vector<FieldElement> Ideal::basis(NumberField const & F) const
{
    std::vector<FieldElement> out{from_intvec(F, {hnf_[0][0], 0})};
    if (degree_ == 2) out.push_back(from_intvec(F, {hnf_[1][0], hnf_[1][1]}));
    return out;
}

std::string Ideal::to_string() const
{
    if (degree_ == 1) return "[" + std::to_string(hnf_[0][0]) + "]";
    return "[[" + std::to_string(hnf_[0][0]) + ",0],[" + std::to_string(hnf_[1][0]) + "," +
           std::to_string(hnf_[1][1]) + "]]";
}

Ideal ideal_multiply(NumberField const & F, Ideal const & a, Ideal const & b)
{
    std::vector<IntVec> vecs;
    for (auto const & x : a.basis(F))
        for (auto const & y : b.basis(F)) vecs.push_back(to_intvec(F.mul(x, y)));
    return lattice_from_vectors(F.degree(), vecs);
}

Ideal ideal_sum(NumberField const & F, Ideal const & a, Ideal const & b)
{
    std::vector<IntVec> vecs;
    for (auto const & x : a.basis(F)) vecs.push_back(to_intvec(x));
    for (auto const & y : b.basis(F)) vecs.push_back(to_intvec(y));
    return lattice_from_vectors(F.degree(), vecs);
}

Ideal ideal_power(NumberField const & F, Ideal const & a, int k)
{
    Ideal r = Ideal::unit(F);
    for (int i = 0; i < k; ++i) r = ideal_multiply(F, r, a);
    return r;
}

bool FractionalIdeal::contains(NumberField const & F, FieldElement const & x) const
{
    FieldElement scaled = Rational(static_cast<long>(denominator)) * x;
    if (!scaled.is_integral()) return false;
    (void)F;
    return numerator.contains(scaled);
}

FieldElement inverse_different_generator(NumberField const & F) { return F.inverse(F.different_generator()); }

FractionalIdeal inverse_different(NumberField const & F)
{
    if (F.degree() == 1) return {Ideal::unit(F), 1};
    FieldElement delta = F.different_generator();
    Rational nm = F.norm(delta);
    std::int64_t den = to_int64(BigInt(abs(nm.get_num())));
    return {Ideal::principal(F, F.conjugate(delta)), den};
}

PrimeLabel PrimeLabel::parse(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw InvalidArgument("prime label must look like 'p:i'");
    PrimeLabel out;
    try {
        out.p = std::stoll(std::string(text.substr(0, colon)));
        out.index = std::stoi(std::string(text.substr(colon + 1)));
    } catch (std::exception const &) {
        throw InvalidArgument("malformed prime label '" + std::string(text) + "'");
    }
    if (!is_prime(out.p) || out.index < 0) throw InvalidArgument("malformed prime label '" + std::string(text) + "'");
    return out;
}

std::string PrimeLabel::to_string() const { return std::to_string(p) + ":" + std::to_string(index); }

std::vector<PrimeIdeal> factor_rational_prime(NumberField const & F, std::int64_t p)
{
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not a rational prime");
    // The canonical bases are monogenic: O_F = Z[omega], index 1.
    constexpr std::int64_t monogenic_index = 1;
    if (monogenic_index % p == 0) throw IndexDivisorError(std::to_string(p) + " divides the index of Z[omega]");

    std::vector<PrimeIdeal> out;
    if (F.degree() == 1) {
        PrimeIdeal pr{Ideal::principal(F, F.from_integer(p)), p, 1, 1, {p, 0}, F.from_integer(p)};
        out.push_back(pr);
        return out;
    }

    std::int64_t t = F.omega_trace(), n = F.omega_shift();
    std::vector<std::int64_t> roots;
    for (std::int64_t r = 0; r < p; ++r) {
        i128 v = static_cast<i128>(r) * r - static_cast<i128>(t) * r - n;
        if (static_cast<std::int64_t>(((v % p) + p) % p) == 0) roots.push_back(r);
    }
    FieldElement pe = F.from_integer(p);
    if (roots.empty()) {
        out.push_back({Ideal::principal(F, pe), p, 2, 1, {}, {}});
    } else {
        // a double root mod p shows up once: 2r = t mod p
        bool ramified = roots.size() == 1;
        for (auto r : roots) {
            FieldElement g = F.omega() - F.from_integer(r);
            Ideal I = Ideal::generated_by(F, {pe, g});
            out.push_back({I, p, 1, ramified ? 2 : 1, {}, {}});
        }
    }
    std::sort(out.begin(), out.end(), [](PrimeIdeal const & a, PrimeIdeal const & b) { return a.ideal < b.ideal; });
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].label = {p, static_cast<int>(i)};
        out[i].generator = find_generator(F, out[i].ideal);
    }
    return out;
}

PrimeIdeal prime_from_label(NumberField const & F, PrimeLabel label)
{
    auto primes = factor_rational_prime(F, label.p);
    if (label.index < 0 || label.index >= static_cast<int>(primes.size()))
        throw MissingPrimeError("no prime " + label.to_string() + " in " + F.spec());
    return primes[label.index];
}

std::optional<FieldElement> find_generator(NumberField const & F, Ideal const & a)
{
    std::int64_t N = a.norm();
    if (F.degree() == 1) return F.from_integer(N);

    // Some generator has both embeddings bounded by sqrt(N * eps0).
    UnitGroupData U = unit_group(F);
    double eps0 = F.embed(*U.fundamental)[0];
    double R = std::sqrt(static_cast<double>(N) * eps0) * (1.0 + 1e-9) + 1e-9;
    auto w = F.omega_images();
    double gap = w[0] - w[1];
    std::int64_t x1max = static_cast<std::int64_t>(std::floor(2.0 * R / gap)) + 1;
    auto const & h = a.hnf();
    std::int64_t c = h[1][1];
    constexpr std::int64_t budget = 50'000'000;
    std::int64_t visited = 0;
    std::optional<FieldElement> best;
    double best_size = 0;
    for (std::int64_t j = -(x1max / c) - 1; j <= x1max / c + 1; ++j) {
        std::int64_t x1 = j * c;
        // both |x0 + x1 w0| <= R and |x0 + x1 w1| <= R
        double lo = std::max(-R - x1 * w[0], -R - x1 * w[1]);
        double hi = std::min(R - x1 * w[0], R - x1 * w[1]);
        if (lo > hi) continue;
        std::int64_t base = j * h[1][0];
        std::int64_t ilo = static_cast<std::int64_t>(std::ceil((lo - base) / h[0][0])) - 1;
        std::int64_t ihi = static_cast<std::int64_t>(std::floor((hi - base) / h[0][0])) + 1;
        for (std::int64_t i = ilo; i <= ihi; ++i) {
            if (++visited > budget) return best;
            std::int64_t x0 = i * h[0][0] + base;
            FieldElement x = F.make(Rational(static_cast<long>(x0)), Rational(static_cast<long>(x1)));
            if (x.is_zero()) continue;
            Rational nm = F.norm(x);
            if (nm != N && nm != -N) continue;
            auto e = F.embed(x);
            double size = std::abs(e[0]) + std::abs(e[1]);
            // prefer small, then positive in the first embedding
            if (!best || size < best_size - 1e-9) {
                best = e[0] < 0 ? -x : x;
                best_size = size;
            }
        }
    }
    return best;
}

int valuation(NumberField const & F, Ideal const & a, PrimeIdeal const & pr)
{
    int v = 0;
    Ideal power = pr.ideal;
    std::int64_t N = a.norm();
    while (a.is_subset_of(power)) {
        ++v;
        if (power.norm() > N) break;
        power = ideal_multiply(F, power, pr.ideal);
    }
    return v;
}

int valuation(NumberField const & F, FieldElement const & x, PrimeIdeal const & pr)
{
    return valuation(F, Ideal::principal(F, x), pr);
}

std::vector<IdealFactor> factor_ideal(NumberField const & F, Ideal const & a)
{
    std::vector<IdealFactor> out;
    for (auto const & pp : factor_integer(a.norm())) {
        for (auto const & pr : factor_rational_prime(F, pp.prime)) {
            int v = valuation(F, a, pr);
            if (v > 0) out.push_back({pr, v});
        }
    }
    return out;
}

}  // namespace hmf
