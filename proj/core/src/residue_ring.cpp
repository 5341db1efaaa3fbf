#include "hmf/residue_ring.hpp"

namespace hmf {

ResidueRing::ResidueRing(NumberField F, Ideal modulus) : F_(std::move(F)), c_(std::move(modulus))
{
    if (c_.degree() != F_.degree()) throw InvalidArgument("modulus from a different field");
    factors_ = factor_ideal(F_, c_);
    for (auto const & f : factors_) {
        std::int64_t q = f.prime.norm();
        std::int64_t term = q - 1;
        for (int i = 1; i < f.exponent; ++i) term *= q;
        phi_ *= term;
    }
}

IntVec ResidueRing::reduce(FieldElement const & x) const { return c_.reduce(to_intvec(x)); }

std::vector<IntVec> ResidueRing::enumerate() const
{
    std::vector<IntVec> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::int64_t i = 0; i < size(); ++i) out.push_back(element(i));
    return out;
}

std::int64_t ResidueRing::index_of(IntVec x) const
{
    x = reduce(x);
    return x[1] * c_.hnf()[0][0] + x[0];
}

IntVec ResidueRing::element(std::int64_t index) const
{
    std::int64_t a = c_.hnf()[0][0];
    return {index % a, F_.degree() == 2 ? index / a : 0};
}

IntVec ResidueRing::add(IntVec a, IntVec b) const { return reduce(IntVec{a[0] + b[0], a[1] + b[1]}); }

IntVec ResidueRing::mul(IntVec a, IntVec b) const
{
    if (F_.degree() == 1) {
        __int128 p = static_cast<__int128>(a[0]) * b[0];
        return reduce(IntVec{static_cast<std::int64_t>(p % c_.hnf()[0][0]), 0});
    }
    // reps are below N(c), so products fit comfortably in 128 bits
    __int128 t = F_.omega_trace(), n = F_.omega_shift();
    __int128 x0 = static_cast<__int128>(a[0]) * b[0] + n * a[1] * b[1];
    __int128 x1 = static_cast<__int128>(a[0]) * b[1] + static_cast<__int128>(a[1]) * b[0] + t * a[1] * b[1];
    // reduce modulo the integer N(c) in c first, keeping 64-bit coordinates
    __int128 N = c_.norm();
    return reduce(IntVec{static_cast<std::int64_t>(x0 % N), static_cast<std::int64_t>(x1 % N)});
}

bool ResidueRing::is_unit(IntVec x) const
{
    x = reduce(x);
    if (size() == 1) return true;
    for (auto const & f : factors_)
        if (f.prime.ideal.contains(x)) return false;
    return true;
}

IntVec ResidueRing::pow(IntVec x, std::int64_t e) const
{
    IntVec r = reduce(IntVec{1, 0});
    while (e > 0) {
        if (e & 1) r = mul(r, x);
        e >>= 1;
        if (e) x = mul(x, x);
    }
    return r;
}

IntVec ResidueRing::invert(IntVec x) const
{
    x = reduce(x);
    if (!is_unit(x)) {
        Ideal witness = (x[0] == 0 && x[1] == 0)
                            ? c_
                            : ideal_sum(F_, Ideal::principal(F_, from_intvec(F_, x)), c_);
        throw NonUnitError("element is not a unit modulo " + c_.to_string(), witness);
    }
    // Lagrange: x^(phi - 1) = x^-1 in a group of order phi
    return pow(x, phi_ - 1);
}

std::vector<std::pair<IntVec, IntVec>> ResidueRing::unit_pairs() const
{
    std::vector<std::pair<IntVec, IntVec>> out;
    out.reserve(static_cast<std::size_t>(phi_));
    for (std::int64_t i = 0; i < size(); ++i) {
        IntVec x = element(i);
        if (is_unit(x)) out.emplace_back(x, invert(x));
    }
    return out;
}

}  // namespace hmf
