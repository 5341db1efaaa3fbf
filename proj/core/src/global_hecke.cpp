#include "hmf/global_hecke.hpp"

#include "hmf/errors.hpp"

#include <cmath>

namespace hmf {

void GlobalHeckeOperator::add(PrimeLabel prime, std::int64_t prime_norm, int exponent)
{
    if (exponent <= 0) throw InvalidArgument("Hecke operator exponents must be positive");
    auto [it, inserted] = factors.try_emplace(prime, Factor{prime_norm, 0});
    if (!inserted && it->second.prime_norm != prime_norm) throw InvalidArgument("inconsistent prime norm");
    it->second.exponent += exponent;
}

double GlobalHeckeOperator::coset_bound() const
{
    double bound = 1.0;
    for (auto const & [label, f] : factors) {
        double s = 0, q = 1;
        for (int j = 0; j <= 2 * f.exponent; ++j, q *= static_cast<double>(f.prime_norm)) s += q;
        bound *= s;
    }
    return bound;
}

namespace {

template <typename T>
T evaluate(GlobalHeckeOperator const & op, std::map<PrimeLabel, T> const & lambda)
{
    T acc = 1;
    for (auto const & [label, f] : op.factors) {
        auto it = lambda.find(label);
        if (it == lambda.end()) throw MissingPrimeError("no Hecke eigenvalue for prime " + label.to_string());
        acc *= s_poly(f.prime_norm, f.exponent).eval(it->second);
    }
    return acc;
}

}  // namespace

double global_eigenvalue(GlobalHeckeOperator const & op, std::map<PrimeLabel, double> const & lambda)
{
    return evaluate(op, lambda);
}

Rational global_eigenvalue(GlobalHeckeOperator const & op, std::map<PrimeLabel, Rational> const & lambda)
{
    return evaluate(op, lambda);
}

}  // namespace hmf
