#include "hmf/cosets.hpp"

#include "hmf/errors.hpp"
#include "hmf/residue_ring.hpp"

#include <thread>

namespace hmf {

Mat2 mat_mul(NumberField const & F, Mat2 const & a, Mat2 const & b)
{
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[2 * i + j] = F.mul(a(i, 0), b(0, j)) + F.mul(a(i, 1), b(1, j));
    return r;
}

FieldElement mat_det(NumberField const & F, Mat2 const & a) { return F.mul(a(0, 0), a(1, 1)) - F.mul(a(0, 1), a(1, 0)); }

std::vector<Mat2> coset_representatives(NumberField const & F, PrimeIdeal const & pr, int k)
{
    if (k < 0) throw InvalidArgument("coset index k must be nonnegative");
    if (!pr.generator) throw InvalidArgument("prime " + pr.label.to_string() + " has no known generator");
    FieldElement const & pi = *pr.generator;
    std::vector<Mat2> out;
    for (int l = 0; l <= 2 * k; ++l) {
        Ideal pl = ideal_power(F, pr.ideal, l);
        ResidueRing ring(F, pl);
        FieldElement upper = F.pow(pi, k - l);
        FieldElement lower = F.pow(pi, l - k);
        FieldElement scale = F.pow(pi, -k);
        for (auto const & b : ring.enumerate()) {
            Mat2 g{{upper, F.mul(from_intvec(F, b), scale), F.zero(), lower}};
            out.push_back(std::move(g));
        }
    }
    return out;
}

bool left_equivalent_over_Q(Mat2 const & g1, Mat2 const & g2, std::int64_t p)
{
    NumberField Q = NumberField::rational();
    // inverse of a determinant-one matrix is its adjugate
    Mat2 inv{{g2(1, 1), -g2(0, 1), -g2(1, 0), g2(0, 0)}};
    Mat2 prod = mat_mul(Q, g1, inv);
    for (auto const & x : prod.e) {
        BigInt den = x[0].get_den();
        BigInt pp = p;
        while (den % pp == 0) return false;
    }
    return true;
}

namespace {

/* Right cosets of determinant p^{2K} in Hermite form [[a, b], [0, d]],
 * d = p^e, 0 <= b < d, laid out densely by (e, b). */
struct CosetIndex {
    std::int64_t p;
    int K2;
    std::vector<std::int64_t> offset;  // offset[e] = sum_{e' < e} p^{e'}
    std::vector<std::int64_t> ppow;

    CosetIndex(std::int64_t p_, int K2_) : p(p_), K2(K2_)
    {
        ppow.push_back(1);
        for (int e = 1; e <= K2 + 1; ++e) ppow.push_back(ppow.back() * p);
        offset.push_back(0);
        for (int e = 0; e <= K2; ++e) offset.push_back(offset.back() + ppow[e]);
    }
    std::int64_t size() const { return offset.back(); }
    std::int64_t index(int e, std::int64_t b) const { return offset[e] + b; }
};

int vp(std::int64_t x, std::int64_t p)
{
    if (x == 0) return 1 << 20;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

}  // namespace

ConvolutionResult brute_force_convolution(std::int64_t p, int k, int m, unsigned threads, std::uint64_t max_pairs)
{
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    if (k < 0 || m < 0) throw InvalidArgument("Hecke indices must be nonnegative");

    // representatives scaled to integer matrices [[p^{2k-l}, b], [0, p^l]]
    struct Rep {
        int e;  // exponent of the lower-right entry
        std::int64_t b;
    };
    auto reps = [p](int kk) {
        std::vector<Rep> out;
        std::int64_t pl = 1;
        for (int l = 0; l <= 2 * kk; ++l, pl *= p)
            for (std::int64_t b = 0; b < pl; ++b) out.push_back({l, b});
        return out;
    };
    auto A = reps(k);
    auto B = reps(m);
    std::uint64_t pairs = static_cast<std::uint64_t>(A.size()) * B.size();
    if (pairs > max_pairs)
        throw BudgetExceededError("brute-force convolution needs " + std::to_string(pairs) + " products");

    int K = k + m;
    CosetIndex idx(p, 2 * K);
    std::int64_t pk2 = idx.ppow[2 * k];

    if (threads == 0) threads = 1;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(A.size()));
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(idx.size(), 0));
    auto work = [&](unsigned w) {
        auto & tally = partial[w];
        for (std::size_t i = w; i < A.size(); i += threads) {
            std::int64_t a1 = pk2 / idx.ppow[A[i].e], b1 = A[i].b, d1 = idx.ppow[A[i].e];
            for (auto const & rb : B) {
                std::int64_t b2 = rb.b, d2 = idx.ppow[rb.e];
                // [[a1, b1], [0, d1]] * [[a2, b2], [0, d2]]
                __int128 b = static_cast<__int128>(a1) * b2 + static_cast<__int128>(b1) * d2;
                std::int64_t d = d1 * d2;
                std::int64_t br = static_cast<std::int64_t>(b % d);
                ++tally[idx.index(A[i].e + rb.e, br)];
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto & t : pool) t.join();
    std::vector<std::uint64_t> tally(idx.size(), 0);
    for (auto const & part : partial)
        for (std::int64_t i = 0; i < idx.size(); ++i) tally[i] += part[i];

    // level of a coset: K - v_p(content); it lies in Delta(p^{2n}) iff n >= level
    std::vector<std::int64_t> level_value(K + 1, -1);
    for (int e = 0; e <= 2 * K; ++e) {
        std::int64_t d = idx.ppow[e];
        int va = 2 * K - e;
        for (std::int64_t b = 0; b < d; ++b) {
            int content = std::min({va, e, vp(b, p)});
            int level = K - content;
            if (level < 0) continue;
            auto v = static_cast<std::int64_t>(tally[idx.index(e, b)]);
            if (level_value[level] < 0) level_value[level] = v;
            else if (level_value[level] != v)
                throw IdentityFailure("coset multiplicity not constant on the double coset of level " +
                                      std::to_string(level));
        }
    }

    ConvolutionResult out;
    out.pair_count = pairs;
    out.product = {{p, 0}, p, std::vector<Rational>(K + 1, 0)};
    for (int n = 0; n <= K; ++n) {
        std::int64_t next = n + 1 <= K ? level_value[n + 1] : 0;
        out.product.coeffs[n] = Rational(static_cast<long>(level_value[n] - next));
        out.level_multiplicity.push_back(static_cast<std::uint64_t>(level_value[n]));
    }
    out.product.trim();
    return out;
}

}  // namespace hmf
