#include "cutseq/squarefree.hpp"

#include "cutseq/errors.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace cutseq {

namespace {

const std::vector<unsigned long>& small_primes()
{
    static const std::vector<unsigned long> primes = [] {
        const unsigned long limit = 1UL << 16;
        std::vector<bool> composite(limit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0.
Integer pollard_brent(const Integer& n)
{
    if (is_even(n))
        return 2;
    for (unsigned long c = 1; c < 40; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        auto f = [&](const Integer& v) -> Integer {
            Integer t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        unsigned long steps = 0;
        while (g == 1 && steps < 4000000) {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer diff = abs(x - y);
                    q = q * diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            steps += r;
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n && g != 1)
            return g;
    }
    return 0;
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out)
{
    if (n == 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        ++out[n];
        return;
    }
    if (is_perfect_square(n)) {
        Integer s = isqrt(n);
        factor_into(s, out);
        factor_into(s, out);
        return;
    }
    Integer d = pollard_brent(n);
    if (d == 0)
        throw SearchExhausted("could not factor " + n.get_str());
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

bool is_perfect_square(const Integer& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer isqrt(const Integer& n)
{
    if (n < 0)
        throw DomainError("isqrt of negative number");
    Integer out;
    mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
    return out;
}

SquareDecomposition square_decompose(const Integer& n, const Integer& hint)
{
    if (n <= 0)
        throw DomainError("square_decompose needs a positive integer, got " + n.get_str());
    if (hint >= 2 && mpz_divisible_p(n.get_mpz_t(), hint.get_mpz_t())) {
        Integer rest = n / hint;
        if (is_perfect_square(rest))
            return {isqrt(rest), hint};
    }
    if (is_perfect_square(n))
        return {isqrt(n), 1};

    Integer root = 1, kernel = 1, m = n;
    bool exhausted = true;
    for (unsigned long p : small_primes()) {
        Integer pp = p;
        if (pp * pp * pp > m) {
            exhausted = false;
            break;
        }
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2)
            root *= p;
        if (e % 2 == 1)
            kernel *= p;
    }
    if (m == 1)
        return {root, kernel};
    if (is_perfect_square(m))
        return {root * isqrt(m), kernel};
    if (!exhausted)
        return {root, kernel * m};   // at most two distinct primes left

    std::map<Integer, unsigned> factors;
    factor_into(m, factors);
    for (const auto& [p, e] : factors) {
        for (unsigned i = 0; i + 1 < e; i += 2)
            root *= p;
        if (e % 2 == 1)
            kernel *= p;
    }
    return {root, kernel};
}

} // namespace cutseq
