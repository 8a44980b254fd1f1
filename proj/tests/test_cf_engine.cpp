#include <doctest.h>

#include "cutseq/cf_engine.hpp"
#include "cutseq/errors.hpp"
#include "cutseq/natural_extension.hpp"
#include "float_oracle.hpp"
#include "gen.hpp"

#include <random>

using namespace cutseq;

namespace {

QuadraticSurd Q(long n) { return QuadraticSurd(n); }
QuadraticSurd R(long a, long b) { return QuadraticSurd(make_rational(a, b)); }
QuadraticSurd sqrt_of(long n) { return QuadraticSurd::make(0, 1, n, 1); }
const QuadraticSurd G = QuadraticSurd::golden();

DigitList D(std::initializer_list<std::pair<long, int>> xs)
{
    DigitList out;
    for (auto [a, e] : xs)
        out.push_back({a, e});
    return out;
}

bool in_unit(const QuadraticSurd& x) { return x.sign() > 0 && x < Q(1); }

// all digits including the leading one, as the flat list the tail formulas index
DigitList flat(const DigitStream& s, std::size_t n)
{
    DigitList out;
    if (s.leading)
        out.push_back(*s.leading);
    DigitList rest = s.unrolled(n);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

} // namespace

TEST_CASE("ocf_step examples")
{
    Step s = ocf_step(R(7, 10));
    CHECK(s.digit == SignedDigit{1, 1});
    CHECK(s.rest == R(3, 7));

    s = ocf_step(sqrt_of(2) - Q(1));
    CHECK(s.digit == SignedDigit{3, -1});
    CHECK(s.rest == Q(2) - sqrt_of(2));

    s = ocf_step(Q(2) - sqrt_of(2));
    CHECK(s.digit == SignedDigit{1, 1});
    CHECK(s.rest == sqrt_of(2) / Q(2));

    CHECK_THROWS_AS(ocf_step(R(1, 2)), BoundaryError);
    CHECK_THROWS_AS(ocf_expand(R(1, 2)), BoundaryError);
    CHECK_THROWS_AS(ocf_step(Q(0)), DomainError);
    // odd reciprocal: terminal digit
    s = ocf_step(R(1, 3));
    CHECK(s.digit == SignedDigit{3, 1});
    CHECK(s.rest.sign() == 0);
}

TEST_CASE("golden expansions")
{
    DigitStream s = ocf_expand(sqrt_of(2) - Q(1));
    CHECK_FALSE(s.leading);
    CHECK(s.preperiod.empty());
    CHECK(s.period == D({{3, -1}, {1, 1}, {1, 1}}));

    s = ocf_expand(Q(1) + sqrt_of(2));
    REQUIRE(s.leading);
    CHECK(*s.leading == SignedDigit{3, -1});
    CHECK(s.preperiod.empty());
    CHECK(s.period == D({{1, 1}, {1, 1}, {3, -1}}));

    s = ecf_expand(sqrt_of(2) - Q(1));
    CHECK(s.period == D({{2, 1}}));
    s = ecf_expand(Q(1) + sqrt_of(2));
    CHECK(*s.leading == SignedDigit{2, 1});
    CHECK(s.period == D({{2, 1}}));

    DigitStream e{CfKind::EECF, 1, std::nullopt, {}, D({{2, 1}})};
    CHECK(cf_evaluate(e) == sqrt_of(2) - Q(1));

    // [0; 2,1,2,1,...] and [0; 2,2,2,...]
    DigitStream r1{CfKind::RCF, 1, SignedDigit{0, 1}, {}, D({{2, 1}, {1, 1}})};
    QuadraticSurd y1 = cf_evaluate(r1);
    CHECK(y1 == (sqrt_of(3) - Q(1)) / Q(2));
    DigitStream g1 = gcf_expand(y1);
    CHECK(g1.unrolled(2) == D({{3, 1}, {3, -1}}));
    CHECK(cf_evaluate(g1) == y1);

    DigitStream r2{CfKind::RCF, 1, SignedDigit{0, 1}, {}, D({{2, 1}})};
    QuadraticSurd y2 = cf_evaluate(r2);
    CHECK(y2 == sqrt_of(2) - Q(1));
    CHECK(gcf_expand(y2).unrolled(3) == D({{1, 1}, {1, 1}, {3, -1}}));

    DigitStream r3 = rcf_expand(sqrt_of(3));
    CHECK(r3.leading->a == 1);
    CHECK(r3.period == D({{1, 1}, {2, 1}}));
    DigitStream r4 = rcf_expand(R(3, 4));
    CHECK(r4.leading->a == 0);
    CHECK(r4.preperiod == D({{1, 1}, {3, 1}}));
}

TEST_CASE("evaluate examples")
{
    DigitStream s{CfKind::OCF, 1, std::nullopt, {}, D({{3, -1}, {1, 1}, {1, 1}})};
    CHECK(cf_evaluate(s) == sqrt_of(2) - Q(1));

    DigitStream fin{CfKind::OCF, 1, std::nullopt, D({{1, 1}, {3, -1}}), {}};
    CHECK(cf_evaluate(fin) == R(3, 4));
    CHECK(ocf_expand(R(3, 4)).preperiod == D({{1, 1}, {3, 1}}));

    DigitStream bad{CfKind::OCF, 1, std::nullopt, D({{2, 1}}), {}};
    CHECK_THROWS_WITH_AS(cf_evaluate(bad), "ocf digit (2,+1) violates a odd positive", AdmissibilityError);
    DigitStream bad2{CfKind::GCF, 1, std::nullopt, {}, D({{1, -1}})};
    CHECK_THROWS_AS(cf_evaluate(bad2), AdmissibilityError);

    // parabolic period: 1 = [[(2,-1),(2,-1),...]]_e
    DigitStream par{CfKind::ECF, 1, std::nullopt, {}, D({{2, -1}})};
    CHECK(cf_evaluate(par) == Q(1));
}

TEST_CASE("digits agree with the float branch oracle")
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 300; ++i) {
        QuadraticSurd x = gen::surd_where(rng, in_unit);
        CHECK(ocf_expand(x).unrolled(25) == oracle::forward_digits(oracle::to_mpf(x), true, 25));
        CHECK(ecf_expand(x).unrolled(25) == oracle::forward_digits(oracle::to_mpf(x), false, 25));
        QuadraticSurd y = gen::surd_where(rng, [](const QuadraticSurd& v) { return in_gcf_domain(v); });
        CHECK(gcf_expand(y).unrolled(25) == oracle::dual_digits(oracle::to_mpf(y), true, 25));
        QuadraticSurd w = gen::surd_where(rng, [](const QuadraticSurd& v) { return in_eecf_domain(v); });
        CHECK(eecf_expand(w).unrolled(25) == oracle::dual_digits(oracle::to_mpf(w), false, 25));
    }
}

TEST_CASE("round trip, admissibility and domains")
{
    std::mt19937_64 rng(22);
    const CfKind kinds[] = {CfKind::RCF, CfKind::OCF, CfKind::GCF, CfKind::ECF, CfKind::EECF};
    int rational_boundaries = 0;
    for (int i = 0; i < 400; ++i) {
        bool rational = i % 2 == 0;
        for (CfKind k : kinds) {
            auto pick = [&](auto pred) {
                if (!rational)
                    return gen::surd_where(rng, pred);
                for (;;) {
                    QuadraticSurd v = gen::rational(rng, 5000);
                    if (pred(v))
                        return v;
                }
            };
            QuadraticSurd x = is_dual_kind(k)
                ? pick([&](const QuadraticSurd& v) {
                      return v.sign() != 0 && (k == CfKind::GCF ? in_gcf_domain(v) : in_eecf_domain(v));
                  })
                : pick([](const QuadraticSurd&) { return true; });
            DigitStream s;
            try {
                s = cf_expand(x, k);
            } catch (const BoundaryError&) {
                // rationals can land on a branch endpoint
                CHECK(rational);
                ++rational_boundaries;
                continue;
            }
            CHECK_FALSE(s.truncated);
            CHECK(s.is_finite() == rational);
            CHECK_NOTHROW(validate(s));
            CHECK(cf_evaluate(s) == x);
        }
    }
    MESSAGE("rational inputs on a branch endpoint: " << rational_boundaries);
}

TEST_CASE("Gauss map images stay in their domains and shift the expansion")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        QuadraticSurd x = gen::surd_where(rng, in_unit);
        QuadraticSurd y = gen::surd_where(rng, [](const QuadraticSurd& v) { return in_gcf_domain(v); });
        QuadraticSurd w = gen::surd_where(rng, [](const QuadraticSurd& v) { return in_eecf_domain(v); });
        struct Case { CfKind k; QuadraticSurd v; };
        for (const Case& c : {Case{CfKind::OCF, x}, Case{CfKind::ECF, x}, Case{CfKind::GCF, y}, Case{CfKind::EECF, w}}) {
            Step st = cf_step(c.k, c.v);
            if (is_dual_kind(c.k))
                CHECK((c.k == CfKind::GCF ? in_gcf_domain(st.rest) : in_eecf_domain(st.rest)));
            else
                CHECK(in_unit(st.rest));
            DigitStream full = cf_expand(c.v, c.k), shifted = cf_expand(st.rest, c.k);
            CHECK(shifted == full.drop_first());
            CHECK(full.unrolled(1).front() == st.digit);
        }
    }
}

TEST_CASE("eventually periodic for every surd, never truncated at the default depth")
{
    for (long n = 2; n <= 500; ++n) {
        if (is_perfect_square(Integer(n)))
            continue;
        QuadraticSurd s = sqrt_of(n);
        for (CfKind k : {CfKind::RCF, CfKind::OCF, CfKind::ECF}) {
            DigitStream e = cf_expand(s, k);
            CHECK_FALSE(e.truncated);
            CHECK_FALSE(e.period.empty());
        }
    }
}

TEST_CASE("tails")
{
    QuadraticSurd alpha = Q(1) + sqrt_of(2);
    QuadraticSurd t1 = tail(alpha, 1, CfKind::OCF);
    CHECK(t1 == (Q(3) - alpha).inverse());
    CHECK(alpha == Q(3) - t1.inverse());
    CHECK(tail(alpha, 0, CfKind::OCF) == alpha);
    CHECK_THROWS_AS(tail(R(5, 2), 1, CfKind::OCF), DomainError);

    // purely periodic with sign product +1 comes back after one period
    CHECK(tail(alpha, 3, CfKind::OCF) == alpha);

    // tails against the digit formula t_m = prod(-eps_i) [[(a_{m+1}, eps_{m+1}); ...]]
    std::mt19937_64 rng(24);
    for (int i = 0; i < 200; ++i) {
        QuadraticSurd x = gen::surd_where(rng, [](const QuadraticSurd& v) { return v > QuadraticSurd(1L); });
        for (CfKind k : {CfKind::OCF, CfKind::ECF}) {
            DigitStream s = cf_expand(x, k);
            DigitList all = flat(s, 12);
            for (std::size_t m = 0; m < 8; ++m) {
                DigitStream rest = s;
                for (std::size_t j = 0; j < m; ++j)
                    rest = rest.drop_first();
                // promote the next digit to the leading slot
                DigitStream lead = rest.drop_first();
                lead.leading = all[m];
                int sign = 1;
                for (std::size_t j = 0; j < m; ++j)
                    sign *= -all[j].eps;
                CHECK(tail(x, m, k) == QuadraticSurd(long(sign)) * cf_evaluate(lead));
            }
        }
    }
}

TEST_CASE("natural extension examples")
{
    QuadraticSurd r = sqrt_of(2) - Q(1);
    ExtensionPoint p{r, r, 1};
    ExtensionPoint q = natural_extension_odd(p);
    CHECK(q.x == Q(2) - sqrt_of(2));
    CHECK(q.y == (sqrt_of(2) - Q(2)) / Q(2));
    CHECK(q.eps == 1);
    CHECK(natural_extension_odd_inv(q) == p);

    ExtensionPoint e = natural_extension_even(p);   // T_e fixes sqrt(2)-1
    CHECK(e.x == r);
    CHECK(e.y == (Q(2) + r).inverse());
    CHECK(e.eps == -1);
    CHECK(natural_extension_even_inv(e) == p);

    CHECK_THROWS_AS(natural_extension_odd({R(1, 3), r, 1}), DomainError);

    // fixed point of the two-dimensional map: (G-1, G-1) from the digit (1,+1)
    auto fixed = inverse_via_rho(G - Q(1), G - Q(1));
    CHECK(fixed.first == G - Q(1));
    CHECK(fixed.second == G - Q(1));
    auto both = inverse_via_rho(r, r);
    ExtensionPoint inv = natural_extension_odd_inv(p);
    CHECK(both.first == inv.x);
    CHECK(both.second == inv.y);
}

TEST_CASE("natural extensions are bijective and shift the two-sided sequence")
{
    std::mt19937_64 rng(25);
    for (int i = 0; i < 200; ++i) {
        QuadraticSurd x = gen::surd_where(rng, in_unit);
        QuadraticSurd y = gen::surd_where(rng, [](const QuadraticSurd& v) { return in_gcf_domain(v); });
        QuadraticSurd w = gen::surd_where(rng, [](const QuadraticSurd& v) { return in_eecf_domain(v); });
        int eps = i % 2 ? 1 : -1;

        ExtensionPoint p{x, y, eps};
        ExtensionPoint f = natural_extension_odd(p);
        CHECK(natural_extension_odd_inv(f) == p);
        CHECK(natural_extension_odd(natural_extension_odd_inv(p)) == p);
        DigitList head = ocf_expand(x).unrolled(1);
        DigitList lhs = gcf_expand(f.y).unrolled(15);
        DigitList rhs = head;
        DigitList tailp = gcf_expand(y).unrolled(14);
        rhs.insert(rhs.end(), tailp.begin(), tailp.end());
        CHECK(lhs == rhs);
        CHECK(ocf_expand(f.x) == ocf_expand(x).drop_first());

        auto via = inverse_via_rho(x, y);
        ExtensionPoint inv = natural_extension_odd_inv(p);
        CHECK(via.first == inv.x);
        CHECK(via.second == inv.y);

        ExtensionPoint pe{x, w, eps};
        ExtensionPoint fe = natural_extension_even(pe);
        CHECK(natural_extension_even_inv(fe) == pe);
        CHECK(natural_extension_even(natural_extension_even_inv(pe)) == pe);
        DigitList lhe = eecf_expand(fe.y).unrolled(15);
        DigitList rhe = ecf_expand(x).unrolled(1);
        DigitList te = eecf_expand(w).unrolled(14);
        rhe.insert(rhe.end(), te.begin(), te.end());
        CHECK(lhe == rhe);
    }
}

TEST_CASE("ECF/EECF reindexing")
{
    DigitList dual = D({{4, 1}, {2, -1}, {6, -1}});
    auto [first, fwd] = dual_to_forward_signs(dual);
    CHECK(first == 1);
    CHECK(fwd == D({{4, -1}, {2, -1}, {6, 1}}));
    CHECK(forward_to_dual_signs(first, fwd) == dual);
    DigitStream e{CfKind::EECF, 1, std::nullopt, dual, {}};
    DigitStream f{CfKind::ECF, 1, std::nullopt, fwd, {}};
    CHECK(cf_evaluate(e) == QuadraticSurd(long(first)) * cf_evaluate(f));
}

TEST_CASE("gcf ties resolve into the half-open domain")
{
    const QuadraticSurd g = QuadraticSurd::golden();
    const QuadraticSurd lo = g - QuadraticSurd(2L);
    CHECK(in_gcf_domain(lo));
    CHECK_FALSE(in_gcf_domain(g));
    // 1/|G-2| = G + 1: both b = 1 and b = 3 fit the closed interval, only b = 3 the domain
    Step st = gcf_step(lo);
    CHECK(st.digit.a == 3);
    CHECK(st.digit.eps == -1);
    CHECK(st.rest == lo);
    Step up = gcf_step(-lo);
    CHECK(up.digit.a == 3);
    CHECK(up.digit.eps == 1);
    DigitStream s = gcf_expand(lo);
    CHECK(s.preperiod.empty());
    REQUIRE(s.period.size() == 1);
    CHECK(cf_evaluate(s) == lo);
    CHECK_THROWS_AS(gcf_step(g), DomainError);
}
