// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "cutseq/converters.hpp"
#include "cutseq/dynamics.hpp"
#include "cutseq/errors.hpp"
#include "cutseq/measures.hpp"
#include "cutseq/natural_extension.hpp"
#include "float_oracle.hpp"
#include "section_gen.hpp"

#include <boost/math/constants/constants.hpp>

#include <cctype>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <regex>
#include <string>

using namespace cutseq;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void run(int id, double limit_s, const std::function<Outcome()>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < limit_s;
    bool pass = o.ok && in_time;
    if (!pass)
        ++failures;
    std::printf("criterion %2d: %s  %7.2f s (limit %g s)  %s%s\n", id, pass ? "PASS" : "FAIL", secs, limit_s,
                o.detail.c_str(), in_time ? "" : "  [too slow]");
    std::fflush(stdout);
}

DigitList D(std::initializer_list<std::pair<long, int>> xs)
{
    DigitList out;
    for (auto [a, e] : xs)
        out.push_back({a, e});
    return out;
}

DigitList plain(std::initializer_list<long> xs)
{
    DigitList out;
    for (long a : xs)
        out.push_back({a, 1});
    return out;
}

DigitStream rcf(long lead, std::initializer_list<long> per)
{
    return DigitStream{CfKind::RCF, 1, SignedDigit{lead, 1}, {}, plain(per)};
}

DigitList head(const DigitStream& s, std::size_t n)
{
    DigitList all;
    if (s.leading)
        all.push_back(*s.leading);
    for (const auto& d : s.unrolled(n))
        all.push_back(d);
    all.resize(std::min(all.size(), n));
    return all;
}

std::string digits_str(const DigitList& l)
{
    std::string s;
    for (const auto& d : l)
        s += d.str();
    return s;
}

// every list of the given length over the alphabet
void for_each_word(const DigitList& alphabet, std::size_t len, const std::function<void(const DigitList&)>& f)
{
    DigitList w(len);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == len) {
            f(w);
            return;
        }
        for (const auto& d : alphabet) {
            w[i] = d;
            rec(i + 1);
        }
    };
    rec(0);
}

DigitList admissible_alphabet(CfKind kind, long max_digit)
{
    DigitList out;
    for (long a = 1; a <= max_digit; ++a)
        for (int e : {1, -1}) {
            try {
                validate_digit(kind, {a, e}, false);
                out.push_back({a, e});
            } catch (const AdmissibilityError&) {
            }
        }
    return out;
}

// digits are admissible by construction; (2,-1)^omega converges to the cusp 1
bool admissible_period(CfKind kind, const DigitList& per)
{
    if (kind != CfKind::ECF)
        return true;
    for (const auto& d : per)
        if (d.a != 2 || d.eps != -1)
            return true;
    return false;
}

template <class T>
std::string fmt(const char* f, T v)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Outcome golden_examples()
{
    Outcome o;
    DigitList g1 = head(rcf_to_gcf(rcf(0, {2, 1})).stream, 2);
    DigitList g2 = head(rcf_to_gcf(rcf(0, {2})).stream, 3);
    DigitStream oc = rcf_to_ocf(rcf(2, {2}));
    bool ok1 = g1 == D({{3, 1}, {3, -1}});
    bool ok2 = g2 == D({{1, 1}, {1, 1}, {3, -1}});
    bool ok3 = oc.sign == 1 && oc.leading == SignedDigit{3, -1} && oc.preperiod.empty() &&
               oc.period == D({{1, 1}, {1, 1}, {3, -1}});
    o.ok = ok1 && ok2 && ok3;
    o.detail = "gcf[2,1,..]=" + digits_str(g1) + " gcf[2,2,..]=" + digits_str(g2) + " ocf[2;2,..]=" + oc.str();
    return o;
}

Outcome conjugacy()
{
    std::mt19937_64 rng(1001);
    long bad = 0, total = 0;
    for (Parity p : {Parity::Odd, Parity::Even}) {
        auto T = p == Parity::Odd ? natural_extension_odd : natural_extension_even;
        for (int i = 0; i < 500; ++i) {
            OrientedGeodesic g = gen::section_geodesic(rng, p, 1000);
            ExtensionPoint lhs = conjugation_J(rho_step(g, p).next, p);
            ExtensionPoint rhs = T(conjugation_J(g, p));
            ++total;
            if (!(lhs == rhs))
                ++bad;
        }
    }
    return {bad == 0, std::to_string(total) + " geodesics (500 per parity, disc <= 1000), " + std::to_string(bad) + " mismatches"};
}

Outcome return_periodicity()
{
    DigitList alphabet = admissible_alphabet(CfKind::OCF, 5);
    long periods = 0, plus = 0, bad = 0;
    for (std::size_t len = 1; len <= 3; ++len)
        for_each_word(alphabet, len, [&](const DigitList& per) {
            int sp = sign_product(per);
            ++periods;
            if (sp == 1)
                ++plus;
            for (int eps : {1, -1}) {
                OrientedGeodesic start = periodic_pair(per, Parity::Odd, eps);
                OrientedGeodesic g = start;
                OrientedGeodesic after_r;
                for (std::size_t i = 0; i < 2 * len; ++i) {
                    g = rho_step(g, Parity::Odd).next;
                    if (i + 1 == len)
                        after_r = g;
                }
                OrientedGeodesic scaled{QuadraticSurd(long(sp)) * start.forward, QuadraticSurd(long(sp)) * start.backward};
                if (!(g == start) || !(after_r == scaled))
                    ++bad;
            }
        });
    return {bad == 0, std::to_string(periods) + " periods (" + std::to_string(plus) +
                          " with sign product +1, the rest checked too), both starting signs, " +
                          std::to_string(bad) + " failures"};
}

Outcome purely_periodic_corpus()
{
    // alpha > 1 > conj(alpha): roots of A x^2 + B x + C with A + B + C < 0. Then
    // A |A + B + C| <= disc / 4, which bounds A, and both roots lie within sqrt(disc)/A of 1.
    const long max_disc = 500;
    long surds = 0, periodic[2] = {0, 0}, bad = 0;
    std::string first_bad;
    for (long A = 1; 4 * A <= max_disc; ++A) {
        long span = 2 * long(std::sqrt(double(max_disc))) + 2;
        for (long B = -2 * A - span; B <= -2 * A + span; ++B) {
            for (long C = -(max_disc + B * B) / (4 * A) - 1; 4 * A * C < B * B; ++C) {
                long disc = B * B - 4 * A * C;
                if (disc <= 0 || disc > max_disc || A + B + C >= 0)
                    continue;
                if (std::gcd(std::gcd(A, std::abs(B)), std::abs(C)) != 1 || is_perfect_square(Integer(disc)))
                    continue;
                QuadraticSurd alpha = QuadraticSurd::make(-B, 1, disc, 2 * A);
                ++surds;
                for (Parity p : {Parity::Odd, Parity::Even}) {
                    bool ok = true;
                    try {
                        PeriodicityReport r = purely_periodic(alpha, p);
                        ok = r.window == r.expansion;
                        if (r.expansion) {
                            ++periodic[p == Parity::Odd ? 0 : 1];
                            OrientedGeodesic pair = periodic_pair(r.period, p, 1);
                            ok = ok && r.reversal == true && pair.forward == alpha && pair.backward == alpha.conjugate();
                        }
                    } catch (const std::logic_error&) {
                        ok = false;
                    }
                    if (!ok && ++bad == 1)
                        first_bad = alpha.str() + " " + to_string(p);
                }
            }
        }
    }
    std::string detail = std::to_string(surds) + " surds with disc <= 500 and alpha > 1 > conj; purely periodic: " +
                         std::to_string(periodic[0]) + " odd, " + std::to_string(periodic[1]) + " even; " +
                         std::to_string(bad) + " failures";
    if (bad)
        detail += " (first " + first_bad + ")";
    return {bad == 0, detail};
}

Outcome invariance()
{
    PrecisionScope ps(200);
    std::mt19937_64 rng(5005);
    const double G = (1 + std::sqrt(5.0)) / 2;
    // rational points j/1024 strictly inside (lo, hi)
    auto point = [&](double lo, double hi) {
        long a = long(std::ceil(lo * 1024)) + 1, b = long(std::floor(hi * 1024)) - 1;
        return gen::uniform(rng, a, b);
    };
    auto sub = [&](double lo, double hi) {
        long a = point(lo, hi), b = point(lo, hi);
        while (b == a)
            b = point(lo, hi);
        if (b < a)
            std::swap(a, b);
        return Interval{Real(a) / 1024, Real(b) / 1024};
    };
    struct Case {
        MeasureName m;
        double xlo, xhi, ylo, yhi;
    };
    // mu_e and nu_e are infinite near u = 1 and v = -1; mu_bar_e near the corner (1, -1)
    std::vector<Case> cases = {
        {MeasureName::MuOdd, 0, 1, 0, 0},         {MeasureName::NuOdd, G - 2, G, 0, 0},
        {MeasureName::MuEven, 0, 0.98, 0, 0},     {MeasureName::NuEven, -0.98, 1, 0, 0},
        {MeasureName::MuBarOdd, 0, 1, G - 2, G},  {MeasureName::MuBarEven, 0, 1, -1, 1},
    };
    double worst = 0;
    long bad = 0, checks = 0;
    for (const Case& c : cases) {
        for (int i = 0; i < 50; ++i) {
            InvarianceReport r;
            if (is_two_dimensional(c.m)) {
                Rect rect{sub(c.xlo, c.xhi), sub(c.ylo, c.yhi)};
                if (c.m == MeasureName::MuBarEven && 1 + rect.x.hi * rect.y.lo < Real(0.02)) {
                    --i;
                    continue;
                }
                r = check_invariance(c.m, natural_map(c.m), rect);
            } else {
                r = check_invariance(c.m, natural_map(c.m), sub(c.xlo, c.xhi));
            }
            ++checks;
            worst = std::max(worst, double(abs(r.difference)));
            if (!r.pass || abs(r.difference) > Real(1e-10))
                ++bad;
        }
    }
    Real target = 3 * log(golden_real());
    Real mu_total = measure_mass({MeasureName::MuOdd}, Interval{Real(0), Real(1)});
    Real nu_total = measure_mass({MeasureName::NuOdd}, Interval{golden_real() - 2, golden_real()});
    double e_mu = double(abs(mu_total - target)), e_nu = double(abs(nu_total - target));
    bool totals = e_mu <= 1e-10 && e_nu <= 1e-10;
    return {bad == 0 && totals, std::to_string(checks) + " regions (6 pairs x 50), " + std::to_string(bad) +
                                    " over 1e-10, worst " + fmt("%.3g", worst) + "; totals off by " +
                                    fmt("%.3g", e_mu) + ", " + fmt("%.3g", e_nu)};
}

Outcome lengths()
{
    PrecisionScope ps(200);
    long checked = 0, bad = 0;
    double worst = 0;
    for (Parity p : {Parity::Odd, Parity::Even}) {
        DigitList alphabet = admissible_alphabet(forward_kind(p), p == Parity::Odd ? 7 : 8);
        for (std::size_t len = 1; len <= 4; ++len)
            for_each_word(alphabet, len, [&](const DigitList& per) {
                if (sign_product(per) != 1 || !admissible_period(forward_kind(p), per))
                    return;
                GeodesicLengthReport r = closed_length(per, p);
                ++checked;
                worst = std::max(worst, double(r.relative_error));
                // the trace oracle, recomputed from the matrix
                Real tr = abs(to_real(r.matrix.trace()));
                Real oracle = 2 * acosh(tr / 2);
                if (r.relative_error > Real(1e-9) || abs(r.via_product - oracle) / oracle > Real(1e-9))
                    ++bad;
            });
    }
    GeodesicLengthReport g = closed_length(D({{3, -1}, {1, 1}, {1, 1}}), Parity::Odd);
    Real expect = 2 * log(3 + 2 * sqrt(Real(2)));
    double e = double(abs(g.via_product - expect));
    return {bad == 0 && e <= 1e-9, std::to_string(checked) + " periods, " + std::to_string(bad) +
                                       " over 1e-9, worst relative " + fmt("%.3g", worst) +
                                       "; [(3,-1),(1,1),(1,1)] off by " + fmt("%.3g", e)};
}

Outcome roof_sums()
{
    PrecisionScope ps(200);
    std::mt19937_64 rng(7007);
    long bad = 0;
    double worst = 0;
    int built = 0;
    while (built < 50) {
        Parity p = built % 2 ? Parity::Even : Parity::Odd;
        std::size_t len = std::size_t(gen::uniform(rng, 1, 6));
        DigitList per;
        for (std::size_t i = 0; i < len; ++i) {
            long k = gen::uniform(rng, 1, 5);
            int e = gen::uniform(rng, 0, 1) ? 1 : -1;
            long a = p == Parity::Odd ? 2 * k - 1 : 2 * k;
            if (p == Parity::Odd && a == 1)
                e = 1;
            per.push_back({a, e});
        }
        if (sign_product(per) != 1)
            continue;
        ++built;
        int eps = gen::uniform(rng, 0, 1) ? 1 : -1;
        OrientedGeodesic start = closed_geodesic_from_period(per, p, eps), g = start;
        // one pass over the period as given; a proper power closes up earlier as well
        Real sum = 0;
        for (std::size_t i = 0; i < len; ++i) {
            sum += roof(g, p);
            g = rho_step(g, p).next;
        }
        Real length = closed_length(per, p).via_product;
        double err = double(abs(sum - length));
        worst = std::max(worst, err);
        if (!(g == start) || err > 1e-9)
            ++bad;
    }
    return {bad == 0, "50 closed geodesics (25 per parity), " + std::to_string(bad) + " failures, worst " +
                          fmt("%.3g", worst)};
}

Outcome tail_equivalence()
{
    std::mt19937_64 rng(8008);
    long bad = 0;
    for (Parity p : {Parity::Odd, Parity::Even}) {
        std::vector<UnimodularMatrix> gens = p == Parity::Odd
            ? std::vector{UnimodularMatrix::S(), UnimodularMatrix::ST_inv(), UnimodularMatrix::T2()}
            : std::vector{UnimodularMatrix::theta_S(), UnimodularMatrix::T2()};
        for (int i = 0; i < 100; ++i) {
            QuadraticSurd x = gen::surd_disc(rng, 500);
            UnimodularMatrix g;
            long len = gen::uniform(rng, 1, 6);
            for (long j = 0; j < len; ++j) {
                UnimodularMatrix h = gens[std::size_t(gen::uniform(rng, 0, long(gens.size()) - 1))];
                g = (gen::uniform(rng, 0, 1) ? h : h.inverse()) * g;
            }
            QuadraticSurd y = g.matrix().apply_finite(x);
            EquivalenceResult res = equivalent(x, y, p);
            CfKind k = forward_kind(p);
            if (!res.equivalent || !res.witness || tail(res.alpha, res.r, k) != tail(res.beta, res.s, k) ||
                tail(res.alpha, res.r, k) != *res.witness)
                ++bad;
        }
    }
    return {bad == 0, "200 pairs (100 per group, words of 1..6 generators), " + std::to_string(bad) + " failures"};
}

// templates written out from the letter grammar, independent of the library tables
std::string template_ascii(Parity p, const CaseTag& t)
{
    long k = long(t.k.get_si());
    std::string s;
    if (p == Parity::Odd) {
        switch (t.letter) {
        case CaseLetter::A: for (long i = 1; i < k; ++i) s += "lL"; return s + "lR";
        case CaseLetter::B: for (long i = 1; i < k; ++i) s += "lL"; return s + "r";
        case CaseLetter::C: for (long i = 1; i < k; ++i) s += "Rr"; return s + "Rl";
        case CaseLetter::D: for (long i = 1; i < k; ++i) s += "Rr"; return s + "L";
        }
    }
    switch (t.letter) {
    case CaseLetter::A: return std::string(std::size_t(2 * k - 2), 'L') + "R";
    case CaseLetter::B: return std::string(std::size_t(2 * k - 1), 'L') + "R";
    case CaseLetter::C: return std::string(std::size_t(2 * k - 2), 'R') + "L";
    case CaseLetter::D: return std::string(std::size_t(2 * k - 1), 'R') + "L";
    }
    return s;
}

bool opens_positive(CaseLetter c) { return c == CaseLetter::A || c == CaseLetter::B; }
bool followed_by_positive(CaseLetter c) { return c == CaseLetter::A || c == CaseLetter::D; }

// grammar violations in a run of segments listed left to right
long grammar_violations(Parity p, const std::vector<Segment>& segs, const std::string& word)
{
    static const std::regex odd_word("^(?:(?:lL)*(?:lR|r)|(?:Rr)*(?:Rl|L))+$");
    long v = 0;
    std::string joined;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        std::string w = to_ascii(segs[i].word);
        if (w != template_ascii(p, segs[i].tag))
            ++v;
        joined += w;
        if (i > 0 && followed_by_positive(segs[i - 1].tag.letter) != opens_positive(segs[i].tag.letter))
            ++v;
    }
    if (joined != word)
        ++v;
    if (p == Parity::Odd) {
        if (!word.empty() && !std::regex_match(word, odd_word))
            ++v;
        for (std::size_t i = 1; i < word.size(); ++i)
            if (std::islower(word[i]) == std::islower(word[i - 1]))
                ++v;
    }
    return v;
}

Outcome round_trip()
{
    std::mt19937_64 rng(9009);
    long mismatches = 0, violations = 0;
    for (Parity p : {Parity::Odd, Parity::Even}) {
        bool odd = p == Parity::Odd;
        for (int i = 0; i < 200; ++i) {
            OrientedGeodesic g = gen::section_geodesic(rng, p);
            CuttingSequence cs = cutting_sequence(g, 32, p, 40);
            std::optional<int> sign;
            if (!odd)
                sign = g.forward.sign();
            DigitStream f = parse_cutting_sequence(cs.forward_letters(), Direction::Forward, p, sign);
            DigitStream b = parse_cutting_sequence(cs.backward_letters(), Direction::Backward, p, sign);
            // forward: leading digit plus 31 more; sign * (a0 + eps0 * x) with x in (0,1) expanded by the float oracle
            int s = g.forward.sign();
            mpf_class fx = oracle::to_mpf(g.forward);
            if (s < 0)
                fx = -fx;
            DigitList want_f;
            {
                mpf_class inv(0, oracle::bits);
                inv = 1 / fx;
                want_f = oracle::forward_digits(inv, odd, 32);
            }
            DigitList got_f = head(f, 32);
            if (f.sign != s || got_f != want_f)
                ++mismatches;
            mpf_class y = oracle::to_mpf(g.backward);
            if (s > 0)
                y = -y;
            DigitList want_b = oracle::dual_digits(y, odd, 32);
            if (b.preperiod.size() < 32 || DigitList(b.preperiod.begin(), b.preperiod.begin() + 32) != want_b)
                ++mismatches;

            std::vector<Segment> back(cs.backward.rbegin(), cs.backward.rend());
            violations += grammar_violations(p, cs.forward, to_ascii(cs.forward_letters()));
            violations += grammar_violations(p, back, to_ascii(cs.backward_letters()));
            if (!cs.forward.empty() && opens_positive(cs.forward.front().tag.letter) != (s > 0))
                ++violations;
            if (!back.empty() && !cs.forward.empty() &&
                followed_by_positive(back.back().tag.letter) != opens_positive(cs.forward.front().tag.letter))
                ++violations;
        }
    }
    return {mismatches == 0 && violations == 0, "400 geodesics (200 per parity), 32 digits each way: " +
                                                    std::to_string(mismatches) + " mismatches, " +
                                                    std::to_string(violations) + " grammar violations"};
}

Outcome birkhoff()
{
    PrecisionScope ps(100);
    Real seed = boost::math::constants::pi<Real>() - 3;
    BirkhoffResult r = birkhoff_average(BirkhoffMap::TOdd, Real(0), Real(1) / 2, seed, 1000000, 100);
    PrecisionScope hi(200);
    Real target = measure_mass({MeasureName::MuOdd, true}, Interval{Real(0), Real(1) / 2});
    double err = double(abs(r.average - target));
    return {!r.aborted && r.steps == 1000000 && err <= 5e-3,
            "average " + decimal(r.average, 8) + " vs " + decimal(target, 8) + ", off by " + fmt("%.3g", err)};
}

} // namespace

int main()
{
    run(1, 1, golden_examples);
    run(2, 30, conjugacy);
    run(3, 30, return_periodicity);
    run(4, 120, purely_periodic_corpus);
    run(5, 60, invariance);
    run(6, 120, lengths);
    run(7, 60, roof_sums);
    run(8, 60, tail_equivalence);
    run(9, 60, round_trip);
    run(10, 120, birkhoff);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures ? 1 : 0;
}
