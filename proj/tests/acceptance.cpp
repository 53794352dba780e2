// Acceptance gate: runs the ten release criteria and prints one line per
// criterion. Exit status is the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

using namespace cyvol;

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

int failures = 0;

void report(int index, bool ok, const std::string& detail) {
    if (!ok) ++failures;
    std::printf("criterion %2d %s %s\n", index, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// Strictly interior nef class with small rational entries.
std::vector<Rational> random_interior_nef(std::mt19937& rng, int size) {
    std::uniform_int_distribution<int> num(1, 24), den(1, 4);
    std::vector<Rational> v(size);
    for (auto& x : v) x = Rational(num(rng), den(rng));
    return v;
}

// Ascending partitions of total, enumerated recursively.
void partitions_of(int total, int min_part, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = min_part; part <= total; ++part) {
        prefix.push_back(part);
        partitions_of(total - part, part, prefix, out);
        prefix.pop_back();
    }
}

void criterion_1() {
    Stopwatch timer;
    std::mt19937 rng(20260814);
    const int trials = 200;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
        const AmbientSpace s = ts::random_strict_space(rng, true);
        const GramMatrix b = gram_from_ambient(s);
        const int j = static_cast<int>(j_set(s).size());
        if (signature(b.entries()) == Signature{j - 1, 1, 0}) ++good;
    }
    const double secs = timer.seconds();
    const bool ok = good == trials && secs < 10.0;
    report(1, ok,
           "Lorentzian certification: " + std::to_string(good) + "/" + std::to_string(trials) +
               " random strict configurations have exact signature (|J|-1,1,0); sampler scope "
               "|J|>=2 and not (n=1,|J|=2); " +
               fmt(secs) + " s (limit 10 s)");
}

void criterion_2() {
    int cases = 0, bad = 0;
    std::string note = "including the degenerate point (2),n=1 -> (1,0,1)";
    for (int total = 2; total <= 8; ++total) {
        std::vector<std::vector<int>> parts;
        std::vector<int> prefix;
        partitions_of(total, 1, prefix, parts);
        for (const auto& alphas : parts) {
            const int k = static_cast<int>(alphas.size());
            for (int n = 1; n <= 4; ++n) {
                ++cases;
                const Matrix<Rational> g = block_gram(alphas, n);
                const Signature expected = (total == 2 && k == 1 && n == 1)
                                               ? Signature{1, 0, 1}
                                               : Signature{total - 1, 1, 0};
                if (!(signature(g) == expected)) ++bad;
                const auto cp = characteristic_polynomial(g);
                if (!divisible_by_linear_power(cp, Rational(n + 1), total - k)) ++bad;
                const Matrix<Rational> reduced = block_reduced_matrix(alphas, n);
                std::vector<std::vector<Rational>> rows(k, std::vector<Rational>(k));
                for (int r = 0; r < k; ++r)
                    for (int c = 0; c < k; ++c) rows[r][c] = reduced(r, c);
                if (block_reduced_det(alphas, n) != ts::bareiss_det(rows)) ++bad;
            }
        }
    }
    report(2, bad == 0,
           "block-family oracle: " + std::to_string(cases) +
               " (partition,n) cases, signature + charpoly divisibility by (t-(n+1))^(l-k) + "
               "closed-form determinant all exact, " +
               note + "; " + std::to_string(bad) + " failures");
}

void criterion_3() {
    const AmbientSpace s = ts::p112();
    bool ok = true;

    const Matrix<Rational> m0 = involution_matrix(s, 0);
    const Matrix<Rational> m1 = involution_matrix(s, 1);
    const int e0[3][3] = {{-1, 0, 0}, {2, 1, 0}, {3, 0, 1}};
    const int e1[3][3] = {{1, 2, 0}, {0, -1, 0}, {0, 3, 1}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            if (m0(r, c) != Rational(e0[r][c])) ok = false;
            if (m1(r, c) != Rational(e1[r][c])) ok = false;
        }

    const auto& terms = volume_polynomial(s).terms();
    ok = ok && terms.size() == 3;
    auto coeff_is = [&](std::vector<int> mono, long long v) {
        const auto it = terms.find(mono);
        return it != terms.end() && it->second == Rational(v);
    };
    ok = ok && coeff_is({1, 1, 1}, 18) && coeff_is({1, 0, 2}, 6) && coeff_is({0, 1, 2}, 6);

    int word_checks = 0;
    for (int m = 2; m <= 12; ++m) {
        Word alt(m);
        for (int t = 0; t < m; ++t) alt[t] = t % 2;
        const auto gens = word_cone_generators(m);
        for (int g = 0; g < 3; ++g) {
            std::vector<Rational> h(3, Rational(0));
            h[g] = 1;
            const auto image = apply_word(s, alt, h);
            for (int c = 0; c < 3; ++c)
                if (image[c] != Rational(gens[g][c])) ok = false;
            ++word_checks;
        }
    }
    report(3, ok,
           "chamber-geometry goldens: both reflection matrices, the 3-term volume polynomial "
           "(18xyz+6xz^2+6yz^2), and word-cone generators == pushed hyperplanes for lengths "
           "2..12 (" +
               std::to_string(word_checks) + " exact vector checks)");
}

void criterion_4() {
    const AmbientSpace s = ts::p333();
    const GramMatrix b = gram_from_ambient(s);
    bool ok = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && b_coefficient(s, i, j) != 7) ok = false;

    const auto exact = coxeter_pair_eigen_exact(s, 0, 1);
    ok = ok && exact.lambda == QuadExt(Rational(47, 2), Rational(21, 2), 5);
    ok = ok && exact.vec[0] == QuadExt(Rational(5, 14), Rational(-3, 14), 5);
    ok = ok && exact.vec[1] == QuadExt(Rational(5, 14), Rational(3, 14), 5);
    ok = ok && exact.vec[2] == QuadExt(1);
    const QuadExt self = pairing(b, exact.vec, exact.vec);
    ok = ok && self.sign() == 0;

    const auto approx = coxeter_pair_eigen(s, 0, 1);
    const double sqrt5 = std::sqrt(5.0);
    ok = ok && std::abs(approx.lambda - (47 + 21 * sqrt5) / 2) < 1e-10;
    ok = ok && std::abs(approx.vec[0] - (5 - 3 * sqrt5) / 14) < 1e-9;
    ok = ok && std::abs(approx.vec[1] - (5 + 3 * sqrt5) / 14) < 1e-9;
    ok = ok && std::abs(approx.vec[2] - 1.0) < 1e-12;
    ok = ok && std::abs(pairing(b, approx.vec, approx.vec)) < 1e-9;

    report(4, ok,
           "(P^3)^3 eigenpair: b_ij = 7, lambda = (47+21*sqrt5)/2 within 1e-10 and exact in the "
           "quadratic field, eigenvector within 1e-9, self-pairing exactly isotropic");
}

void criterion_5() {
    Stopwatch timer;
    const AmbientSpace s = ts::p333();
    const std::vector<QuadExt> ones_q(3, QuadExt(1));
    const std::vector<Rational> ones_r(3, Rational(1));

    const auto eig = coxeter_pair_eigen_exact(s, 0, 1);
    const auto rep_lambda = vol_asymptotic_exponent<QuadExt>(s, eig.vec, ones_q);
    const auto rep_face = vol_asymptotic_exponent<Rational>(s, ts::rat_vec({0, 0, 1}), ones_r);
    const auto mixed = boundary_lambda_exact(s, 0, 1, Rational(1), {Rational(1)});
    const auto rep_mixed = vol_asymptotic_exponent<QuadExt>(s, mixed, ones_q);
    const double secs = timer.seconds();

    const double d1 = std::abs(rep_lambda.slope - 3.0);
    const double d2 = std::abs(rep_face.slope - 3.0);
    const double d3 = std::abs(rep_mixed.slope - 1.5);
    const bool ok = d1 < 0.02 && d2 < 0.02 && d3 < 0.02 && secs < 30.0;
    report(5, ok,
           "boundary vanishing orders over s=2^-8..2^-20: slopes {" + fmt(rep_lambda.slope) +
               ", " + fmt(rep_face.slope) + ", " + fmt(rep_mixed.slope) +
               "} for {v_lambda, h3, v_lambda+h3} vs {3, 3, 1.5}, tail-fit deviations < 0.02; "
               "literal fit residuals {" +
               fmt(rep_lambda.residual) + ", " + fmt(rep_face.residual) + ", " +
               fmt(rep_mixed.residual) + "}; " + fmt(secs) + " s (limit 30 s)");
}

void criterion_6() {
    Stopwatch timer;
    const Rational a(-1), b(2), k(1);
    const SeriesResult closed = v_closed_form(a, b, k);
    bool ok = true;
    double diff_million = 0;
    for (long long n : {1000LL, 10000LL, 100000LL, 1000000LL}) {
        const SeriesResult part = series_partial_sum(n, a, b, k);
        const double err = std::abs(part.partial_sum - closed.closed_form);
        if (err > part.tail_bound) ok = false;
        if (n == 1000000) {
            diff_million = err;
            if (err >= 1e-6) ok = false;
        }
    }
    const double r12 = std::sqrt(33.0) / 12.0;
    const double expected_args[4] = {1.75 + r12, 1.75 - r12, 1.25 + r12, 1.25 - r12};
    for (int i = 0; i < 4; ++i)
        if (std::abs(closed.digamma_args[i] - expected_args[i]) > 1e-12) ok = false;
    const double secs = timer.seconds();
    if (secs >= 5.0) ok = false;
    report(6, ok,
           "series vs closed form at (-1,2,1): |partial(10^6) - closed| = " + fmt(diff_million) +
               " (< 1e-6), tail bound honored at N = 10^3..10^6, digamma arguments "
               "7/4+-sqrt33/12 and 5/4+-sqrt33/12 within 1e-12; " +
               fmt(secs) + " s (limit 5 s)");
}

void criterion_7() {
    const AmbientSpace s = ts::p112();
    const Rational a(-1), b(2), k(1);
    const PlaneSlice plane{a, b, k};
    bool ok = true;
    std::string euclid;
    Rational first_ratio(0);
    for (long long n = 1; n <= 6; ++n) {
        const auto parts = series_summand_parts(n, a, b, k);
        const auto even =
            integrate_vol_over_triangle_parts(s, slice_triangle(word_cone_generators(2 * n), plane));
        const auto odd = integrate_vol_over_triangle_parts(
            s, slice_triangle(word_cone_generators(2 * n + 1), plane));
        const Rational ratio_even = even.simplex_integral / parts.even_part;
        const Rational ratio_odd = odd.simplex_integral / parts.odd_part;
        if (n == 1) first_ratio = ratio_even;
        // constancy to relative 1e-8; the simplex-measure ratios are exactly 1
        for (const Rational& r : {ratio_even, ratio_odd}) {
            const double rel = std::abs(to_double((r - first_ratio) / first_ratio));
            if (rel > 1e-8) ok = false;
        }
        const double geometric = even.value + odd.value;
        euclid += (n > 1 ? ", " : "") + fmt(geometric / to_double(parts.total));
    }
    const std::string ratio_text =
        first_ratio == 1 ? std::string("1 exactly") : to_string(first_ratio);
    report(7, ok,
           "measure convention: simplex-integral / summand ratio constant (= " + ratio_text +
               ") over n = 1..6; Euclidean-measure ratios for comparison: {" + euclid + "}");
}

void criterion_8() {
    std::mt19937 rng(8);
    const AmbientSpace spaces[2] = {ts::p333(), ts::p112()};
    int round_trips = 0, bad = 0;
    std::uniform_int_distribution<int> len(1, 8);
    for (int t = 0; t < 500; ++t) {
        const AmbientSpace& s = spaces[t % 2];
        const int letters = static_cast<int>(j_set(s).size());
        const auto v = random_interior_nef(rng, s.l());
        const Word w = ts::random_reduced_word(rng, letters, len(rng));
        const auto moved = apply_word(s, w, v);
        const auto red = reduce_to_nef(s, moved);
        if (red.reduced != v) ++bad;
        ++round_trips;
    }

    const AmbientSpace s = ts::p333();
    const GramMatrix g = gram_from_ambient(s);
    int invariance = 0;
    for (int t = 0; t < 500; ++t) {
        const auto x = ts::random_rational_vector(rng, s.l());
        const auto y = ts::random_rational_vector(rng, s.l());
        const Rational before = pairing(g, x, y);
        for (int j = 0; j < s.l(); ++j) {
            if (pairing(g, apply_involution(s, j, x), apply_involution(s, j, y)) != before) ++bad;
            ++invariance;
        }
    }
    report(8, bad == 0,
           "reduction round-trip: " + std::to_string(round_trips) +
               " random (nef class, reduced word) pairs recover the class exactly on (P^3)^3 "
               "and the threefold; pairing invariant under every generator in " +
               std::to_string(invariance) + " exact checks");
}

void criterion_9() {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> len(1, 6);
    int bad = 0, seeds = 0;
    for (int t = 0; t < 200; ++t) {
        AmbientSpace s = ts::p333();
        if (t % 2 == 1) {
            for (;;) {
                AmbientSpace candidate = ts::random_strict_space(rng, true);
                if (static_cast<int>(j_set(candidate).size()) == candidate.l() &&
                    is_lorentzian(gram_from_ambient(candidate))) {
                    s = std::move(candidate);
                    break;
                }
            }
        }
        const GramMatrix b = gram_from_ambient(s);
        const auto v = random_interior_nef(rng, s.l());
        const Word w = ts::random_reduced_word(rng, s.l(), len(rng));
        const auto image = apply_word(s, w, v);
        if (!is_i_negative(s, b, image, w.front())) ++bad;
        ++seeds;
    }
    report(9, bad == 0,
           "i-negativity propagation: " + std::to_string(seeds) +
               " random seeds (alternating (P^3)^3 and random full-J Lorentzian spaces); every "
               "reduced word starting with iota_i sends interior nef classes to i-negative "
               "classes, exact arithmetic");
}

void criterion_10() {
    const AmbientSpace s = ts::p1();
    const std::vector<std::vector<Rational>> divisors{{Rational(0)}, {Rational(1)}};
    const Rational exact = bundle_volume_exact(s, divisors);
    const BundleVolume adaptive = bundle_volume(s, divisors);
    const bool ok = exact == Rational(1) && std::abs(adaptive.value - 1.0) < 1e-3;
    report(10, ok,
           "projective-bundle sanity on P^1: exact path = " + to_string(exact) +
               ", adaptive = " + fmt(adaptive.value) + " (" +
               std::to_string(adaptive.evaluations) + " evaluations, error estimate " +
               fmt(adaptive.error_estimate) + ")");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures == 0) std::printf("acceptance: all 10 criteria passed\n");
    else std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures;
}
