#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyzeta/hurwitz.hpp"
#include "polyzeta/stuffle.hpp"
#include "polyzeta/suites.hpp"

#include <cmath>

using namespace polyzeta;

namespace {

// Euler's constant by an independent route: harmonic sum with the
// Euler-Maclaurin correction terms, error O(n^-6).
double euler_gamma_oracle() {
    const double n = 1e6;
    double h = 0.0;
    for (double k = 1; k <= n; ++k) h += 1.0 / k;
    const double n2 = n * n;
    return h - std::log(n) - 1.0 / (2 * n) + 1.0 / (12 * n2) - 1.0 / (120 * n2 * n2);
}

// Depth-one brute-force oracle: direct sum with an integral bracket for the
// tail, midpoint taken, so the error is below half the bracket width.
double hurwitz_depth1_oracle(int s, double z, long n_terms) {
    double sum = 0.0;
    for (long n = n_terms - 1; n >= 0; --n) sum += std::pow(z + n, -s);
    const double lo = std::pow(z + n_terms, 1.0 - s) / (s - 1);
    const double hi = std::pow(z + n_terms - 1, 1.0 - s) / (s - 1);
    return sum + 0.5 * (lo + hi);
}

// Depth-two brute-force oracle for (1,2)-type words: nested direct sums with
// bracketed inner tails; accurate to roughly 1/N.
double hurwitz_12_oracle(double z, long N) {
    double sum = 0.0;
    for (long a = N - 1; a >= 0; --a) {
        double inner = 0.0;
        for (long b = 4 * N - 1; b > a; --b) inner += std::pow(z + b, -2);
        inner += 1.0 / (z + 4 * N - 0.5);
        sum += inner / (z + a);
    }
    // outer tail: sum_{a>=N} ~ integral of 1/(z+t)^2
    return sum + 1.0 / (z + N - 0.5);
}

}  // namespace

TEST_CASE("digamma special values") {
    const double gamma = euler_gamma_oracle();
    CHECK(std::abs(digamma(1.0) + gamma) < 1e-12);
    CHECK(digamma(1.0) == doctest::Approx(-0.5772156649015329).epsilon(1e-13));
    CHECK(std::abs(digamma(2.0) - (digamma(1.0) + 1.0)) < 1e-14);
    // duplication at x = 1/2: psi(1/2) = psi(1) - 2 log 2
    CHECK(std::abs(digamma(0.5) - (digamma(1.0) - 2 * std::log(2.0))) < 1e-12);
    CHECK(std::abs(digamma(0.5) + gamma + 2 * std::log(2.0)) < 1e-12);
}

TEST_CASE("digamma recurrence residual on the grid") {
    for (double x = 0.5; x <= 10.0; x += 0.5)
        CHECK(std::abs(digamma(x + 1) - digamma(x) - 1.0 / x) < 1e-13);
}

TEST_CASE("digamma domain") {
    CHECK_THROWS_AS(digamma(0.0), std::domain_error);
    CHECK_THROWS_AS(digamma(-2.5), std::domain_error);
}

TEST_CASE("depth-one values against the brute-force oracle") {
    const double pi = 3.14159265358979323846;
    const EvalResult r = hurwitz_polyzeta(Word({2}), 1.0, 1e-10);
    CHECK(std::abs(r.value - pi * pi / 6) < 1e-10);
    CHECK(std::abs(r.value - hurwitz_depth1_oracle(2, 1.0, 2000000)) < 1e-7);
    CHECK(r.tol <= 1e-10);

    CHECK(std::abs(hurwitz_polyzeta(Word({3}), 2.5, 1e-10).value -
                   hurwitz_depth1_oracle(3, 2.5, 200000)) < 1e-9);
}

TEST_CASE("shift by one drops the first term") {
    const double a = hurwitz_polyzeta(Word({2}), 1.0, 1e-12).value;
    const double b = hurwitz_polyzeta(Word({2}), 2.0, 1e-12).value;
    CHECK(std::abs(b - (a - 1.0)) < 1e-13);
}

TEST_CASE("depth-two value (1,2)") {
    const EvalResult r = hurwitz_polyzeta(Word({1, 2}), 1.0, 1e-8);
    CHECK(std::abs(r.value - 1.2020569032) < 1e-8);  // Apery's constant, Euler's identity
    CHECK(std::abs(r.value - hurwitz_12_oracle(1.0, 20000)) < 1e-3);
}

TEST_CASE("rejections") {
    CHECK_THROWS_AS(hurwitz_polyzeta(Word({2, 1}), 1.0, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(hurwitz_polyzeta(Word({2}), 0.0, 1e-8), std::domain_error);
    CHECK_THROWS_AS(hurwitz_polyzeta(Word({2}), -1.0, 1e-8), std::domain_error);
    CHECK_THROWS_AS(hurwitz_polyzeta(Word({2}), 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("requested tolerance is honored and reported") {
    const EvalResult coarse = hurwitz_polyzeta(Word({2, 3}), 1.5, 1e-6);
    const EvalResult fine = hurwitz_polyzeta(Word({2, 3}), 1.5, 1e-13);
    CHECK(std::abs(coarse.value - fine.value) <=
          coarse.tol * std::abs(fine.value) + 1e-14);
    CHECK(fine.terms_used >= coarse.terms_used);
}

TEST_CASE("regularized values") {
    const double gamma = euler_gamma_oracle();
    CHECK(regularized_numeric(Word({2}), 1.0, 1e-10).value ==
          doctest::Approx(hurwitz_polyzeta(Word({2}), 1.0, 1e-10).value).epsilon(1e-12));
    CHECK(std::abs(regularized_numeric(Word({1}), 1.0, 1e-10).value - gamma) < 1e-11);

    // the displayed combination for the weight-3 trailing-1 word
    const double lhs = regularized_numeric(Word({2, 1}), 1.0, 1e-10).value;
    const double rhs = -digamma(1.0) * hurwitz_polyzeta(Word({2}), 1.0, 1e-12).value -
                       hurwitz_polyzeta(Word({1, 2}), 1.0, 1e-12).value -
                       hurwitz_polyzeta(Word({3}), 1.0, 1e-12).value;
    CHECK(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("difference residuals") {
    CHECK(difference_residual(Word({2}), 2.0, 1e-10) < 1e-9);
    CHECK(difference_residual(Word({1}), 2.0, 1e-10) < 1e-11);
    CHECK(difference_residual(Word({2, 1}), 1.5, 1e-9) < 1e-7);
    for (const Word& w : words_up_to_weight(4)) {
        if (w.empty()) continue;
        for (double z : {1.5, 2.0, 2.5}) {
            INFO(w.str(), " at z=", z);
            CHECK(difference_residual(w, z, 1e-9) < 1e-7);
        }
    }
    CHECK_THROWS_AS(difference_residual(Word({2}), 1.0, 1e-8), std::domain_error);
}

TEST_CASE("stuffle character property at small weight") {
    const Report rep = run_stuffle_char_suite(5, {1.0, 2.0}, 1e-7);
    for (const auto& inst : rep.instances) {
        INFO(inst.input, " lhs=", inst.lhs, " rhs=", inst.rhs);
        CHECK(inst.pass);
    }
    CHECK(rep.all_pass());
}
