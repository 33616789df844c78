#pragma once

// Shared deterministic generators for the test suite. std::mt19937 has a
// fully specified algorithm, so seeded tests reproduce across platforms;
// we avoid std::uniform_int_distribution for the same reason.

#include <skyshift/exact.hpp>

#include <random>

namespace testsupport {

using skyshift::BigInt;
using skyshift::ExactNum;
using skyshift::Rational;

inline std::uint64_t rand_below(std::mt19937& rng, std::uint64_t n) {
    // Rejection sampling keeps the draw unbiased and implementation-independent.
    const std::uint64_t limit = (~std::uint64_t{0} / n) * n;
    std::uint64_t v;
    do {
        v = (static_cast<std::uint64_t>(rng()) << 32) | rng();
    } while (v >= limit);
    return v % n;
}

inline long rand_in(std::mt19937& rng, long lo, long hi) {
    return lo + static_cast<long>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline Rational random_rational(std::mt19937& rng, long max_num = 20, long max_den = 12) {
    long num = rand_in(rng, -max_num, max_num);
    long den = rand_in(rng, 1, max_den);
    return Rational(num, den);
}

inline Rational random_positive_rational(std::mt19937& rng, long max_num = 20, long max_den = 12) {
    long num = rand_in(rng, 1, max_num);
    long den = rand_in(rng, 1, max_den);
    return Rational(num, den);
}

inline ExactNum random_exact(std::mt19937& rng, long disc = 5) {
    Rational rat = random_rational(rng);
    if (rand_below(rng, 2) == 0) return ExactNum(rat);
    Rational rad = random_rational(rng, 6, 8);
    return ExactNum(rat, rad, disc);
}

inline ExactNum random_positive_exact(std::mt19937& rng, long disc = 5) {
    ExactNum x = random_exact(rng, disc);
    if (x.sign() > 0) return x;
    ExactNum flipped = -x;
    if (flipped.sign() > 0) return flipped;
    return ExactNum(1, static_cast<long>(1 + rand_below(rng, 7)));
}

}  // namespace testsupport
