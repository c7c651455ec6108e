#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace mmicp::rng {

// All randomness in this project flows from a single root seed through
// splitmix-based derivation:
//   root -> per-repetition stream -> per-round stream -> per-draw value.
// Keeping the derivation explicit makes every experiment replayable from
// one integer.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Hash-combines the given words into one derived seed.
inline std::uint64_t derive(std::initializer_list<std::uint64_t> words) {
    std::uint64_t state = 0x6a09e667f3bcc908ULL;
    for (std::uint64_t w : words) {
        state ^= w + 0x9e3779b97f4a7c15ULL + (state << 6) + (state >> 2);
        state = splitmix64(state), state = state * 0x2545f4914f6cdd1dULL + 1;
    }
    std::uint64_t s = state;
    return splitmix64(s);
}

inline std::mt19937_64 engine(std::uint64_t seed) { return std::mt19937_64(seed); }

// Uniform double in [0,1) with the usual 53-bit construction. Avoids
// std::uniform_real_distribution, whose output is implementation-defined.
inline double u01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller; consumes exactly two engine draws.
inline double gauss(std::mt19937_64& g) {
    double u1 = u01(g);
    double u2 = u01(g);
    while (u1 <= 0.0) u1 = u01(g);  // log(0) guard
    const double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

// Uniform index in [0, n) via Lemire multiply-shift; reproducible across
// standard libraries, unlike std::uniform_int_distribution.
inline std::size_t uniform_index(std::mt19937_64& g, std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(g()) * n) >> 64);
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& g) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = uniform_index(g, i);
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace mmicp::rng
