#ifndef PRIPS_RANDOM_HPP
#define PRIPS_RANDOM_HPP

#include <cstdint>
#include <random>

namespace prips {

/// One step of the splitmix64 mixer.
constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent child seed for stream `index` of `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t index)
{
    return std::mt19937_64(derive_seed(seed, index));
}

}  // namespace prips

#endif  // PRIPS_RANDOM_HPP
