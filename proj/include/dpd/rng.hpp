#ifndef DPD_RNG_HPP
#define DPD_RNG_HPP

#include <cstdint>

namespace dpd {

// Deterministic seeded generator (splitmix64). Avoids std::uniform_int_distribution
// so that identical seeds give identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, m); m > 0
    std::uint64_t below(std::uint64_t m) noexcept { return next() % m; }

    // uniform in [lo, hi] inclusive
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) noexcept {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() noexcept { return next() & 1; }

  private:
    std::uint64_t state_;
};

} // namespace dpd

#endif
