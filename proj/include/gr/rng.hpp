#pragma once

#include <cstdint>

namespace gr {

// splitmix64: tiny, fast, and good enough both as a stream generator and as a
// stateless mixer for hashing small tuples.  Keeping one mixer here means the
// lazy colorings and the generators agree on what "seeded" means.
inline std::uint64_t splitmix64(std::uint64_t x) {
	x += 0x9e3779b97f4a7c15ULL;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
	return x ^ (x >> 31);
}

struct Rng {
	std::uint64_t state;
	explicit Rng(std::uint64_t seed) : state(seed) {}
	std::uint64_t next() {
		state += 0x9e3779b97f4a7c15ULL;
		std::uint64_t x = state;
		x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
		x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
		return x ^ (x >> 31);
	}
	// uniform in [0, bound), bound > 0; bias is negligible for our bounds
	std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace gr
