#ifndef FPRF_RNG_HPP
#define FPRF_RNG_HPP

#include <cstdint>
#include <vector>

namespace fprf {

// Seedable, splittable stream.  xoshiro256** state filled by splitmix64 over
// (seed, stream_id), so identical (seed, stream_id) reproduce identical draws
// on every platform and distinct stream_ids give independent-quality streams.
// All variate transforms are hand-rolled: the standard library distributions
// are implementation-defined and would break the bit-reproducibility contract.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed = 0, std::uint64_t stream_id = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    // Derived stream for worker i; deterministic in (seed, stream_id, i).
    RngStream substream(std::uint64_t i) const;

    std::uint64_t next_u64();
    double u01();          // uniform on [0,1)
    double u01_open();     // uniform on (0,1)
    double uniform(double a, double b);
    double exponential(double rate);
    double normal(double mean, double stddev);
    long poisson(double mean);

private:
    long poisson_inversion(double mean);
    long poisson_ptrs(double mean);

    std::uint64_t s_[4];
    std::uint64_t seed_ = 0, stream_id_ = 0;
};

}  // namespace fprf

#endif
