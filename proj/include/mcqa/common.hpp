#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcqa {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using RowVec = Eigen::RowVectorXd;
using MatF = Eigen::MatrixXf;

template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Thrown when a CLI invocation is malformed (exit code 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when input data cannot be used (exit code 3).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an internal contract is violated (exit code 1).
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

// Deterministic RNG. All randomness in the project flows through this
// wrapper so that results depend only on explicit seeds, never on
// implementation-defined std distributions.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        // splitmix64; tiny, portable, well distributed
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, n). Rejection sampling, bias-free.
    uint64_t uniform_u64(uint64_t n) {
        if (n == 0) throw InvariantError("Rng::uniform_u64: n == 0");
        uint64_t t = (-n) % n;  // 2^64 mod n
        uint64_t x;
        do {
            x = next_u64();
        } while (x < t);
        return x % n;
    }

    int uniform_int(int n) { return static_cast<int>(uniform_u64(static_cast<uint64_t>(n))); }

    // Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller (sin branch discarded; determinism over thrift).
    double normal() {
        double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = uniform_u64(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

inline uint64_t fnv1a64(const void* data, size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    uint64_t h = 0xcbf29ce484222325ULL;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

// Stable float-to-string for CSV/JSON output; round-trips doubles.
std::string fmt_num(double x);

}  // namespace mcqa
