#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "loops/errors.hpp"

namespace loops {

// Permutation of {1..d}, stored by its image array.
class Perm {
public:
    Perm() = default;

    // Identity permutation of the given degree.
    explicit Perm(int degree)
        : img_(static_cast<std::size_t>(degree)) {
        for (int i = 1; i <= degree; ++i) img_[static_cast<std::size_t>(i) - 1] = i;
    }

    // Validates that images form a bijection of 1..d.
    static Perm from_images(std::vector<int> images);

    int degree() const { return static_cast<int>(img_.size()); }

    int operator()(int i) const { return img_[static_cast<std::size_t>(i) - 1]; }

    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 1; i <= degree(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    Perm inverse() const {
        Perm r;
        r.img_.resize(img_.size());
        for (int i = 1; i <= degree(); ++i)
            r.img_[static_cast<std::size_t>((*this)(i)) - 1] = i;
        return r;
    }

    // (a * b)(i) = a(b(i)): apply b first, then a.
    friend Perm operator*(const Perm& a, const Perm& b) {
        Perm r;
        r.img_.resize(a.img_.size());
        for (int i = 1; i <= a.degree(); ++i)
            r.img_[static_cast<std::size_t>(i) - 1] = a(b(i));
        return r;
    }

    bool operator==(const Perm& other) const = default;
    // Lexicographic order on image arrays; used for deterministic output.
    auto operator<=>(const Perm& other) const = default;

    // Cycle lengths of the permutation, unsorted.
    std::vector<int> cycle_lengths() const;

    // Multiplicative order (lcm of cycle lengths).
    long long order() const;

    // p^k via binary exponentiation; k >= 0.
    Perm pow(long long k) const;

private:
    std::vector<int> img_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (int v : p.images()) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

inline bool is_fixed_point_free(const Perm& p) {
    for (int i = 1; i <= p.degree(); ++i)
        if (p(i) == i) return false;
    return true;
}

} // namespace loops
