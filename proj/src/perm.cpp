#include "loops/perm.hpp"

#include <numeric>

namespace loops {

Perm Perm::from_images(std::vector<int> images) {
    const int d = static_cast<int>(images.size());
    std::vector<char> seen(static_cast<std::size_t>(d) + 1, 0);
    for (int v : images) {
        if (v < 1 || v > d || seen[static_cast<std::size_t>(v)])
            throw validation_error("image array is not a bijection of 1.." +
                                   std::to_string(d));
        seen[static_cast<std::size_t>(v)] = 1;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
}

std::vector<int> Perm::cycle_lengths() const {
    std::vector<char> done(static_cast<std::size_t>(degree()) + 1, 0);
    std::vector<int> lens;
    for (int i = 1; i <= degree(); ++i) {
        if (done[static_cast<std::size_t>(i)]) continue;
        int len = 0, j = i;
        do {
            done[static_cast<std::size_t>(j)] = 1;
            j = (*this)(j);
            ++len;
        } while (j != i);
        lens.push_back(len);
    }
    return lens;
}

long long Perm::order() const {
    long long m = 1;
    for (int len : cycle_lengths()) m = std::lcm(m, static_cast<long long>(len));
    return m;
}

Perm Perm::pow(long long k) const {
    Perm acc(degree());
    Perm base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

} // namespace loops
