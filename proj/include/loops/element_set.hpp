#pragma once

#include <string>
#include <vector>

namespace loops {

// Subset of the elements 1..n of a loop, stored as a membership vector.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(int n) : n_(n), in_(static_cast<std::size_t>(n) + 1, 0) {}

    static ElementSet of(int n, std::initializer_list<int> elems) {
        ElementSet s(n);
        for (int e : elems) s.insert(e);
        return s;
    }

    static ElementSet full(int n) {
        ElementSet s(n);
        for (int e = 1; e <= n; ++e) s.insert(e);
        return s;
    }

    int universe() const { return n_; }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(int e) const { return e >= 1 && e <= n_ && in_[static_cast<std::size_t>(e)]; }

    void insert(int e) {
        if (!in_[static_cast<std::size_t>(e)]) {
            in_[static_cast<std::size_t>(e)] = 1;
            ++count_;
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count_));
        for (int e = 1; e <= n_; ++e)
            if (in_[static_cast<std::size_t>(e)]) out.push_back(e);
        return out;
    }

    bool operator==(const ElementSet& other) const {
        return n_ == other.n_ && in_ == other.in_;
    }

    bool subset_of(const ElementSet& other) const {
        for (int e = 1; e <= n_; ++e)
            if (contains(e) && !other.contains(e)) return false;
        return true;
    }

    // Canonical string key, usable as a hash-map key.
    std::string key() const {
        std::string k(static_cast<std::size_t>(n_), '0');
        for (int e = 1; e <= n_; ++e)
            if (in_[static_cast<std::size_t>(e)]) k[static_cast<std::size_t>(e) - 1] = '1';
        return k;
    }

private:
    int n_ = 0;
    std::vector<char> in_;
    int count_ = 0;
};

} // namespace loops
