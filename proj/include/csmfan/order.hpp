#pragma once

#include <numeric>
#include <vector>

#include "csmfan/errors.hpp"
#include "csmfan/subset.hpp"

namespace csmfan {

// A total order on the ground set {0..n}, given as the permutation
// rank-position -> element. The natural order is the identity.
class ElementOrder {
  public:
    static ElementOrder natural(int ground_size) {
        std::vector<int> p(ground_size);
        std::iota(p.begin(), p.end(), 0);
        return ElementOrder(std::move(p));
    }

    static ElementOrder from_permutation(std::vector<int> perm) {
        return ElementOrder(std::move(perm));
    }

    int ground_size() const { return static_cast<int>(perm_.size()); }

    // position of e in the order; smaller = earlier
    int position(int e) const { return pos_[e]; }

    bool less(int a, int b) const { return pos_[a] < pos_[b]; }

    // order-minimal element of a nonempty subset
    int min_in(Subset s) const {
        int best = -1;
        for (int e : s.elements())
            if (best < 0 || pos_[e] < pos_[best]) best = e;
        return best;
    }

    const std::vector<int>& permutation() const { return perm_; }

  private:
    explicit ElementOrder(std::vector<int> perm) : perm_(std::move(perm)) {
        const int n = static_cast<int>(perm_.size());
        if (n < 1 || n > kMaxGroundSize) throw ParseError("order has invalid size");
        pos_.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            int e = perm_[i];
            if (e < 0 || e >= n || pos_[e] != -1)
                throw ParseError("order is not a permutation of the ground set");
            pos_[e] = i;
        }
    }

    std::vector<int> perm_;  // position -> element
    std::vector<int> pos_;   // element -> position
};

}  // namespace csmfan
