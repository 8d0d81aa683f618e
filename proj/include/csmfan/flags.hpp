#pragma once

#include <vector>

#include "csmfan/activities.hpp"
#include "csmfan/matroid.hpp"
#include "csmfan/order.hpp"

namespace csmfan {

// A proper flag of flats: empty set = F_0 strictly up to F_k = ground set.
// The length is the number of steps k; deltas are the step differences.
class FlagOfFlats {
  public:
    FlagOfFlats(int ground_size, std::vector<Subset> chain);

    int ground_size() const { return ground_size_; }
    const std::vector<Subset>& chain() const { return chain_; }
    int length() const { return static_cast<int>(chain_.size()) - 1; }
    int intermediate_count() const { return length() - 1; }
    Subset top() const { return chain_.back(); }
    Subset delta(int i) const { return chain_[i] - chain_[i - 1]; }  // 1 <= i <= length

    // min(delta_1) < min(delta_2) < ... in the natural order
    bool is_increasing() const;

    bool operator==(const FlagOfFlats& o) const {
        return ground_size_ == o.ground_size_ && chain_ == o.chain_;
    }

  private:
    int ground_size_;
    std::vector<Subset> chain_;
};

// Validates that every chain member is a flat of m and that the chain runs
// from the empty set to m's full element set.
FlagOfFlats make_flag(const Matroid& m, std::vector<Subset> chain);

// All proper (resp. increasing proper) flags of exactly k steps, in
// lexicographic chain order. Empty for unachievable k.
std::vector<FlagOfFlats> proper_flags(const Matroid& m, int k);
std::vector<FlagOfFlats> increasing_flags(const Matroid& m, int k);

// product of beta over the step minors of the flag
Int beta_product(const Matroid& m, const FlagOfFlats& flag);

// sum over increasing proper flags of beta_product * x^length;
// equals T(M; x, 0)
Poly1 beta_expansion(const Matroid& m);

// A flag together with one basis of internal activity 1, external activity 0
// chosen in each step minor.
struct GLVWitness {
    FlagOfFlats flag;
    std::vector<Subset> basis_tuple;
};

std::vector<GLVWitness> glv_witnesses(const Matroid& m, int k);
Int glv_count(const Matroid& m, int k);  // |witnesses|, equals t_{k,0}

// h-vector (h_0..h_{d+1}) of the broken circuit complex
std::vector<Int> broken_circuit_h_vector(const Matroid& m, const ElementOrder& order);
std::vector<Int> broken_circuit_h_vector(const Matroid& m);

}  // namespace csmfan
