#include "csmfan/flags.hpp"

#include <algorithm>

namespace csmfan {

FlagOfFlats::FlagOfFlats(int ground_size, std::vector<Subset> chain)
    : ground_size_(ground_size), chain_(std::move(chain)) {
    if (chain_.size() < 2 || !chain_.front().empty()) throw NotProperFlag();
    for (size_t i = 1; i < chain_.size(); ++i)
        if (!(chain_[i - 1].subset_of(chain_[i])) || chain_[i - 1] == chain_[i])
            throw NotProperFlag();
}

bool FlagOfFlats::is_increasing() const {
    int prev = -1;
    for (int i = 1; i <= length(); ++i) {
        int m = delta(i).min_element();
        if (m <= prev) return false;
        prev = m;
    }
    return true;
}

FlagOfFlats make_flag(const Matroid& m, std::vector<Subset> chain) {
    FlagOfFlats flag(m.ground_size(), std::move(chain));
    if (flag.top() != m.elements()) throw NotProperFlag();
    for (const Subset& f : flag.chain())
        if (m.closure(f) != f) throw NotProperFlag();
    return flag;
}

namespace {

// DFS over the flat lattice. Chains are extended flat by flat; when
// `increasing` is set, only flats whose new delta-min exceeds the previous
// delta-min are tried.
void enumerate_flags(const Matroid& m, int k, bool increasing,
                     std::vector<FlagOfFlats>& out) {
    if (!m.is_loopless()) throw LoopPresent();
    if (k < 1 || k > m.rank()) return;

    const std::vector<Subset> flats = m.flats();  // sorted by (rank, mask)
    const int full_rank = m.rank();
    std::vector<Subset> chain = {Subset()};

    auto dfs = [&](auto&& self, Subset cur, int steps, int prev_min) -> void {
        if (cur == m.elements()) {
            if (steps == k) out.emplace_back(m.ground_size(), chain);
            return;
        }
        if (steps >= k) return;
        const int remaining = k - steps;
        for (const Subset& g : flats) {
            if (!cur.subset_of(g) || g == cur) continue;
            const int gr = m.rank_of(g);
            // each later step raises rank by at least one and must end at
            // full rank after exactly `remaining` steps
            const bool is_top = (g == m.elements());
            if (is_top) {
                if (remaining != 1) continue;
            } else {
                if (full_rank - gr < remaining - 1 || remaining - 1 < 1) continue;
            }
            if (increasing) {
                int dmin = (g - cur).min_element();
                if (dmin <= prev_min) continue;
            }
            chain.push_back(g);
            self(self, g, steps + 1, increasing ? (g - cur).min_element() : -1);
            chain.pop_back();
        }
    };
    dfs(dfs, Subset(), 0, -1);
}

}  // namespace

std::vector<FlagOfFlats> proper_flags(const Matroid& m, int k) {
    std::vector<FlagOfFlats> out;
    enumerate_flags(m, k, false, out);
    return out;
}

std::vector<FlagOfFlats> increasing_flags(const Matroid& m, int k) {
    std::vector<FlagOfFlats> out;
    enumerate_flags(m, k, true, out);
    return out;
}

Int beta_product(const Matroid& m, const FlagOfFlats& flag) {
    Int prod = 1;
    for (int i = 1; i <= flag.length(); ++i) {
        auto minor = m.minor_interval(flag.chain()[i - 1], flag.chain()[i]);
        if (!minor) return Int(0);
        prod *= beta(*minor);
        if (prod == 0) return Int(0);
    }
    return prod;
}

Poly1 beta_expansion(const Matroid& m) {
    if (!m.is_loopless()) throw LoopPresent();
    std::vector<Int> coeffs(m.rank() + 1, Int(0));
    for (int k = 1; k <= m.rank(); ++k)
        for (const FlagOfFlats& flag : increasing_flags(m, k))
            coeffs[k] += beta_product(m, flag);
    return Poly1(std::move(coeffs));
}

std::vector<GLVWitness> glv_witnesses(const Matroid& m, int k) {
    if (!m.is_loopless()) throw LoopPresent();
    std::vector<GLVWitness> out;
    for (const FlagOfFlats& flag : increasing_flags(m, k)) {
        // materialize the B_{1,0} stratum of every step minor
        std::vector<std::vector<Subset>> strata;
        bool dead = false;
        for (int i = 1; i <= flag.length(); ++i) {
            auto minor = m.minor_interval(flag.chain()[i - 1], flag.chain()[i]);
            if (!minor) {
                dead = true;
                break;
            }
            // the inherited order is the global natural order restricted to
            // the minor's elements
            strata.push_back(bases_with_activity(
                *minor, 1, 0, ElementOrder::natural(m.ground_size())));
            if (strata.back().empty()) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        // odometer over the Cartesian product of the strata
        std::vector<size_t> idx(strata.size(), 0);
        while (true) {
            std::vector<Subset> tuple;
            tuple.reserve(strata.size());
            for (size_t i = 0; i < strata.size(); ++i) tuple.push_back(strata[i][idx[i]]);
            out.push_back(GLVWitness{flag, std::move(tuple)});
            size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == strata[pos].size()) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
    }
    return out;
}

Int glv_count(const Matroid& m, int k) {
    return Int(static_cast<long>(glv_witnesses(m, k).size()));
}

std::vector<Int> broken_circuit_h_vector(const Matroid& m, const ElementOrder& order) {
    if (!m.is_loopless()) throw LoopPresent();
    std::vector<Subset> broken;
    for (const Subset& c : m.circuits()) broken.push_back(c.without(order.min_in(c)));

    // face counts by cardinality: subsets containing no broken circuit
    std::vector<Int> faces(m.size() + 1, Int(0));
    for (Subset s : all_subsets(m.elements())) {
        bool face = true;
        for (const Subset& bc : broken)
            if (bc.subset_of(s)) {
                face = false;
                break;
            }
        if (face) faces[s.count()] += 1;
    }

    // sum_i f_{i-1} (x-1)^(d+1-i) = sum_k h_k x^(d+1-k)
    const int r = m.rank();
    Poly1 acc;
    const Poly1 xm1({Int(-1), Int(1)});
    for (int i = 0; i <= r; ++i) {
        Poly1 pw = Poly1::constant(Int(1));
        for (int t = 0; t < r - i; ++t) pw = pw * xm1;
        acc = acc + pw * faces[i];
    }
    std::vector<Int> h(r + 1, Int(0));
    for (int k = 0; k <= r; ++k) h[k] = acc.coeff(r - k);
    return h;
}

std::vector<Int> broken_circuit_h_vector(const Matroid& m) {
    return broken_circuit_h_vector(m, ElementOrder::natural(m.ground_size()));
}

}  // namespace csmfan
