#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csmfan/errors.hpp"
#include "csmfan/subset.hpp"

namespace csmfan {

// A matroid given by its list of bases over a ground set {0..n}. Minors keep
// their global element labels, so a matroid carries both the ambient label
// space (ground_size) and the subset of labels it actually lives on
// (elements); top-level matroids have elements == {0..n}.
//
// Values are immutable after construction and all queries are read-only.
class Matroid {
  public:
    static Matroid from_bases(int ground_size, std::vector<Subset> bases);
    static Matroid uniform(int rank, int size);
    static Matroid from_graph(int vertex_count,
                              const std::vector<std::pair<int, int>>& edges);
    // field == 0 selects Q, a prime p selects GF(p); elements are the columns
    static Matroid from_matrix(long long field,
                               const std::vector<std::vector<long long>>& rows);

    int ground_size() const { return ground_size_; }
    Subset elements() const { return elements_; }
    int size() const { return elements_.count(); }
    int rank() const { return rank_; }  // d+1
    const std::vector<Subset>& bases() const { return bases_; }
    bool is_basis(Subset s) const;

    int rank_of(Subset s) const;
    Subset closure(Subset s) const;
    std::vector<Subset> flats() const;  // sorted by (rank, mask)
    std::vector<Subset> flats_of_rank(int r) const;
    std::vector<Subset> circuits() const;
    std::vector<Subset> cocircuits() const;  // circuits of the dual
    Subset loops() const { return loops_; }
    Subset coloops() const { return coloops_; }
    bool is_loopless() const { return loops_.empty(); }
    bool is_connected() const;
    Matroid dual() const;

    // restriction to hi contracted by lo, labels preserved; nullopt when the
    // interval carries no rank (the distinguished empty minor, beta = 0)
    std::optional<Matroid> minor_interval(Subset lo, Subset hi) const;

    const std::string& name() const { return name_; }
    Matroid named(std::string n) const;

    bool operator==(const Matroid& o) const {
        return ground_size_ == o.ground_size_ && elements_ == o.elements_ &&
               bases_ == o.bases_;
    }

  private:
    Matroid() = default;
    static Matroid build(int ground_size, Subset elements, std::vector<Subset> bases);

    int ground_size_ = 0;
    Subset elements_;
    std::vector<Subset> bases_;  // sorted by mask value
    int rank_ = 0;
    Subset loops_, coloops_;
    std::string name_;
};

// Image of a matroid under a relabeling of the ground set; perm[e] is the new
// label of element e. Requires full support.
Matroid relabeled(const Matroid& m, const std::vector<int>& perm);

}  // namespace csmfan
