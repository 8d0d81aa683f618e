#include "csmfan/matroid.hpp"

#include <algorithm>
#include <map>

#include "csmfan/numeric.hpp"

namespace csmfan {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// disjoint-set forest for graphic rank computation
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

Matroid Matroid::build(int ground_size, Subset elements, std::vector<Subset> bases) {
    if (ground_size < 1 || ground_size > kMaxGroundSize)
        throw ParseError("ground set size must be between 1 and 16");
    if (bases.empty()) throw EmptyBases();

    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

    const int r = bases[0].count();
    for (const Subset& b : bases) {
        if (b.count() != r) throw UnequalCardinality();
        if (!b.subset_of(elements)) throw ParseError("basis not contained in the ground set");
    }
    if (r < 1) throw ZeroRank();

    // basis lookup by mask
    std::vector<bool> is_b(1u << ground_size, false);
    for (const Subset& b : bases) is_b[b.bits] = true;

    // exchange axiom: for every pair and every e in B1\B2 some f in B2\B1
    // keeps B1-e+f a basis
    for (const Subset& b1 : bases) {
        for (const Subset& b2 : bases) {
            if (b1 == b2) continue;
            for (int e : (b1 - b2).elements()) {
                bool found = false;
                for (int f : (b2 - b1).elements()) {
                    if (is_b[b1.without(e).with(f).bits]) {
                        found = true;
                        break;
                    }
                }
                if (!found) throw ExchangeAxiomViolation(b1, b2, e);
            }
        }
    }

    Matroid m;
    m.ground_size_ = ground_size;
    m.elements_ = elements;
    m.bases_ = std::move(bases);
    m.rank_ = r;

    Subset in_all = m.bases_[0], in_any = m.bases_[0];
    for (const Subset& b : m.bases_) {
        in_all = in_all & b;
        in_any = in_any | b;
    }
    m.loops_ = elements - in_any;
    m.coloops_ = in_all;
    return m;
}

Matroid Matroid::from_bases(int ground_size, std::vector<Subset> bases) {
    return build(ground_size, Subset::full(ground_size), std::move(bases));
}

Matroid Matroid::uniform(int rank, int size) {
    if (size < 1 || size > kMaxGroundSize || rank < 1 || rank > size)
        throw RankOutOfRange();
    return build(size, Subset::full(size), subsets_of_size(Subset::full(size), rank));
}

Matroid Matroid::from_graph(int vertex_count,
                            const std::vector<std::pair<int, int>>& edges) {
    const int m = static_cast<int>(edges.size());
    if (vertex_count < 1 || m < 1 || m > kMaxGroundSize)
        throw ParseError("graph must have 1..16 edges and at least one vertex");
    for (auto [u, v] : edges)
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw ParseError("edge endpoint out of range");

    auto forest_rank = [&](Subset s) {
        UnionFind uf(vertex_count);
        int r = 0;
        for (int e : s.elements())
            if (uf.unite(edges[e].first, edges[e].second)) ++r;
        return r;
    };

    const int r = forest_rank(Subset::full(m));
    if (r < 1) throw ZeroRank();
    std::vector<Subset> bases;
    for (Subset s : subsets_of_size(Subset::full(m), r))
        if (forest_rank(s) == r) bases.push_back(s);
    return build(m, Subset::full(m), std::move(bases));
}

Matroid Matroid::from_matrix(long long field,
                             const std::vector<std::vector<long long>>& rows) {
    // modulus capped so that products of residues stay inside long long
    if (field < 0 || field > (1 << 20) || (field != 0 && !is_prime(field)))
        throw NonPrimeModulus();
    if (rows.empty() || rows[0].empty()) throw ZeroMatrix();
    const int nrows = static_cast<int>(rows.size());
    const int ncols = static_cast<int>(rows[0].size());
    if (ncols > kMaxGroundSize) throw ParseError("matrix has more than 16 columns");
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != ncols)
            throw ParseError("matrix rows have unequal lengths");

    // exact rank of the column submatrix selected by s
    auto col_rank = [&](Subset s) {
        std::vector<int> cols = s.elements();
        const int k = static_cast<int>(cols.size());
        if (k == 0) return 0;
        if (field == 0) {
            std::vector<std::vector<Rat>> a(nrows, std::vector<Rat>(k));
            for (int i = 0; i < nrows; ++i)
                for (int j = 0; j < k; ++j) a[i][j] = Rat(static_cast<long>(rows[i][cols[j]]));
            int rank = 0;
            for (int col = 0; col < k && rank < nrows; ++col) {
                int pivot = -1;
                for (int i = rank; i < nrows; ++i)
                    if (a[i][col] != 0) {
                        pivot = i;
                        break;
                    }
                if (pivot < 0) continue;
                std::swap(a[rank], a[pivot]);
                for (int i = rank + 1; i < nrows; ++i) {
                    if (a[i][col] == 0) continue;
                    Rat f = a[i][col] / a[rank][col];
                    for (int j = col; j < k; ++j) a[i][j] -= f * a[rank][j];
                }
                ++rank;
            }
            return rank;
        }
        const long long p = field;
        auto mod = [&](long long x) { return ((x % p) + p) % p; };
        auto inv = [&](long long x) {
            long long r = 1, b = x, e = p - 2;  // Fermat
            while (e) {
                if (e & 1) r = r * b % p;
                b = b * b % p;
                e >>= 1;
            }
            return r;
        };
        std::vector<std::vector<long long>> a(nrows, std::vector<long long>(k));
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < k; ++j) a[i][j] = mod(rows[i][cols[j]]);
        int rank = 0;
        for (int col = 0; col < k && rank < nrows; ++col) {
            int pivot = -1;
            for (int i = rank; i < nrows; ++i)
                if (a[i][col] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(a[rank], a[pivot]);
            long long f0 = inv(a[rank][col]);
            for (int i = rank + 1; i < nrows; ++i) {
                if (a[i][col] == 0) continue;
                long long f = a[i][col] * f0 % p;
                for (int j = col; j < k; ++j) a[i][j] = mod(a[i][j] - f * a[rank][j]);
            }
            ++rank;
        }
        return rank;
    };

    const int r = col_rank(Subset::full(ncols));
    if (r < 1) throw ZeroMatrix();
    std::vector<Subset> bases;
    for (Subset s : subsets_of_size(Subset::full(ncols), r))
        if (col_rank(s) == r) bases.push_back(s);
    return build(ncols, Subset::full(ncols), std::move(bases));
}

bool Matroid::is_basis(Subset s) const {
    return std::binary_search(bases_.begin(), bases_.end(), s);
}

int Matroid::rank_of(Subset s) const {
    int best = 0;
    for (const Subset& b : bases_) best = std::max(best, (b & s).count());
    return best;
}

Subset Matroid::closure(Subset s) const {
    const int r = rank_of(s);
    Subset out = s;
    for (int e : (elements_ - s).elements())
        if (rank_of(s.with(e)) == r) out = out.with(e);
    return out;
}

std::vector<Subset> Matroid::flats() const {
    // walk the flat lattice upward from closure of the empty set
    std::vector<std::vector<Subset>> by_rank(rank_ + 1);
    by_rank[0] = {closure(Subset())};
    for (int r = 1; r <= rank_; ++r) {
        std::vector<Subset> next;
        for (const Subset& f : by_rank[r - 1]) {
            for (int e : (elements_ - f).elements()) {
                Subset g = closure(f.with(e));
                if (rank_of(g) == r) next.push_back(g);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        by_rank[r] = std::move(next);
    }
    std::vector<Subset> out;
    for (auto& level : by_rank) out.insert(out.end(), level.begin(), level.end());
    return out;
}

std::vector<Subset> Matroid::flats_of_rank(int r) const {
    std::vector<Subset> out;
    for (const Subset& f : flats())
        if (rank_of(f) == r) out.push_back(f);
    return out;
}

std::vector<Subset> Matroid::circuits() const {
    // a circuit has at most rank+1 elements; independence = contained in a basis
    auto independent = [&](Subset s) {
        if (s.count() > rank_) return false;
        for (const Subset& b : bases_)
            if (s.subset_of(b)) return true;
        return false;
    };
    std::vector<Subset> out;
    for (int k = 1; k <= std::min(size(), rank_ + 1); ++k) {
        for (Subset s : subsets_of_size(elements_, k)) {
            if (independent(s)) continue;
            bool minimal = true;
            for (int e : s.elements())
                if (!independent(s.without(e))) {
                    minimal = false;
                    break;
                }
            if (minimal) out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subset> Matroid::cocircuits() const { return dual().circuits(); }

bool Matroid::is_connected() const {
    // disconnected iff some proper nonempty part S has
    // rank(S) + rank(E\S) == rank(E)
    if (size() <= 1) return true;
    std::vector<int> elems = elements_.elements();
    const int m = static_cast<int>(elems.size());
    // iterate splits with elems[0] on the fixed side to avoid duplicates
    for (uint32_t pick = 0; pick < (1u << (m - 1)); ++pick) {
        Subset s = Subset::of({elems[0]});
        for (int i = 1; i < m; ++i)
            if ((pick >> (i - 1)) & 1u) s = s.with(elems[i]);
        Subset t = elements_ - s;
        if (t.empty()) continue;
        if (rank_of(s) + rank_of(t) == rank_) return false;
    }
    return true;
}

Matroid Matroid::dual() const {
    std::vector<Subset> cobases;
    cobases.reserve(bases_.size());
    for (const Subset& b : bases_) cobases.push_back(elements_ - b);
    // dual of a free matroid has rank zero and is out of scope
    return build(ground_size_, elements_, std::move(cobases));
}

std::optional<Matroid> Matroid::minor_interval(Subset lo, Subset hi) const {
    if (!lo.subset_of(hi) || !hi.subset_of(elements_)) throw NotNested();
    const int rlo = rank_of(lo);
    const int r = rank_of(hi) - rlo;
    if (r < 1) return std::nullopt;
    Subset support = hi - lo;
    std::vector<Subset> minor_bases;
    for (Subset s : subsets_of_size(support, r))
        if (rank_of(s | lo) == rlo + r) minor_bases.push_back(s);
    return build(ground_size_, support, std::move(minor_bases));
}

Matroid Matroid::named(std::string n) const {
    Matroid m = *this;
    m.name_ = std::move(n);
    return m;
}

Matroid relabeled(const Matroid& m, const std::vector<int>& perm) {
    if (m.elements() != Subset::full(m.ground_size()))
        throw ParseError("relabeling requires full support");
    if (static_cast<int>(perm.size()) != m.ground_size())
        throw ParseError("relabeling permutation has wrong size");
    std::vector<Subset> bases;
    bases.reserve(m.bases().size());
    for (const Subset& b : m.bases()) {
        Subset nb;
        for (int e : b.elements()) nb = nb.with(perm[e]);
        bases.push_back(nb);
    }
    return Matroid::from_bases(m.ground_size(), std::move(bases)).named(m.name());
}

}  // namespace csmfan
