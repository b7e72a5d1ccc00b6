#include <dimercount/oracle.hpp>

#include <dimercount/errors.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <future>
#include <unordered_map>

namespace dimercount {

namespace {

// Fixed-width bitset over 64-bit words, sized per graph.
struct VertexSet {
    std::vector<std::uint64_t> w;

    explicit VertexSet(size_t words = 0) : w(words, 0) {}

    void set(int i) { w[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w[static_cast<size_t>(i) >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (w[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    int popcount() const {
        int n = 0;
        for (auto x : w) n += std::popcount(x);
        return n;
    }
    int find_first() const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + static_cast<size_t>(std::countr_zero(w[i])));
        return -1;
    }
    void operator&=(const VertexSet& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    }
    void and_not(const VertexSet& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
    }
    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    bool operator==(const VertexSet& o) const { return w == o.w; }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = w[i];
            while (x) {
                fn(static_cast<int>(i * 64 + static_cast<size_t>(std::countr_zero(x))));
                x &= x - 1;
            }
        }
    }
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto x : s.w) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<size_t>(h);
    }
};

class MatchingCounter {
public:
    MatchingCounter(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                    const OracleBudget& budget)
        : n_(vertex_count),
          words_((static_cast<size_t>(std::max(vertex_count, 1)) + 63) / 64),
          budget_(budget),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(
                            std::min(budget.max_seconds, 1.0e9)))) {
        adj_.assign(static_cast<size_t>(n_), VertexSet(words_));
        for (const auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("edge endpoint out of range");
            if (u == v) throw DomainError("loop edges are not allowed");
            adj_[static_cast<size_t>(u)].set(v);
            adj_[static_cast<size_t>(v)].set(u);
        }
    }

    VertexSet full() const {
        VertexSet s(words_);
        for (int i = 0; i < n_; ++i) s.set(i);
        return s;
    }

    BigInt count(const VertexSet& alive) {
        BigInt total = 1;
        VertexSet rem = alive;
        while (rem.any()) {
            VertexSet comp = component_of(rem, rem.find_first());
            rem.and_not(comp);
            total *= count_component(comp);
        }
        return total;
    }

    std::uint64_t steps() const { return steps_; }

private:
    VertexSet component_of(const VertexSet& alive, int start) const {
        VertexSet comp(words_);
        comp.set(start);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            VertexSet nb = adj_[static_cast<size_t>(u)];
            nb &= alive;
            nb.and_not(comp);
            nb.for_each([&](int v) {
                comp.set(v);
                stack.push_back(v);
            });
        }
        return comp;
    }

    BigInt count_component(const VertexSet& comp) {
        tick();
        if (comp.popcount() <= 1) return 1;
        if (auto it = memo_.find(comp); it != memo_.end()) return it->second;

        // Pivot on the highest-degree vertex of the residual component
        // (lowest index on ties); it is either a monomer or matched with
        // one of its neighbors.
        int pivot = -1, best_deg = -1;
        comp.for_each([&](int u) {
            VertexSet nb = adj_[static_cast<size_t>(u)];
            nb &= comp;
            int d = nb.popcount();
            if (d > best_deg) {
                best_deg = d;
                pivot = u;
            }
        });

        VertexSet rest = comp;
        rest.reset(pivot);
        BigInt r = count(rest);
        VertexSet nb = adj_[static_cast<size_t>(pivot)];
        nb &= comp;
        nb.for_each([&](int v) {
            VertexSet rest2 = rest;
            rest2.reset(v);
            r += count(rest2);
        });
        memo_.emplace(comp, r);
        return r;
    }

    void tick() {
        ++steps_;
        if (steps_ > budget_.max_steps)
            throw BudgetExhaustedError("oracle step budget exhausted (" +
                                           std::to_string(budget_.max_steps) + " steps)",
                                       steps_);
        if ((steps_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline_)
            throw BudgetExhaustedError("oracle wall-clock budget exhausted after " +
                                           std::to_string(steps_) + " steps",
                                       steps_);
    }

    int n_;
    size_t words_;
    OracleBudget budget_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<VertexSet> adj_;
    std::unordered_map<VertexSet, BigInt, VertexSetHash> memo_;
    std::uint64_t steps_ = 0;
};

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

CountResult count_matchings(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                            const OracleBudget& budget) {
    const auto t0 = std::chrono::steady_clock::now();
    MatchingCounter counter(vertex_count, edges, budget);
    CountResult r;
    r.value = counter.count(counter.full());
    r.steps = counter.steps();
    r.seconds = elapsed_since(t0);
    return r;
}

CountResult count_matchings(const GraphInstance& g, const OracleBudget& budget) {
    return count_matchings(static_cast<int>(g.vertices.size()), g.edges, budget);
}

BoundaryCountResult count_by_boundary(const GraphInstance& g, const OracleBudget& budget,
                                      bool parallel) {
    const auto t0 = std::chrono::steady_clock::now();
    BoundaryCountResult out;

    // t[removed] = matchings with the corners in `removed` forced to be
    // monomers (deleted). All eight class counts follow by inclusion-exclusion.
    std::array<BigInt, 8> t;
    const int n = static_cast<int>(g.vertices.size());
    auto run_subset = [&](MatchingCounter& counter, int removed) {
        VertexSet alive = counter.full();
        for (int i = 0; i < 3; ++i)
            if (removed & (1 << i)) alive.reset(g.outmost[static_cast<size_t>(i)]);
        return counter.count(alive);
    };

    if (parallel) {
        std::array<std::future<std::pair<BigInt, std::uint64_t>>, 8> futures;
        for (int removed = 0; removed < 8; ++removed) {
            futures[static_cast<size_t>(removed)] = std::async(std::launch::async, [&, removed] {
                MatchingCounter counter(n, g.edges, budget);  // per-task cache
                BigInt v = run_subset(counter, removed);
                return std::make_pair(std::move(v), counter.steps());
            });
        }
        for (int removed = 0; removed < 8; ++removed) {
            auto [v, steps] = futures[static_cast<size_t>(removed)].get();
            t[static_cast<size_t>(removed)] = std::move(v);
            out.steps += steps;
        }
    } else {
        MatchingCounter counter(n, g.edges, budget);  // shared cache across subsets
        for (int removed = 0; removed < 8; ++removed)
            t[static_cast<size_t>(removed)] = run_subset(counter, removed);
        out.steps = counter.steps();
    }

    for (int dimers = 0; dimers < 8; ++dimers) {
        const int monomers = ~dimers & 7;
        BigInt c = 0;
        for (int e = 0;; e = (e - dimers) & dimers) {  // subsets of `dimers`
            const int sign = (std::popcount(static_cast<unsigned>(e)) & 1) ? -1 : 1;
            c += sign * t[static_cast<size_t>(monomers | e)];
            if (e == dimers) break;
        }
        if (c < 0)
            throw ConsistencyError("negative class count from inclusion-exclusion (class " +
                                   std::to_string(dimers) + ")");
        out.classes[static_cast<size_t>(dimers)] = std::move(c);
    }

    const auto& cl = out.classes;
    if (!(cl[1] == cl[2] && cl[2] == cl[4]))
        throw ConsistencyError("one-dimer corner classes disagree: " + cl[1].str() + ", " +
                               cl[2].str() + ", " + cl[4].str());
    if (!(cl[3] == cl[5] && cl[5] == cl[6]))
        throw ConsistencyError("two-dimer corner classes disagree: " + cl[3].str() + ", " +
                               cl[5].str() + ", " + cl[6].str());

    out.counts = {cl[0], cl[1], cl[3], cl[7],
                  std::string("oracle ") + family_name(g.family) + " n=" + std::to_string(g.stage)};
    const BigInt direct_total = t[0];
    if (out.counts.total() != direct_total)
        throw ConsistencyError("class counts do not sum to the total matching count");
    out.seconds = elapsed_since(t0);
    return out;
}

}  // namespace dimercount
