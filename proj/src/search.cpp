#include "rf/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "rf/invariants.hpp"

namespace rf {

namespace {

using Clock = std::chrono::steady_clock;

struct MonoForbid {
    SimpleGraph pattern;
    detail::PatternInfo info;
    int color = 0;      // 0 = every color
    bool is_star = false;
    int star_leaves = 0;
    bool is_path = false;  // P_t with t >= 4 (shorter paths are stars)
    int path_order = 0;
    bool is_two_matching = false;  // exactly 2K_2
};

bool star_shape(const SimpleGraph& g, int& leaves) {
    // exactly K_{1,s}: one center of degree s = order-1, all others degree 1
    if (g.order < 2 || g.edge_count() != g.order - 1) return false;
    int centers = 0, ones = 0;
    for (int v = 0; v < g.order; ++v) {
        int d = g.degree(v);
        if (d == g.order - 1) ++centers;
        if (d == 1) ++ones;
    }
    if (g.order == 2) { leaves = 1; return true; }
    if (centers == 1 && ones == g.order - 1) {
        leaves = g.order - 1;
        return true;
    }
    return false;
}

bool path_shape(const SimpleGraph& g) {
    if (g.order < 4 || g.edge_count() != g.order - 1 || !is_connected(g)) return false;
    for (int v = 0; v < g.order; ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

bool two_matching_shape(const SimpleGraph& g) {
    if (g.order != 4 || g.edge_count() != 2) return false;
    for (int v = 0; v < g.order; ++v)
        if (g.degree(v) != 1) return false;
    return true;
}

// One search/enumeration over colorings of a host shape, in lexicographic
// edge order. Canonical mode numbers colors by first use; fixed mode has k
// role slots. State is owned per instance, so parallel workers replay a
// prefix into their own kernel.
struct Kernel {
    HostShape shape;
    int m, n, V, E;
    bool canonical = true;
    int k_cap = 0;  // max colors (canonical: budget or E; fixed: k)
    std::vector<MonoForbid> forbids;
    std::optional<int> rainbow_t;

    std::vector<std::pair<int, int>> edge_of;
    std::vector<std::vector<int>> edge_idx;  // V x V
    std::vector<int> colors;                 // 0 = unassigned
    std::vector<std::vector<std::uint64_t>> cadj;  // per color 1..k_cap
    std::vector<std::vector<int>> cdeg;            // per vertex, per color
    std::vector<std::uint64_t> assigned_adj;
    unsigned long long nodes = 0;

    Clock::time_point deadline{};
    bool has_deadline = false;
    bool timed_out = false;
    std::function<bool()> should_abort;  // polled every few thousand nodes

    // leaf handling
    std::function<bool(std::span<const int>, int)> on_leaf;  // returns true to stop

    Kernel(HostShape s, int m_, int n_) : shape(s), m(s == HostShape::Bipartite ? m_ : 0), n(n_) {
        V = (shape == HostShape::Complete) ? n : m + n;
        E = static_cast<int>(host_edge_count(shape, m, n));
        edge_idx.assign(V, std::vector<int>(V, -1));
        ColoredHost probe;
        probe.shape = shape;
        probe.m = m;
        probe.n = n;
        for (int e = 0; e < E; ++e) {
            auto [u, v] = probe.edge_endpoints(static_cast<std::size_t>(e));
            edge_of.emplace_back(u, v);
            edge_idx[u][v] = edge_idx[v][u] = e;
        }
        colors.assign(E, 0);
        assigned_adj.assign(V, 0);
    }

    void set_colors_cap(int cap) {
        k_cap = cap;
        cadj.assign(k_cap + 1, std::vector<std::uint64_t>(V, 0));
        cdeg.assign(V, std::vector<int>(k_cap + 1, 0));
    }

    void add_forbid(const SimpleGraph& pattern, int color) {
        if (pattern.is_empty()) throw std::invalid_argument("forbidden pattern must be nonempty");
        if (pattern.order > V) return;  // can never occur in this host
        MonoForbid f;
        f.pattern = pattern;
        f.info = detail::analyze_pattern(pattern);
        f.color = color;
        f.is_star = star_shape(pattern, f.star_leaves);
        if (!f.is_star) {
            f.is_path = path_shape(pattern);
            f.path_order = pattern.order;
            f.is_two_matching = two_matching_shape(pattern);
        }
        forbids.push_back(std::move(f));
    }

    void assign(int e, int c) {
        auto [u, v] = edge_of[e];
        colors[e] = c;
        cadj[c][u] |= std::uint64_t{1} << v;
        cadj[c][v] |= std::uint64_t{1} << u;
        ++cdeg[u][c];
        ++cdeg[v][c];
        assigned_adj[u] |= std::uint64_t{1} << v;
        assigned_adj[v] |= std::uint64_t{1} << u;
    }

    void unassign(int e) {
        int c = colors[e];
        auto [u, v] = edge_of[e];
        colors[e] = 0;
        cadj[c][u] &= ~(std::uint64_t{1} << v);
        cadj[c][v] &= ~(std::uint64_t{1} << u);
        --cdeg[u][c];
        --cdeg[v][c];
        assigned_adj[u] &= ~(std::uint64_t{1} << v);
        assigned_adj[v] &= ~(std::uint64_t{1} << u);
    }

    // any forbidden structure completed by edge e (already assigned)?
    bool violates(int e) {
        auto [u, v] = edge_of[e];
        int c = colors[e];
        for (const auto& f : forbids) {
            if (f.color != 0 && f.color != c) continue;
            if (f.is_star) {
                if (cdeg[u][c] >= f.star_leaves || cdeg[v][c] >= f.star_leaves) {
                    // a big-enough same-colored star plus room for the leaves
                    if (f.pattern.order <= V) return true;
                }
                continue;
            }
            if (f.is_path) {
                if (mono_path_through(u, v, c, f.path_order)) return true;
                continue;
            }
            if (f.is_two_matching) {
                if (disjoint_same_color_edge(u, v, c)) return true;
                continue;
            }
            if (detail::find_pattern_in_class(cadj[c], V, f.pattern, f.info,
                                              std::make_pair(u, v)))
                return true;
        }
        if (rainbow_t && rainbow_through(u, v, c, *rainbow_t)) return true;
        return false;
    }

    bool mono_chain(const std::vector<std::uint64_t>& adj, int end, int rem, int right_start,
                    int right_rem, std::uint64_t used) {
        if (rem == 0) {
            if (right_start < 0) return true;
            return mono_chain(adj, right_start, right_rem, -1, 0, used);
        }
        std::uint64_t nb = adj[end] & ~used;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (mono_chain(adj, w, rem - 1, right_start, right_rem,
                           used | (std::uint64_t{1} << w)))
                return true;
        }
        return false;
    }

    // single-colored path on t vertices using the freshly colored edge (u,v)
    bool mono_path_through(int u, int v, int c, int t) {
        const auto& adj = cadj[c];
        for (int a = 0; a <= t - 2; ++a) {
            std::uint64_t used = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
            if (mono_chain(adj, u, a, v, t - 2 - a, used)) return true;
        }
        return false;
    }

    bool disjoint_same_color_edge(int u, int v, int c) {
        std::uint64_t excl = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        for (int w = 0; w < V; ++w) {
            if ((excl >> w) & 1) continue;
            if (cadj[c][w] & ~(excl | (std::uint64_t{1} << w))) return true;
        }
        return false;
    }

    bool chain(int end, int rem, int right_start, int right_rem, std::uint64_t& used,
               int* cols, int& ncols) {
        if (rem == 0) {
            if (right_start < 0) return true;
            int rs = right_start;
            return chain(rs, right_rem, -1, 0, used, cols, ncols);
        }
        std::uint64_t nb = assigned_adj[end] & ~used;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            int cw = colors[edge_idx[end][w]];
            bool dup = false;
            for (int i = 0; i < ncols; ++i)
                if (cols[i] == cw) { dup = true; break; }
            if (dup) continue;
            cols[ncols++] = cw;
            used |= std::uint64_t{1} << w;
            if (chain(w, rem - 1, right_start, right_rem, used, cols, ncols)) return true;
            used &= ~(std::uint64_t{1} << w);
            --ncols;
        }
        return false;
    }

    // rainbow path on t vertices using the freshly colored edge (u,v)
    bool rainbow_through(int u, int v, int c, int t) {
        int cols[8];
        for (int a = 0; a <= t - 2; ++a) {
            int b = t - 2 - a;
            std::uint64_t used = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
            cols[0] = c;
            int ncols = 1;
            if (chain(u, a, v, b, used, cols, ncols)) return true;
        }
        return false;
    }

    bool out_of_time() {
        if (!has_deadline) return false;
        if ((nodes & 0xfff) != 0) return false;
        if (Clock::now() >= deadline) {
            timed_out = true;
            return true;
        }
        return false;
    }

    bool aborted() {
        if (!should_abort) return false;
        if ((nodes & 0xfff) != 0) return false;
        return should_abort();
    }

    // returns true when instructed to stop (leaf accepted / timeout / abort)
    bool dfs(int e, int used_colors) {
        if (e == E) return on_leaf(std::span<const int>(colors), used_colors);
        int limit = canonical ? std::min(used_colors + 1, k_cap) : k_cap;
        for (int c = 1; c <= limit; ++c) {
            ++nodes;
            if (out_of_time()) return true;
            if (aborted()) return true;
            assign(e, c);
            if (!violates(e)) {
                if (dfs(e + 1, std::max(used_colors, canonical ? c : 1))) {
                    unassign(e);
                    return true;
                }
            }
            unassign(e);
        }
        return false;
    }

    void replay(std::span<const int> prefix) {
        for (std::size_t e = 0; e < prefix.size(); ++e) assign(static_cast<int>(e), prefix[e]);
    }

    int prefix_used_colors(std::span<const int> prefix) const {
        int u = 0;
        for (int c : prefix) u = std::max(u, c);
        return u;
    }
};

// collect pruned canonical prefixes of the first `depth` edges
void collect_prefixes(Kernel& k, int depth, int e, int used, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (e == depth || e == k.E) {
        out.push_back(cur);
        return;
    }
    int limit = k.canonical ? std::min(used + 1, k.k_cap) : k.k_cap;
    for (int c = 1; c <= limit; ++c) {
        k.assign(e, c);
        if (!k.violates(e)) {
            cur.push_back(c);
            collect_prefixes(k, depth, e + 1, std::max(used, k.canonical ? c : 1), cur, out);
            cur.pop_back();
        }
        k.unassign(e);
    }
}

struct KernelConfig {
    HostShape shape;
    int m, n;
    bool canonical;
    int k_cap;
    std::vector<Forbid> forbids;
    std::optional<int> rainbow_t;
};

Kernel make_kernel(const KernelConfig& cfg) {
    Kernel k(cfg.shape, cfg.m, cfg.n);
    k.canonical = cfg.canonical;
    k.set_colors_cap(cfg.k_cap);
    for (const auto& f : cfg.forbids) k.add_forbid(f.pattern, f.color);
    k.rainbow_t = cfg.rainbow_t;
    return k;
}

// verify a candidate leaf with the standalone detectors before trusting it
void verify_witness(const KernelConfig& cfg, const ColoredHost& host) {
    for (const auto& f : cfg.forbids) {
        if (f.pattern.order > host.vertex_count()) continue;
        if (f.color == 0) {
            if (find_mono_copy(host, f.pattern))
                throw std::logic_error("search produced an invalid witness (mono)");
        } else {
            for (int c = 1; c <= host.color_count; ++c) {
                if (host.original_labels[c - 1] != f.color) continue;
                if (find_mono_copy(host, f.pattern, c))
                    throw std::logic_error("search produced an invalid witness (role mono)");
            }
        }
    }
    if (cfg.rainbow_t && find_rainbow_path(host, *cfg.rainbow_t))
        throw std::logic_error("search produced an invalid witness (rainbow)");
}

SearchOutcome run_search(const KernelConfig& cfg, const SearchOptions& opts) {
    auto t0 = Clock::now();
    SearchOutcome out;
    auto deadline = (opts.time_limit_s > 0)
                        ? t0 + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(opts.time_limit_s))
                        : Clock::time_point{};

    auto finish = [&](SearchStatus st, std::optional<std::vector<int>> leaf,
                      unsigned long long nodes) {
        out.status = st;
        out.nodes = nodes;
        if (leaf) {
            ColoredHost host = build_host(cfg.shape, cfg.m, cfg.n, *leaf);
            verify_witness(cfg, host);
            out.witness = std::move(host);
        }
        out.wall_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        return out;
    };

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        Kernel k = make_kernel(cfg);
        if (opts.time_limit_s > 0) {
            k.has_deadline = true;
            k.deadline = deadline;
        }
        std::optional<std::vector<int>> leaf;
        k.on_leaf = [&](std::span<const int> cols, int) {
            leaf.emplace(cols.begin(), cols.end());
            return true;
        };
        bool stopped = k.dfs(0, 0);
        if (k.timed_out && !leaf) return finish(SearchStatus::Timeout, std::nullopt, k.nodes);
        if (stopped && leaf) return finish(SearchStatus::Witness, std::move(leaf), k.nodes);
        return finish(SearchStatus::Exhausted, std::nullopt, k.nodes);
    }

    // parallel: split the canonical tree at a shallow depth into ordered tasks
    Kernel splitter = make_kernel(cfg);
    int depth = 1;
    std::vector<std::vector<int>> tasks;
    while (depth < splitter.E) {
        tasks.clear();
        std::vector<int> cur;
        collect_prefixes(splitter, depth, 0, 0, cur, tasks);
        if (static_cast<int>(tasks.size()) >= 4 * jobs || static_cast<int>(tasks.size()) > 2048)
            break;
        ++depth;
    }
    if (tasks.empty()) {
        std::vector<int> cur;
        collect_prefixes(splitter, depth, 0, 0, cur, tasks);
    }
    if (tasks.empty()) return finish(SearchStatus::Exhausted, std::nullopt, splitter.nodes);

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best_task{tasks.size()};
    std::atomic<bool> any_timeout{false};
    std::vector<std::optional<std::vector<int>>> found(tasks.size());
    std::atomic<unsigned long long> total_nodes{0};

    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            if (i > best_task.load()) continue;  // a smaller task already has a witness
            Kernel k = make_kernel(cfg);
            if (opts.time_limit_s > 0) {
                k.has_deadline = true;
                k.deadline = deadline;
            }
            k.should_abort = [&, i]() { return i > best_task.load(std::memory_order_relaxed); };
            k.replay(tasks[i]);
            std::optional<std::vector<int>> leaf;
            k.on_leaf = [&](std::span<const int> cols, int) {
                leaf.emplace(cols.begin(), cols.end());
                return true;
            };
            k.dfs(static_cast<int>(tasks[i].size()),
                  k.prefix_used_colors(tasks[i]));
            total_nodes.fetch_add(k.nodes);
            if (k.timed_out) any_timeout.store(true);
            if (leaf) {
                found[i] = std::move(leaf);
                std::size_t cur_best = best_task.load();
                while (i < cur_best && !best_task.compare_exchange_weak(cur_best, i)) {}
            }
        }
    };

    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::size_t win = tasks.size();
    for (std::size_t i = 0; i < tasks.size(); ++i)
        if (found[i]) { win = i; break; }
    unsigned long long nodes = total_nodes.load() + splitter.nodes;
    if (win < tasks.size()) return finish(SearchStatus::Witness, std::move(found[win]), nodes);
    if (any_timeout.load()) return finish(SearchStatus::Timeout, std::nullopt, nodes);
    return finish(SearchStatus::Exhausted, std::nullopt, nodes);
}

void check_limits(bool canonical_unbounded, int budget, int E, bool allow_large) {
    if (allow_large) return;
    int cap = canonical_unbounded ? kMaxEdgesUnbounded
                                  : (budget <= 3 ? kMaxEdgesSmallBudget : kMaxEdgesUnbounded);
    if (E > cap)
        throw std::invalid_argument("edge count " + std::to_string(E) +
                                    " exceeds the documented search limit of " +
                                    std::to_string(cap));
}

}  // namespace

SearchOutcome exists_good_coloring(const SearchProblem& p, const SearchOptions& opts) {
    if (p.forbid_mono.is_empty())
        throw std::invalid_argument("forbid_mono must be nonempty");
    if (p.forbid_rainbow_t && (*p.forbid_rainbow_t < 3 || *p.forbid_rainbow_t > 8))
        throw std::invalid_argument("rainbow path order must lie in 3..8");
    int E = static_cast<int>(host_edge_count(p.shape, p.m, p.n));
    check_limits(!p.color_budget.has_value(), p.color_budget.value_or(0), E, opts.allow_large);
    KernelConfig cfg;
    cfg.shape = p.shape;
    cfg.m = p.m;
    cfg.n = p.n;
    cfg.canonical = true;
    cfg.k_cap = p.color_budget ? std::min(*p.color_budget, std::max(E, 1)) : std::max(E, 1);
    cfg.forbids.push_back({p.forbid_mono, 0});
    cfg.rainbow_t = p.forbid_rainbow_t;
    return run_search(cfg, opts);
}

SearchOutcome find_coloring_fixed_roles(HostShape shape, int m, int n, int k,
                                        const std::vector<Forbid>& forbids,
                                        std::optional<int> rainbow_t,
                                        const SearchOptions& opts) {
    if (k < 1) throw std::invalid_argument("need at least one color role");
    int E = static_cast<int>(host_edge_count(shape, m, n));
    check_limits(false, k, E, opts.allow_large);
    KernelConfig cfg;
    cfg.shape = shape;
    cfg.m = m;
    cfg.n = n;
    cfg.canonical = false;
    cfg.k_cap = k;
    cfg.forbids = forbids;
    cfg.rainbow_t = rainbow_t;
    return run_search(cfg, opts);
}

void enumerate_colorings(HostShape shape, int m, int n, std::optional<int> budget,
                         std::optional<int> prune_rainbow_t,
                         const std::function<void(std::span<const int>, int)>& leaf,
                         const SearchOptions& opts, const std::vector<Forbid>& forbids) {
    KernelConfig cfg;
    cfg.shape = shape;
    cfg.m = m;
    cfg.n = n;
    cfg.canonical = true;
    int E = static_cast<int>(host_edge_count(shape, m, n));
    cfg.k_cap = budget ? std::min(*budget, std::max(E, 1)) : std::max(E, 1);
    cfg.rainbow_t = prune_rainbow_t;
    cfg.forbids = forbids;

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        Kernel k = make_kernel(cfg);
        k.on_leaf = [&](std::span<const int> cols, int used) {
            leaf(cols, used);
            return false;
        };
        k.dfs(0, 0);
        return;
    }
    Kernel splitter = make_kernel(cfg);
    int depth = 1;
    std::vector<std::vector<int>> tasks;
    while (depth < splitter.E) {
        tasks.clear();
        std::vector<int> cur;
        collect_prefixes(splitter, depth, 0, 0, cur, tasks);
        if (static_cast<int>(tasks.size()) >= 8 * jobs || static_cast<int>(tasks.size()) > 4096)
            break;
        ++depth;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            Kernel k = make_kernel(cfg);
            k.replay(tasks[i]);
            k.on_leaf = [&](std::span<const int> cols, int used) {
                leaf(cols, used);
                return false;
            };
            k.dfs(static_cast<int>(tasks[i].size()), k.prefix_used_colors(tasks[i]));
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

namespace {

// ascend n until the forcing point; below the pattern order every coloring is
// trivially good, so sweeps start where the pattern first fits
ValueResult sweep(int start_n, int n_max,
                  const std::function<SearchOutcome(int)>& probe) {
    ValueResult res;
    res.n_max = n_max;
    for (int n = start_n; n <= n_max; ++n) {
        SearchOutcome out = probe(n);
        res.nodes += out.nodes;
        res.wall_ms += out.wall_ms;
        if (out.status == SearchStatus::Timeout) {
            res.timed_out = true;
            return res;
        }
        if (out.status == SearchStatus::Exhausted) {
            res.value = n;
            return res;
        }
        if (n == n_max) res.witness_at_max = std::move(out.witness);
    }
    return res;
}

}  // namespace

ValueResult ramsey_k(const SimpleGraph& h, int k, int n_max, const SearchOptions& opts) {
    if (h.is_empty()) throw std::invalid_argument("pattern must be nonempty");
    if (k < 1) throw std::invalid_argument("need at least one color");
    return sweep(std::min(h.order, n_max), n_max, [&](int n) {
        SearchProblem p;
        p.shape = HostShape::Complete;
        p.n = n;
        p.color_budget = k;
        p.forbid_mono = h;
        return exists_good_coloring(p, opts);
    });
}

ConstrainedResult constrained_ramsey(const SimpleGraph& h, int t, int n_max,
                                     const SearchOptions& opts) {
    if (h.is_empty()) throw std::invalid_argument("pattern must be nonempty");
    if (t < 3) throw std::invalid_argument("path order must be at least 3");
    ConstrainedResult res;
    res.constrained = sweep(std::min(h.order, n_max), n_max, [&](int n) {
        SearchProblem p;
        p.shape = HostShape::Complete;
        p.n = n;
        p.forbid_mono = h;
        p.forbid_rainbow_t = t;
        return exists_good_coloring(p, opts);
    });
    ValueResult budget = ramsey_k(h, t - 2, n_max, opts);
    res.budget_value = budget.value;
    if (res.constrained.value && res.budget_value &&
        *res.constrained.value < *res.budget_value)
        throw std::logic_error("constrained value fell below the budget value");
    return res;
}

ValueResult two_color_ramsey(const SimpleGraph& g1, const SimpleGraph& g2, int n_max,
                             const SearchOptions& opts) {
    if (g1.is_empty() || g2.is_empty())
        throw std::invalid_argument("patterns must be nonempty");
    int start = std::min(std::max({2, g1.order, g2.order}), n_max);
    if (isomorphic(g1, g2)) {
        // symmetric roles collapse to the canonical two-color search
        return sweep(start, n_max, [&](int n) {
            SearchProblem p;
            p.shape = HostShape::Complete;
            p.n = n;
            p.color_budget = 2;
            p.forbid_mono = g1;
            return exists_good_coloring(p, opts);
        });
    }
    return sweep(start, n_max, [&](int n) {
        return find_coloring_fixed_roles(HostShape::Complete, 0, n, 2,
                                         {{g1, 1}, {g2, 2}}, std::nullopt, opts);
    });
}

BipartiteValueResult bipartite_ramsey_k(const SimpleGraph& h, int k, int n_max,
                                        const SearchOptions& opts) {
    if (h.is_empty()) throw std::invalid_argument("pattern must be nonempty");
    PartiteProfile prof = partite_profile(h);  // throws when not bipartite
    BipartiteValueResult out;
    if (is_connected(h)) out.blowup_lower = k * (prof.t - 1) + 1;
    out.result = sweep(std::min(std::max(1, prof.t_star), n_max), n_max, [&](int n) {
        SearchProblem p;
        p.shape = HostShape::Bipartite;
        p.m = n;
        p.n = n;
        p.color_budget = k;
        p.forbid_mono = h;
        return exists_good_coloring(p, opts);
    });
    return out;
}

ValueResult bipartite_constrained(const SimpleGraph& h, int t, std::optional<int> budget,
                                  int n_max, const SearchOptions& opts) {
    if (h.is_empty()) throw std::invalid_argument("pattern must be nonempty");
    if (t < 3) throw std::invalid_argument("path order must be at least 3");
    PartiteProfile prof = partite_profile(h);
    return sweep(std::min(std::max(1, prof.t_star), n_max), n_max, [&](int n) {
        SearchProblem p;
        p.shape = HostShape::Bipartite;
        p.m = n;
        p.n = n;
        p.color_budget = budget;
        p.forbid_mono = h;
        p.forbid_rainbow_t = t;
        return exists_good_coloring(p, opts);
    });
}

}  // namespace rf
