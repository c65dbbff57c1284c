#include "coprime/counting.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

#include "enumeration_plan.hpp"

namespace coprime {

const char* to_string(CountMethod m) {
    return m == CountMethod::bruteforce ? "bruteforce" : "moebius";
}

namespace {

constexpr int128 bruteforce_cap = 1'000'000'000;
constexpr int64_t moebius_node_cap = int64_t(1) << 28;
constexpr int64_t node_batch = 8192;

int128 saturating_pow(int64_t base, int exp, int128 cap) {
    int128 acc = 1;
    for (int i = 0; i < exp; ++i) {
        acc *= base; // safe: acc <= cap < 2^63 and base < 2^63
        if (acc > cap) return cap + 1;
    }
    return acc;
}

int clamp_threads(int threads) { return std::clamp(threads, 1, 256); }

// ---------------------------------------------------------------------------
// Brute force: extend the tuple one coordinate at a time, checking gcd = 1
// against already-assigned neighbors only. Once no remaining coordinate is
// constrained, the whole suffix contributes a power of x.
// ---------------------------------------------------------------------------

struct BruteForcer {
    const int64_t x;
    const int v;
    std::vector<std::vector<int>> back; // per 0-based coordinate: earlier adjacent coords
    std::vector<bool> suffix_free;      // coordinates depth..v-1 all unconstrained
    std::vector<int128> pow_x;

    BruteForcer(const Graph& g, int64_t bound) : x(bound), v(g.vertex_count()) {
        back.assign(size_t(v), {});
        for (const Edge& e : g.edges()) back[size_t(e.s - 1)].push_back(e.r - 1);
        suffix_free.assign(size_t(v) + 1, true);
        for (int k = v - 1; k >= 0; --k)
            suffix_free[size_t(k)] = suffix_free[size_t(k) + 1] && back[size_t(k)].empty();
        pow_x.assign(size_t(v) + 1, 1);
        for (int k = 1; k <= v; ++k) pow_x[size_t(k)] = checked_mul(pow_x[size_t(k) - 1], x);
    }

    int128 descend(int depth, std::vector<int64_t>& vals) const {
        if (suffix_free[size_t(depth)]) return pow_x[size_t(v - depth)];
        const std::vector<int>& checks = back[size_t(depth)];
        int128 sub = 0;
        for (int64_t a = 1; a <= x; ++a) {
            bool ok = true;
            for (int j : checks)
                if (std::gcd(a, vals[size_t(j)]) != 1) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            vals[size_t(depth)] = a;
            sub += descend(depth + 1, vals);
        }
        return sub;
    }

    // First coordinate restricted to [lo, hi); used for thread partitioning.
    int128 run(int64_t lo, int64_t hi) const {
        std::vector<int64_t> vals(size_t(v), 0);
        int128 total = 0;
        for (int64_t a = lo; a < hi; ++a) {
            vals[0] = a;
            total += descend(1, vals);
        }
        return total;
    }
};

} // namespace

CountResult count_bruteforce(const Graph& g, int64_t x, int threads) {
    if (x < 1) throw domain_error("x must be positive");
    if (saturating_pow(x, g.vertex_count(), bruteforce_cap) > bruteforce_cap)
        throw feasibility_error("bruteforce iteration cap exceeded: x^v > 10^9");
    threads = clamp_threads(threads);

    CountResult result;
    result.x = x;
    result.method = CountMethod::bruteforce;
    result.graph_id = canonical_text(g);

    const BruteForcer bf(g, x);
    if (bf.suffix_free[0]) { // no constraints at all
        result.count = bf.pow_x[size_t(g.vertex_count())];
        return result;
    }
    if (threads == 1 || x < 2 * threads) {
        result.count = bf.run(1, x + 1);
        return result;
    }

    std::vector<int128> partial(size_t(threads), 0);
    std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            const int64_t lo = 1 + x * t / threads;
            const int64_t hi = 1 + x * (t + 1) / threads;
            try {
                partial[size_t(t)] = bf.run(lo, hi);
            } catch (...) {
                errors[size_t(t)] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
    int128 total = 0;
    for (const int128& p : partial) total = checked_add(total, p);
    result.count = total;
    return result;
}

// ---------------------------------------------------------------------------
// Moebius counter. Every edge gets a squarefree value n_a <= x; vertex r
// collects N_r = lcm of incident values, and the numbering contributes
// mu(n_1)...mu(n_e) * prod_r floor(x/N_r). A branch dies as soon as some
// vertex lcm exceeds x. Explored nodes are capped.
// ---------------------------------------------------------------------------

namespace {

struct SquarefreeTable {
    std::vector<int64_t> values;
    std::vector<int8_t> mu;
};

SquarefreeTable squarefree_up_to(int64_t x) {
    SquarefreeTable out;
    if (x < 2) {
        out.values.push_back(1);
        out.mu.push_back(1);
        return out;
    }
    std::vector<int8_t> mu(size_t(x) + 1, 1);
    const PrimeTable table = primes_up_to(x);
    for (uint32_t p : table.primes) {
        for (int64_t m = p; m <= x; m += p) mu[size_t(m)] = int8_t(-mu[size_t(m)]);
        const int64_t p2 = int64_t(p) * int64_t(p);
        for (int64_t m = p2; m <= x; m += p2) mu[size_t(m)] = 0;
    }
    for (int64_t n = 1; n <= x; ++n)
        if (mu[size_t(n)] != 0) {
            out.values.push_back(n);
            out.mu.push_back(mu[size_t(n)]);
        }
    return out;
}

struct MoebiusSummer {
    const Graph& g;
    const int64_t x;
    const EnumerationPlan& plan;
    const SquarefreeTable& sf;
    std::atomic<int64_t>& shared_nodes;
    std::vector<int64_t> vertex_lcm;
    int64_t local_nodes = 0;

    MoebiusSummer(const Graph& graph, int64_t bound, const EnumerationPlan& p,
                  const SquarefreeTable& table, std::atomic<int64_t>& counter)
        : g(graph), x(bound), plan(p), sf(table), shared_nodes(counter),
          vertex_lcm(size_t(graph.vertex_count()), 1) {}

    void tick() {
        if (++local_nodes < node_batch) return;
        if (shared_nodes.fetch_add(local_nodes, std::memory_order_relaxed) + local_nodes >
            moebius_node_cap)
            throw feasibility_error("moebius enumeration cap exceeded: more than 2^28 nodes");
        local_nodes = 0;
    }

    int128 descend(int depth, int sign, int128 partial, size_t lo, size_t hi) {
        if (depth == g.edge_count()) return sign > 0 ? partial : -partial;
        const Edge& ed = g.edges()[size_t(plan.edge_order[size_t(depth)])];
        int64_t& lr = vertex_lcm[size_t(ed.r - 1)];
        int64_t& ls = vertex_lcm[size_t(ed.s - 1)];
        const int64_t save_r = lr, save_s = ls;
        int128 acc = 0;
        for (size_t i = lo; i < hi; ++i) {
            tick();
            const int64_t n = sf.values[i];
            const int64_t nr = std::lcm(save_r, n);
            if (nr > x) continue;
            const int64_t ns = std::lcm(save_s, n);
            if (ns > x) continue;
            lr = nr;
            ls = ns;
            int128 next = partial;
            for (int vertex : plan.finalize[size_t(depth)])
                next = checked_mul(next, x / vertex_lcm[size_t(vertex - 1)]);
            acc = checked_add(acc,
                              descend(depth + 1, sign * sf.mu[i], next, 0, sf.values.size()));
        }
        lr = save_r;
        ls = save_s;
        return acc;
    }
};

} // namespace

CountResult count_moebius(const Graph& g, int64_t x, int threads) {
    if (x < 1) throw domain_error("x must be positive");
    const int v = g.vertex_count();
    if (int64_t(std::bit_width(uint64_t(x))) * v > 126)
        throw feasibility_error("x^v exceeds the 128-bit accumulator");
    threads = clamp_threads(threads);

    CountResult result;
    result.x = x;
    result.method = CountMethod::moebius;
    result.graph_id = canonical_text(g);

    int128 isolated_factor = 1;
    for (int r = 1; r <= v; ++r)
        if (g.degree(r) == 0) isolated_factor = checked_mul(isolated_factor, int128(x));
    if (g.edge_count() == 0) {
        result.count = isolated_factor;
        return result;
    }

    const SquarefreeTable sf = squarefree_up_to(x);
    const EnumerationPlan plan = make_enumeration_plan(g);
    std::atomic<int64_t> nodes{0};

    int128 inner = 0;
    if (threads == 1 || sf.values.size() < 2 * size_t(threads)) {
        MoebiusSummer summer(g, x, plan, sf, nodes);
        inner = summer.descend(0, 1, 1, 0, sf.values.size());
    } else {
        std::vector<int128> partial(size_t(threads), 0);
        std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        const size_t n = sf.values.size();
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    MoebiusSummer summer(g, x, plan, sf, nodes);
                    partial[size_t(t)] =
                        summer.descend(0, 1, 1, n * size_t(t) / size_t(threads),
                                       n * size_t(t + 1) / size_t(threads));
                } catch (...) {
                    errors[size_t(t)] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
        for (const int128& p : partial) inner = checked_add(inner, p);
    }
    result.count = checked_mul(inner, isolated_factor);
    return result;
}

double main_term(const Graph& g, int64_t x, const DensityEstimate& est) {
    if (x < 1) throw domain_error("x must be positive");
    if (est.graph_id != canonical_text(g))
        throw domain_error("density estimate was computed for a different graph");
    long double xv = 1.0L;
    for (int k = 0; k < g.vertex_count(); ++k) xv *= (long double)x;
    return double((long double)est.value * xv);
}

ErrorDiagnostic error_diagnostic(const Graph& g, int64_t x, const DensityEstimate& est,
                                 int threads) {
    if (x < 3) throw domain_error("error diagnostic requires x >= 3");
    const int v = g.vertex_count();
    const int e = g.edge_count();

    // Cheaper-first method order by worst-case iteration estimates.
    const int128 brute_est = saturating_pow(x, v, bruteforce_cap);
    const int64_t sf_est = int64_t(0.61 * double(x)) + 2;
    const int128 moebius_est = saturating_pow(sf_est, e, int128(moebius_node_cap));
    CountMethod order[2] = {CountMethod::moebius, CountMethod::bruteforce};
    if (brute_est <= moebius_est) std::swap(order[0], order[1]);

    CountResult result;
    bool have_count = false;
    std::string first_failure;
    for (CountMethod m : order) {
        try {
            result = m == CountMethod::bruteforce ? count_bruteforce(g, x, threads)
                                                  : count_moebius(g, x, threads);
            have_count = true;
            break;
        } catch (const feasibility_error& err) {
            if (first_failure.empty()) first_failure = err.what();
        }
    }
    if (!have_count)
        throw feasibility_error("no feasible exact counter at x=" + std::to_string(x) + " (" +
                                first_failure + ")");

    ErrorDiagnostic diag;
    diag.x = x;
    diag.count = result.count;
    diag.method = result.method;
    const long double main = (long double)main_term(g, x, est);
    diag.main_term = double(main);
    const long double err = std::fabs((long double)result.count - main);
    diag.abs_error = double(err);
    long double denom = 1.0L;
    for (int k = 0; k + 1 < v; ++k) denom *= (long double)x;
    denom *= std::pow(std::log((long double)x), (long double)g.max_degree());
    diag.ratio = double(err / denom);
    return diag;
}

} // namespace coprime
