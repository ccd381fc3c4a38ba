#include "sylreg/search.hpp"

#include "sylreg/sylow.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

namespace sylreg {

std::string search_mode_name(SearchMode m) {
    switch (m) {
        case SearchMode::syl_regular: return "sylreg";
        case SearchMode::steinberg_like: return "steinberg";
        case SearchMode::p_vanishing: return "pvanish";
        case SearchMode::syl_vanishing: return "sylvanish";
    }
    throw error("search_mode_name: bad mode");
}

SearchMode search_mode_from_string(const std::string& s) {
    if (s == "sylreg" || s == "syl_regular") return SearchMode::syl_regular;
    if (s == "steinberg" || s == "steinberg_like") return SearchMode::steinberg_like;
    if (s == "pvanish" || s == "p_vanishing") return SearchMode::p_vanishing;
    if (s == "sylvanish" || s == "syl_vanishing") return SearchMode::syl_vanishing;
    throw error("unknown search mode '" + s + "'");
}

ClassifyResult classify(const CharacterTable& t, long p, const VirtualCharacter& v) {
    if (v.mult.size() != t.num_rows()) throw error("classify: multiplicity vector length mismatch");
    for (const auto& m : v.mult)
        if (m < 0) throw error("classify: multiplicities must be nonnegative");
    ClassifyResult res;
    res.degree = v.degree(t);
    res.contains_trivial = v.mult.empty() ? Integer(0) : v.mult[0];
    auto ptypes = classes_by_p_type(t, p);
    res.syl_vanishing = true;
    for (size_t c : ptypes.nontrivial_p_element)
        if (!v.value_at(t, c).is_zero()) { res.syl_vanishing = false; break; }
    res.p_vanishing = res.syl_vanishing;
    if (res.syl_vanishing)
        for (size_t c : ptypes.p_singular)
            if (!v.value_at(t, c).is_zero()) { res.p_vanishing = false; break; }
    Integer s = p_part(t.group_order, p);
    if (res.syl_vanishing && res.degree % s == 0) res.level = res.degree / s;
    res.is_syl_regular = res.syl_vanishing && res.degree == s;
    res.is_steinberg_like = res.p_vanishing && res.degree == s;
    return res;
}

namespace {

// Integer kernel state: rows sorted by degree descending, every constrained
// cyclotomic coordinate flattened to one integer column.
struct Kernel {
    std::vector<size_t> order;      // kernel row index -> table row index
    std::vector<long> degrees;      // per kernel row
    std::vector<std::vector<long long>> cols;  // per column, per kernel row
    std::vector<std::vector<long long>> lo_num, hi_num;  // suffix extremes of v/d per column
    std::vector<std::vector<long long>> lo_den, hi_den;
    long trivial_row = -1;          // kernel index of the trivial character
    long long target = 0;
    std::vector<uint64_t> reach;    // (rows+1) x (target+1) bits
    size_t reach_words = 0;

    bool reachable(size_t i, long long residual) const {
        const uint64_t* row = reach.data() + i * reach_words;
        return (row[residual >> 6] >> (residual & 63)) & 1;
    }
};

struct Frame {
    size_t row;
    long long residual;
    long long trivial_used;
    std::vector<long long> partial;
    std::vector<Integer> mult;
};

// Exact linear-relaxation interval test: with multiplicities m >= 0 of total
// remaining degree r, the sum over a column lies in [r*min(v/d), r*max(v/d)].
bool frame_feasible(const Kernel& k, size_t i, long long residual, const std::vector<long long>& partial) {
    for (size_t j = 0; j < k.cols.size(); ++j) {
        long long want = -partial[j];
        long long lon = k.lo_num[j][i], lod = k.lo_den[j][i];
        long long hin = k.hi_num[j][i], hid = k.hi_den[j][i];
        if (want * lod < residual * lon) return false;
        if (want * hid > residual * hin) return false;
    }
    return true;
}

class Dfs {
public:
    Dfs(const Kernel& k, long long trivial_cap, long long cap, std::vector<std::vector<Integer>>& out,
        std::atomic<unsigned long long>& nodes, std::atomic<bool>& truncated)
        : k_(k), trivial_cap_(trivial_cap), cap_(cap), out_(out), nodes_(nodes), truncated_(truncated) {}

    void run(Frame f) { walk(f.row, f.residual, f.trivial_used, f.partial, f.mult); }

private:
    const Kernel& k_;
    long long trivial_cap_, cap_;
    std::vector<std::vector<Integer>>& out_;
    std::atomic<unsigned long long>& nodes_;
    std::atomic<bool>& truncated_;

    void walk(size_t i, long long residual, long long trivial_used, std::vector<long long>& partial,
              std::vector<Integer>& mult) {
        if (cap_ > 0 && truncated_.load(std::memory_order_relaxed)) return;
        nodes_.fetch_add(1, std::memory_order_relaxed);
        if (residual == 0) {
            for (long long x : partial)
                if (x != 0) return;
            // remaining rows all get multiplicity zero
            out_.push_back(mult);
            if (cap_ > 0 && static_cast<long long>(out_.size()) >= cap_) truncated_.store(true);
            return;
        }
        if (i >= k_.order.size()) return;
        if (!k_.reachable(i, residual)) return;
        if (!frame_feasible(k_, i, residual, partial)) return;

        long d = k_.degrees[i];
        long long kmax = residual / d;
        if (static_cast<long>(i) == k_.trivial_row) kmax = std::min(kmax, trivial_cap_ - trivial_used);
        // multiplicity 0 first, then increments
        walk(i + 1, residual, trivial_used, partial, mult);
        for (long long m = 1; m <= kmax; ++m) {
            for (size_t j = 0; j < k_.cols.size(); ++j) partial[j] += k_.cols[j][i];
            mult[k_.order[i]] += 1;
            long long tu = trivial_used + (static_cast<long>(i) == k_.trivial_row ? m : 0);
            walk(i + 1, residual - m * d, tu, partial, mult);
        }
        for (size_t j = 0; j < k_.cols.size(); ++j) partial[j] -= kmax * k_.cols[j][i];
        mult[k_.order[i]] -= kmax;
    }
};

Kernel build_kernel(const CharacterTable& t, const std::vector<size_t>& constrained, long long target) {
    Kernel k;
    size_t nrows = t.num_rows();
    k.target = target;

    std::vector<long> degs(nrows);
    for (size_t i = 0; i < nrows; ++i) {
        Integer d = t.degree(i);
        if (d > 1000000000) throw error("search: table degrees too large for the integer kernel");
        degs[i] = d.convert_to<long>();
    }
    k.order.resize(nrows);
    std::iota(k.order.begin(), k.order.end(), 0);
    std::stable_sort(k.order.begin(), k.order.end(),
                     [&](size_t a, size_t b) { return degs[a] > degs[b]; });
    k.degrees.resize(nrows);
    for (size_t i = 0; i < nrows; ++i) {
        k.degrees[i] = degs[k.order[i]];
        if (k.order[i] == 0) k.trivial_row = static_cast<long>(i);
    }

    // flatten constrained classes into integer columns
    for (size_t c : constrained) {
        long n = 1;
        for (size_t r = 0; r < nrows; ++r) n = std::lcm(n, t.irreducibles[r][c].conductor());
        long deg = Cyclotomic::phi(n);
        std::vector<std::vector<Rational>> coords(nrows);
        for (size_t r = 0; r < nrows; ++r) coords[r] = t.irreducibles[r][c].power_coords(n);
        for (long j = 0; j < deg; ++j) {
            Integer den = 1;
            bool any = false;
            for (size_t r = 0; r < nrows; ++r) {
                if (coords[r][j] == 0) continue;
                any = true;
                den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(coords[r][j]));
            }
            if (!any) continue;
            std::vector<long long> col(nrows);
            for (size_t r = 0; r < nrows; ++r) {
                Rational scaled = coords[k.order[r]][j] * Rational(den);
                Integer num = boost::multiprecision::numerator(scaled);
                if (num > 2000000000LL || num < -2000000000LL)
                    throw error("search: constraint coordinates too large for the integer kernel");
                col[r] = num.convert_to<long long>();
            }
            k.cols.push_back(std::move(col));
        }
    }

    // overflow guard for the interval pruning cross products
    {
        long long maxv = 1, maxd = 1;
        for (const auto& col : k.cols)
            for (long long v : col) maxv = std::max(maxv, std::llabs(v));
        for (long d : k.degrees) maxd = std::max<long long>(maxd, d);
        if (maxv > (1LL << 60) / std::max(1LL, target * maxd))
            throw error("search: kernel bounds exceed 64-bit safety margin");
    }

    // suffix extremes of v/d per column
    size_t m = k.cols.size();
    k.lo_num.assign(m, std::vector<long long>(nrows));
    k.lo_den.assign(m, std::vector<long long>(nrows));
    k.hi_num.assign(m, std::vector<long long>(nrows));
    k.hi_den.assign(m, std::vector<long long>(nrows));
    for (size_t j = 0; j < m; ++j) {
        long long ln = 0, ld = 1, hn = 0, hd = 1;
        for (size_t ii = nrows; ii-- > 0;) {
            long long v = k.cols[j][ii], d = k.degrees[ii];
            if (ii == nrows - 1) {
                ln = v; ld = d; hn = v; hd = d;
            } else {
                if (v * ld < ln * d) { ln = v; ld = d; }
                if (v * hd > hn * d) { hn = v; hd = d; }
            }
            k.lo_num[j][ii] = ln;
            k.lo_den[j][ii] = ld;
            k.hi_num[j][ii] = hn;
            k.hi_den[j][ii] = hd;
        }
    }

    // suffix subset-sum reachability over degrees
    k.reach_words = static_cast<size_t>(target / 64 + 1);
    k.reach.assign((nrows + 1) * k.reach_words, 0);
    auto row_ptr = [&](size_t i) { return k.reach.data() + i * k.reach_words; };
    row_ptr(nrows)[0] = 1;
    for (size_t i = nrows; i-- > 0;) {
        uint64_t* cur = row_ptr(i);
        const uint64_t* next = row_ptr(i + 1);
        std::copy(next, next + k.reach_words, cur);
        long d = k.degrees[i];
        if (d <= target)
            for (long long s = d; s <= target; ++s)
                if ((cur[(s - d) >> 6] >> ((s - d) & 63)) & 1) cur[s >> 6] |= 1ull << (s & 63);
    }
    return k;
}

// Expand the DFS tree until enough independent frames exist. The expansion
// applies exactly the checks of Dfs::walk and counts nodes the same way, so
// node totals are identical for every thread count.
std::vector<Frame> make_frontier(const Kernel& k, long long trivial_cap, size_t want,
                                 std::atomic<unsigned long long>& nodes,
                                 std::vector<std::vector<Integer>>& found) {
    std::vector<Frame> frontier;
    Frame root{0, k.target, 0, std::vector<long long>(k.cols.size(), 0),
               std::vector<Integer>(k.order.size(), 0)};
    frontier.push_back(std::move(root));
    while (frontier.size() < want) {
        // split the shallowest frame
        size_t best = frontier.size();
        for (size_t i = 0; i < frontier.size(); ++i)
            if (best == frontier.size() || frontier[i].row < frontier[best].row) best = i;
        if (best == frontier.size() || frontier[best].row >= k.order.size()) break;
        Frame f = std::move(frontier[best]);
        frontier.erase(frontier.begin() + best);
        nodes.fetch_add(1, std::memory_order_relaxed);
        if (f.residual == 0) {
            bool zero = std::all_of(f.partial.begin(), f.partial.end(), [](long long x) { return x == 0; });
            if (zero) found.push_back(f.mult);
            continue;
        }
        size_t i = f.row;
        if (!k.reachable(i, f.residual)) continue;
        if (!frame_feasible(k, i, f.residual, f.partial)) continue;
        long d = k.degrees[i];
        long long kmax = f.residual / d;
        if (static_cast<long>(i) == k.trivial_row) kmax = std::min(kmax, trivial_cap - f.trivial_used);
        for (long long m = 0; m <= kmax; ++m) {
            Frame g = f;
            g.row = i + 1;
            g.residual -= m * d;
            if (static_cast<long>(i) == k.trivial_row) g.trivial_used += m;
            for (size_t j = 0; j < k.cols.size(); ++j) g.partial[j] += m * k.cols[j][i];
            g.mult[k.order[i]] += m;
            frontier.push_back(std::move(g));
        }
    }
    return frontier;
}

void search_one_target(const CharacterTable& t, const std::vector<size_t>& constrained, long long target,
                       long long trivial_cap, long long cap, int threads,
                       std::vector<std::vector<Integer>>& out, SearchStats& stats, bool& truncated_flag) {
    Kernel k = build_kernel(t, constrained, target);
    std::atomic<unsigned long long> nodes(0);
    std::atomic<bool> truncated(false);
    std::vector<std::vector<Integer>> found;

    if (cap > 0) threads = 1;
    if (threads <= 1) {
        Frame root{0, target, 0, std::vector<long long>(k.cols.size(), 0),
                   std::vector<Integer>(k.order.size(), 0)};
        Dfs dfs(k, trivial_cap, cap, found, nodes, truncated);
        dfs.run(std::move(root));
    } else {
        auto frontier = make_frontier(k, trivial_cap, static_cast<size_t>(threads) * 8, nodes, found);
        std::vector<std::vector<std::vector<Integer>>> buckets(frontier.size());
        std::atomic<size_t> next(0);
        auto worker = [&]() {
            for (;;) {
                size_t idx = next.fetch_add(1);
                if (idx >= frontier.size()) return;
                Dfs dfs(k, trivial_cap, 0, buckets[idx], nodes, truncated);
                dfs.run(frontier[idx]);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (auto& b : buckets)
            for (auto& v : b) found.push_back(std::move(v));
    }
    stats.nodes += nodes.load();
    if (truncated.load()) truncated_flag = true;
    for (auto& v : found) out.push_back(std::move(v));
}

}  // namespace

SearchReport enumerate_virtual_characters(const CharacterTable& t, const SearchQuery& q) {
    auto t0 = std::chrono::steady_clock::now();
    if (!is_prime(q.p)) throw error("search: p must be prime");
    if (t.group_order % q.p != 0) throw error("search: p does not divide the group order");
    if (q.level < 1) throw error("search: level must be >= 1");
    {
        auto rep = validate(t);
        if (!rep.ok()) throw error("search: table failed validation: " + rep.summary());
    }

    SearchReport rep;
    rep.table_name = t.name;
    rep.query = q;
    rep.sylow_part = p_part(t.group_order, q.p);
    if (rep.sylow_part > (1LL << 40)) throw error("search: Sylow part too large for the integer kernel");
    long long s = rep.sylow_part.convert_to<long long>();

    auto ptypes = classes_by_p_type(t, q.p);
    bool use_singular = (q.mode == SearchMode::steinberg_like || q.mode == SearchMode::p_vanishing);
    const std::vector<size_t>& constrained = use_singular ? ptypes.p_singular : ptypes.nontrivial_p_element;

    std::vector<long> levels;
    if (q.mode == SearchMode::syl_regular || q.mode == SearchMode::steinberg_like) levels = {q.level};
    else
        for (long l = 1; l <= q.level; ++l) levels.push_back(l);

    bool truncated = false;
    std::vector<std::vector<Integer>> raw;
    for (long l : levels) {
        long long remaining_cap = 0;
        if (q.max_solutions > 0) {
            remaining_cap = q.max_solutions - static_cast<long long>(raw.size());
            if (remaining_cap <= 0) { truncated = true; break; }
        }
        search_one_target(t, constrained, l * s, l, remaining_cap, q.threads, raw, rep.stats, truncated);
    }

    for (auto& m : raw) {
        Solution sol;
        sol.v.mult = std::move(m);
        sol.flags = classify(t, q.p, sol.v);
        // soundness: the classifier must agree with the kernel's constraints
        bool ok = use_singular ? sol.flags.p_vanishing : sol.flags.syl_vanishing;
        if (!ok || sol.flags.degree % rep.sylow_part != 0)
            throw error("search: internal soundness check failed");
        rep.solutions.push_back(std::move(sol));
    }
    std::sort(rep.solutions.begin(), rep.solutions.end(),
              [](const Solution& a, const Solution& b) { return a.v.mult < b.v.mult; });
    rep.exhaustive = !truncated;
    if (q.max_solutions > 0 && static_cast<long long>(rep.solutions.size()) > q.max_solutions)
        rep.solutions.resize(q.max_solutions);

    auto t1 = std::chrono::steady_clock::now();
    rep.stats.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

std::string report_to_json(const SearchReport& r) {
    nlohmann::ordered_json j;
    j["query"] = {{"table", r.table_name},
                  {"p", r.query.p},
                  {"mode", search_mode_name(r.query.mode)},
                  {"level", r.query.level},
                  {"max_solutions", r.query.max_solutions}};
    {
        std::ostringstream os;
        os << r.sylow_part;
        j["sylow_part"] = os.str();
    }
    j["exhaustive"] = r.exhaustive;
    j["solutions"] = nlohmann::ordered_json::array();
    for (const auto& s : r.solutions) {
        nlohmann::ordered_json sj;
        sj["mult"] = nlohmann::ordered_json::array();
        for (const auto& m : s.v.mult) sj["mult"].push_back(m.convert_to<long long>());
        std::ostringstream os;
        os << s.flags.degree;
        sj["degree"] = os.str();
        if (s.flags.level) sj["level"] = s.flags.level->convert_to<long long>();
        else sj["level"] = nullptr;
        sj["syl_vanishing"] = s.flags.syl_vanishing;
        sj["p_vanishing"] = s.flags.p_vanishing;
        sj["is_syl_regular"] = s.flags.is_syl_regular;
        sj["is_steinberg_like"] = s.flags.is_steinberg_like;
        sj["contains_trivial"] = s.flags.contains_trivial.convert_to<long long>();
        j["solutions"].push_back(std::move(sj));
    }
    j["stats"] = {{"nodes", r.stats.nodes}, {"wall_ms", r.stats.wall_ms}};
    return j.dump(1) + "\n";
}

}  // namespace sylreg
