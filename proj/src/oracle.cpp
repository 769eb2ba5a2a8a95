#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <tuple>

#include "angleset/arcs.hpp"
#include "angleset/errors.hpp"
#include "angleset/solve.hpp"

namespace angleset {

namespace {

constexpr int table_max_degree = 16;
constexpr long long max_cover_combinations = 5000;

// Which slot subsets of one vertex can be covered by `limit` arcs of `width`.
struct VertexModel {
    int deg = 0;
    int limit = 0;
    int width = 0;
    bool free = false;                 // every subset is feasible
    bool has_covers = false;
    std::vector<std::uint64_t> covers; // maximal feasible subsets
    std::vector<char> table;           // feasible[mask], deg <= table_max_degree

    bool feasible(std::uint64_t m) const {
        if (free) return true;
        if (!table.empty()) return table[m];
        if (limit == 0) return m == 0;
        return min_arc_cover_mask(m, deg, width) <= limit;
    }
};

long long binomial_capped(int n, int k, long long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

std::shared_ptr<VertexModel> build_model(int deg, int limit, int width) {
    auto vm = std::make_shared<VertexModel>();
    vm->deg = deg;
    vm->limit = limit;
    vm->width = width;
    if (deg == 0 || static_cast<long long>(limit) * width >= deg) {
        vm->free = true;
        return vm;
    }
    if (deg > 64) return vm;
    if (limit == 0) {
        vm->has_covers = true;
        vm->covers = {0};
    } else if (binomial_capped(deg, limit, max_cover_combinations) <= max_cover_combinations) {
        const std::uint64_t full = deg == 64 ? ~0ULL : ((1ULL << deg) - 1);
        std::vector<std::uint64_t> arcs(deg);
        for (int s = 0; s < deg; ++s) {
            std::uint64_t a = 0;
            for (int k = 0; k < width; ++k) a |= 1ULL << ((s + k) % deg);
            arcs[s] = a & full;
        }
        std::vector<std::uint64_t> unions;
        std::vector<int> pick(limit);
        for (int i = 0; i < limit; ++i) pick[i] = i;
        while (true) {
            std::uint64_t u = 0;
            for (int i : pick) u |= arcs[i];
            unions.push_back(u);
            int i = limit - 1;
            while (i >= 0 && pick[i] == deg - limit + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < limit; ++j) pick[j] = pick[j - 1] + 1;
        }
        std::sort(unions.begin(), unions.end(), [](std::uint64_t x, std::uint64_t y) {
            int px = std::popcount(x), py = std::popcount(y);
            return px != py ? px > py : x < y;
        });
        unions.erase(std::unique(unions.begin(), unions.end()), unions.end());
        for (auto u : unions) {
            bool dominated = false;
            for (auto c : vm->covers)
                if ((u & c) == u) {
                    dominated = true;
                    break;
                }
            if (!dominated) vm->covers.push_back(u);
        }
        vm->has_covers = true;
    }
    if (deg <= table_max_degree) {
        const std::size_t size = std::size_t{1} << deg;
        vm->table.assign(size, 0);
        if (vm->has_covers) {
            for (auto c : vm->covers) vm->table[c] = 1;
            for (std::size_t m = size; m-- > 0;) {
                if (!vm->table[m]) continue;
                for (std::uint64_t rest = m; rest; rest &= rest - 1)
                    vm->table[m & ~(rest & -rest)] = 1;
            }
        } else {
            for (std::size_t m = 0; m < size; ++m)
                vm->table[m] = min_arc_cover_mask(m, deg, width) <= limit;
        }
    }
    return vm;
}

class Oracle {
public:
    Oracle(const RotationGraph& g, const OracleOptions& opt) : g_(g), dt_(g), opt_(opt) {
        const int n = g.num_vertices();
        if (!opt.angle_limit.empty() && static_cast<int>(opt.angle_limit.size()) != n)
            throw MalformedInput("angle limit list does not match the vertex count");
        if (opt.spec.a < 1 || opt.spec.m < 1) throw MalformedInput("cover parameters must be positive");
        std::map<std::tuple<int, int, int>, std::shared_ptr<VertexModel>> cache;
        model_.resize(n);
        for (int v = 0; v < n; ++v) {
            int deg = g.degree(v);
            int limit = opt.angle_limit.empty() ? opt.spec.a : opt.angle_limit[v];
            if (limit < 0) throw MalformedInput("negative angle limit");
            int width = std::min(opt.spec.m, std::max(deg, 1));
            auto key = std::make_tuple(deg, limit, width);
            auto& slot = cache[key];
            if (!slot) slot = build_model(deg, limit, width);
            model_[v] = slot;
            if (!slot->free && deg > 64)
                throw UnsupportedInput("exact search supports constrained vertices of degree at most 64");
        }
        assign_.assign(g.num_edges(), -1);
        banned_.assign(dt_.num_darts(), 0);
        mask_.assign(n, 0);
        umask_.assign(n, 0);
        absorb_.assign(n, 0);
        inq_.assign(n, 0);
        max_drops_ = opt.max_uncovered;
        budget_ = opt.budget;
    }

    // false: exhausted (NO) or out of budget, see out_of_budget()
    bool run() {
        open_ = 0;
        for (int e = 0; e < g_.num_edges(); ++e) {
            int du = 2 * e, dv = 2 * e + 1;
            if (model_[vert(du)]->free)
                assign_[e] = 0;
            else if (model_[vert(dv)]->free)
                assign_[e] = 1;
            else {
                ++open_;
                umask_[vert(du)] |= bit(du);
                umask_[vert(dv)] |= bit(dv);
            }
        }
        for (int e = 0; e < g_.num_edges(); ++e)
            if (assign_[e] >= 0) {
                int d = 2 * e + assign_[e];
                if (!model_[vert(d)]->free) mask_[vert(d)] |= bit(d);
            }
        for (int v = 0; v < g_.num_vertices(); ++v)
            if (!model_[v]->free) touch(v);
        return search();
    }

    bool out_of_budget() const { return out_of_budget_; }
    long long nodes() const { return nodes_; }

    OracleResult result() const {
        OracleResult r;
        r.nodes = nodes_;
        std::vector<std::vector<int>> slots(g_.num_vertices());
        for (int e = 0; e < g_.num_edges(); ++e) {
            if (assign_[e] == 2) {
                r.uncovered.push_back(e);
                continue;
            }
            Dart t = dt_.dart(2 * e + assign_[e]);
            slots[t.vertex].push_back(t.slot);
        }
        for (int v = 0; v < g_.num_vertices(); ++v) {
            if (slots[v].empty()) continue;
            const auto& vm = *model_[v];
            auto arcs = min_arc_cover(vm.deg, slots[v], vm.width);
            for (int s : arcs.starts) r.assignment.add({v, s, vm.width});
        }
        r.assignment.normalize();
        return r;
    }

private:
    enum Kind : unsigned char { k_assign, k_ban, k_mask, k_umask, k_absorb, k_sum, k_open, k_drops };
    struct Entry {
        Kind kind;
        int idx;
        std::uint64_t old;
    };

    int vert(int d) const { return dt_.dart(d).vertex; }
    std::uint64_t bit(int d) const { return 1ULL << dt_.dart(d).slot; }

    void touch(int v) {
        if (!inq_[v]) {
            inq_[v] = 1;
            queue_.push_back(v);
        }
    }

    void set_mask(int v, std::uint64_t x) {
        trail_.push_back({k_mask, v, mask_[v]});
        mask_[v] = x;
        touch(v);
    }
    void set_umask(int v, std::uint64_t x) {
        trail_.push_back({k_umask, v, umask_[v]});
        umask_[v] = x;
        touch(v);
    }

    bool assign_edge(int e, int choice) {
        trail_.push_back({k_assign, e, static_cast<std::uint64_t>(assign_[e] + 1)});
        assign_[e] = choice;
        trail_.push_back({k_open, 0, static_cast<std::uint64_t>(open_)});
        --open_;
        for (int d = 2 * e; d <= 2 * e + 1; ++d) {
            int v = vert(d);
            if (!banned_[d] && (umask_[v] & bit(d))) set_umask(v, umask_[v] & ~bit(d));
            else touch(v);
        }
        if (choice < 2) {
            int d = 2 * e + choice;
            set_mask(vert(d), mask_[vert(d)] | bit(d));
        } else {
            trail_.push_back({k_drops, 0, static_cast<std::uint64_t>(drops_)});
            if (++drops_ > max_drops_) return false;
        }
        return true;
    }

    // An open edge with both darts banned is dropped; false if that exceeds the drop limit.
    bool ban(int d) {
        if (banned_[d]) return true;
        trail_.push_back({k_ban, d, 0});
        banned_[d] = 1;
        int v = vert(d);
        if (umask_[v] & bit(d)) set_umask(v, umask_[v] & ~bit(d));
        touch(vert(d ^ 1));
        int e = d >> 1;
        if (assign_[e] == -1 && banned_[d ^ 1]) return assign_edge(e, 2);
        return true;
    }

    int compute_absorb(int v) const {
        std::uint64_t u = umask_[v];
        if (!u) return 0;
        const auto& vm = *model_[v];
        if (!vm.has_covers) return std::popcount(u);
        int best = 0;
        for (auto c : vm.covers)
            if ((c & mask_[v]) == mask_[v]) best = std::max(best, std::popcount(c & u));
        return best;
    }

    bool viable(int d) const {
        if (banned_[d]) return false;
        int v = vert(d);
        return model_[v]->feasible(mask_[v] | bit(d));
    }

    void clear_queue() {
        for (int v : queue_) inq_[v] = 0;
        queue_.clear();
    }

    bool propagate() {
        std::size_t head = 0;
        while (head < queue_.size()) {
            int v = queue_[head++];
            inq_[v] = 0;
            int a = compute_absorb(v);
            if (a != absorb_[v]) {
                trail_.push_back({k_absorb, v, static_cast<std::uint64_t>(absorb_[v])});
                trail_.push_back({k_sum, 0, static_cast<std::uint64_t>(sum_absorb_)});
                sum_absorb_ += a - absorb_[v];
                absorb_[v] = a;
            }
            std::uint64_t u = umask_[v];
            if (!u) continue;
            const auto& vm = *model_[v];
            if (vm.feasible(mask_[v] | u)) {
                for (std::uint64_t rest = u; rest; rest &= rest - 1) {
                    int d = dt_.at(v, std::countr_zero(rest));
                    int e = d >> 1;
                    if (assign_[e] != -1 || banned_[d]) continue;
                    if (!assign_edge(e, d & 1)) return fail();
                }
                continue;
            }
            for (std::uint64_t rest = u; rest; rest &= rest - 1) {
                int d = dt_.at(v, std::countr_zero(rest));
                int e = d >> 1;
                if (assign_[e] != -1) continue;
                bool ok0 = viable(2 * e), ok1 = viable(2 * e + 1);
                if (!ok0 && !ban(2 * e)) return fail();
                if (!ok1 && !ban(2 * e + 1)) return fail();
                if (assign_[e] == -1 && ok0 != ok1 && drops_ == max_drops_)
                    if (!assign_edge(e, ok0 ? 0 : 1)) return fail();
            }
        }
        clear_queue();
        return sum_absorb_ >= open_ - (max_drops_ - drops_);
    }

    bool fail() {
        clear_queue();
        return false;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            Entry t = trail_.back();
            trail_.pop_back();
            switch (t.kind) {
                case k_assign: assign_[t.idx] = static_cast<int>(t.old) - 1; break;
                case k_ban: banned_[t.idx] = 0; break;
                case k_mask: mask_[t.idx] = t.old; break;
                case k_umask: umask_[t.idx] = t.old; break;
                case k_absorb: absorb_[t.idx] = static_cast<int>(t.old); break;
                case k_sum: sum_absorb_ = static_cast<long long>(t.old); break;
                case k_open: open_ = static_cast<int>(t.old); break;
                case k_drops: drops_ = static_cast<int>(t.old); break;
            }
        }
    }

    // Distinct maximal sets of open slots v could still take, largest first.
    std::vector<std::uint64_t> candidates(int v) const {
        std::vector<std::uint64_t> all;
        for (auto c : model_[v]->covers)
            if ((c & mask_[v]) == mask_[v]) all.push_back(c & umask_[v]);
        std::sort(all.begin(), all.end(), [](std::uint64_t x, std::uint64_t y) {
            int px = std::popcount(x), py = std::popcount(y);
            return px != py ? px > py : x < y;
        });
        all.erase(std::unique(all.begin(), all.end()), all.end());
        std::vector<std::uint64_t> kept;
        for (auto i : all) {
            bool dominated = false;
            for (auto o : kept)
                if ((i & o) == i) {
                    dominated = true;
                    break;
                }
            if (!dominated) kept.push_back(i);
        }
        return kept;
    }

    bool search() {
        if (++nodes_ > budget_) {
            out_of_budget_ = true;
            clear_queue();
            return false;
        }
        if (!propagate()) return false;
        if (open_ == 0) return true;

        int best = -1;
        std::size_t best_k = SIZE_MAX;
        int best_open = -1;
        std::vector<std::uint64_t> best_cands;
        for (int v = 0; v < g_.num_vertices(); ++v) {
            if (!umask_[v]) continue;
            std::vector<std::uint64_t> c;
            std::size_t k = 2;
            if (model_[v]->has_covers) {
                c = candidates(v);
                k = c.size();
            }
            int o = std::popcount(umask_[v]);
            if (k < best_k || (k == best_k && o > best_open)) {
                best = v;
                best_k = k;
                best_open = o;
                best_cands = std::move(c);
                if (k <= 1) break;
            }
        }
        if (best < 0) return false;  // open edges whose darts are all banned are handled by propagate
        const int v = best;
        const std::size_t mark = trail_.size();
        if (model_[v]->has_covers) {
            for (auto take : best_cands) {
                bool ok = true;
                for (std::uint64_t rest = umask_[v]; rest && ok; rest &= rest - 1) {
                    int s = std::countr_zero(rest);
                    int d = dt_.at(v, s);
                    if (assign_[d >> 1] != -1) continue;
                    if (take & (1ULL << s))
                        ok = assign_edge(d >> 1, d & 1);
                    else
                        ok = ban(d);
                }
                if (ok && search()) return true;
                clear_queue();
                undo(mark);
                if (out_of_budget_) return false;
            }
            return false;
        }
        int d = dt_.at(v, std::countr_zero(umask_[v]));
        if (viable(d)) {
            if (assign_edge(d >> 1, d & 1) && search()) return true;
            clear_queue();
            undo(mark);
            if (out_of_budget_) return false;
        }
        if (ban(d) && search()) return true;
        clear_queue();
        undo(mark);
        return false;
    }

    const RotationGraph& g_;
    DartTable dt_;
    OracleOptions opt_;
    std::vector<std::shared_ptr<VertexModel>> model_;
    std::vector<int> assign_;
    std::vector<char> banned_;
    std::vector<std::uint64_t> mask_, umask_;
    std::vector<int> absorb_;
    long long sum_absorb_ = 0;
    int open_ = 0;
    int drops_ = 0;
    int max_drops_ = 0;
    std::vector<Entry> trail_;
    std::vector<int> queue_;
    std::vector<char> inq_;
    long long nodes_ = 0;
    long long budget_ = 0;
    bool out_of_budget_ = false;
};

}  // namespace

OracleResult oracle_search(const RotationGraph& g, const OracleOptions& opt) {
    Oracle o(g, opt);
    bool found = o.run();
    OracleResult r;
    if (found) {
        r = o.result();
        r.verdict = Verdict::yes;
    } else {
        r.verdict = o.out_of_budget() ? Verdict::indeterminate : Verdict::no;
        r.nodes = o.nodes();
    }
    return r;
}

Certificate oracle_solve(const RotationGraph& g, const CoverSpec& spec, long long budget) {
    OracleOptions opt;
    opt.spec = spec;
    opt.budget = budget;
    auto r = oracle_search(g, opt);
    Certificate c;
    c.verdict = r.verdict;
    c.nodes = r.nodes;
    if (r.verdict == Verdict::yes) {
        auto rep = check_cover(g, r.assignment, spec);
        if (!rep.valid) throw std::logic_error("oracle produced an invalid cover");
        c.assignment = std::move(r.assignment);
    }
    return c;
}

OracleResult oracle_max_cover(const RotationGraph& g, const CoverSpec& spec, long long budget) {
    OracleOptions opt;
    opt.spec = spec;
    long long used = 0;
    for (int k = 0; k <= g.num_edges(); ++k) {
        opt.max_uncovered = k;
        opt.budget = budget - used;
        auto r = oracle_search(g, opt);
        used += r.nodes;
        if (r.verdict == Verdict::yes) {
            r.nodes = used;
            return r;
        }
        if (r.verdict == Verdict::indeterminate || used >= budget) {
            OracleResult out;
            out.verdict = Verdict::indeterminate;
            out.nodes = used;
            return out;
        }
    }
    throw std::logic_error("leaving every edge uncovered is always feasible");
}

}  // namespace angleset
