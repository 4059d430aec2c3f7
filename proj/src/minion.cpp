#include "lohg/minion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lohg::minion {

namespace {

bool unique_max(const std::vector<int>& vals) {
    int best = 0, cnt = 0;
    for (int v : vals) {
        if (v > best) {
            best = v;
            cnt = 1;
        } else if (v == best) {
            ++cnt;
        }
    }
    return cnt == 1;
}

} // namespace

// ---------------------------------------------------------------------------
// templates, tuple functions
// ---------------------------------------------------------------------------

Template lo_template(int k, int r) {
    if (k < 1 || r < 2) throw std::invalid_argument("lo_template: k >= 1, r >= 2 required");
    Template t;
    t.domain_size = k;
    t.arity = r;
    std::vector<int> tup(r, 1);
    while (true) {
        if (unique_max(tup)) t.relation.push_back(tup);
        int i = r - 1;
        while (i >= 0 && tup[i] == k) tup[i--] = 1;
        if (i < 0) break;
        ++tup[i];
    }
    return t;
}

int TupleFunction::eval(const std::vector<int>& args) const {
    std::size_t idx = 0;
    for (int a : args) idx = idx * dom + (a - 1);
    return table[idx];
}

bool is_polymorphism(const TupleFunction& f, const Template& a, const Template& b) {
    if (a.arity != b.arity) throw std::invalid_argument("is_polymorphism: arity mismatch");
    if (f.dom != a.domain_size || f.cod > b.domain_size)
        throw std::invalid_argument("is_polymorphism: domain mismatch");
    const int r = a.arity;
    const std::size_t nt = a.relation.size();
    std::set<std::vector<int>> target(b.relation.begin(), b.relation.end());

    // odometer over p-tuples of relation tuples (the matrix columns)
    std::vector<std::size_t> pick(f.arity, 0);
    std::vector<int> args(f.arity), image(r);
    if (nt == 0) return true;
    while (true) {
        for (int row = 0; row < r; ++row) {
            for (int j = 0; j < f.arity; ++j) args[j] = a.relation[pick[j]][row];
            image[row] = f.eval(args);
        }
        if (!target.contains(image)) return false;
        int j = f.arity - 1;
        while (j >= 0 && pick[j] == nt - 1) pick[j--] = 0;
        if (j < 0) break;
        ++pick[j];
    }
    return true;
}

TupleFunction minor(const TupleFunction& f, const std::vector<int>& pi, int q) {
    if (static_cast<int>(pi.size()) != f.arity)
        throw std::invalid_argument("minor: pi size must equal arity");
    for (int v : pi)
        if (v < 1 || v > q) throw std::invalid_argument("minor: pi value out of range");
    TupleFunction g;
    g.dom = f.dom;
    g.cod = f.cod;
    g.arity = q;
    std::size_t size = 1;
    for (int i = 0; i < q; ++i) size *= f.dom;
    g.table.resize(size);
    std::vector<int> args(q, 1), inner(f.arity);
    for (std::size_t idx = 0; idx < size; ++idx) {
        std::size_t rest = idx;
        for (int i = q - 1; i >= 0; --i) {
            args[i] = static_cast<int>(rest % f.dom) + 1;
            rest /= f.dom;
        }
        for (int i = 0; i < f.arity; ++i) inner[i] = args[pi[i] - 1];
        g.table[idx] = f.eval(inner);
    }
    return g;
}

// ---------------------------------------------------------------------------
// set representation
// ---------------------------------------------------------------------------

namespace {

// set-partitions of [n] into at most rmax nonempty parts, canonical order
// (each part represented by a bitmask; parts ordered by minimum element)
std::vector<std::vector<std::uint32_t>> set_partitions(int n, int rmax) {
    std::vector<std::vector<std::uint32_t>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<std::uint32_t> parts;
    auto rec = [&](auto&& self, int elem) -> void {
        if (elem == n) {
            out.push_back(parts);
            return;
        }
        for (std::size_t j = 0; j < parts.size(); ++j) {
            parts[j] |= 1u << elem;
            self(self, elem + 1);
            parts[j] &= ~(1u << elem);
        }
        if (static_cast<int>(parts.size()) < rmax) {
            parts.push_back(1u << elem);
            self(self, elem + 1);
            parts.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// DFS order of subsets: by (size, lexicographic element sequence)
std::vector<std::uint32_t> subset_order(int n) {
    std::vector<std::uint32_t> order(std::size_t(1) << n);
    std::iota(order.begin(), order.end(), 0);
    auto elems = [n](std::uint32_t m) {
        std::vector<int> e;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1) e.push_back(i);
        return e;
    };
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        return elems(a) < elems(b);
    });
    return order;
}

struct PartitionCheck {
    std::vector<std::uint32_t> parts; // nonempty part masks
    int empties = 0;                  // number of implicit empty parts
};

bool partition_ok(const std::vector<std::uint8_t>& table, const PartitionCheck& pc) {
    int best = 0, cnt = 0;
    auto feed = [&](int v) {
        if (v > best) {
            best = v;
            cnt = 1;
        } else if (v == best) {
            ++cnt;
        }
    };
    for (std::uint32_t p : pc.parts) feed(table[p]);
    if (pc.empties > 0) {
        feed(table[0]);
        if (pc.empties > 1 && table[0] == best) cnt += pc.empties - 1;
    }
    return cnt == 1;
}

} // namespace

bool satisfies_partition_property(const SetPolymorphism& f, int r) {
    if (r < 2) throw std::invalid_argument("partition property needs r >= 2");
    auto parts = set_partitions(f.ground, std::min(r, std::max(f.ground, 1)));
    for (const auto& ps : parts) {
        PartitionCheck pc{ps, r - static_cast<int>(ps.size())};
        if (!partition_ok(f.table, pc)) return false;
    }
    return true;
}

SetPolymorphism minor(const SetPolymorphism& f, const std::vector<int>& pi, int q) {
    if (static_cast<int>(pi.size()) != f.ground)
        throw std::invalid_argument("minor: pi size must equal ground size");
    for (int v : pi)
        if (v < 1 || v > q) throw std::invalid_argument("minor: pi value out of range");
    SetPolymorphism g;
    g.ground = q;
    g.colours = f.colours;
    g.table.resize(std::size_t(1) << q);
    for (std::uint32_t s = 0; s < g.table.size(); ++s) {
        std::uint32_t pre = 0;
        for (int i = 0; i < f.ground; ++i)
            if (s >> (pi[i] - 1) & 1) pre |= 1u << i;
        g.table[s] = f.table[pre];
    }
    return g;
}

EnumResult enumerate_set_polymorphisms(int r, int k, int n, const Budget& budget) {
    if (r < 2 || k < 1 || n < 0)
        throw std::invalid_argument("enumerate_set_polymorphisms: r >= 2, k >= 1, n >= 0");
    EnumResult res;
    const std::size_t size = std::size_t(1) << n;
    const auto order = subset_order(n);
    std::vector<std::size_t> pos_of(size);
    for (std::size_t i = 0; i < size; ++i) pos_of[order[i]] = i;

    // partitions grouped by the DFS position of their last-assigned part
    std::vector<std::vector<PartitionCheck>> checks(size);
    for (const auto& ps : set_partitions(n, std::min(r, std::max(n, 1)))) {
        if (n == 0) break; // single empty partition handled below
        std::size_t last = 0;
        for (std::uint32_t p : ps) last = std::max(last, pos_of[p]);
        checks[last].push_back(PartitionCheck{ps, r - static_cast<int>(ps.size())});
    }
    if (n == 0) return res; // the all-empty partition never has a unique max

    std::vector<std::uint8_t> table(size, 0);
    auto dfs = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == size) {
            if (res.items.size() >= budget.max_items) return false;
            SetPolymorphism f;
            f.ground = n;
            f.colours = k;
            f.table = table;
            res.items.push_back(std::move(f));
            return true;
        }
        const std::uint32_t s = order[pos];
        for (int v = 1; v <= k; ++v) {
            if (++res.nodes > budget.max_nodes) return false;
            table[s] = static_cast<std::uint8_t>(v);
            bool ok = true;
            for (const auto& pc : checks[pos])
                if (!partition_ok(table, pc)) {
                    ok = false;
                    break;
                }
            if (ok && !self(self, pos + 1)) return false;
        }
        table[s] = 0;
        return true;
    };
    if (!dfs(dfs, 0)) res.status = Status::Budget;
    return res;
}

// ---------------------------------------------------------------------------
// free structure and homomorphism search
// ---------------------------------------------------------------------------

namespace {

// binary minor of f sending coordinate i (0-based) to the second argument
SetPolymorphism binary_minor(const SetPolymorphism& f, int i) {
    SetPolymorphism g;
    g.ground = 2;
    g.colours = f.colours;
    g.table.resize(4);
    const std::uint32_t full = (std::uint32_t(1) << f.ground) - 1;
    g.table[0] = f.table[0];
    g.table[1] = f.table[full & ~(1u << i)]; // {1}: every coordinate except i
    g.table[2] = f.table[1u << i];           // {2}: coordinate i
    g.table[3] = f.table[full];
    return g;
}

} // namespace

FreeResult free_structure_lo2(int r_src, int k, int r_rel, const Budget& budget) {
    FreeResult out;
    EnumResult bin = enumerate_set_polymorphisms(r_src, k, 2, budget);
    if (bin.status == Status::Budget) {
        out.status = Status::Budget;
        return out;
    }
    std::sort(bin.items.begin(), bin.items.end());
    std::map<std::vector<std::uint8_t>, int> index;
    for (std::size_t i = 0; i < bin.items.size(); ++i)
        index.emplace(bin.items[i].table, static_cast<int>(i));

    EnumResult high = enumerate_set_polymorphisms(r_src, k, r_rel, budget);
    out.enumerated = high.items.size();
    if (high.status == Status::Budget) {
        out.status = Status::Budget;
        return out;
    }

    std::set<std::vector<int>> tuples;
    for (const auto& f : high.items) {
        std::vector<int> tup(r_rel);
        for (int i = 0; i < r_rel; ++i) {
            auto it = index.find(binary_minor(f, i).table);
            if (it == index.end())
                throw std::logic_error("free_structure_lo2: minor not closed over the binary part");
            tup[i] = it->second;
        }
        tuples.insert(std::move(tup));
    }

    out.fs.arity = r_rel;
    out.fs.domain = std::move(bin.items);
    out.fs.relation.assign(tuples.begin(), tuples.end());
    return out;
}

HomResult find_homomorphism(std::size_t domain_size, const std::vector<std::vector<int>>& relation,
                            const Template& target, const Budget& budget) {
    HomResult res;
    const int t = target.domain_size;
    if (t > 31) throw std::invalid_argument("find_homomorphism: target domain too large");
    const std::uint32_t full = (t == 0) ? 0 : ((std::uint32_t(1) << t) - 1);

    // variable order: most relation occurrences first
    std::vector<std::size_t> occ(domain_size, 0);
    for (const auto& tup : relation)
        for (int x : tup) ++occ[x];
    std::vector<int> var_order(domain_size);
    std::iota(var_order.begin(), var_order.end(), 0);
    std::stable_sort(var_order.begin(), var_order.end(),
                     [&](int a, int b) { return occ[a] > occ[b]; });

    std::vector<std::vector<int>> tuples_of(domain_size); // element -> tuple ids
    for (std::size_t ti = 0; ti < relation.size(); ++ti)
        for (int x : relation[ti]) tuples_of[x].push_back(static_cast<int>(ti));
    for (auto& v : tuples_of) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    std::vector<int> assign(domain_size, 0); // 0 = unassigned, else value in [1, t]
    std::vector<std::uint32_t> cand(domain_size, full);
    std::vector<std::pair<int, std::uint32_t>> trail;

    // forward checking: rebuild the allowed value masks of every unassigned
    // slot of each tuple touching x from the target tuples compatible with
    // the current partial assignment
    auto propagate = [&](int x, std::size_t trail_mark) -> bool {
        (void)trail_mark;
        for (int ti : tuples_of[x]) {
            const auto& tup = relation[ti];
            std::vector<std::uint32_t> allowed(tup.size(), 0);
            for (const auto& tt : target.relation) {
                bool compatible = true;
                for (std::size_t j = 0; j < tup.size() && compatible; ++j)
                    if (assign[tup[j]] != 0 && assign[tup[j]] != tt[j]) compatible = false;
                if (!compatible) continue;
                for (std::size_t j = 0; j < tup.size(); ++j)
                    allowed[j] |= std::uint32_t(1) << (tt[j] - 1);
            }
            for (std::size_t j = 0; j < tup.size(); ++j) {
                const int e = tup[j];
                if (assign[e] != 0) {
                    if (!(allowed[j] >> (assign[e] - 1) & 1)) return false;
                    continue;
                }
                const std::uint32_t next = cand[e] & allowed[j];
                if (next != cand[e]) {
                    trail.emplace_back(e, cand[e]);
                    cand[e] = next;
                }
                if (next == 0) return false;
            }
        }
        return true;
    };

    auto dfs = [&](auto&& self, std::size_t pos) -> int {
        if (pos == domain_size) return 1;
        const int x = var_order[pos];
        std::uint32_t options = cand[x];
        while (options) {
            const int v = __builtin_ctz(options) + 1;
            options &= options - 1;
            if (++res.nodes > budget.max_nodes) return -1;
            const std::size_t mark = trail.size();
            assign[x] = v;
            if (propagate(x, mark)) {
                const int sub = self(self, pos + 1);
                if (sub != 0) return sub;
            }
            assign[x] = 0;
            while (trail.size() > mark) {
                cand[trail.back().first] = trail.back().second;
                trail.pop_back();
            }
        }
        return 0;
    };

    const int outcome = dfs(dfs, 0);
    if (outcome == 1) {
        res.status = HomStatus::Found;
        res.map.assign(assign.begin(), assign.end());
    } else if (outcome == -1) {
        res.status = HomStatus::Budget;
    } else {
        res.status = HomStatus::None;
    }
    return res;
}

HomResult find_homomorphism(const FreeStructure& s, const Template& target, const Budget& budget) {
    if (s.arity != target.arity) throw std::invalid_argument("find_homomorphism: arity mismatch");
    return find_homomorphism(s.domain.size(), s.relation, target, budget);
}

HomResult find_homomorphism(const Template& s, const Template& target, const Budget& budget) {
    if (s.arity != target.arity) throw std::invalid_argument("find_homomorphism: arity mismatch");
    std::vector<std::vector<int>> rel;
    rel.reserve(s.relation.size());
    for (const auto& tup : s.relation) {
        std::vector<int> zero_based(tup.size());
        for (std::size_t i = 0; i < tup.size(); ++i) zero_based[i] = tup[i] - 1;
        rel.push_back(std::move(zero_based));
    }
    return find_homomorphism(s.domain_size, rel, target, budget);
}

// ---------------------------------------------------------------------------
// minion homomorphism existence
// ---------------------------------------------------------------------------

namespace {

// direct search over omega assignments; intentionally plain (natural index
// order, no forward checking) so it is an independent route to the same
// answer as the free-structure homomorphism search
struct OmegaSearch {
    int k;
    std::size_t domain;
    const std::vector<std::vector<int>>& constraints;
    std::vector<std::vector<int>> by_last;
    std::vector<int> omega;
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes;

    OmegaSearch(int kk, std::size_t dom, const std::vector<std::vector<int>>& cons,
                std::uint64_t cap)
        : k(kk), domain(dom), constraints(cons), by_last(dom), omega(dom, 0), max_nodes(cap) {
        for (std::size_t i = 0; i < cons.size(); ++i) {
            int last = 0;
            for (int x : cons[i]) last = std::max(last, x);
            by_last[last].push_back(static_cast<int>(i));
        }
    }

    // 1 found, 0 exhausted, -1 budget
    int run(std::size_t pos) {
        if (pos == domain) return 1;
        std::vector<int> vals;
        for (int v = 1; v <= k; ++v) {
            if (++nodes > max_nodes) return -1;
            omega[pos] = v;
            bool ok = true;
            for (int ci : by_last[pos]) {
                vals.clear();
                for (int x : constraints[ci]) vals.push_back(omega[x]);
                if (!unique_max(vals)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                const int sub = run(pos + 1);
                if (sub != 0) return sub;
            }
        }
        omega[pos] = 0;
        return 0;
    }
};

} // namespace

MinionHomResult check_minion_hom_lo(int r_src, int r_dst, int k, const Budget& budget) {
    if (r_src < 2 || r_dst < 2 || k < 2)
        throw std::invalid_argument("check_minion_hom_lo: r_src, r_dst >= 2 and k >= 2 required");
    MinionHomResult res;

    FreeResult fr = free_structure_lo2(r_src, k, r_dst, budget);
    if (fr.status == Status::Budget) return res; // Budget

    res.domain_size = fr.fs.domain.size();
    res.constraints = fr.fs.relation.size();

    HomResult hom = find_homomorphism(fr.fs, lo_template(k, r_dst), budget);
    if (hom.status == HomStatus::Budget) return res;
    res.nodes = hom.nodes;

    // independent route: plain omega search over the same condition
    OmegaSearch direct(k, fr.fs.domain.size(), fr.fs.relation, budget.max_nodes);
    const int direct_outcome = direct.run(0);
    if (direct_outcome != -1) {
        const bool agree = (direct_outcome == 1) == (hom.status == HomStatus::Found);
        if (!agree)
            throw std::logic_error("check_minion_hom_lo: omega search and free-structure "
                                   "homomorphism search disagree");
        res.cross_checked = true;
    }

    if (hom.status == HomStatus::Found) {
        res.status = MinionHomStatus::Exists;
        res.omega = hom.map;
    } else {
        res.status = MinionHomStatus::NotExists;
    }
    return res;
}

// ---------------------------------------------------------------------------
// co-colourings
// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<int, int>> clique_edges(int m) {
    std::vector<std::pair<int, int>> e;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) e.emplace_back(a, b);
    return e;
}

bool disjoint(const std::pair<int, int>& a, const std::pair<int, int>& b) {
    return a.first != b.first && a.first != b.second && a.second != b.first &&
           a.second != b.second;
}

} // namespace

bool verify_co_colouring(const CoColouring& c) {
    if (c.p != 2 && c.p != 3) return false;
    const auto edges = clique_edges(c.m);
    if (c.edge_colour.size() != edges.size()) return false;
    std::set<int> used(c.edge_colour.begin(), c.edge_colour.end());
    if (static_cast<int>(used.size()) > c.k) return false;
    const std::size_t ne = edges.size();
    for (std::size_t i = 0; i < ne; ++i)
        for (std::size_t j = i + 1; j < ne; ++j) {
            if (c.edge_colour[i] != c.edge_colour[j] || !disjoint(edges[i], edges[j])) continue;
            if (c.p == 2) return false;
            for (std::size_t l = j + 1; l < ne; ++l)
                if (c.edge_colour[l] == c.edge_colour[i] && disjoint(edges[i], edges[l]) &&
                    disjoint(edges[j], edges[l]))
                    return false;
        }
    return true;
}

CoColResult co_colouring_search(int m, int k, int p, const Budget& budget) {
    if (p != 2 && p != 3) throw std::invalid_argument("co_colouring_search: p must be 2 or 3");
    if (m < 2 || k < 1) throw std::invalid_argument("co_colouring_search: m >= 2, k >= 1");
    CoColResult res;
    const auto edges = clique_edges(m);
    const std::size_t ne = edges.size();

    // search order: greedily front-load edges disjoint from many predecessors
    // so contradictions surface early
    std::vector<int> order;
    {
        std::vector<char> placed(ne, 0);
        for (std::size_t step = 0; step < ne; ++step) {
            int best = -1, best_d = -1;
            for (std::size_t i = 0; i < ne; ++i) {
                if (placed[i]) continue;
                int d = 0;
                for (int j : order)
                    if (disjoint(edges[i], edges[j])) ++d;
                if (d > best_d) {
                    best = static_cast<int>(i);
                    best_d = d;
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
    }

    std::vector<int> colour(ne, 0);
    std::vector<std::vector<int>> classes(k + 1); // colour -> edge ids, in search order

    auto admissible = [&](int ei, int c) {
        if (p == 2) {
            for (int j : classes[c])
                if (disjoint(edges[ei], edges[j])) return false;
            return true;
        }
        const auto& cls = classes[c];
        for (std::size_t x = 0; x < cls.size(); ++x) {
            if (!disjoint(edges[ei], edges[cls[x]])) continue;
            for (std::size_t y = x + 1; y < cls.size(); ++y)
                if (disjoint(edges[ei], edges[cls[y]]) && disjoint(edges[cls[x]], edges[cls[y]]))
                    return false;
        }
        return true;
    };

    // canonical colour order: colour c may be introduced only after c-1
    auto dfs = [&](auto&& self, std::size_t pos, int used) -> int {
        if (pos == ne) return 1;
        const int ei = order[pos];
        const int top = std::min(used + 1, k);
        for (int c = 1; c <= top; ++c) {
            if (++res.nodes > budget.max_nodes) return -1;
            if (!admissible(ei, c)) continue;
            colour[ei] = c;
            classes[c].push_back(ei);
            const int sub = self(self, pos + 1, std::max(used, c));
            classes[c].pop_back();
            if (sub != 0) return sub;
            colour[ei] = 0;
        }
        return 0;
    };

    const int outcome = dfs(dfs, 0, 0);
    if (outcome == 1) {
        res.status = CoColStatus::Found;
        CoColouring table;
        table.m = m;
        table.k = k;
        table.p = p;
        table.edge_colour = colour;
        if (!verify_co_colouring(table))
            throw std::logic_error("co_colouring_search: found table failed verification");
        res.table = std::move(table);
    } else if (outcome == -1) {
        res.status = CoColStatus::Budget;
    } else {
        res.status = CoColStatus::None;
    }
    return res;
}

CoColouring max_xy3_cocolouring(int k) {
    CoColouring c;
    c.m = k + 2;
    c.k = k;
    c.p = 2;
    for (const auto& [x, y] : clique_edges(c.m)) c.edge_colour.push_back(std::max({x, y, 3}));
    return c;
}

// ---------------------------------------------------------------------------
// explicit certifications
// ---------------------------------------------------------------------------

SetPolymorphism impossible_witness_table(int k, int variant) {
    if (k < 3) throw std::invalid_argument("impossible_witness_table: k >= 3 required");
    if (variant != 1 && variant != 2)
        throw std::invalid_argument("impossible_witness_table: variant must be 1 or 2");
    const int ground = (variant == 1) ? k + 1 : k;
    SetPolymorphism f;
    f.ground = ground;
    f.colours = k;
    f.table.resize(std::size_t(1) << ground);
    for (std::uint32_t s = 0; s < f.table.size(); ++s) {
        const int size = __builtin_popcount(s);
        int val;
        if (size == 0) {
            val = (variant == 1) ? 1 : 2;
        } else if (size == 1) {
            val = 1;
        } else if (size >= ground - 1) {
            val = k; // co-singletons and the full set
        } else {
            val = 0;
            for (int x = 1; x <= ground; ++x)
                if (s >> (x - 1) & 1)
                    val = std::max(val, (variant == 1) ? std::max(2, x - 1) : std::max(3, x));
        }
        f.table[s] = static_cast<std::uint8_t>(val);
    }
    return f;
}

bool verify_impossible_witness(int k, int variant) {
    const SetPolymorphism f = impossible_witness_table(k, variant);
    const int r_membership = (variant == 1) ? k : k + 1;
    if (!satisfies_partition_property(f, r_membership)) return false;
    const SetPolymorphism first = binary_minor(f, 0);
    for (int i = 1; i < f.ground; ++i)
        if (!(binary_minor(f, i) == first)) return false;
    return true;
}

RestrictionReport verify_restriction_hom(int l, int k, int r, int max_arity,
                                         std::uint64_t candidate_budget) {
    if (l < 2 || k <= l || r < 3 || max_arity < 1)
        throw std::invalid_argument("verify_restriction_hom: need l >= 2, k > l, r >= 3");
    RestrictionReport rep;

    const Template big_a = lo_template(l + 1, r);
    const Template big_b = lo_template(k + 1, r);
    const Template small_a = lo_template(l, r);
    const Template small_b = lo_template(k, r);

    // enumerate Pol(LO_{l+1}^r, LO_{k+1}^r) by brute filtering at each arity;
    // column combinations are precomputed as table-index tuples so the inner
    // loop is a plain unique-max scan
    std::vector<std::vector<TupleFunction>> pol(max_arity + 1);
    std::vector<std::set<std::vector<int>>> pol_tables(max_arity + 1);
    for (int p = 1; p <= max_arity; ++p) {
        std::size_t entries = 1;
        for (int i = 0; i < p; ++i) entries *= (l + 1);
        double candidates = std::pow(static_cast<double>(k + 1), static_cast<double>(entries));
        if (candidates > static_cast<double>(candidate_budget)) {
            rep.status = Status::Budget;
            return rep;
        }

        std::vector<std::size_t> combo_idx; // |R|^p combos, r indices each
        {
            const std::size_t nt = big_a.relation.size();
            std::vector<std::size_t> pick(p, 0);
            while (true) {
                for (int row = 0; row < r; ++row) {
                    std::size_t idx = 0;
                    for (int j = 0; j < p; ++j)
                        idx = idx * (l + 1) + (big_a.relation[pick[j]][row] - 1);
                    combo_idx.push_back(idx);
                }
                int j = p - 1;
                while (j >= 0 && pick[j] == nt - 1) pick[j--] = 0;
                if (j < 0) break;
                ++pick[j];
            }
        }

        TupleFunction f;
        f.dom = l + 1;
        f.cod = k + 1;
        f.arity = p;
        f.table.assign(entries, 1);
        while (true) {
            bool ok = true;
            for (std::size_t c = 0; c < combo_idx.size() && ok; c += r) {
                int best = 0, cnt = 0;
                for (int row = 0; row < r; ++row) {
                    const int v = f.table[combo_idx[c + row]];
                    if (v > best) {
                        best = v;
                        cnt = 1;
                    } else if (v == best) {
                        ++cnt;
                    }
                }
                if (cnt != 1) ok = false;
            }
            if (ok) {
                pol[p].push_back(f);
                pol_tables[p].insert(f.table);
            }
            std::size_t i = entries;
            while (i > 0 && f.table[i - 1] == k + 1) f.table[--i] = 1;
            if (i == 0) break;
            ++f.table[i - 1];
        }
        rep.checked_functions += pol[p].size();
    }

    auto restrict_fn = [&](const TupleFunction& f) -> std::optional<TupleFunction> {
        TupleFunction g;
        g.dom = l;
        g.cod = k;
        g.arity = f.arity;
        std::size_t entries = 1;
        for (int i = 0; i < f.arity; ++i) entries *= l;
        g.table.resize(entries);
        std::vector<int> args(f.arity, 1);
        for (std::size_t idx = 0; idx < entries; ++idx) {
            std::size_t rest = idx;
            for (int i = f.arity - 1; i >= 0; --i) {
                args[i] = static_cast<int>(rest % l) + 1;
                rest /= l;
            }
            const int v = f.eval(args);
            if (v > k) return std::nullopt; // restriction must land in [k]
            g.table[idx] = v;
        }
        return g;
    };

    for (int p = 1; p <= max_arity; ++p) {
        for (const TupleFunction& f : pol[p]) {
            // monotone step: f(a_1..a_p) < f(a_1+1, ..., a_p+1) on [l]^p
            std::vector<int> args(p, 1);
            std::size_t entries = 1;
            for (int i = 0; i < p; ++i) entries *= l;
            for (std::size_t idx = 0; idx < entries; ++idx) {
                std::size_t rest = idx;
                for (int i = p - 1; i >= 0; --i) {
                    args[i] = static_cast<int>(rest % l) + 1;
                    rest /= l;
                }
                std::vector<int> up(args);
                for (int& a : up) ++a;
                if (!(f.eval(args) < f.eval(up))) return rep; // holds stays false
            }

            auto g = restrict_fn(f);
            if (!g || !is_polymorphism(*g, small_a, small_b)) return rep;

            // minors commute with restriction, and stay inside the minion
            for (int q = 1; q <= max_arity; ++q) {
                std::vector<int> pi(p, 1);
                while (true) {
                    const TupleFunction fp = minor(f, pi, q);
                    if (!pol_tables[q].contains(fp.table)) return rep; // closure
                    auto gp = restrict_fn(fp);
                    const TupleFunction grp = minor(*g, pi, q);
                    if (!gp || !(gp->table == grp.table)) return rep;
                    ++rep.checked_minors;
                    int i = p;
                    while (i > 0 && pi[i - 1] == q) pi[--i] = 1;
                    if (i == 0) break;
                    ++pi[i - 1];
                }
            }
        }
    }
    rep.holds = true;
    return rep;
}

SelectorReport selector_check(int r, int k, int max_n, const Budget& budget) {
    if (r < max_n + 2)
        throw std::invalid_argument("selector_check: requires r >= max_n + 2");
    SelectorReport rep;
    for (int n = 1; n <= max_n; ++n) {
        EnumResult en = enumerate_set_polymorphisms(r, k, n, budget);
        if (en.status == Status::Budget) {
            rep.status = Status::Budget;
            return rep;
        }
        const auto partitions = set_partitions(n, n);
        for (const auto& f : en.items) {
            // (a) singleton values have a unique maximum
            int best = 0, cnt = 0, argmax = -1;
            for (int i = 0; i < n; ++i) {
                const int v = f.table[std::uint32_t(1) << i];
                if (v > best) {
                    best = v;
                    cnt = 1;
                    argmax = i;
                } else if (v == best) {
                    ++cnt;
                }
            }
            if (cnt != 1) return rep; // holds stays false

            // (b) whenever a partition's unique maximum value matches, the
            // argmax singleton's element lies inside the argmax part
            for (const auto& ps : partitions) {
                int pbest = 0, pcnt = 0;
                std::uint32_t pargmax = 0;
                for (std::uint32_t part : ps) {
                    const int v = f.table[part];
                    if (v > pbest) {
                        pbest = v;
                        pcnt = 1;
                        pargmax = part;
                    } else if (v == pbest) {
                        ++pcnt;
                    }
                }
                if (pcnt != 1) return rep;
                if (pbest == best && !(pargmax >> argmax & 1)) return rep;
            }
            ++rep.checked_functions;
        }
    }
    rep.holds = true;
    return rep;
}

} // namespace lohg::minion
