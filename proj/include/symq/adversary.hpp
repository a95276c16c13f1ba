#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "symq/rational.hpp"
#include "symq/types.hpp"

namespace symq {

/// A relation R between two disjoint input sets, materialized explicitly.
struct InputRelation {
    std::vector<InputWord> side_a;
    std::vector<InputWord> side_b;
    std::vector<std::pair<int, int>> pairs;  // (index into side_a, index into side_b)
};

struct AdversaryBound {
    Frac alpha;     // max over related pairs and differing coordinates of q_X,i * q_Y,i
    double bound;   // 1 / sqrt(alpha)
};

/// Evaluates the adversary quantity exactly. q_X,i is the fraction of X's
/// partners that differ from X at coordinate i, and symmetrically for Y.
inline AdversaryBound adversary_bound(const InputRelation& rel) {
    if (rel.pairs.empty()) throw std::invalid_argument("adversary_bound: empty relation");
    if (rel.pairs.size() > 1000000) throw std::length_error("adversary_bound: relation exceeds pair budget");
    {
        std::set<std::vector<int>> a_words;
        for (const auto& w : rel.side_a) a_words.insert(w.entries);
        for (const auto& w : rel.side_b)
            if (a_words.count(w.entries))
                throw std::invalid_argument("adversary_bound: sides intersect");
    }
    const int n = rel.side_a.at(0).n();
    const size_t na = rel.side_a.size(), nb = rel.side_b.size();
    std::vector<long long> deg_a(na, 0), deg_b(nb, 0);
    std::vector<long long> diff_a(na * n, 0), diff_b(nb * n, 0);
    for (auto [ia, ib] : rel.pairs) {
        const auto& x = rel.side_a[ia].entries;
        const auto& y = rel.side_b[ib].entries;
        ++deg_a[ia];
        ++deg_b[ib];
        for (int i = 0; i < n; ++i) {
            if (x[i] != y[i]) {
                ++diff_a[ia * n + i];
                ++diff_b[ib * n + i];
            }
        }
    }
    for (size_t i = 0; i < na; ++i)
        if (deg_a[i] == 0) throw std::invalid_argument("adversary_bound: uncovered word on side A");
    for (size_t i = 0; i < nb; ++i)
        if (deg_b[i] == 0) throw std::invalid_argument("adversary_bound: uncovered word on side B");

    // alpha = max (c1*c2) / (d1*d2), tracked as an exact fraction.
    long long bn = 0, bd = 1;
    for (auto [ia, ib] : rel.pairs) {
        const auto& x = rel.side_a[ia].entries;
        const auto& y = rel.side_b[ib].entries;
        for (int i = 0; i < n; ++i) {
            if (x[i] == y[i]) continue;
            long long cn = diff_a[ia * n + i] * diff_b[ib * n + i];
            long long cd = deg_a[ia] * deg_b[ib];
            if (static_cast<__int128>(cn) * bd > static_cast<__int128>(bn) * cd) {
                bn = cn;
                bd = cd;
            }
        }
    }
    AdversaryBound out;
    out.alpha = Frac(bn, bd);
    out.bound = std::sqrt(static_cast<double>(out.alpha.den) / static_cast<double>(out.alpha.num));
    return out;
}

namespace detail {

inline void weight_words(int n, int k, std::vector<InputWord>& out) {
    // all binary words (symbols 1/2, 2 marks a one) with exactly k twos
    std::vector<int> w(n, 1);
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::fill(w.begin(), w.end(), 1);
        for (int i : idx) w[i] = 2;
        out.emplace_back(w, 2);
        int j = k - 1;
        while (j >= 0 && idx[j] == n - k + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
}

}  // namespace detail

/// The Hamming-weight relation: side A carries every weight-a word, side B
/// every weight-b word, and (X, Y) is related iff X is dominated by Y
/// coordinatewise.
inline InputRelation weight_relation(int n, int a, int b) {
    if (!(0 <= a && a < b && b <= n)) throw std::invalid_argument("weight_relation: need 0 <= a < b <= N");
    InputRelation rel;
    detail::weight_words(n, a, rel.side_a);
    detail::weight_words(n, b, rel.side_b);
    for (size_t ia = 0; ia < rel.side_a.size(); ++ia) {
        for (size_t ib = 0; ib < rel.side_b.size(); ++ib) {
            bool dom = true;
            for (int i = 0; i < n && dom; ++i)
                dom = rel.side_a[ia].entries[i] <= rel.side_b[ib].entries[i];
            if (dom) rel.pairs.emplace_back(static_cast<int>(ia), static_cast<int>(ib));
        }
    }
    if (rel.pairs.size() > 1000000) throw std::length_error("weight_relation: pair budget exceeded");
    return rel;
}

/// One chop move at the type level: rows `chopped_rows` of `prev` each lose
/// `chop_size`, which reappears as fresh rows. Words live over [m].
struct ChopInstance {
    TypeProfile prev;
    std::vector<int> chopped_rows;  // 0-based row indices into prev.parts
    long long chop_size = 0;
    int m = 0;

    int r() const { return static_cast<int>(chopped_rows.size()); }
    long long d() const { return chop_size * r(); }

    TypeProfile next() const {
        std::vector<int> parts(prev.parts);
        for (int i : chopped_rows) parts[i] -= static_cast<int>(chop_size);
        parts.insert(parts.end(), chopped_rows.size(), static_cast<int>(chop_size));
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        return TypeProfile(std::move(parts));
    }

    void validate() const {
        if (chopped_rows.empty()) throw std::invalid_argument("ChopInstance: no rows chopped");
        if (chop_size <= 0) throw std::invalid_argument("ChopInstance: chop size must be positive");
        std::set<int> seen;
        for (int i : chopped_rows) {
            if (i < 0 || i >= prev.size()) throw std::invalid_argument("ChopInstance: row index out of range");
            if (!seen.insert(i).second) throw std::invalid_argument("ChopInstance: duplicate chopped row");
            if (prev.parts[i] <= chop_size)
                throw std::invalid_argument("ChopInstance: chopped row must exceed the chop size");
        }
        if (2 * d() > prev.n()) throw std::invalid_argument("ChopInstance: requires d <= N/2");
        if (m < prev.size() + r())
            throw std::invalid_argument("ChopInstance: alphabet too small to host fresh symbols");
    }
};

namespace detail {

inline void k_subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) {
        out.push_back({});
        return;
    }
    if (k > n) return;
    while (true) {
        out.push_back(idx);
        int j = k - 1;
        while (j >= 0 && idx[j] == n - k + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
}

/// All words over [m] with the given type, by enumerating symbol choices per
/// row and distinct arrangements.
inline std::vector<InputWord> words_of_type(const TypeProfile& t, int m) {
    long long n = t.n();
    double est = std::pow(static_cast<double>(m), static_cast<double>(n));
    if (est > 2e7) throw std::length_error("words_of_type: enumeration budget exceeded");
    std::vector<InputWord> out;
    std::vector<int> w(static_cast<size_t>(n), 1);
    while (true) {
        InputWord word(w, m);
        if (type_of(word) == t) out.push_back(word);
        int i = static_cast<int>(n) - 1;
        while (i >= 0 && w[i] == m) {
            w[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

}  // namespace detail

/// Materializes the relation realizing one chop move: X of type prev maps to
/// Y of type next by changing exactly chop_size occurrences of each chopped
/// symbol to a fresh symbol and swapping the changed positions with an equal
/// number of untouched positions. Both sides range over all words of their
/// type on [m].
inline InputRelation chop_relation(const ChopInstance& inst, size_t pair_budget = 1000000) {
    inst.validate();
    const TypeProfile next = inst.next();
    const long long n = inst.prev.n();
    const int d = static_cast<int>(inst.d());
    const int chop = static_cast<int>(inst.chop_size);

    InputRelation rel;
    rel.side_a = detail::words_of_type(inst.prev, inst.m);
    std::map<std::vector<int>, int> b_index;
    std::set<std::pair<int, int>> pair_set;

    // chopped row lengths, grouped
    std::map<int, int> chop_len_count;  // length -> how many chopped rows of that length
    for (int i : inst.chopped_rows) ++chop_len_count[inst.prev.parts[i]];

    for (size_t ia = 0; ia < rel.side_a.size(); ++ia) {
        const InputWord& x = rel.side_a[ia];
        // symbol -> positions, grouped by multiplicity
        std::map<int, std::vector<int>> positions;
        for (int i = 0; i < n; ++i) positions[x.entries[i]].push_back(i);
        std::map<int, std::vector<int>> symbols_of_len;  // length -> symbols with that count
        for (auto& [sym, pos] : positions) symbols_of_len[static_cast<int>(pos.size())].push_back(sym);
        std::vector<int> unused;  // symbols absent from x, candidates for fresh values
        {
            std::set<int> present;
            for (int v : x.entries) present.insert(v);
            for (int s = 1; s <= inst.m; ++s)
                if (!present.count(s)) unused.push_back(s);
        }

        // enumerate per-length symbol subsets for the h-set
        std::vector<std::vector<std::vector<int>>> per_len_choices;
        bool feasible = true;
        for (auto& [len, cnt] : chop_len_count) {
            auto it = symbols_of_len.find(len);
            int avail = it == symbols_of_len.end() ? 0 : static_cast<int>(it->second.size());
            if (avail < cnt) {
                feasible = false;
                break;
            }
            std::vector<std::vector<int>> subsets;
            detail::k_subsets(avail, cnt, subsets);
            std::vector<std::vector<int>> choice;
            for (auto& su : subsets) {
                std::vector<int> syms;
                for (int j : su) syms.push_back(it->second[j]);
                choice.push_back(std::move(syms));
            }
            per_len_choices.push_back(std::move(choice));
        }
        if (!feasible) continue;  // cannot happen for words of the exact type; defensive for clarity

        // Cartesian product over lengths -> concrete h-sets
        std::vector<std::vector<int>> h_sets{{}};
        for (auto& choice : per_len_choices) {
            std::vector<std::vector<int>> grown;
            for (auto& base : h_sets)
                for (auto& syms : choice) {
                    auto h = base;
                    h.insert(h.end(), syms.begin(), syms.end());
                    grown.push_back(std::move(h));
                }
            h_sets = std::move(grown);
        }

        for (const auto& hs : h_sets) {
            // per chopped symbol: subsets of its positions of size chop
            std::vector<std::vector<std::vector<int>>> s_choices;
            for (int h : hs) {
                const auto& pos = positions[h];
                std::vector<std::vector<int>> subsets;
                detail::k_subsets(static_cast<int>(pos.size()), chop, subsets);
                std::vector<std::vector<int>> mapped;
                for (auto& su : subsets) {
                    std::vector<int> p;
                    for (int j : su) p.push_back(pos[j]);
                    mapped.push_back(std::move(p));
                }
                s_choices.push_back(std::move(mapped));
            }
            std::vector<std::vector<int>> s_sets{{}};
            for (auto& choice : s_choices) {
                std::vector<std::vector<int>> grown;
                for (auto& base : s_sets)
                    for (auto& p : choice) {
                        auto s = base;
                        s.insert(s.end(), p.begin(), p.end());
                        grown.push_back(std::move(s));
                    }
                s_sets = std::move(grown);
            }

            // fresh-symbol assignments: ordered r-tuples of distinct unused symbols
            std::vector<std::vector<int>> fresh_tuples;
            {
                std::vector<std::vector<int>> subsets;
                detail::k_subsets(static_cast<int>(unused.size()), static_cast<int>(hs.size()), subsets);
                for (auto& su : subsets) {
                    std::vector<int> tup;
                    for (int j : su) tup.push_back(unused[j]);
                    std::sort(tup.begin(), tup.end());
                    do {
                        fresh_tuples.push_back(tup);
                    } while (std::next_permutation(tup.begin(), tup.end()));
                }
            }

            for (const auto& s_set : s_sets) {
                // swap targets: d positions outside S
                std::vector<int> others;
                std::set<int> in_s(s_set.begin(), s_set.end());
                for (int i = 0; i < n; ++i)
                    if (!in_s.count(i)) others.push_back(i);
                std::vector<std::vector<int>> t_subsets;
                detail::k_subsets(static_cast<int>(others.size()), d, t_subsets);

                for (const auto& tsel : t_subsets) {
                    std::vector<int> t_set;
                    for (int j : tsel) t_set.push_back(others[j]);
                    std::sort(t_set.begin(), t_set.end());
                    std::vector<int> perm = t_set;
                    std::sort(perm.begin(), perm.end());
                    do {
                        for (const auto& fresh : fresh_tuples) {
                            std::vector<int> y = x.entries;
                            for (int k = 0; k < d; ++k) {
                                int s = s_set[k];
                                int t = perm[k];
                                // which chopped symbol does position s belong to?
                                int row = k / chop;
                                y[t] = fresh[row];
                                y[s] = x.entries[t];
                            }
                            InputWord yw(y, inst.m);
                            auto [it, inserted] = b_index.try_emplace(
                                y, static_cast<int>(rel.side_b.size()));
                            if (inserted) rel.side_b.push_back(yw);
                            pair_set.emplace(static_cast<int>(ia), it->second);
                            if (pair_set.size() > pair_budget)
                                throw std::length_error("chop_relation: pair budget exceeded");
                        }
                    } while (std::next_permutation(perm.begin(), perm.end()));
                }
            }
        }
    }
    rel.pairs.assign(pair_set.begin(), pair_set.end());
    if (rel.pairs.empty()) throw std::invalid_argument("chop_relation: relation came out empty");
    return rel;
}

/// Membership test for the chop relation, usable when full enumeration is
/// out of budget. Checks the count bookkeeping and positional feasibility of
/// the change-and-swap transformation.
inline bool chop_relation_contains(const ChopInstance& inst, const InputWord& x, const InputWord& y) {
    inst.validate();
    if (x.n() != y.n() || x.n() != inst.prev.n()) return false;
    if (type_of(x) != inst.prev || type_of(y) != inst.next()) return false;
    const int n = x.n();
    const int chop = static_cast<int>(inst.chop_size);

    std::map<int, int> cx, cy;
    for (int v : x.entries) ++cx[v];
    for (int v : y.entries) ++cy[v];

    // fresh symbols: in Y, not in X; must be exactly r of count chop
    std::vector<int> fresh;
    for (auto& [sym, c] : cy)
        if (!cx.count(sym)) {
            if (c != chop) return false;
            fresh.push_back(sym);
        }
    if (static_cast<int>(fresh.size()) != inst.r()) return false;

    // chopped symbols: count drops by exactly chop; everything else unchanged
    std::vector<int> hs;
    for (auto& [sym, c] : cx) {
        auto it = cy.find(sym);
        int c2 = it == cy.end() ? 0 : it->second;
        if (c2 == c) continue;
        if (c2 != c - chop) return false;
        hs.push_back(sym);
    }
    if (static_cast<int>(hs.size()) != inst.r()) return false;
    {
        std::multiset<int> want, got;
        for (int i : inst.chopped_rows) want.insert(inst.prev.parts[i]);
        for (int h : hs) got.insert(cx[h]);
        if (want != got) return false;
    }

    std::set<int> fresh_set(fresh.begin(), fresh.end());
    std::set<int> h_set(hs.begin(), hs.end());
    std::vector<int> t_pos, u_pos;
    for (int i = 0; i < n; ++i) {
        if (fresh_set.count(y.entries[i])) {
            t_pos.push_back(i);
        } else if (x.entries[i] != y.entries[i]) {
            if (!h_set.count(x.entries[i])) return false;
            u_pos.push_back(i);
        }
    }
    if (static_cast<long long>(t_pos.size()) != inst.d()) return false;

    // per chopped symbol: u_h <= chop and enough untouched h-positions
    std::map<int, int> u_count, t_on_h;
    for (int i : u_pos) ++u_count[x.entries[i]];
    for (int i : t_pos)
        if (h_set.count(x.entries[i])) ++t_on_h[x.entries[i]];
    std::multiset<int> need;  // values the swap must deliver
    for (int i : u_pos) need.insert(y.entries[i]);
    for (int h : hs) {
        int uh = u_count.count(h) ? u_count[h] : 0;
        if (uh > chop) return false;
        int extra = chop - uh;
        int th = t_on_h.count(h) ? t_on_h[h] : 0;
        int avail = cx[h] - th - uh;
        if (avail < extra) return false;
        for (int k = 0; k < extra; ++k) need.insert(h);
    }
    std::multiset<int> have;
    for (int i : t_pos) have.insert(x.entries[i]);
    return need == have;
}

/// Builds the Set Equality embedding word: each chopped row i(k) contributes
/// a_{i(k)} - chop copies of y_k and chop copies of z_k; each unchopped row
/// gets its own fresh symbol. Y and Z must be repeat-free and equal or
/// disjoint as sets.
inline InputWord embed_set_equality(const std::vector<int>& y, const std::vector<int>& z,
                                    const TypeProfile& prev, const std::vector<int>& chopped_rows,
                                    long long chop_size, const std::vector<int>& fresh) {
    const int r = static_cast<int>(chopped_rows.size());
    if (static_cast<int>(y.size()) != r || static_cast<int>(z.size()) != r)
        throw std::invalid_argument("embed_set_equality: Y and Z must list one symbol per chopped row");
    std::set<int> ys(y.begin(), y.end()), zs(z.begin(), z.end());
    if (static_cast<int>(ys.size()) != r || static_cast<int>(zs.size()) != r)
        throw std::invalid_argument("embed_set_equality: Y and Z must be repeat-free");
    bool equal = ys == zs;
    bool disjoint = true;
    for (int v : ys)
        if (zs.count(v)) disjoint = false;
    if (r > 0 && !equal && !disjoint)
        throw std::invalid_argument("embed_set_equality: Y and Z must be equal or disjoint as sets");

    std::set<int> chop_set(chopped_rows.begin(), chopped_rows.end());
    if (static_cast<int>(chop_set.size()) != r)
        throw std::invalid_argument("embed_set_equality: duplicate chopped row");
    for (int i : chopped_rows) {
        if (i < 0 || i >= prev.size()) throw std::invalid_argument("embed_set_equality: row out of range");
        if (prev.parts[i] <= chop_size)
            throw std::invalid_argument("embed_set_equality: chopped row must exceed the chop size");
    }
    int unchopped = prev.size() - r;
    if (static_cast<int>(fresh.size()) < unchopped)
        throw std::invalid_argument("embed_set_equality: need one fresh symbol per unchopped row");
    std::set<int> pool(fresh.begin(), fresh.end());
    if (static_cast<int>(pool.size()) != static_cast<int>(fresh.size()))
        throw std::invalid_argument("embed_set_equality: fresh pool has repeats");
    for (int v : pool)
        if (ys.count(v) || zs.count(v))
            throw std::invalid_argument("embed_set_equality: fresh pool collides with Y or Z");

    std::vector<int> entries;
    entries.reserve(static_cast<size_t>(prev.n()));
    int k = 0, f = 0;
    for (int row = 0; row < prev.size(); ++row) {
        if (chop_set.count(row)) {
            entries.insert(entries.end(), static_cast<size_t>(prev.parts[row] - chop_size), y[k]);
            entries.insert(entries.end(), static_cast<size_t>(chop_size), z[k]);
            ++k;
        } else {
            entries.insert(entries.end(), static_cast<size_t>(prev.parts[row]), fresh[f]);
            ++f;
        }
    }
    int m = 0;
    for (int v : entries) m = std::max(m, v);
    return InputWord(entries, m);
}

/// Relabels every word of a relation by the same symbol permutation;
/// the adversary quantities are invariant under this.
inline InputRelation relabel_relation(const InputRelation& rel, const std::vector<int>& perm, int m) {
    auto apply = [&](const InputWord& w) {
        std::vector<int> e;
        e.reserve(w.entries.size());
        for (int v : w.entries) e.push_back(perm.at(static_cast<size_t>(v - 1)));
        return InputWord(e, m);
    };
    InputRelation out;
    for (const auto& w : rel.side_a) out.side_a.push_back(apply(w));
    for (const auto& w : rel.side_b) out.side_b.push_back(apply(w));
    out.pairs = rel.pairs;
    return out;
}

}  // namespace symq
