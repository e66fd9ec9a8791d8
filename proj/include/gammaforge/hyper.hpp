#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "gammaforge/core.hpp"
#include "gammaforge/gamma_cat.hpp"
#include "gammaforge/gamma_set.hpp"

namespace gammaforge {

// ---------------------------------------------------------------------------
// Binary hyper-operation tables.
// ---------------------------------------------------------------------------

/// A commutative, weakly unital binary hyper-operation: element 0 sits at
/// index 0 and 0 ⊕ x = {x}. table[a][b] is the sorted set of possible sums.
/// `unit`, when set, marks a multiplicative unit for display purposes only.
struct HyperOpTable {
    std::vector<std::string> labels;
    std::vector<std::vector<std::vector<int>>> table;
    std::optional<int> unit;

    int size() const { return static_cast<int>(labels.size()); }

    const std::vector<int>& sum(int a, int b) const {
        return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

    ValidationReport validate() const {
        ValidationReport rep;
        const int k = size();
        if (k == 0) rep.add("hyperop: empty carrier");
        if (static_cast<int>(table.size()) != k) rep.add("hyperop: bad table shape");
        for (const auto& row : table)
            if (static_cast<int>(row.size()) != k) rep.add("hyperop: ragged table");
        if (!rep.ok()) return rep;
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                const auto& s = sum(a, b);
                if (!std::is_sorted(s.begin(), s.end()) ||
                    std::adjacent_find(s.begin(), s.end()) != s.end())
                    rep.add("hyperop: entry (" + labels[static_cast<std::size_t>(a)] + "," +
                            labels[static_cast<std::size_t>(b)] + ") not a sorted set");
                for (int v : s)
                    if (v < 0 || v >= k)
                        rep.add("hyperop: entry out of range");
                if (s != sum(b, a))
                    rep.add("hyperop: not commutative at (" + labels[static_cast<std::size_t>(a)] +
                            "," + labels[static_cast<std::size_t>(b)] + ")");
            }
        for (int a = 0; a < k; ++a)
            if (sum(0, a) != std::vector<int>{a})
                rep.add("hyperop: weak unit law fails at " + labels[static_cast<std::size_t>(a)]);
        return rep;
    }
};

/// The Krasner hyperfield 𝕂 = {0,1}: 1 ⊕ 1 = {0,1}.
inline HyperOpTable krasner() {
    HyperOpTable t;
    t.labels = {"0", "1"};
    t.table = {{{0}, {1}}, {{1}, {0, 1}}};
    t.unit = 1;
    return t;
}

/// The sign hyperfield {0,1,-1}: 1 ⊕ -1 = {-1,0,1}, like signs of reals.
inline HyperOpTable sign_hyperfield() {
    HyperOpTable t;
    t.labels = {"0", "1", "-1"};
    t.table = {{{0}, {1}, {2}},
               {{1}, {1}, {0, 1, 2}},
               {{2}, {0, 1, 2}, {2}}};
    t.unit = 1;
    return t;
}

/// The hyperfield with one element 𝔽 = {0,1}: 1 ⊕ 1 = ∅.
inline HyperOpTable f_one_hyperfield() {
    HyperOpTable t;
    t.labels = {"0", "1"};
    t.table = {{{0}, {1}}, {{1}, {}}};
    t.unit = 1;
    return t;
}

// ---------------------------------------------------------------------------
// n-ary sums in Γ-sets.
// ---------------------------------------------------------------------------

/// Result of an n-ary sum query: the value set plus every element of X(n₊)
/// exhibiting one of the values.
struct SumResult {
    struct Exhibit {
        int element;  // index in X(n₊)
        int value;    // its image under s_n, an index in X(1₊)
    };
    std::vector<int> values;  // sorted, duplicate-free
    std::vector<Exhibit> exhibits;
};

/// ⊕ a_i: enumerate the z ∈ X(n₊) with X(p_{i,n})(z) = a_i for every i and
/// collect X(s_n)(z). Arity 0 yields {basepoint}, arity 1 yields {a}.
inline SumResult nary_sum(const TruncatedGammaSet& X, std::span<const int> tuple) {
    const int n = static_cast<int>(tuple.size());
    if (n > X.max_level())
        throw truncation_error("nary_sum: arity " + std::to_string(n) +
                               " exceeds max_level " + std::to_string(X.max_level()));
    for (int a : tuple)
        if (a < 0 || a >= X.level_size(1))
            throw validation_error("nary_sum: argument index out of range");
    std::vector<const std::vector<int>*> proj;
    proj.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) proj.push_back(&X.action_table(projection(i, n)));
    const auto& sum_tab = X.action_table(sum_morphism(n));
    SumResult res;
    std::set<int> vals;
    for (int z = 0; z < X.level_size(n); ++z) {
        bool match = true;
        for (int i = 0; i < n && match; ++i)
            match = (*proj[static_cast<std::size_t>(i)])[static_cast<std::size_t>(z)] == tuple[static_cast<std::size_t>(i)];
        if (!match) continue;
        const int v = sum_tab[static_cast<std::size_t>(z)];
        res.exhibits.push_back({z, v});
        vals.insert(v);
    }
    res.values.assign(vals.begin(), vals.end());
    return res;
}

inline SumResult nary_sum(const TruncatedGammaSet& X, std::initializer_list<int> tuple) {
    return nary_sum(X, std::span<const int>(tuple.begin(), tuple.size()));
}

/// ⊕ A_i over subsets: the union of n-ary sums over all choices, computed by
/// filtering X(n₊) on membership instead of expanding the product.
inline std::vector<int> subset_sum(const TruncatedGammaSet& X,
                                   const std::vector<std::vector<int>>& family) {
    const int n = static_cast<int>(family.size());
    if (n > X.max_level())
        throw truncation_error("subset_sum: arity " + std::to_string(n) +
                               " exceeds max_level " + std::to_string(X.max_level()));
    for (const auto& A : family) {
        if (A.empty()) return {};
        for (int a : A)
            if (a < 0 || a >= X.level_size(1))
                throw validation_error("subset_sum: element index out of range");
    }
    std::vector<std::set<int>> sets;
    sets.reserve(family.size());
    for (const auto& A : family) sets.emplace_back(A.begin(), A.end());
    std::vector<const std::vector<int>*> proj;
    for (int i = 1; i <= n; ++i) proj.push_back(&X.action_table(projection(i, n)));
    const auto& sum_tab = X.action_table(sum_morphism(n));
    std::set<int> vals;
    for (int z = 0; z < X.level_size(n); ++z) {
        bool match = true;
        for (int i = 0; i < n && match; ++i)
            match = sets[static_cast<std::size_t>(i)].count(
                        (*proj[static_cast<std::size_t>(i)])[static_cast<std::size_t>(z)]) > 0;
        if (match) vals.insert(sum_tab[static_cast<std::size_t>(z)]);
    }
    return {vals.begin(), vals.end()};
}

// ---------------------------------------------------------------------------
// Parenthesization shapes and iterated binary sums.
// ---------------------------------------------------------------------------

/// A binary parenthesization of positions 1..n, e.g. ((1,2),3).
struct ParenTree {
    int leaf = 0;  // 1-based position when a leaf
    std::shared_ptr<const ParenTree> left, right;

    static ParenTree make_leaf(int position) { return ParenTree{position, nullptr, nullptr}; }

    static ParenTree node(ParenTree l, ParenTree r) {
        ParenTree t;
        t.left = std::make_shared<ParenTree>(std::move(l));
        t.right = std::make_shared<ParenTree>(std::move(r));
        return t;
    }

    bool is_leaf() const { return !left; }

    int width() const { return is_leaf() ? 1 : left->width() + right->width(); }

    std::string to_string() const {
        if (is_leaf()) return std::to_string(leaf);
        return "(" + left->to_string() + "," + right->to_string() + ")";
    }
};

/// All binary parenthesizations of the consecutive positions lo..hi.
inline std::vector<ParenTree> all_parenthesizations(int lo, int hi) {
    std::vector<ParenTree> out;
    if (lo == hi) {
        out.push_back(ParenTree::make_leaf(lo));
        return out;
    }
    for (int split = lo; split < hi; ++split)
        for (const auto& l : all_parenthesizations(lo, split))
            for (const auto& r : all_parenthesizations(split + 1, hi))
                out.push_back(ParenTree::node(l, r));
    return out;
}

inline std::vector<ParenTree> all_parenthesizations(int n) {
    return all_parenthesizations(1, n);
}

/// Right-nested shape (1,(2,(...,(n-1,n)))).
inline ParenTree right_nested(int n) {
    ParenTree t = ParenTree::make_leaf(n);
    for (int i = n - 1; i >= 1; --i) t = ParenTree::node(ParenTree::make_leaf(i), t);
    return t;
}

/// Left-nested shape (((1,2),3),...,n).
inline ParenTree left_nested(int n) {
    ParenTree t = ParenTree::make_leaf(1);
    for (int i = 2; i <= n; ++i) t = ParenTree::node(t, ParenTree::make_leaf(i));
    return t;
}

/// Fold binary subset sums over a parenthesization shape.
inline std::vector<int> iterated_binary(const TruncatedGammaSet& X,
                                        std::span<const int> tuple, const ParenTree& shape) {
    if (X.max_level() < 2 && shape.width() > 1)
        throw truncation_error("iterated_binary: needs max_level >= 2");
    if (shape.width() != static_cast<int>(tuple.size()))
        throw validation_error("iterated_binary: shape width != tuple arity");
    std::function<std::vector<int>(const ParenTree&)> eval =
        [&](const ParenTree& t) -> std::vector<int> {
        if (t.is_leaf()) {
            if (t.leaf < 1 || t.leaf > static_cast<int>(tuple.size()))
                throw validation_error("iterated_binary: leaf position out of range");
            return {tuple[static_cast<std::size_t>(t.leaf - 1)]};
        }
        return subset_sum(X, {eval(*t.left), eval(*t.right)});
    };
    return eval(shape);
}

inline std::vector<int> iterated_binary(const TruncatedGammaSet& X,
                                        std::initializer_list<int> tuple,
                                        const ParenTree& shape) {
    return iterated_binary(X, std::span<const int>(tuple.begin(), tuple.size()), shape);
}

// ---------------------------------------------------------------------------
// Generalized associativity.
// ---------------------------------------------------------------------------

struct AssocCheckResult {
    std::vector<int> lhs;  // the n-ary sum
    std::vector<int> rhs;  // the partition-refined sum
    bool inclusion = false;
    bool equality = false;
};

/// Compare ⊕ a_i with the partitioned sum ⊕_j (⊕_{i∈I_j} a_i). The inclusion
/// lhs ⊆ rhs must hold in every valid Γ-set; equality can fail.
inline AssocCheckResult check_generalized_associativity(
    const TruncatedGammaSet& X, std::span<const int> tuple,
    const std::vector<std::vector<int>>& partition) {
    const int n = static_cast<int>(tuple.size());
    partition_morphism(partition);  // validates blocks against n below
    {
        int covered = 0;
        for (const auto& b : partition) covered += static_cast<int>(b.size());
        if (covered != n)
            throw validation_error("check_generalized_associativity: partition does not cover the tuple");
    }
    AssocCheckResult res;
    res.lhs = nary_sum(X, tuple).values;
    std::vector<std::vector<int>> blocks;
    blocks.reserve(partition.size());
    for (const auto& I : partition) {
        std::vector<int> sub;
        sub.reserve(I.size());
        for (int i : I) sub.push_back(tuple[static_cast<std::size_t>(i - 1)]);
        blocks.push_back(nary_sum(X, sub).values);
    }
    res.rhs = subset_sum(X, blocks);
    res.inclusion = std::includes(res.rhs.begin(), res.rhs.end(), res.lhs.begin(), res.lhs.end());
    res.equality = res.lhs == res.rhs;
    return res;
}

inline AssocCheckResult check_generalized_associativity(
    const TruncatedGammaSet& X, std::initializer_list<int> tuple,
    const std::vector<std::vector<int>>& partition) {
    return check_generalized_associativity(X, std::span<const int>(tuple.begin(), tuple.size()),
                                           partition);
}

/// All partitions of {1..n} into ordered blocks (blocks ordered by least
/// element; within blocks, ascending). Bell(n) many.
inline std::vector<std::vector<std::vector<int>>> all_partitions(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> current;
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            out.push_back(current);
            return;
        }
        for (auto& block : current) {
            block.push_back(i);
            rec(i + 1);
            block.pop_back();
        }
        current.push_back({i});
        rec(i + 1);
        current.pop_back();
    };
    rec(1);
    return out;
}

// ---------------------------------------------------------------------------
// Derived n-ary operation of a table, and the plasma embedding.
// ---------------------------------------------------------------------------

/// n-ary operation derived from a binary table: the union over all binary
/// parenthesizations of the fold. Arity 0 gives {0}, arity 1 gives {a}.
inline std::vector<int> nary_table_sum(const HyperOpTable& T, std::span<const int> tuple) {
    if (tuple.empty()) return {0};
    auto fold = [&](const ParenTree& shape) {
        std::function<std::vector<int>(const ParenTree&)> eval =
            [&](const ParenTree& t) -> std::vector<int> {
            if (t.is_leaf()) return {tuple[static_cast<std::size_t>(t.leaf - 1)]};
            std::set<int> acc;
            for (int a : eval(*t.left))
                for (int b : eval(*t.right))
                    for (int v : T.sum(a, b)) acc.insert(v);
            return {acc.begin(), acc.end()};
        };
        return eval(shape);
    };
    std::set<int> acc;
    for (const auto& shape : all_parenthesizations(static_cast<int>(tuple.size())))
        for (int v : fold(shape)) acc.insert(v);
    return {acc.begin(), acc.end()};
}

namespace detail {

/// Level-n carrier of the plasma embedding: assignments x of elements to the
/// subsets of [n] (as bitmasks) with x[∅] = 0 and x[S∪T] ∈ x[S] ⊕ x[T] for
/// every disjoint pair. Enumerated in lexicographic order of the tuple, so
/// the all-zero assignment (the basepoint) comes first.
inline std::vector<std::vector<int>> plasma_level(const HyperOpTable& T, int n) {
    const int masks = 1 << n;
    std::vector<std::vector<int>> out;
    std::vector<int> x(static_cast<std::size_t>(masks), 0);
    std::function<void(int)> rec = [&](int mask) {
        if (mask == masks) {
            out.push_back(x);
            return;
        }
        if (mask == 0) {  // x[∅] pinned to 0
            rec(mask + 1);
            return;
        }
        if ((mask & (mask - 1)) == 0) {  // singletons are free
            for (int v = 0; v < T.size(); ++v) {
                x[static_cast<std::size_t>(mask)] = v;
                rec(mask + 1);
            }
            x[static_cast<std::size_t>(mask)] = 0;
            return;
        }
        std::set<int> allowed;
        bool first = true;
        for (int s = (mask - 1) & mask; s > 0; s = (s - 1) & mask) {
            const int t = mask ^ s;
            if (s > t) continue;  // each unordered split once
            const auto& opts = T.sum(x[static_cast<std::size_t>(s)], x[static_cast<std::size_t>(t)]);
            if (first) {
                allowed.insert(opts.begin(), opts.end());
                first = false;
            } else {
                std::set<int> keep;
                for (int v : opts)
                    if (allowed.count(v)) keep.insert(v);
                allowed.swap(keep);
            }
            if (allowed.empty()) return;
        }
        for (int v : allowed) {
            x[static_cast<std::size_t>(mask)] = v;
            rec(mask + 1);
        }
        x[static_cast<std::size_t>(mask)] = 0;
    };
    rec(0);
    return out;
}

inline std::string plasma_label(const std::vector<int>& tuple,
                                const std::vector<std::string>& labels) {
    if (tuple.size() == 1) return "()";
    if (tuple.size() == 2) return labels[static_cast<std::size_t>(tuple[1])];
    std::string s = "(";
    for (std::size_t mask = 1; mask < tuple.size(); ++mask) {
        if (mask > 1) s += ',';
        s += labels[static_cast<std::size_t>(tuple[mask])];
    }
    s += ')';
    return s;
}

}  // namespace detail

/// Embed a weakly unital commutative hyper-operation into Γ-sets: level n is
/// the set of disjointly-compatible subset assignments and morphisms act by
/// preimage, (x_S) ↦ (x_{f⁻¹(T)}). Binary sums of the result reproduce the
/// input table on level-1 elements.
inline GammaSetPtr plasma_embedding(const HyperOpTable& T, int N,
                                    std::size_t guard = kDefaultGuard) {
    if (auto rep = T.validate(); !rep.ok())
        throw validation_error("plasma_embedding: invalid table:\n" + rep.to_string());
    {
        // Candidate tuples at the top level: |T|^(2^N - 1).
        std::size_t bound = 1;
        for (int i = 0; i < (1 << N) - 1; ++i) {
            bound *= static_cast<std::size_t>(T.size());
            if (bound > guard)
                throw guard_exceeded("plasma_embedding: level " + std::to_string(N) +
                                     " candidate count exceeds guard");
        }
    }
    std::vector<std::vector<std::vector<int>>> tuples;  // per level
    std::vector<std::map<std::vector<int>, int>> index;  // tuple → element index
    std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        tuples.push_back(detail::plasma_level(T, n));
        std::map<std::vector<int>, int> ix;
        for (std::size_t i = 0; i < tuples.back().size(); ++i)
            ix[tuples.back()[i]] = static_cast<int>(i);
        index.push_back(std::move(ix));
        for (const auto& t : tuples.back())
            levels[static_cast<std::size_t>(n)].push_back(detail::plasma_label(t, T.labels));
    }
    auto act = [tuples, index](const GammaMorphism& f, int e) {
        const auto& x = tuples[static_cast<std::size_t>(f.source())][static_cast<std::size_t>(e)];
        const int m = f.target();
        std::vector<int> y(static_cast<std::size_t>(1 << m), 0);
        for (int tmask = 1; tmask < (1 << m); ++tmask) {
            int pre = 0;
            for (int i = 1; i <= f.source(); ++i) {
                const int j = f.apply(i);
                if (j != 0 && (tmask >> (j - 1)) & 1) pre |= 1 << (i - 1);
            }
            y[static_cast<std::size_t>(tmask)] = x[static_cast<std::size_t>(pre)];
        }
        auto it = index[static_cast<std::size_t>(m)].find(y);
        if (it == index[static_cast<std::size_t>(m)].end())
            throw validation_error("plasma_embedding: preimage tuple escapes the level (internal)");
        return it->second;
    };
    return TruncatedGammaSet::build("Plasma(" + std::to_string(T.size()) + "elt)", N,
                                    std::move(levels), act);
}

// ---------------------------------------------------------------------------
// Pointed additive maps and the Γ-map they induce into an EM object.
// ---------------------------------------------------------------------------

/// A binary-sum triple witnessing that g is not additive: c ∈ a ⊕ b but
/// g(c) ≠ g(a) + g(b).
struct AdditivityViolation {
    int a, b, c;
};

/// Check conditions (pointed, additive) for g: X(1₊) → M given as target
/// element positions. Returns the first violating triple, if any.
inline std::optional<AdditivityViolation> check_pointed_additive(
    const TruncatedGammaSet& X, const CommMonoid& M, const std::vector<int>& g) {
    if (static_cast<int>(g.size()) != X.level_size(1))
        throw validation_error("check_pointed_additive: assignment length mismatch");
    for (int v : g)
        if (v < 0 || v >= M.size())
            throw validation_error("check_pointed_additive: image out of range");
    if (g[0] != 0) return AdditivityViolation{0, 0, 0};
    for (int a = 0; a < X.level_size(1); ++a)
        for (int b = a; b < X.level_size(1); ++b) {
            const int gagb = M.add(g[static_cast<std::size_t>(a)], g[static_cast<std::size_t>(b)]);
            for (int c : nary_sum(X, {a, b}).values)
                if (g[static_cast<std::size_t>(c)] != gagb)
                    return AdditivityViolation{a, b, c};
        }
    return std::nullopt;
}

/// Extend a pointed additive map g: X(1₊) → M to the Γ-map X → HM with
/// components x ↦ (g(X(p_1)x), ..., g(X(p_n)x)). `target` must be
/// eilenberg_maclane(M, X.max_level()). Throws naming a violating triple
/// when g is not additive.
inline GammaMap gamma_map_from_level1(const std::vector<int>& g, const GammaSetPtr& X,
                                      const GammaSetPtr& target, const CommMonoid& M) {
    if (auto bad = check_pointed_additive(*X, M, g)) {
        std::ostringstream os;
        os << "gamma_map_from_level1: not additive: c=" << X->label(1, bad->c) << " in "
           << X->label(1, bad->a) << " (+) " << X->label(1, bad->b)
           << " but g(c) != g(a)+g(b)";
        throw validation_error(os.str());
    }
    if (target->max_level() != X->max_level())
        throw validation_error("gamma_map_from_level1: truncation mismatch");
    GammaMap phi;
    phi.source = X;
    phi.target = target;
    for (int n = 0; n <= X->max_level(); ++n) {
        std::vector<int> comp(static_cast<std::size_t>(X->level_size(n)));
        for (int e = 0; e < X->level_size(n); ++e) {
            std::vector<int> digits(static_cast<std::size_t>(n));
            for (int i = 1; i <= n; ++i)
                digits[static_cast<std::size_t>(i - 1)] =
                    g[static_cast<std::size_t>(X->apply(projection(i, n), e))];
            comp[static_cast<std::size_t>(e)] = detail::em_index(digits, M.size());
        }
        phi.components.push_back(std::move(comp));
    }
    return phi;
}

}  // namespace gammaforge
