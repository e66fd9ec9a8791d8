#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gammaforge/core.hpp"
#include "gammaforge/gamma_cat.hpp"

namespace gammaforge {

// ---------------------------------------------------------------------------
// Finite additive commutative monoids (the inputs of H and of hom targets).
// ---------------------------------------------------------------------------

/// A finite commutative monoid written additively. The identity element sits
/// at index 0. The operation table is indexed by element positions.
struct CommMonoid {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table;

    int size() const { return static_cast<int>(labels.size()); }

    int add(int a, int b) const {
        return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

    int index_of(const std::string& label) const {
        for (int i = 0; i < size(); ++i)
            if (labels[static_cast<std::size_t>(i)] == label) return i;
        throw validation_error("CommMonoid: no element labeled '" + label + "'");
    }

    ValidationReport validate() const {
        ValidationReport rep;
        const int k = size();
        if (k == 0) rep.add("monoid: empty element set");
        if (static_cast<int>(table.size()) != k) rep.add("monoid: table row count != size");
        for (const auto& row : table)
            if (static_cast<int>(row.size()) != k) rep.add("monoid: ragged table row");
        if (!rep.ok()) return rep;
        {
            std::set<std::string> seen(labels.begin(), labels.end());
            if (static_cast<int>(seen.size()) != k) rep.add("monoid: duplicate labels");
        }
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                int v = add(a, b);
                if (v < 0 || v >= k) {
                    rep.add("monoid: table entry out of range");
                    return rep;
                }
            }
        for (int a = 0; a < k; ++a) {
            if (add(0, a) != a || add(a, 0) != a)
                rep.add("monoid: element 0 is not a unit at " + labels[static_cast<std::size_t>(a)]);
        }
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                if (add(a, b) != add(b, a))
                    rep.add("monoid: not commutative at (" + labels[static_cast<std::size_t>(a)] +
                            "," + labels[static_cast<std::size_t>(b)] + ")");
                for (int c = 0; c < k; ++c)
                    if (add(add(a, b), c) != add(a, add(b, c)))
                        rep.add("monoid: not associative at (" + labels[static_cast<std::size_t>(a)] +
                                "," + labels[static_cast<std::size_t>(b)] + "," +
                                labels[static_cast<std::size_t>(c)] + ")");
            }
        return rep;
    }

    /// True iff every element has an additive inverse.
    bool is_group() const {
        for (int a = 0; a < size(); ++a) {
            bool inv = false;
            for (int b = 0; b < size(); ++b)
                if (add(a, b) == 0) { inv = true; break; }
            if (!inv) return false;
        }
        return true;
    }

    /// Additive inverse; requires is_group().
    int neg(int a) const {
        for (int b = 0; b < size(); ++b)
            if (add(a, b) == 0) return b;
        throw validation_error("CommMonoid::neg: element '" +
                               labels[static_cast<std::size_t>(a)] + "' has no inverse");
    }

    /// n·a for n ∈ ℤ (negative n needs a group).
    int scale(long long n, int a) const {
        int x = a;
        if (n < 0) { x = neg(a); n = -n; }
        int acc = 0;
        for (long long i = 0; i < n; ++i) acc = add(acc, x);
        return acc;
    }

    static CommMonoid zmod(int k) {
        if (k < 1) throw validation_error("zmod: modulus must be >= 1");
        CommMonoid m;
        for (int i = 0; i < k; ++i) m.labels.push_back(std::to_string(i));
        m.table.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) m.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % k;
        return m;
    }

    static CommMonoid direct_sum(const CommMonoid& x, const CommMonoid& y) {
        CommMonoid m;
        const int kx = x.size(), ky = y.size();
        for (int a = 0; a < kx; ++a)
            for (int b = 0; b < ky; ++b)
                m.labels.push_back("(" + x.labels[static_cast<std::size_t>(a)] + "," +
                                   y.labels[static_cast<std::size_t>(b)] + ")");
        const int k = kx * ky;
        m.table.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                int ax = a / ky, ay = a % ky, bx = b / ky, by = b % ky;
                m.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    x.add(ax, bx) * ky + y.add(ay, by);
            }
        return m;
    }

    /// {0,1} with 1+1 = 1.
    static CommMonoid boolean() {
        return CommMonoid{{"0", "1"}, {{0, 1}, {1, 1}}};
    }

    /// {0,1,2} with 1+1 = 1+2 = 2+2 = 2.
    static CommMonoid saturating() {
        return CommMonoid{{"0", "1", "2"}, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}};
    }
};

// ---------------------------------------------------------------------------
// Level-truncated Γ-sets.
// ---------------------------------------------------------------------------

class TruncatedGammaSet;
using GammaSetPtr = std::shared_ptr<const TruncatedGammaSet>;

/// A Γ-set with fully materialized levels 0..N and action tables for every
/// morphism between those levels. Immutable after construction.
///
/// Elements are addressed by (level, index); index 0 is the basepoint at
/// every level. Labels are per-level display names; equality of elements is
/// index equality within a level.
class TruncatedGammaSet {
public:
    /// Materialize a Γ-set from an element-wise action rule. `act(f, e)` must
    /// return the index in levels[f.target] of the image of element e of
    /// levels[f.source]. Structural sanity (basepoints, identity) is checked
    /// here; run validate() for the full functoriality sweep.
    static GammaSetPtr build(std::string name, int max_level,
                             std::vector<std::vector<std::string>> levels,
                             const std::function<int(const GammaMorphism&, int)>& act) {
        if (max_level < 2)
            throw validation_error("TruncatedGammaSet: max_level must be >= 2");
        if (static_cast<int>(levels.size()) != max_level + 1)
            throw validation_error("TruncatedGammaSet: need levels 0.." +
                                   std::to_string(max_level));
        if (levels[0].size() != 1)
            throw validation_error("TruncatedGammaSet: level 0 must be the basepoint singleton");
        auto X = std::make_shared<TruncatedGammaSet>(Private{});
        X->name_ = std::move(name);
        X->max_level_ = max_level;
        X->levels_ = std::move(levels);
        X->action_.resize(static_cast<std::size_t>(max_level) + 1);
        for (int n = 0; n <= max_level; ++n) {
            X->action_[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(max_level) + 1);
            const int sz = X->level_size(n);
            for (int m = 0; m <= max_level; ++m) {
                auto& slot = X->action_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
                slot.resize(hom_count(n, m));
                for (const auto& f : enumerate_homs(n, m)) {
                    std::vector<int> row(static_cast<std::size_t>(sz));
                    for (int e = 0; e < sz; ++e) {
                        int img = act(f, e);
                        if (img < 0 || img >= X->level_size(m))
                            throw validation_error("TruncatedGammaSet: action image out of range for " +
                                                   f.encode());
                        row[static_cast<std::size_t>(e)] = img;
                    }
                    if (row[0] != 0)
                        throw validation_error("TruncatedGammaSet: action of " + f.encode() +
                                               " does not preserve the basepoint");
                    slot[f.lex_index()] = std::move(row);
                }
            }
        }
        for (int n = 0; n <= max_level; ++n) {
            const auto& idrow = X->action_table(GammaMorphism::identity(n));
            for (int e = 0; e < X->level_size(n); ++e)
                if (idrow[static_cast<std::size_t>(e)] != e)
                    throw validation_error("TruncatedGammaSet: identity acts nontrivially at level " +
                                           std::to_string(n));
        }
        return X;
    }

    /// Build directly from prevalidated tables (JSON loader path). Performs
    /// the same structural checks as build().
    static GammaSetPtr from_tables(std::string name, int max_level,
                                   std::vector<std::vector<std::string>> levels,
                                   const std::map<std::string, std::vector<int>>& tables) {
        auto lookup = [&](const GammaMorphism& f, int e) -> int {
            auto it = tables.find(f.encode());
            if (it == tables.end())
                throw validation_error("TruncatedGammaSet: missing action for " + f.encode());
            const auto& row = it->second;
            if (e < 0 || e >= static_cast<int>(row.size()))
                throw validation_error("TruncatedGammaSet: action row for " + f.encode() +
                                       " has wrong length");
            return row[static_cast<std::size_t>(e)];
        };
        return build(std::move(name), max_level, std::move(levels), lookup);
    }

    int max_level() const { return max_level_; }
    const std::string& name() const { return name_; }

    int level_size(int n) const {
        return static_cast<int>(levels_[static_cast<std::size_t>(n)].size());
    }

    const std::vector<std::string>& labels(int n) const {
        return levels_[static_cast<std::size_t>(n)];
    }

    const std::string& label(int n, int e) const {
        return levels_[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)];
    }

    int index_of(int n, const std::string& label) const {
        const auto& lv = levels_[static_cast<std::size_t>(n)];
        for (std::size_t i = 0; i < lv.size(); ++i)
            if (lv[i] == label) return static_cast<int>(i);
        throw validation_error("level " + std::to_string(n) + " has no element '" + label + "'");
    }

    const std::vector<int>& action_table(const GammaMorphism& f) const {
        if (f.source() > max_level_ || f.target() > max_level_)
            throw truncation_error("action of " + f.encode() + " above max_level " +
                                   std::to_string(max_level_));
        return action_[static_cast<std::size_t>(f.source())][static_cast<std::size_t>(f.target())]
                      [f.lex_index()];
    }

    int apply(const GammaMorphism& f, int element) const {
        return action_table(f)[static_cast<std::size_t>(element)];
    }

    /// Full functoriality sweep: identity, basepoint preservation and
    /// action(g∘f) = action(g)∘action(f) over every composable pair within
    /// the truncation. Empty report iff this is a valid truncated Γ-set.
    ValidationReport validate() const {
        ValidationReport rep;
        for (int n = 0; n <= max_level_; ++n) {
            std::set<std::string> seen;
            for (const auto& l : labels(n))
                if (!seen.insert(l).second)
                    rep.add("level " + std::to_string(n) + ": duplicate label '" + l + "'");
        }
        constexpr std::size_t kMaxListed = 25;
        auto note = [&](std::string v) {
            if (rep.violations.size() < kMaxListed) rep.add(std::move(v));
        };
        for (int n = 0; n <= max_level_; ++n) {
            for (const auto& f : enumerate_homs(n, n)) {
                if (!f.is_identity()) continue;
                for (int e = 0; e < level_size(n); ++e)
                    if (apply(f, e) != e)
                        note("identity law fails at level " + std::to_string(n) +
                             " element " + label(n, e));
            }
            for (int m = 0; m <= max_level_; ++m)
                for (const auto& f : enumerate_homs(n, m)) {
                    if (apply(f, 0) != 0)
                        note("basepoint not preserved by " + f.encode());
                    for (int k = 0; k <= max_level_; ++k)
                        for (const auto& g : enumerate_homs(m, k)) {
                            const GammaMorphism gf = compose(f, g);
                            const auto& direct = action_table(gf);
                            const auto& left = action_table(f);
                            const auto& right = action_table(g);
                            for (int e = 0; e < level_size(n); ++e)
                                if (direct[static_cast<std::size_t>(e)] !=
                                    right[static_cast<std::size_t>(left[static_cast<std::size_t>(e)])])
                                    note("composition law fails: " + g.encode() + " after " +
                                         f.encode() + " at element " + label(n, e));
                        }
                }
        }
        return rep;
    }

    /// For tests: a copy with one action entry overwritten. The result is
    /// usually not functorial; that is the point.
    GammaSetPtr corrupted(const GammaMorphism& f, int element, int new_image) const {
        auto X = std::make_shared<TruncatedGammaSet>(Private{});
        *X = *this;
        X->name_ = name_ + "/corrupted";
        X->action_[static_cast<std::size_t>(f.source())][static_cast<std::size_t>(f.target())]
                  [f.lex_index()][static_cast<std::size_t>(element)] = new_image;
        return X;
    }

    struct Private {};
    explicit TruncatedGammaSet(Private) {}

private:
    std::string name_;
    int max_level_ = 0;
    std::vector<std::vector<std::string>> levels_;
    // action_[n][m][lex_index(f)][element] = image element index.
    std::vector<std::vector<std::vector<std::vector<int>>>> action_;
};

inline ValidationReport validate_functoriality(const TruncatedGammaSet& X) {
    return X.validate();
}

// ---------------------------------------------------------------------------
// Constructions: H, 𝕊, 𝔽₁, collapse quotients.
// ---------------------------------------------------------------------------

namespace detail {

/// Decode an Eilenberg-MacLane level index into the tuple of monoid element
/// positions (big-endian digits base |M|).
inline std::vector<int> em_digits(int index, int arity, int base) {
    std::vector<int> d(static_cast<std::size_t>(arity));
    for (int i = arity - 1; i >= 0; --i) {
        d[static_cast<std::size_t>(i)] = index % base;
        index /= base;
    }
    return d;
}

inline int em_index(const std::vector<int>& digits, int base) {
    int idx = 0;
    for (int v : digits) idx = idx * base + v;
    return idx;
}

inline std::string tuple_label(const std::vector<int>& digits,
                               const std::vector<std::string>& labels) {
    std::string s = "(";
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) s += ',';
        s += labels[static_cast<std::size_t>(digits[i])];
    }
    s += ')';
    return s;
}

}  // namespace detail

/// HM truncated at N: level n is M^n with the fiberwise-sum action.
inline GammaSetPtr eilenberg_maclane(const CommMonoid& M, int N,
                                     std::size_t guard = kDefaultGuard) {
    if (auto rep = M.validate(); !rep.ok())
        throw validation_error("eilenberg_maclane: invalid monoid:\n" + rep.to_string());
    const int k = M.size();
    std::size_t top = 1;
    for (int i = 0; i < N; ++i) {
        top *= static_cast<std::size_t>(k);
        if (top > guard)
            throw guard_exceeded("eilenberg_maclane: |M|^" + std::to_string(N) +
                                 " exceeds guard");
    }
    std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(N) + 1);
    levels[0] = {"()"};
    for (int n = 1; n <= N; ++n) {
        int sz = 1;
        for (int i = 0; i < n; ++i) sz *= k;
        levels[static_cast<std::size_t>(n)].reserve(static_cast<std::size_t>(sz));
        for (int e = 0; e < sz; ++e) {
            auto d = detail::em_digits(e, n, k);
            levels[static_cast<std::size_t>(n)].push_back(
                n == 1 ? M.labels[static_cast<std::size_t>(d[0])] : detail::tuple_label(d, M.labels));
        }
    }
    auto act = [&M, k](const GammaMorphism& f, int e) {
        const auto in = detail::em_digits(e, f.source(), k);
        std::vector<int> out(static_cast<std::size_t>(f.target()), 0);
        for (int i = 1; i <= f.source(); ++i) {
            int j = f.apply(i);
            if (j != 0)
                out[static_cast<std::size_t>(j - 1)] =
                    M.add(out[static_cast<std::size_t>(j - 1)], in[static_cast<std::size_t>(i - 1)]);
        }
        return detail::em_index(out, k);
    };
    return TruncatedGammaSet::build("H(" + std::to_string(k) + "elt)", N, std::move(levels), act);
}

/// 𝕊Y truncated at N: level n is Y ∧ n₊, realized as the basepoint plus the
/// pairs (y, i) with y non-basepoint and 1 ≤ i ≤ n. The action is id ∧ f.
/// `pointed_labels[0]` is the basepoint of Y.
inline GammaSetPtr spherical(const std::vector<std::string>& pointed_labels, int N) {
    if (pointed_labels.empty())
        throw validation_error("spherical: pointed set must contain a basepoint");
    {
        std::set<std::string> seen(pointed_labels.begin(), pointed_labels.end());
        if (seen.size() != pointed_labels.size())
            throw validation_error("spherical: duplicate labels");
    }
    const int ny = static_cast<int>(pointed_labels.size()) - 1;  // non-basepoint count
    std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(N) + 1);
    levels[0] = {pointed_labels[0]};
    for (int n = 1; n <= N; ++n) {
        auto& lv = levels[static_cast<std::size_t>(n)];
        lv.push_back(pointed_labels[0]);
        for (int i = 1; i <= n; ++i)
            for (int y = 1; y <= ny; ++y)
                lv.push_back(n == 1 ? pointed_labels[static_cast<std::size_t>(y)]
                                    : "(" + pointed_labels[static_cast<std::size_t>(y)] + "," +
                                          std::to_string(i) + ")");
    }
    auto act = [ny](const GammaMorphism& f, int e) {
        if (e == 0) return 0;
        const int i = 1 + (e - 1) / ny;
        const int y = 1 + (e - 1) % ny;
        const int j = f.apply(i);
        return j == 0 ? 0 : 1 + (j - 1) * ny + (y - 1);
    };
    return TruncatedGammaSet::build("S(" + std::to_string(ny + 1) + "elt)", N,
                                    std::move(levels), act);
}

/// 𝔽₁ = 𝕊{0,1}: level n is n₊ itself and morphisms act by application.
inline GammaSetPtr f1(int N) {
    std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        for (int e = 0; e <= n; ++e)
            levels[static_cast<std::size_t>(n)].push_back(std::to_string(e));
    auto act = [](const GammaMorphism& f, int e) { return f.apply(e); };
    return TruncatedGammaSet::build("F1", N, std::move(levels), act);
}

/// A levelwise selection of elements of a Γ-set, intended to be a sub-Γ-set.
/// members[n] is a sorted list of element indices of level n.
struct SubGammaSet {
    std::vector<std::vector<int>> members;

    bool contains(int n, int e) const {
        const auto& v = members[static_cast<std::size_t>(n)];
        return std::binary_search(v.begin(), v.end(), e);
    }
};

/// The selection containing only the basepoints.
inline SubGammaSet basepoints_only(const TruncatedGammaSet& X) {
    SubGammaSet A;
    A.members.assign(static_cast<std::size_t>(X.max_level()) + 1, {0});
    return A;
}

/// The whole Γ-set as a selection.
inline SubGammaSet whole(const TruncatedGammaSet& X) {
    SubGammaSet A;
    for (int n = 0; n <= X.max_level(); ++n) {
        std::vector<int> all(static_cast<std::size_t>(X.level_size(n)));
        std::iota(all.begin(), all.end(), 0);
        A.members.push_back(std::move(all));
    }
    return A;
}

/// Inside HM, the sub-Γ-set HS of tuples with every entry in the submonoid S
/// (S given by element positions in M; must contain 0 and be closed).
inline SubGammaSet em_sub(const TruncatedGammaSet& HM, const CommMonoid& M,
                          const std::vector<int>& submonoid) {
    std::set<int> S(submonoid.begin(), submonoid.end());
    if (!S.count(0)) throw validation_error("em_sub: submonoid must contain 0");
    for (int a : S)
        for (int b : S)
            if (!S.count(M.add(a, b)))
                throw validation_error("em_sub: selection not closed under addition");
    SubGammaSet A;
    for (int n = 0; n <= HM.max_level(); ++n) {
        std::vector<int> mem;
        for (int e = 0; e < HM.level_size(n); ++e) {
            auto d = detail::em_digits(e, n, M.size());
            if (std::all_of(d.begin(), d.end(), [&](int x) { return S.count(x) > 0; }))
                mem.push_back(e);
        }
        A.members.push_back(std::move(mem));
    }
    return A;
}

/// Validate that A is a sub-Γ-set of X: contains basepoints, in range, and
/// closed under every action map within the truncation.
inline ValidationReport validate_subgammaset(const TruncatedGammaSet& X, const SubGammaSet& A) {
    ValidationReport rep;
    if (static_cast<int>(A.members.size()) != X.max_level() + 1) {
        rep.add("selection: wrong number of levels");
        return rep;
    }
    for (int n = 0; n <= X.max_level(); ++n) {
        const auto& v = A.members[static_cast<std::size_t>(n)];
        if (!std::is_sorted(v.begin(), v.end()))
            rep.add("selection: level " + std::to_string(n) + " not sorted");
        if (!A.contains(n, 0))
            rep.add("selection: basepoint missing at level " + std::to_string(n));
        for (int e : v)
            if (e < 0 || e >= X.level_size(n))
                rep.add("selection: index out of range at level " + std::to_string(n));
    }
    if (!rep.ok()) return rep;
    for (int n = 0; n <= X.max_level(); ++n)
        for (int m = 0; m <= X.max_level(); ++m)
            for (const auto& f : enumerate_homs(n, m))
                for (int e : A.members[static_cast<std::size_t>(n)])
                    if (!A.contains(m, X.apply(f, e))) {
                        rep.add("selection not closed: " + f.encode() + " maps " +
                                X.label(n, e) + " outside the selection");
                        return rep;
                    }
    return rep;
}

namespace detail {

/// Old-index → new-index maps for a levelwise collapse of A to the basepoint.
inline std::vector<std::vector<int>> collapse_index_maps(const TruncatedGammaSet& X,
                                                         const SubGammaSet& A) {
    std::vector<std::vector<int>> maps;
    for (int n = 0; n <= X.max_level(); ++n) {
        std::vector<int> mp(static_cast<std::size_t>(X.level_size(n)));
        int next = 1;
        for (int e = 0; e < X.level_size(n); ++e)
            mp[static_cast<std::size_t>(e)] = A.contains(n, e) ? 0 : next++;
        maps.push_back(std::move(mp));
    }
    return maps;
}

}  // namespace detail

/// X/A: the levelwise pointed-set quotient identifying the sub-Γ-set A with
/// the basepoint; every element outside A keeps its own class (and label).
/// Throws with the violating morphism when A is not action-closed.
inline GammaSetPtr collapse_quotient(const GammaSetPtr& X, const SubGammaSet& A) {
    if (auto rep = validate_subgammaset(*X, A); !rep.ok())
        throw validation_error("collapse_quotient: " + rep.to_string());
    const auto maps = detail::collapse_index_maps(*X, A);
    const int N = X->max_level();
    std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(N) + 1);
    std::vector<std::vector<int>> reps(static_cast<std::size_t>(N) + 1);  // new → old
    for (int n = 0; n <= N; ++n) {
        levels[static_cast<std::size_t>(n)].push_back(X->label(n, 0));
        reps[static_cast<std::size_t>(n)].push_back(0);
        for (int e = 0; e < X->level_size(n); ++e)
            if (maps[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)] != 0) {
                levels[static_cast<std::size_t>(n)].push_back(X->label(n, e));
                reps[static_cast<std::size_t>(n)].push_back(e);
            }
    }
    auto act = [X, maps, reps](const GammaMorphism& f, int e) {
        const int old = reps[static_cast<std::size_t>(f.source())][static_cast<std::size_t>(e)];
        const int img = X->apply(f, old);
        return maps[static_cast<std::size_t>(f.target())][static_cast<std::size_t>(img)];
    };
    return TruncatedGammaSet::build(X->name() + "/sub", N, std::move(levels), act);
}

// ---------------------------------------------------------------------------
// Morphisms of Γ-sets.
// ---------------------------------------------------------------------------

/// A level-wise natural transformation between two Γ-sets with the same
/// truncation. components[n][e] is the target index of source element e.
struct GammaMap {
    GammaSetPtr source;
    GammaSetPtr target;
    std::vector<std::vector<int>> components;

    int apply(int n, int e) const {
        return components[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)];
    }

    /// Level-1 image of a level-1 element.
    int at1(int e) const { return apply(1, e); }
};

inline GammaMap identity_map(const GammaSetPtr& X) {
    GammaMap phi;
    phi.source = X;
    phi.target = X;
    for (int n = 0; n <= X->max_level(); ++n) {
        std::vector<int> comp(static_cast<std::size_t>(X->level_size(n)));
        std::iota(comp.begin(), comp.end(), 0);
        phi.components.push_back(std::move(comp));
    }
    return phi;
}

/// The canonical projection X → X/A for the quotient produced by
/// collapse_quotient(X, A).
inline GammaMap quotient_map(const GammaSetPtr& X, const SubGammaSet& A,
                             const GammaSetPtr& quotient) {
    GammaMap phi;
    phi.source = X;
    phi.target = quotient;
    phi.components = detail::collapse_index_maps(*X, A);
    return phi;
}

/// Naturality sweep: basepoint preservation per level plus the commuting
/// square for every morphism within the truncation.
inline ValidationReport validate_naturality(const GammaMap& phi) {
    ValidationReport rep;
    const auto& X = *phi.source;
    const auto& Y = *phi.target;
    if (X.max_level() != Y.max_level()) {
        rep.add("naturality: source and target truncations differ");
        return rep;
    }
    if (static_cast<int>(phi.components.size()) != X.max_level() + 1) {
        rep.add("naturality: wrong number of components");
        return rep;
    }
    constexpr std::size_t kMaxListed = 25;
    auto note = [&](std::string v) {
        if (rep.violations.size() < kMaxListed) rep.add(std::move(v));
    };
    for (int n = 0; n <= X.max_level(); ++n) {
        if (static_cast<int>(phi.components[static_cast<std::size_t>(n)].size()) != X.level_size(n)) {
            rep.add("naturality: component " + std::to_string(n) + " has wrong length");
            return rep;
        }
        for (int e = 0; e < X.level_size(n); ++e) {
            int img = phi.apply(n, e);
            if (img < 0 || img >= Y.level_size(n)) {
                rep.add("naturality: component " + std::to_string(n) + " image out of range");
                return rep;
            }
        }
        if (phi.apply(n, 0) != 0)
            note("basepoint not preserved at level " + std::to_string(n));
    }
    for (int n = 0; n <= X.max_level(); ++n)
        for (int m = 0; m <= X.max_level(); ++m)
            for (const auto& f : enumerate_homs(n, m))
                for (int e = 0; e < X.level_size(n); ++e) {
                    const int via_target = Y.apply(f, phi.apply(n, e));
                    const int via_source = phi.apply(m, X.apply(f, e));
                    if (via_target != via_source)
                        note("square fails for " + f.encode() + " at element " + X.label(n, e));
                }
    return rep;
}

}  // namespace gammaforge
