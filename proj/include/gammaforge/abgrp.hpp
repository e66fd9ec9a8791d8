#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gammaforge/core.hpp"
#include "gammaforge/gamma_set.hpp"  // CommMonoid (group targets of hom enumeration)

namespace gammaforge {

// ---------------------------------------------------------------------------
// Dense matrices over ℤ with arbitrary-precision entries.
// ---------------------------------------------------------------------------

class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        if (rows < 0 || cols < 0) throw validation_error("IntMatrix: negative dimension");
    }

    IntMatrix(std::initializer_list<std::initializer_list<long>> init)
        : IntMatrix(static_cast<int>(init.size()),
                    init.size() ? static_cast<int>(init.begin()->size()) : 0) {
        int i = 0;
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_)
                throw validation_error("IntMatrix: ragged initializer");
            int j = 0;
            for (long v : row) at(i, j++) = v;
            ++i;
        }
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int i, int j) {
        return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
    }
    const mpz_class& at(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw validation_error("IntMatrix: dimension mismatch in product");
        IntMatrix out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const mpz_class& a = at(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
            }
        return out;
    }

    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
    }
    /// row[i] += f * row[j]
    void add_row(int i, int j, const mpz_class& f) {
        for (int c = 0; c < cols_; ++c) at(i, c) += f * at(j, c);
    }
    /// col[i] += f * col[j]
    void add_col(int i, int j, const mpz_class& f) {
        for (int r = 0; r < rows_; ++r) at(r, i) += f * at(r, j);
    }
    void negate_row(int i) {
        for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
    }
    void negate_col(int j) {
        for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    mpz_class determinant() const {
        if (rows_ != cols_) throw validation_error("determinant: matrix not square");
        const int n = rows_;
        if (n == 0) return 1;
        IntMatrix a = *this;
        mpz_class prev = 1;
        int sign = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (a.at(k, k) == 0) {
                int p = -1;
                for (int i = k + 1; i < n; ++i)
                    if (a.at(i, k) != 0) { p = i; break; }
                if (p < 0) return 0;
                a.swap_rows(k, p);
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j) {
                    mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                    mpz_class q = num / prev;  // exact by Bareiss
                    a.at(i, j) = q;
                }
            prev = a.at(k, k);
            if (prev == 0) return 0;
        }
        return sign > 0 ? a.at(n - 1, n - 1) : mpz_class(-a.at(n - 1, n - 1));
    }

    std::string to_string() const {
        std::ostringstream os;
        for (int i = 0; i < rows_; ++i) {
            os << '[';
            for (int j = 0; j < cols_; ++j) {
                if (j) os << ' ';
                os << at(i, j).get_str();
            }
            os << "]\n";
        }
        return os.str();
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpz_class> e_;
};

// ---------------------------------------------------------------------------
// Smith normal form.
// ---------------------------------------------------------------------------

/// U·A·V = D with D diagonal, nonnegative, divisibility chain d_1 | d_2 | ...,
/// and U, V unimodular. Vinv = V⁻¹ is kept for coordinate changes.
struct SmithResult {
    IntMatrix D, U, V, Vinv;
    int rank = 0;                      // number of nonzero diagonal entries
    std::vector<mpz_class> diagonal;   // min(rows,cols) entries
};

/// Diagonalize by elementary row/column operations. Pivot selection is by
/// minimal absolute value in the remaining block; exact arithmetic keeps the
/// classical entry-blowup failure mode at bay.
inline SmithResult smith_normal_form(const IntMatrix& A) {
    const int m = A.rows(), n = A.cols();
    const int nmin = std::min(m, n);
    SmithResult res;
    res.D = A;
    res.U = IntMatrix::identity(m);
    res.V = IntMatrix::identity(n);
    res.Vinv = IntMatrix::identity(n);
    IntMatrix& D = res.D;
    IntMatrix& U = res.U;
    IntMatrix& V = res.V;
    IntMatrix& Vi = res.Vinv;

    auto col_add = [&](int i, int j, const mpz_class& f) {
        // col_i += f·col_j on D and V; the inverse op row_j -= f·row_i on V⁻¹.
        D.add_col(i, j, f);
        V.add_col(i, j, f);
        Vi.add_row(j, i, -f);
    };
    auto col_swap = [&](int i, int j) {
        D.swap_cols(i, j);
        V.swap_cols(i, j);
        Vi.swap_rows(i, j);
    };
    auto col_negate = [&](int j) {
        D.negate_col(j);
        V.negate_col(j);
        Vi.negate_row(j);
    };
    (void)col_negate;

    for (int s = 0; s < nmin; ++s) {
        for (;;) {
            // Smallest nonzero |entry| in the trailing block.
            int pr = -1, pc = -1;
            mpz_class best;
            for (int i = s; i < m; ++i)
                for (int j = s; j < n; ++j) {
                    if (D.at(i, j) == 0) continue;
                    mpz_class a = abs(D.at(i, j));
                    if (pr < 0 || a < best) {
                        best = a;
                        pr = i;
                        pc = j;
                    }
                }
            if (pr < 0) goto done;  // trailing block is zero
            if (pr != s) {
                D.swap_rows(s, pr);
                U.swap_rows(s, pr);
            }
            if (pc != s) col_swap(s, pc);

            bool clean = true;
            for (int i = s + 1; i < m; ++i) {
                if (D.at(i, s) == 0) continue;
                mpz_class q = D.at(i, s) / D.at(s, s);  // truncated division
                D.add_row(i, s, -q);
                U.add_row(i, s, -q);
                if (D.at(i, s) != 0) clean = false;
            }
            for (int j = s + 1; j < n; ++j) {
                if (D.at(s, j) == 0) continue;
                mpz_class q = D.at(s, j) / D.at(s, s);
                col_add(j, s, -q);
                if (D.at(s, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot divides its whole residual block, or pull an offender in.
            int orow = -1;
            for (int i = s + 1; i < m && orow < 0; ++i)
                for (int j = s + 1; j < n; ++j)
                    if (D.at(i, j) % D.at(s, s) != 0) {
                        orow = i;
                        break;
                    }
            if (orow < 0) break;
            D.add_row(s, orow, 1);
            U.add_row(s, orow, 1);
        }
        if (D.at(s, s) < 0) {
            D.negate_row(s);
            U.negate_row(s);
        }
    }
done:
    for (int i = 0; i < nmin; ++i) {
        res.diagonal.push_back(D.at(i, i));
        if (D.at(i, i) != 0) ++res.rank;
    }
    return res;
}

/// Free rank plus invariant factors > 1, the canonical form of a finitely
/// presented abelian group.
struct CanonicalInvariants {
    int rank = 0;
    std::vector<mpz_class> factors;  // divisibility chain, each > 1

    bool operator==(const CanonicalInvariants&) const = default;

    bool is_finite() const { return rank == 0; }

    mpz_class order() const {
        mpz_class o = 1;
        for (const auto& f : factors) o *= f;
        return o;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "Z^" << rank;
        for (const auto& f : factors) os << " + Z/" << f.get_str();
        return os.str();
    }
};

// ---------------------------------------------------------------------------
// Finitely presented abelian groups.
// ---------------------------------------------------------------------------

/// Generators plus an integer relation matrix (one row per relation, one
/// column per generator), canonicalized by Smith normal form on
/// construction. Elements are integer combinations of generators; two
/// combinations are equal iff their difference lies in the relation lattice.
class FpAbelianGroup {
public:
    FpAbelianGroup(std::vector<std::string> generator_labels, IntMatrix relations)
        : labels_(std::move(generator_labels)), relations_(std::move(relations)) {
        if (relations_.cols() != static_cast<int>(labels_.size()))
            throw validation_error("FpAbelianGroup: relation columns != generator count");
        snf_ = smith_normal_form(relations_);
        inv_.rank = generators() - snf_.rank;
        for (const auto& d : snf_.diagonal)
            if (d > 1) inv_.factors.push_back(d);
    }

    int generators() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& generator_labels() const { return labels_; }
    const IntMatrix& relations() const { return relations_; }
    const SmithResult& snf() const { return snf_; }
    const CanonicalInvariants& invariants() const { return inv_; }

    bool is_finite() const { return inv_.is_finite(); }

    /// Diagonal modulus of coordinate i in the SNF basis (0 means free).
    mpz_class modulus(int i) const {
        return i < static_cast<int>(snf_.diagonal.size()) ? snf_.diagonal[static_cast<std::size_t>(i)]
                                                          : mpz_class(0);
    }

    /// Coordinates of a generator combination in the SNF basis, reduced mod
    /// the diagonal. Two combinations represent the same element iff their
    /// canonical coordinates agree.
    std::vector<mpz_class> canonical_coords(const std::vector<mpz_class>& combo) const {
        if (static_cast<int>(combo.size()) != generators())
            throw validation_error("canonical_coords: combo length != generator count");
        const int k = generators();
        std::vector<mpz_class> out(static_cast<std::size_t>(k), 0);
        for (int j = 0; j < k; ++j) {
            mpz_class acc = 0;
            for (int i = 0; i < k; ++i) acc += combo[static_cast<std::size_t>(i)] * snf_.V.at(i, j);
            const mpz_class d = modulus(j);
            if (d != 0) {
                mpz_class r;
                mpz_mod(r.get_mpz_t(), acc.get_mpz_t(), d.get_mpz_t());  // nonneg remainder
                acc = r;
            }
            out[static_cast<std::size_t>(j)] = acc;
        }
        return out;
    }

    /// Generator combination mapping to a given SNF-basis coordinate vector.
    std::vector<mpz_class> combo_from_coords(const std::vector<mpz_class>& coords) const {
        const int k = generators();
        if (static_cast<int>(coords.size()) != k)
            throw validation_error("combo_from_coords: wrong length");
        std::vector<mpz_class> out(static_cast<std::size_t>(k), 0);
        for (int j = 0; j < k; ++j) {
            mpz_class acc = 0;
            for (int i = 0; i < k; ++i) acc += coords[static_cast<std::size_t>(i)] * snf_.Vinv.at(i, j);
            out[static_cast<std::size_t>(j)] = acc;
        }
        return out;
    }

    bool in_relation_lattice(const std::vector<mpz_class>& combo) const {
        for (const auto& c : canonical_coords(combo))
            if (c != 0) return false;
        return true;
    }

    bool same_element(const std::vector<mpz_class>& x, const std::vector<mpz_class>& y) const {
        return canonical_coords(x) == canonical_coords(y);
    }

    std::vector<mpz_class> basis_combo(int generator) const {
        std::vector<mpz_class> e(static_cast<std::size_t>(generators()), 0);
        e[static_cast<std::size_t>(generator)] = 1;
        return e;
    }

    /// All elements of a finite group, as canonical coordinate vectors in
    /// lexicographic order. Throws when infinite or larger than the guard.
    std::vector<std::vector<mpz_class>> enumerate_elements(std::size_t guard = kDefaultGuard) const {
        if (!is_finite()) throw validation_error("enumerate_elements: group is infinite");
        if (inv_.order() > static_cast<long>(guard))
            throw guard_exceeded("enumerate_elements: order exceeds guard");
        const int k = generators();
        std::vector<std::vector<mpz_class>> out;
        std::vector<mpz_class> cur(static_cast<std::size_t>(k), 0);
        std::function<void(int)> rec = [&](int j) {
            if (j == k) {
                out.push_back(cur);
                return;
            }
            const mpz_class d = modulus(j);
            const long dl = d.get_si() > 1 ? d.get_si() : 1;
            for (long v = 0; v < dl; ++v) {
                cur[static_cast<std::size_t>(j)] = v;
                rec(j + 1);
            }
            cur[static_cast<std::size_t>(j)] = 0;
        };
        rec(0);
        return out;
    }

private:
    std::vector<std::string> labels_;
    IntMatrix relations_;
    SmithResult snf_;
    CanonicalInvariants inv_;
};

inline CanonicalInvariants canonical_invariants(const FpAbelianGroup& G) {
    return G.invariants();
}

inline bool is_isomorphic(const FpAbelianGroup& G1, const FpAbelianGroup& G2) {
    return G1.invariants() == G2.invariants();
}

// ---------------------------------------------------------------------------
// Hom sets into finite abelian groups.
// ---------------------------------------------------------------------------

/// A homomorphism G → M given by the image of each generator, as element
/// positions in M.
using GeneratorImages = std::vector<int>;

/// All homomorphisms from G to the finite abelian group M: the generator
/// assignments annihilating every relation, in lexicographic order of the
/// image tuples.
inline std::vector<GeneratorImages> hom_to_finite(const FpAbelianGroup& G, const CommMonoid& M,
                                                  std::size_t guard = kDefaultGuard) {
    if (!M.is_group()) throw validation_error("hom_to_finite: target monoid is not a group");
    const int k = G.generators();
    {
        double total = 1;
        for (int i = 0; i < k; ++i) total *= M.size();
        if (total > static_cast<double>(guard))
            throw guard_exceeded("hom_to_finite: |M|^generators exceeds guard");
    }
    // In a finite abelian group |M|·a = 0, so coefficients act mod |M|.
    auto scale_mod = [&](const mpz_class& c, int a) {
        mpz_class mod(M.size()), r;
        mpz_mod(r.get_mpz_t(), c.get_mpz_t(), mod.get_mpz_t());
        return M.scale(r.get_si(), a);
    };
    auto eval_relation = [&](const GeneratorImages& img, int row) {
        int acc = 0;
        for (int j = 0; j < k; ++j) {
            const mpz_class& c = G.relations().at(row, j);
            if (c == 0) continue;
            acc = M.add(acc, scale_mod(c, img[static_cast<std::size_t>(j)]));
        }
        return acc;
    };
    std::vector<GeneratorImages> out;
    GeneratorImages img(static_cast<std::size_t>(k), 0);
    std::function<void(int)> rec = [&](int j) {
        if (j == k) {
            for (int r = 0; r < G.relations().rows(); ++r)
                if (eval_relation(img, r) != 0) return;
            out.push_back(img);
            return;
        }
        for (int v = 0; v < M.size(); ++v) {
            img[static_cast<std::size_t>(j)] = v;
            rec(j + 1);
        }
        img[static_cast<std::size_t>(j)] = 0;
    };
    rec(0);
    return out;
}

/// Evaluate a hom (generator images) on a generator combination.
inline int evaluate_hom(const FpAbelianGroup& G, const CommMonoid& M, const GeneratorImages& img,
                        const std::vector<mpz_class>& combo) {
    int acc = 0;
    for (int j = 0; j < G.generators(); ++j) {
        const mpz_class& c = combo[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        acc = M.add(acc, M.scale(c.get_si(), img[static_cast<std::size_t>(j)]));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Group completion of finite commutative monoids.
// ---------------------------------------------------------------------------

/// M^gp = ℤ[M] / ⟨[0] = 0, [a]+[b] = [a+b]⟩, the Grothendieck group.
inline FpAbelianGroup group_completion(const CommMonoid& M) {
    if (auto rep = M.validate(); !rep.ok())
        throw validation_error("group_completion: invalid monoid:\n" + rep.to_string());
    const int k = M.size();
    std::set<std::vector<mpz_class>> rows;
    {
        std::vector<mpz_class> r(static_cast<std::size_t>(k), 0);
        r[0] = 1;  // [0_M] = 0
        rows.insert(r);
    }
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            std::vector<mpz_class> r(static_cast<std::size_t>(k), 0);
            r[static_cast<std::size_t>(a)] += 1;
            r[static_cast<std::size_t>(b)] += 1;
            r[static_cast<std::size_t>(M.add(a, b))] -= 1;
            if (std::any_of(r.begin(), r.end(), [](const mpz_class& v) { return v != 0; }))
                rows.insert(r);
        }
    IntMatrix rel(static_cast<int>(rows.size()), k);
    int i = 0;
    for (const auto& r : rows) {
        for (int j = 0; j < k; ++j) rel.at(i, j) = r[static_cast<std::size_t>(j)];
        ++i;
    }
    return FpAbelianGroup(M.labels, std::move(rel));
}

}  // namespace gammaforge
