#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gammaforge/core.hpp"

namespace gammaforge {

/// An object of Γ^op: the pointed finite set n₊ = {0,...,n} with basepoint 0.
struct GammaObject {
    int n = 0;

    explicit GammaObject(int level) : n(level) {
        if (level < 0) throw validation_error("GammaObject: level must be >= 0");
    }

    friend bool operator==(GammaObject, GammaObject) = default;
};

/// A pointed map n₊ → m₊. Only the images of the nonzero elements are
/// stored; 0 ↦ 0 is implicit, so invalid basepoint behavior is
/// unrepresentable.
class GammaMorphism {
public:
    GammaMorphism(int source, int target, std::vector<int> images)
        : source_(source), target_(target), images_(std::move(images)) {
        if (source < 0 || target < 0)
            throw validation_error("GammaMorphism: negative level");
        if (static_cast<int>(images_.size()) != source)
            throw validation_error("GammaMorphism: images length " +
                                   std::to_string(images_.size()) +
                                   " != source level " + std::to_string(source));
        for (int v : images_)
            if (v < 0 || v > target)
                throw validation_error("GammaMorphism: image " + std::to_string(v) +
                                       " outside {0,...," + std::to_string(target) + "}");
    }

    static GammaMorphism identity(int n) {
        std::vector<int> im(static_cast<std::size_t>(n));
        std::iota(im.begin(), im.end(), 1);
        return {n, n, std::move(im)};
    }

    /// The map collapsing everything to the basepoint.
    static GammaMorphism zero(int n, int m) {
        return {n, m, std::vector<int>(static_cast<std::size_t>(n), 0)};
    }

    int source() const { return source_; }
    int target() const { return target_; }
    const std::vector<int>& images() const { return images_; }

    /// Image of an element of {0,...,source}.
    int apply(int element) const {
        if (element == 0) return 0;
        if (element < 0 || element > source_)
            throw validation_error("GammaMorphism::apply: element out of range");
        return images_[static_cast<std::size_t>(element - 1)];
    }

    bool is_identity() const {
        if (source_ != target_) return false;
        for (int i = 0; i < source_; ++i)
            if (images_[static_cast<std::size_t>(i)] != i + 1) return false;
        return true;
    }

    /// Position of this morphism in the lexicographic enumeration of
    /// Hom(n₊, m₊); the images sequence read as a base-(m+1) numeral.
    std::size_t lex_index() const {
        std::size_t idx = 0;
        for (int v : images_) idx = idx * static_cast<std::size_t>(target_ + 1) +
                                    static_cast<std::size_t>(v);
        return idx;
    }

    /// Text encoding "n>m:[i1,...,in]" (CLI and action-table keys).
    std::string encode() const {
        std::ostringstream os;
        os << source_ << '>' << target_ << ":[";
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (i) os << ',';
            os << images_[i];
        }
        os << ']';
        return os.str();
    }

    static GammaMorphism decode(std::string_view text) {
        auto fail = [&] {
            throw validation_error("GammaMorphism::decode: malformed encoding '" +
                                   std::string(text) + "'");
        };
        std::size_t gt = text.find('>');
        std::size_t colon = text.find(":[");
        if (gt == std::string_view::npos || colon == std::string_view::npos ||
            text.empty() || text.back() != ']')
            fail();
        int n = 0, m = 0;
        try {
            n = std::stoi(std::string(text.substr(0, gt)));
            m = std::stoi(std::string(text.substr(gt + 1, colon - gt - 1)));
        } catch (const std::exception&) {
            fail();
        }
        std::vector<int> im;
        std::string body(text.substr(colon + 2, text.size() - colon - 3));
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ','))
            if (!tok.empty()) im.push_back(std::stoi(tok));
        if (body.empty()) im.clear();
        return {n, m, std::move(im)};
    }

    friend bool operator==(const GammaMorphism&, const GammaMorphism&) = default;
};

/// g∘f: apply f first. Throws if f.target != g.source.
inline GammaMorphism compose(const GammaMorphism& f, const GammaMorphism& g) {
    if (f.target() != g.source())
        throw validation_error("compose: target of " + f.encode() +
                               " != source of " + g.encode());
    std::vector<int> im;
    im.reserve(static_cast<std::size_t>(f.source()));
    for (int i = 1; i <= f.source(); ++i) im.push_back(g.apply(f.apply(i)));
    return {f.source(), g.target(), std::move(im)};
}

/// p_{i,n}: n₊ → 1₊, the projection onto the i-th coordinate.
inline GammaMorphism projection(int i, int n) {
    if (i < 1 || i > n)
        throw validation_error("projection: index " + std::to_string(i) +
                               " not in {1,...," + std::to_string(n) + "}");
    std::vector<int> im(static_cast<std::size_t>(n), 0);
    im[static_cast<std::size_t>(i - 1)] = 1;
    return {n, 1, std::move(im)};
}

/// s_n: n₊ → 1₊, every nonzero element to 1.
inline GammaMorphism sum_morphism(int n) {
    if (n < 0) throw validation_error("sum_morphism: negative level");
    return {n, 1, std::vector<int>(static_cast<std::size_t>(n), 1)};
}

/// The morphism n₊ → m₊ determined by an ordered partition {I_1,...,I_m} of
/// {1,...,n}: i ↦ j iff i ∈ I_j. Blocks must be disjoint, nonempty and cover.
inline GammaMorphism partition_morphism(const std::vector<std::vector<int>>& blocks) {
    int n = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw validation_error("partition_morphism: empty block");
        n += static_cast<int>(b.size());
    }
    std::vector<int> im(static_cast<std::size_t>(n), 0);
    for (std::size_t j = 0; j < blocks.size(); ++j)
        for (int i : blocks[j]) {
            if (i < 1 || i > n)
                throw validation_error("partition_morphism: index " + std::to_string(i) +
                                       " outside {1,...," + std::to_string(n) + "}");
            if (im[static_cast<std::size_t>(i - 1)] != 0)
                throw validation_error("partition_morphism: index " + std::to_string(i) +
                                       " appears in two blocks");
            im[static_cast<std::size_t>(i - 1)] = static_cast<int>(j) + 1;
        }
    // Coverage follows: n indices, all distinct, all in range.
    return {n, static_cast<int>(blocks.size()), std::move(im)};
}

inline std::size_t hom_count(int n, int m) {
    std::size_t c = 1;
    for (int i = 0; i < n; ++i) c *= static_cast<std::size_t>(m + 1);
    return c;
}

/// All (m+1)^n pointed maps n₊ → m₊ in lexicographic order of the images
/// sequence. Throws guard_exceeded when the count would pass the guard.
inline std::vector<GammaMorphism> enumerate_homs(int n, int m,
                                                 std::size_t guard = kDefaultGuard) {
    if (n < 0 || m < 0) throw validation_error("enumerate_homs: negative level");
    const std::size_t total = hom_count(n, m);
    if (total > guard)
        throw guard_exceeded("enumerate_homs(" + std::to_string(n) + "," +
                             std::to_string(m) + "): " + std::to_string(total) +
                             " maps exceeds guard " + std::to_string(guard));
    std::vector<GammaMorphism> out;
    out.reserve(total);
    std::vector<int> im(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < total; ++k) {
        out.emplace_back(n, m, im);
        for (int pos = n - 1; pos >= 0; --pos) {
            if (++im[static_cast<std::size_t>(pos)] <= m) break;
            im[static_cast<std::size_t>(pos)] = 0;
        }
    }
    return out;
}

}  // namespace gammaforge
