#include "oldset/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace oldset {

namespace {

// The key is laid out level by level: level k holds the matrix entries
// (k,0..k) then (0..k-1,k), so fixing the images of vertices 0..k determines
// exactly the first (k+1)^2 bits.  That makes lexicographic pruning possible
// while the permutation is only partially chosen.
class Canonicalizer {
public:
    explicit Canonicalizer(const Digraph& d) : d_(d), n_(d.order()) {}

    std::vector<std::uint32_t> run() {
        std::vector<int> identity(n_);
        std::iota(identity.begin(), identity.end(), 0);
        best_.resize(n_);
        for (int k = 0; k < n_; ++k) best_[k] = level_chunk(identity, k);

        place_.assign(n_, -1);
        cur_.assign(n_, 0);
        used_.assign(n_, false);
        dfs(0, true);
        return best_;
    }

private:
    std::uint32_t level_chunk(const std::vector<int>& place, int k) const {
        std::uint32_t c = 0;
        int t = 0;
        for (int j = 0; j <= k; ++j, ++t)
            if (d_.has_arc(place[k], place[j])) c |= 1u << t;
        for (int i = 0; i < k; ++i, ++t)
            if (d_.has_arc(place[i], place[k])) c |= 1u << t;
        return c;
    }

    void dfs(int k, bool tight) {
        if (k == n_) {
            if (cur_ < best_) best_ = cur_;
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            place_[k] = v;
            const std::uint32_t chunk = level_chunk(place_, k);
            // A stale `tight` can only over-approximate equality with a best
            // that has since shrunk, in which case this branch is larger than
            // the new best as well, so pruning stays sound.
            if (tight && chunk > best_[k]) continue;
            cur_[k] = chunk;
            used_[v] = true;
            dfs(k + 1, tight && chunk == best_[k]);
            used_[v] = false;
        }
    }

    const Digraph& d_;
    int n_;
    std::vector<std::uint32_t> best_;
    std::vector<std::uint32_t> cur_;
    std::vector<int> place_;
    std::vector<bool> used_;
};

}  // namespace

CanonicalForm canonical_form(const Digraph& d, int max_order) {
    const int n = d.order();
    if (max_order > default_canonical_cap) max_order = default_canonical_cap;
    if (n > max_order) throw std::length_error("canonical_form: order cap exceeded");

    const std::vector<std::uint32_t> levels = Canonicalizer(d).run();
    CanonicalForm form;
    form.order = static_cast<std::uint8_t>(n);
    for (int k = 0; k < n; ++k) {
        const int base = k * k;
        for (int t = 0; t < 2 * k + 1; ++t) {
            if ((levels[k] >> t) & 1u) {
                const int pos = base + t;
                form.key[pos / 64] |= 1ull << (pos % 64);
            }
        }
    }
    return form;
}

std::string CanonicalForm::to_string() const {
    static const char* hex = "0123456789abcdef";
    std::string out = "n" + std::to_string(order) + ":";
    const int nibbles = (order * order + 3) / 4;
    for (int i = nibbles - 1; i >= 0; --i) {
        const int pos = i * 4;
        const unsigned nib = (key[pos / 64] >> (pos % 64)) & 0xfu;
        out += hex[nib];
    }
    return out;
}

bool isomorphic(const Digraph& a, const Digraph& b, int max_order) {
    if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
    return canonical_form(a, max_order) == canonical_form(b, max_order);
}

std::uint64_t labelled_copy_count(const Digraph& d) {
    const int n = d.order();
    if (n > 8) throw std::length_error("labelled_copy_count: order cap exceeded");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::unordered_set<std::uint64_t> images;
    do {
        std::uint64_t code = 0;
        for (int u = 0; u < n; ++u)
            for (int v : d.out_neighbours(u)) code |= 1ull << (perm[u] * n + perm[v]);
        images.insert(code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return images.size();
}

}  // namespace oldset
