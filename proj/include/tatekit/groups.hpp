#pragma once

// Finite groups as multiplication tables, plus a greedy generating set.
// Element handles are indices into the table; index 0 is the identity.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tatekit {

class FiniteGroup {
public:
    FiniteGroup() = default;
    explicit FiniteGroup(std::vector<std::vector<std::size_t>> table, std::string name = "")
        : mul_(std::move(table)), name_(std::move(name)) {
        std::size_t n = mul_.size();
        for (const auto& row : mul_)
            if (row.size() != n) throw std::invalid_argument("FiniteGroup: ragged table");
        for (std::size_t g = 0; g < n; ++g)
            if (mul_[0][g] != g || mul_[g][0] != g)
                throw std::invalid_argument("FiniteGroup: index 0 is not an identity");
        inv_.assign(n, n);
        for (std::size_t g = 0; g < n; ++g) {
            for (std::size_t h = 0; h < n; ++h)
                if (mul_[g][h] == 0) { inv_[g] = h; break; }
            if (inv_[g] == n) throw std::invalid_argument("FiniteGroup: missing inverse");
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                        throw std::invalid_argument("FiniteGroup: table not associative");
        compute_generators();
    }

    static FiniteGroup cyclic(std::size_t n) {
        std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
        return FiniteGroup(std::move(t), "Z/" + std::to_string(n));
    }

    /// Direct product of cyclic groups (mixed-radix element encoding).
    static FiniteGroup product_of_cyclics(const std::vector<std::size_t>& orders) {
        std::size_t n = 1;
        for (std::size_t m : orders) n *= m;
        auto decode = [&](std::size_t x) {
            std::vector<std::size_t> d(orders.size());
            for (std::size_t i = 0; i < orders.size(); ++i) { d[i] = x % orders[i]; x /= orders[i]; }
            return d;
        };
        auto encode = [&](const std::vector<std::size_t>& d) {
            std::size_t x = 0, mul = 1;
            for (std::size_t i = 0; i < orders.size(); ++i) { x += d[i] * mul; mul *= orders[i]; }
            return x;
        };
        std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                auto da = decode(a), db = decode(b);
                for (std::size_t i = 0; i < orders.size(); ++i) da[i] = (da[i] + db[i]) % orders[i];
                t[a][b] = encode(da);
            }
        std::string name;
        for (std::size_t m : orders) name += (name.empty() ? "" : "x") + ("Z/" + std::to_string(m));
        return FiniteGroup(std::move(t), name);
    }

    static FiniteGroup klein_four() { return product_of_cyclics({2, 2}); }

    static FiniteGroup symmetric3() {
        // elements: permutations of {0,1,2} in lexicographic order of one-line
        // notation, reindexed so the identity is element 0
        std::vector<std::vector<int>> perms = {
            {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        std::size_t n = perms.size();
        auto find = [&](const std::vector<int>& p) {
            for (std::size_t i = 0; i < n; ++i)
                if (perms[i] == p) return i;
            throw std::logic_error("symmetric3: lookup");
        };
        std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                std::vector<int> c(3);
                for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
                t[a][b] = find(c);
            }
        return FiniteGroup(std::move(t), "S3");
    }

    std::size_t order() const { return mul_.size(); }
    std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a][b]; }
    std::size_t inv(std::size_t a) const { return inv_[a]; }
    std::size_t id() const { return 0; }
    const std::string& name() const { return name_; }
    const std::vector<std::size_t>& generators() const { return gens_; }

    std::size_t element_order(std::size_t g) const {
        std::size_t x = g, m = 1;
        while (x != 0) { x = mul_[x][g]; ++m; }
        return m;
    }

    bool commute(std::size_t a, std::size_t b) const { return mul_[a][b] == mul_[b][a]; }

private:
    void compute_generators() {
        std::size_t n = order();
        std::vector<bool> in_span(n, false);
        in_span[0] = true;
        std::size_t covered = 1;
        while (covered < n) {
            std::size_t pick = 0;
            while (pick < n && in_span[pick]) ++pick;
            gens_.push_back(pick);
            // close under multiplication by known elements
            bool grew = true;
            in_span[pick] = true;
            ++covered;
            while (grew) {
                grew = false;
                for (std::size_t a = 0; a < n; ++a) {
                    if (!in_span[a]) continue;
                    for (std::size_t b = 0; b < n; ++b) {
                        if (!in_span[b]) continue;
                        std::size_t c = mul_[a][b];
                        if (!in_span[c]) { in_span[c] = true; ++covered; grew = true; }
                    }
                }
            }
        }
    }

    std::vector<std::vector<std::size_t>> mul_;
    std::vector<std::size_t> inv_;
    std::vector<std::size_t> gens_;
    std::string name_;
};

}  // namespace tatekit
