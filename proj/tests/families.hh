#ifndef ECMOD_TESTS_FAMILIES_HH
#define ECMOD_TESTS_FAMILIES_HH 1

#include <ecmod/gadgets.hh>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

// Small simple graphs and partitioned graphs, one per isomorphism class.
namespace families
{
    using Perm = std::vector<int>;

    inline auto pairs(int n) -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> result;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                result.emplace_back(u, v);
        return result;
    }

    /// For each permutation, where it sends each pair index of pairs(n).
    inline auto pair_images(int n, const std::vector<Perm> & group) -> std::vector<std::vector<int>>
    {
        auto all = pairs(n);
        std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
        for (std::size_t i = 0; i < all.size(); ++i) {
            index[all[i].first][all[i].second] = static_cast<int>(i);
            index[all[i].second][all[i].first] = static_cast<int>(i);
        }
        std::vector<std::vector<int>> result;
        for (auto & p : group) {
            std::vector<int> image;
            for (auto & [u, v] : all)
                image.push_back(index[p[u]][p[v]]);
            result.push_back(std::move(image));
        }
        return result;
    }

    inline auto is_canonical(unsigned mask, const std::vector<std::vector<int>> & images) -> bool
    {
        for (auto & image : images) {
            unsigned other = 0;
            for (std::size_t i = 0; i < image.size(); ++i)
                if (mask >> i & 1)
                    other |= 1u << image[i];
            if (other < mask)
                return false;
        }
        return true;
    }

    inline auto to_graph(int n, unsigned mask) -> ecmod::SimpleGraph
    {
        ecmod::SimpleGraph g{ n, {} };
        auto all = pairs(n);
        for (std::size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1)
                g.edges.push_back(all[i]);
        return g;
    }

    inline auto connected(const ecmod::SimpleGraph & g) -> bool
    {
        std::vector<int> parent(g.n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        int components = g.n;
        for (auto & [u, v] : g.edges)
            if (find(u) != find(v)) {
                parent[find(u)] = find(v);
                --components;
            }
        return components <= 1;
    }

    inline auto all_permutations(int n) -> std::vector<Perm>
    {
        Perm p(n);
        std::iota(p.begin(), p.end(), 0);
        std::vector<Perm> result;
        do
            result.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return result;
    }

    /// One connected simple graph per isomorphism class, 1 <= n <= max_n.
    inline auto connected_graphs(int max_n) -> std::vector<ecmod::SimpleGraph>
    {
        std::vector<ecmod::SimpleGraph> result;
        for (int n = 1; n <= max_n; ++n) {
            auto images = pair_images(n, all_permutations(n));
            auto all = pairs(n);
            for (unsigned mask = 0; mask < (1u << all.size()); ++mask)
                if (is_canonical(mask, images)) {
                    auto g = to_graph(n, mask);
                    if (connected(g))
                        result.push_back(std::move(g));
                }
        }
        return result;
    }

    /// Block sizes in non-increasing order summing to n, at most max_parts.
    inline auto shapes(int n, int max_parts) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> result;
        std::vector<int> current;
        std::function<void(int, int)> go = [&](int left, int cap) {
            if (left == 0) {
                result.push_back(current);
                return;
            }
            if (static_cast<int>(current.size()) == max_parts)
                return;
            for (int s = std::min(left, cap); s >= 1; --s) {
                current.push_back(s);
                go(left - s, s);
                current.pop_back();
            }
        };
        go(n, n);
        return result;
    }

    /// Permutations of 0..n-1 preserving the blocks of shape, where blocks of
    /// equal size may be exchanged.
    inline auto block_group(const std::vector<int> & shape) -> std::vector<Perm>
    {
        int n = std::accumulate(shape.begin(), shape.end(), 0);
        std::vector<int> block(n);
        for (int i = 0, v = 0; i < static_cast<int>(shape.size()); ++i)
            for (int j = 0; j < shape[i]; ++j)
                block[v++] = i;
        std::vector<Perm> result;
        for (auto & p : all_permutations(n)) {
            // p must map blocks onto blocks as a whole.
            bool ok = true;
            std::vector<int> image(shape.size(), -1);
            for (int v = 0; v < n && ok; ++v) {
                int & b = image[block[v]];
                if (b < 0)
                    b = block[p[v]];
                ok = b == block[p[v]] && shape[block[v]] == shape[block[p[v]]];
            }
            if (ok)
                result.push_back(p);
        }
        return result;
    }

    /// One partitioned graph per isomorphism class, with 1 <= n <= max_n and
    /// at most max_parts parts.
    inline auto mis_instances(int max_n, int max_parts) -> std::vector<ecmod::MisInstance>
    {
        std::vector<ecmod::MisInstance> result;
        for (int n = 1; n <= max_n; ++n) {
            auto all = pairs(n);
            for (auto & shape : shapes(n, max_parts)) {
                auto images = pair_images(n, block_group(shape));
                std::vector<std::vector<int>> parts;
                for (int i = 0, v = 0; i < static_cast<int>(shape.size()); ++i) {
                    parts.emplace_back();
                    for (int j = 0; j < shape[i]; ++j)
                        parts.back().push_back(v++);
                }
                for (unsigned mask = 0; mask < (1u << all.size()); ++mask)
                    if (is_canonical(mask, images))
                        result.push_back(ecmod::MisInstance{ to_graph(n, mask), parts });
            }
        }
        return result;
    }
}

#endif
