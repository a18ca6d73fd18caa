#include "tsc/total_complex.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "tsc/error.hpp"

namespace tsc {

TotalIndexSet total_indices(const Graph& g, const TotalLabeling& labels)
{
    const Graph t = total_graph(g, labels);
    const int n = t.vertex_count();

    // Every connected triple has a node adjacent to the other two.
    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n) + 1);
    for (const Edge& e : t.edges()) {
        nbrs[static_cast<std::size_t>(e.u)].push_back(e.v);
        nbrs[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    TotalIndexSet out;
    for (int centre = 1; centre <= n; ++centre) {
        const auto& adj = nbrs[static_cast<std::size_t>(centre)];
        for (std::size_t i = 0; i < adj.size(); ++i)
            for (std::size_t j = i + 1; j < adj.size(); ++j) {
                std::array<int, 3> tri{centre, adj[i], adj[j]};
                std::sort(tri.begin(), tri.end());
                out.triples.emplace_back(tri.begin(), tri.end());
            }
    }
    std::sort(out.triples.begin(), out.triples.end());
    out.triples.erase(std::unique(out.triples.begin(), out.triples.end()), out.triples.end());

    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            out.singletons.push_back({labels.of_vertex(v)});
    std::sort(out.singletons.begin(), out.singletons.end());
    return out;
}

SimplicialComplex build_tsc(const Graph& g, const TotalLabeling& labels)
{
    if (g.vertex_count() < 1)
        throw InputError("total simplicial complex of the empty graph is undefined");
    TotalIndexSet idx = total_indices(g, labels);
    std::vector<Face> gens = std::move(idx.triples);
    gens.insert(gens.end(), idx.singletons.begin(), idx.singletons.end());
    return SimplicialComplex::from_facets(std::move(gens));
}

namespace {

// Arithmetic progression first, first+step, ..., <= last (empty if first > last).
std::vector<int> progression(int first, int step, int last)
{
    std::vector<int> out;
    for (int x = first; x <= last; x += step)
        out.push_back(x);
    return out;
}

class FacetCollector {
public:
    void add(int a, int b, int c)
    {
        Face f{a, b, c};
        std::sort(f.begin(), f.end());
        facets_.push_back(std::move(f));
    }

    std::vector<Face> take()
    {
        std::sort(facets_.begin(), facets_.end());
        facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
        return std::move(facets_);
    }

private:
    std::vector<Face> facets_;
};

template <typename Fn>
void lockstep(const std::vector<int>& xs, const std::vector<int>& ys, Fn fn)
{
    for (std::size_t i = 0; i < std::min(xs.size(), ys.size()); ++i)
        fn(xs[i], ys[i]);
}

} // namespace

std::vector<Face> friendship_facets_closed_form(int n)
{
    if (n < 1)
        throw InputError("friendship family needs n >= 1, got " + std::to_string(n));
    const int top = 5 * n + 1;
    const auto outer_a = progression(1, 3, 3 * n - 2); // 1,4,...,3n-2
    const auto outer_e = progression(2, 3, 3 * n - 1); // 2,5,...,3n-1
    const auto outer_b = progression(3, 3, 3 * n);     // 3,6,...,3n
    const auto odd = progression(1, 2, 2 * n - 1);     // 1,3,...,2n-1
    FacetCollector fc;

    // (1) outer triangle paths
    for (int i : outer_a)
        fc.add(i, i + 1, i + 2);
    // (2) outer vertex, centre edge, centre
    for (const auto* seq : {&outer_a, &outer_b})
        for (int i : *seq)
            for (int j = 3 * n + 1; j <= 5 * n; ++j)
                fc.add(i, j, top);
    // (3) three centre edges
    for (int i = 1; i <= 2 * n - 2; ++i)
        for (int j = i + 1; j <= 2 * n - 1; ++j)
            for (int k = j + 1; k <= 2 * n; ++k)
                fc.add(3 * n + i, 3 * n + j, 3 * n + k);
    // (4) two centre edges and the centre
    for (int i = 1; i <= 2 * n - 1; ++i)
        for (int j = i + 1; j <= 2 * n; ++j)
            fc.add(3 * n + i, 3 * n + j, top);
    // (5)
    for (const auto* seq : {&outer_a, &outer_e})
        lockstep(*seq, odd, [&](int i, int k) {
            fc.add(i, i + 1, 3 * n + k);
            fc.add(i, i + 1, 3 * n + k + 1);
        });
    // (6)
    for (const auto* seq : {&outer_a, &outer_e})
        for (int i : *seq)
            fc.add(i, i + 1, top);
    // (7)
    for (int i : progression(1, 3, 3 * n - 5))
        for (int j : progression(i + 3, 3, 3 * n - 2)) {
            fc.add(i, j, top);
            fc.add(i, j - 1, top);
        }
    for (int i : progression(3, 3, 3 * n - 3))
        for (int j : progression(i + 1, 3, 3 * n - 2)) {
            fc.add(i, j, top);
            fc.add(i, j + 2, top);
        }
    for (int i : outer_a)
        fc.add(i, 3 * n, top);
    // (8)
    lockstep(outer_e, odd, [&](int i, int j) {
        fc.add(i, 3 * n + j, top);
        fc.add(i, 3 * n + j + 1, top);
    });
    // (9)
    lockstep(outer_e, odd, [&](int i, int j) {
        for (int k = j + 1; k <= 2 * n; ++k)
            fc.add(i, 3 * n + j, 3 * n + k);
    });
    lockstep(progression(2, 3, 3 * n - 4), progression(2, 2, 2 * n - 2), [&](int i, int j) {
        for (int k = j + 1; k <= 2 * n; ++k)
            fc.add(i, 3 * n + j, 3 * n + k);
    });
    // (10)
    lockstep(progression(1, 3, 3 * n - 5), progression(0, 2, 2 * n - 4), [&](int i, int j) {
        for (int k = j + 2; k <= 2 * n - 1; ++k)
            fc.add(3 * n - i, 5 * n - k, 5 * n - j);
    });
    lockstep(progression(1, 3, 3 * n - 5), progression(1, 2, 2 * n - 3), [&](int i, int j) {
        for (int k = j + 1; k <= 2 * n - 1; ++k)
            fc.add(3 * n - i, 5 * n - k, 5 * n - j);
    });
    // (11)
    lockstep(outer_a, odd, [&](int i, int j) {
        fc.add(i, i + 2, 3 * n + j);
        fc.add(i, i + 2, 3 * n + j + 1);
    });
    // (12)
    lockstep(outer_a, odd, [&](int i, int j) {
        for (int k = j + 1; k <= 2 * n; ++k)
            fc.add(i, 3 * n + j, 3 * n + k);
    });
    lockstep(progression(3, 3, 3 * n - 3), progression(2, 2, 2 * n - 2), [&](int i, int j) {
        for (int k = j + 1; k <= 2 * n; ++k)
            fc.add(i, 3 * n + j, 3 * n + k);
    });
    // (13)
    lockstep(progression(2, 3, 3 * n - 4), progression(1, 2, 2 * n - 3), [&](int i, int j) {
        for (int k = j + 1; k <= 2 * n - 1; ++k)
            fc.add(3 * n - i, 5 * n - k, 5 * n - j);
    });
    lockstep(progression(0, 3, 3 * n - 3), progression(0, 2, 2 * n - 2), [&](int i, int j) {
        for (int k = j + 1; k <= 2 * n - 1; ++k)
            fc.add(3 * n - i, 5 * n - k, 5 * n - j);
    });
    return fc.take();
}

const std::vector<Face>& c42_published_facets()
{
    static const std::vector<Face> facets = {
        {1, 2, 3},  {2, 3, 4},  {3, 4, 5},   {4, 5, 6},  {5, 6, 7},   {6, 7, 8},   {1, 9, 10},
        {9, 10, 11}, {5, 10, 11}, {1, 3, 4},  {1, 3, 8},  {1, 3, 9},  {1, 7, 8},   {1, 2, 7},
        {1, 7, 9},  {1, 6, 7},  {1, 2, 10},  {1, 8, 10}, {1, 10, 11}, {2, 3, 5},   {3, 5, 6},
        {4, 5, 7},  {5, 7, 8},  {4, 5, 10},  {5, 6, 10}, {5, 9, 10},  {1, 2, 4},   {2, 4, 5},
        {1, 2, 9},  {2, 3, 9},  {2, 9, 10},  {1, 2, 8},  {2, 3, 8},   {2, 7, 8},   {1, 8, 9},
        {8, 9, 10}, {7, 8, 9},  {1, 9, 11},  {5, 9, 11}, {3, 4, 6},   {4, 6, 7},   {3, 4, 11},
        {4, 5, 11}, {4, 10, 11}, {5, 6, 11}, {6, 10, 11}, {6, 7, 11}, {5, 6, 8},   {1, 6, 8},
        {1, 3, 5},  {1, 5, 7},  {1, 5, 10},  {1, 3, 10}, {1, 7, 10},  {3, 5, 7},   {5, 7, 10},
        {3, 5, 10}, {2, 8, 9},  {2, 4, 9},   {2, 9, 11}, {2, 4, 6},   {2, 4, 8},   {2, 6, 8},
        {2, 4, 11}, {4, 6, 11}, {4, 6, 8},   {4, 9, 11}, {6, 9, 11},  {6, 8, 11},  {6, 8, 9},
        {8, 9, 11}, {3, 5, 11}, {5, 7, 11},
    };
    return facets;
}

SimplicialComplex c42_fixture()
{
    return SimplicialComplex::from_facets(c42_published_facets());
}

} // namespace tsc
