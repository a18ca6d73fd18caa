#include "tsc/complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tsc/error.hpp"

namespace tsc {

Face canonical_face(Face face)
{
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    return face;
}

bool is_subset(const Face& small, const Face& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

SimplicialComplex::SimplicialComplex(std::vector<Face> facets) : facets_(std::move(facets))
{
    for (const Face& f : facets_)
        vertices_.insert(vertices_.end(), f.begin(), f.end());
    vertices_ = canonical_face(std::move(vertices_));
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> sets)
{
    if (sets.empty())
        throw InputError("a complex needs at least one facet");
    for (Face& s : sets) {
        if (s.empty())
            throw InputError("facets must be non-empty");
        s = canonical_face(std::move(s));
    }
    // Larger sets first, so each candidate only has to be compared with kept ones.
    std::sort(sets.begin(), sets.end(), [](const Face& a, const Face& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Face> kept;
    for (Face& s : sets) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Face& k) {
            return k.size() > s.size() && is_subset(s, k);
        });
        if (!dominated)
            kept.push_back(std::move(s));
    }
    std::sort(kept.begin(), kept.end());
    return SimplicialComplex(std::move(kept));
}

int SimplicialComplex::dimension() const
{
    std::size_t widest = 0;
    for (const Face& f : facets_)
        widest = std::max(widest, f.size());
    return static_cast<int>(widest) - 1;
}

bool SimplicialComplex::is_pure() const
{
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return f.size() == facets_.front().size(); });
}

bool SimplicialComplex::contains(const Face& face) const
{
    if (face.empty())
        return true;
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return is_subset(face, f); });
}

std::vector<std::vector<Face>> all_faces(const SimplicialComplex& complex)
{
    const int dim = complex.dimension();
    std::vector<std::vector<Face>> faces(static_cast<std::size_t>(dim + 1));
    for (const Face& facet : complex.facets()) {
        const std::size_t k = facet.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
            Face sub;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1U)
                    sub.push_back(facet[i]);
            faces[sub.size() - 1].push_back(std::move(sub));
        }
    }
    for (auto& bucket : faces) {
        std::sort(bucket.begin(), bucket.end());
        bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
    }
    return faces;
}

FVector f_vector(const SimplicialComplex& complex)
{
    FVector f;
    for (const auto& bucket : all_faces(complex))
        f.push_back(static_cast<std::int64_t>(bucket.size()));
    return f;
}

int facet_component_count(const SimplicialComplex& complex)
{
    const auto& verts = complex.vertices();
    auto index_of = [&](int v) {
        return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) -
                                        verts.begin());
    };
    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = static_cast<int>(verts.size());
    for (const Face& f : complex.facets()) {
        const std::size_t root = find(index_of(f.front()));
        for (int v : f) {
            const std::size_t r = find(index_of(v));
            if (r != root) {
                parent[r] = root;
                --components;
            }
        }
    }
    return components;
}

bool is_facet_connected(const SimplicialComplex& complex)
{
    return facet_component_count(complex) <= 1;
}

SimplicialComplex link(const SimplicialComplex& complex, const Face& sigma_in)
{
    const Face sigma = canonical_face(sigma_in);
    if (sigma.empty())
        return complex;
    if (!complex.contains(sigma)) {
        std::string text;
        for (int v : sigma)
            text += (text.empty() ? "" : ",") + std::to_string(v);
        throw InputError("{" + text + "} is not a face of the complex");
    }
    std::vector<Face> rest;
    for (const Face& f : complex.facets()) {
        if (!is_subset(sigma, f))
            continue;
        Face r;
        std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(), std::back_inserter(r));
        if (!r.empty())
            rest.push_back(std::move(r));
    }
    if (rest.empty())
        return SimplicialComplex::empty_face_only();
    return SimplicialComplex::from_facets(std::move(rest));
}

} // namespace tsc
