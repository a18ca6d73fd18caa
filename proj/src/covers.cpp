#include "tsc/covers.hpp"

#include <algorithm>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "tsc/error.hpp"

namespace tsc {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

class CoverSearch {
public:
    explicit CoverSearch(const SimplicialComplex& complex) : verts_(complex.vertices())
    {
        const std::size_t nv = verts_.size();
        incident_.resize(nv);
        for (const Face& f : complex.facets()) {
            std::vector<std::size_t> idx;
            for (int v : f)
                idx.push_back(index_of(v));
            for (std::size_t i : idx)
                incident_[i].push_back(facets_.size());
            facets_.push_back(std::move(idx));
        }
        hits_.assign(facets_.size(), 0);
        chosen_ = Bits(nv);
    }

    std::vector<Bits> run()
    {
        Bits forbidden(verts_.size());
        descend(forbidden, 0);
        return std::move(found_);
    }

    int label(std::size_t i) const { return verts_[i]; }

private:
    std::size_t index_of(int v) const
    {
        return static_cast<std::size_t>(std::lower_bound(verts_.begin(), verts_.end(), v) -
                                        verts_.begin());
    }

    bool has_private_facet(std::size_t v) const
    {
        return std::any_of(incident_[v].begin(), incident_[v].end(),
                           [&](std::size_t f) { return hits_[f] == 1; });
    }

    bool all_chosen_private() const
    {
        for (auto v = chosen_.find_first(); v != Bits::npos; v = chosen_.find_next(v))
            if (!has_private_facet(v))
                return false;
        return true;
    }

    void descend(Bits forbidden, std::size_t from)
    {
        std::size_t f = from;
        while (f < facets_.size() && hits_[f] > 0)
            ++f;
        if (f == facets_.size()) {
            found_.push_back(chosen_);
            return;
        }
        for (std::size_t v : facets_[f]) {
            if (forbidden.test(v))
                continue;
            choose(v, +1);
            if (all_chosen_private())
                descend(forbidden, f + 1);
            choose(v, -1);
            forbidden.set(v);
        }
    }

    void choose(std::size_t v, int delta)
    {
        chosen_[v] = delta > 0;
        for (std::size_t f : incident_[v])
            hits_[f] += delta;
    }

    std::vector<int> verts_;
    std::vector<std::vector<std::size_t>> facets_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<int> hits_;
    Bits chosen_;
    std::vector<Bits> found_;
};

} // namespace

CoverReport minimal_vertex_covers(const SimplicialComplex& complex)
{
    CoverReport report;
    if (complex.is_empty_face_only())
        return report;
    CoverSearch search(complex);
    std::vector<Bits> raw = search.run();

    std::sort(raw.begin(), raw.end(),
              [](const Bits& a, const Bits& b) { return a.count() < b.count(); });
    std::vector<Bits> minimal;
    for (const Bits& c : raw) {
        bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const Bits& m) {
            return m.is_subset_of(c);
        });
        if (!dominated)
            minimal.push_back(c);
    }
    for (const Bits& c : minimal) {
        Face cover;
        for (auto v = c.find_first(); v != Bits::npos; v = c.find_next(v))
            cover.push_back(search.label(v));
        report.covers.push_back(std::move(cover));
    }
    std::sort(report.covers.begin(), report.covers.end());
    for (const Face& c : report.covers)
        report.cardinalities.push_back(static_cast<int>(c.size()));
    std::sort(report.cardinalities.begin(), report.cardinalities.end());
    report.unmixed = report.cardinalities.empty() ||
                     report.cardinalities.front() == report.cardinalities.back();
    return report;
}

bool is_unmixed(const SimplicialComplex& complex)
{
    return minimal_vertex_covers(complex).unmixed;
}

std::vector<PrimeComponent> facet_ideal_decomposition(const SimplicialComplex& complex)
{
    std::vector<PrimeComponent> out;
    for (Face& c : minimal_vertex_covers(complex).covers)
        out.push_back({std::move(c)});
    return out;
}

std::string to_string(const std::vector<PrimeComponent>& components)
{
    std::string s;
    for (const auto& p : components) {
        if (!s.empty())
            s += " ∩ ";
        s += "(";
        for (std::size_t i = 0; i < p.variables.size(); ++i)
            s += (i ? ",x" : "x") + std::to_string(p.variables[i]);
        s += ")";
    }
    return s;
}

std::vector<Face> stanley_reisner_generators(const SimplicialComplex& complex)
{
    std::vector<Face> out;
    if (complex.is_empty_face_only())
        return out;
    const auto faces = all_faces(complex);
    const auto& verts = complex.vertices();
    auto is_face = [&](const Face& f) {
        if (f.empty())
            return true;
        if (f.size() > faces.size())
            return false;
        const auto& bucket = faces[f.size() - 1];
        return std::binary_search(bucket.begin(), bucket.end(), f);
    };
    // A minimal non-face of size k extends the (k-1)-face formed by its smallest
    // k-1 vertices.
    for (std::size_t k = 2; k <= faces.size() + 1; ++k) {
        std::vector<Face> layer;
        for (const Face& base : faces[k - 2]) {
            for (auto it = std::upper_bound(verts.begin(), verts.end(), base.back());
                 it != verts.end(); ++it) {
                Face cand = base;
                cand.push_back(*it);
                if (is_face(cand))
                    continue;
                bool minimal = true;
                for (std::size_t j = 0; j + 1 < cand.size() && minimal; ++j) {
                    Face sub = cand;
                    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
                    minimal = is_face(sub);
                }
                if (minimal)
                    layer.push_back(std::move(cand));
            }
        }
        std::sort(layer.begin(), layer.end());
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::int64_t friendship_cover_count(int n)
{
    if (n < 2)
        throw DomainError("cover-count formula 3^(n-2)(2n^2+19n+9) is only used for n >= 2 "
                          "(at n = 1 it gives 10 while Δ_T(F_6) has 15 minimal covers)");
    std::int64_t power = 1;
    for (int i = 0; i < n - 2; ++i)
        power *= 3;
    const std::int64_t nn = n;
    return power * (2 * nn * nn + 19 * nn + 9);
}

} // namespace tsc
