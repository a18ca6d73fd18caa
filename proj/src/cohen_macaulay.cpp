#include "tsc/cohen_macaulay.hpp"

#include <functional>
#include <string>

#include "tsc/error.hpp"
#include "tsc/homology.hpp"
#include "tsc/total_complex.hpp"

namespace tsc {

namespace {

// Highest degree (exclusive) that must vanish at a face of the given size,
// whose link has dimension link_dim.
using DegreeBound = std::function<int(int face_size, int link_dim)>;

std::optional<CmWitness> first_failing_link(const SimplicialComplex& complex, int min_size,
                                            FieldSpec field, const DegreeBound& bound)
{
    const auto faces = all_faces(complex);
    for (int size = static_cast<int>(faces.size()); size >= min_size; --size) {
        std::vector<Face> layer = size == 0 ? std::vector<Face>{Face{}}
                                            : faces[static_cast<std::size_t>(size - 1)];
        for (const Face& sigma : layer) {
            const SimplicialComplex lk = link(complex, sigma);
            const int limit = bound(size, lk.dimension());
            if (limit <= 0)
                continue;
            const HomologySummary h = homology_summary(lk, field);
            for (int r = 0; r < limit; ++r)
                if (auto b = h.reduced(r); b != 0)
                    return CmWitness{sigma, r, b};
        }
    }
    return std::nullopt;
}

} // namespace

CmReport is_cm(const SimplicialComplex& complex, FieldSpec field)
{
    CmReport report;
    report.field = field;
    report.purity_ok = complex.is_pure();
    report.witness = first_failing_link(complex, 0, field,
                                        [](int, int link_dim) { return link_dim; });
    report.verdict = !report.witness.has_value();
    return report;
}

CmReport is_cm_t(const SimplicialComplex& complex, int t, FieldSpec field)
{
    const int d = complex.dimension() + 1;
    if (t < 0 || t > d)
        throw InputError("CM_t parameter t = " + std::to_string(t) + " outside [0," +
                         std::to_string(d) + "]");
    CmReport report;
    report.field = field;
    report.purity_ok = complex.is_pure();
    if (!report.purity_ok)
        return report;
    report.witness = first_failing_link(complex, t, field,
                                        [d](int size, int) { return d - size - 1; });
    report.verdict = !report.witness.has_value();
    return report;
}

bool tsc_cm_shortcut(const Graph& g, const TotalLabeling& labels, FieldSpec field)
{
    if (!g.is_connected())
        throw InputError("the H1 shortcut needs a connected graph; a disconnected graph "
                         "gives a disconnected complex, which is neither CM nor Buchsbaum");
    return homology_summary(build_tsc(g, labels), field).reduced(1) == 0;
}

bool vertex_links_connected(const SimplicialComplex& complex)
{
    for (int v : complex.vertices())
        if (!is_facet_connected(link(complex, {v})))
            return false;
    return true;
}

} // namespace tsc
