#include "tsc/homology.hpp"

#include <algorithm>
#include <sstream>

#include "tsc/error.hpp"

namespace tsc {

std::int64_t BoundaryMatrix::at(std::size_t row, std::size_t col) const
{
    for (auto [rr, v] : entries.columns.at(col))
        if (rr == row)
            return v;
    return 0;
}

BoundaryMatrix boundary_matrix(const std::vector<std::vector<Face>>& faces, int r)
{
    const int dim = static_cast<int>(faces.size()) - 1;
    if (r < 1 || r > dim)
        throw InputError("boundary matrix dimension " + std::to_string(r) + " outside [1," +
                         std::to_string(dim) + "]");
    BoundaryMatrix m;
    m.r = r;
    m.row_basis = faces[static_cast<std::size_t>(r - 1)];
    m.col_basis = faces[static_cast<std::size_t>(r)];
    m.entries.rows = m.row_basis.size();
    m.entries.cols = m.col_basis.size();
    m.entries.columns.reserve(m.col_basis.size());
    for (const Face& sigma : m.col_basis) {
        std::vector<std::pair<std::size_t, std::int64_t>> col;
        for (std::size_t j = 0; j < sigma.size(); ++j) {
            Face facet = sigma;
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(j));
            auto it = std::lower_bound(m.row_basis.begin(), m.row_basis.end(), facet);
            col.emplace_back(static_cast<std::size_t>(it - m.row_basis.begin()),
                             j % 2 == 0 ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
        m.entries.columns.push_back(std::move(col));
    }
    return m;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int r)
{
    return boundary_matrix(all_faces(complex), r);
}

std::string export_triplets(const BoundaryMatrix& m)
{
    std::ostringstream out;
    for (std::size_t c = 0; c < m.entries.columns.size(); ++c)
        for (auto [row, v] : m.entries.columns[c])
            out << m.r << ' ' << row << ' ' << c << ' ' << v << '\n';
    return out.str();
}

std::int64_t HomologySummary::reduced(int r) const
{
    if (r < 0 || r >= static_cast<int>(reduced_betti.size()))
        return 0;
    return reduced_betti[static_cast<std::size_t>(r)];
}

HomologySummary homology_summary(const SimplicialComplex& complex, FieldSpec field)
{
    HomologySummary h;
    h.field = field;
    const auto faces = all_faces(complex);
    const int dim = static_cast<int>(faces.size()) - 1;
    for (const auto& bucket : faces)
        h.alpha.push_back(static_cast<std::int64_t>(bucket.size()));
    if (dim < 0)
        return h;

    h.rank_im.assign(static_cast<std::size_t>(dim) + 2, 0);
    for (int r = 1; r <= dim; ++r)
        h.rank_im[static_cast<std::size_t>(r)] =
            static_cast<std::int64_t>(rank_over(boundary_matrix(faces, r), field));
    for (int r = 0; r <= dim; ++r) {
        const auto ur = static_cast<std::size_t>(r);
        h.rank_ker.push_back(h.alpha[ur] - h.rank_im[ur]);
        h.betti.push_back(h.rank_ker[ur] - h.rank_im[ur + 1]);
    }
    h.reduced_betti = h.betti;
    h.reduced_betti[0] -= 1;
    return h;
}

std::int64_t euler_characteristic(const SimplicialComplex& complex)
{
    std::int64_t chi = 0, sign = 1;
    for (std::int64_t a : f_vector(complex)) {
        chi += sign * a;
        sign = -sign;
    }
    return chi;
}

} // namespace tsc
