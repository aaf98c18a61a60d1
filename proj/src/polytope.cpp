#include "perdel/polytope.hpp"

#include "perdel/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace perdel {

using Bits = boost::dynamic_bitset<>;

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

LatticeVector operator-(const LatticeVector& a) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

std::int64_t dot(const LatticeVector& a, const LatticeVector& b) {
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
    if (s > INT64_MAX || s < INT64_MIN) throw Error("ArithmeticOverflow", "dot product exceeds 64 bits");
    return static_cast<std::int64_t>(s);
}

int affine_dimension(const std::vector<LatticeVector>& points) {
    if (points.empty()) return -1;
    std::vector<IntVec> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
    return static_cast<int>(int_rank(diffs));
}

std::vector<std::size_t> affine_basis(const std::vector<LatticeVector>& points) {
    std::vector<std::size_t> basis;
    if (points.empty()) return basis;
    basis.push_back(0);
    std::vector<IntVec> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        diffs.push_back(points[i] - points[0]);
        if (int_rank(diffs) == diffs.size())
            basis.push_back(i);
        else
            diffs.pop_back();
        if (diffs.size() == points[0].size()) break;
    }
    return basis;
}

std::vector<LatticeVector> canonical_translate(std::vector<LatticeVector> points, LatticeVector* shift) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    LatticeVector m = points.front();
    for (auto& p : points) p = p - m;
    if (shift) *shift = m;
    return points;
}

namespace {

struct HullFacet {
    IntVec normal;
    std::int64_t offset = 0;
    Bits points;
};

int affine_dim_of(const std::vector<IntVec>& pts, const Bits& subset) {
    std::vector<IntVec> chosen;
    for (auto i = subset.find_first(); i != Bits::npos; i = subset.find_next(i)) chosen.push_back(pts[i]);
    return affine_dimension(chosen);
}

// Hyperplane through d affinely independent points of Z^d, oriented so `inside` is >= offset.
HullFacet hyperplane(const std::vector<IntVec>& pts, const std::vector<std::size_t>& on, const IntVec& inside) {
    std::vector<IntVec> rows;
    for (std::size_t k = 1; k < on.size(); ++k) rows.push_back(pts[on[k]] - pts[on[0]]);
    HullFacet f;
    f.normal = cofactor_normal(rows, inside.size());
    f.offset = dot(f.normal, pts[on[0]]);
    if (dot(f.normal, inside) < f.offset) {
        f.normal = -f.normal;
        f.offset = -f.offset;
    }
    return f;
}

struct HullResult {
    std::vector<HullFacet> facets;
};

// Beneath-beyond over points that affinely span Z^d (d >= 1). Facets carry every input
// point lying on them, so non-simplicial facets come out merged.
HullResult hull_full_dim(const std::vector<IntVec>& pts, int d) {
    const std::size_t m = pts.size();
    std::vector<std::size_t> simplex = affine_basis(pts);
    if (static_cast<int>(simplex.size()) != d + 1) throw std::logic_error("hull: points do not span");

    std::vector<HullFacet> facets;
    for (std::size_t omit = 0; omit <= static_cast<std::size_t>(d); ++omit) {
        std::vector<std::size_t> on;
        for (std::size_t k = 0; k <= static_cast<std::size_t>(d); ++k)
            if (k != omit) on.push_back(simplex[k]);
        HullFacet f = hyperplane(pts, on, pts[simplex[omit]]);
        f.points = Bits(m);
        for (auto i : on) f.points.set(i);
        facets.push_back(std::move(f));
    }
    Bits inserted(m);
    for (auto i : simplex) inserted.set(i);

    for (std::size_t p = 0; p < m; ++p) {
        if (inserted.test(p)) continue;
        inserted.set(p);
        std::vector<std::int64_t> side(facets.size());
        bool any_visible = false;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            side[f] = dot(facets[f].normal, pts[p]) - facets[f].offset;
            if (side[f] < 0) any_visible = true;
        }
        if (!any_visible) {
            for (std::size_t f = 0; f < facets.size(); ++f)
                if (side[f] == 0) facets[f].points.set(p);
            continue;
        }
        std::map<std::pair<IntVec, std::int64_t>, Bits> created;
        std::vector<std::size_t> absorb;
        for (std::size_t v = 0; v < facets.size(); ++v) {
            if (side[v] >= 0) continue;
            for (std::size_t n = 0; n < facets.size(); ++n) {
                if (side[n] < 0) continue;
                Bits ridge = facets[v].points & facets[n].points;
                if (static_cast<int>(ridge.count()) < d - 1) continue;
                if (affine_dim_of(pts, ridge) != d - 2) continue;
                if (side[n] == 0) {
                    absorb.push_back(n);
                    continue;
                }
                std::vector<std::size_t> ridge_idx;
                for (auto i = ridge.find_first(); i != Bits::npos; i = ridge.find_next(i)) ridge_idx.push_back(i);
                std::vector<IntVec> ridge_pts;
                for (auto i : ridge_idx) ridge_pts.push_back(pts[i]);
                std::vector<std::size_t> on;
                for (auto k : affine_basis(ridge_pts)) on.push_back(ridge_idx[k]);
                on.push_back(p);
                Bits beyond = facets[n].points - ridge;
                HullFacet nf = hyperplane(pts, on, pts[beyond.find_first()]);
                Bits& slot = created[{nf.normal, nf.offset}];
                if (slot.size() == 0) slot = Bits(m);
                slot |= ridge;
                slot.set(p);
            }
        }
        for (auto n : absorb) facets[n].points.set(p);
        std::vector<HullFacet> kept;
        kept.reserve(facets.size() + created.size());
        for (std::size_t f = 0; f < facets.size(); ++f)
            if (side[f] >= 0) kept.push_back(std::move(facets[f]));
        for (auto& [key, bits] : created) kept.push_back({key.first, key.second, std::move(bits)});
        facets = std::move(kept);
    }
    return {std::move(facets)};
}

void enumerate_box(const Cell& c, const std::vector<std::pair<IntVec, std::int64_t>>& ineqs,
                   const IntVec& lo, const IntVec& hi, std::vector<LatticeVector>& out) {
    const std::size_t g = lo.size();
    // suffix_max[i][k] = max of sum_{j>=k} n_j x_j over the box
    std::vector<std::vector<std::int64_t>> suffix(ineqs.size(), std::vector<std::int64_t>(g + 1, 0));
    for (std::size_t i = 0; i < ineqs.size(); ++i)
        for (std::size_t k = g; k-- > 0;) {
            std::int64_t a = ineqs[i].first[k] * lo[k], b = ineqs[i].first[k] * hi[k];
            suffix[i][k] = suffix[i][k + 1] + std::max(a, b);
        }
    LatticeVector x(g);
    std::vector<std::int64_t> partial(ineqs.size(), 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == g) {
            for (std::size_t i = 0; i < ineqs.size(); ++i)
                if (partial[i] < ineqs[i].second) return;
            out.push_back(x);
            return;
        }
        for (std::int64_t v = lo[k]; v <= hi[k]; ++v) {
            x[k] = v;
            bool ok = true;
            for (std::size_t i = 0; i < ineqs.size(); ++i) {
                partial[i] += ineqs[i].first[k] * v;
                if (partial[i] + suffix[i][k + 1] < ineqs[i].second) ok = false;
            }
            if (ok) self(self, k + 1);
            for (std::size_t i = 0; i < ineqs.size(); ++i) partial[i] -= ineqs[i].first[k] * v;
        }
    };
    rec(rec, 0);
    (void)c;
}

std::vector<LatticeVector> scan_lattice_points(const Cell& c);

}  // namespace

Cell convex_hull(std::vector<LatticeVector> points) {
    if (points.empty()) throw std::invalid_argument("convex_hull of empty point set");
    const std::size_t g = points[0].size();
    for (const auto& p : points)
        if (p.size() != g) throw std::invalid_argument("convex_hull: mixed dimensions");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    Cell c;
    c.ambient_dim_ = g;
    std::vector<std::size_t> basis = affine_basis(points);
    const int d = static_cast<int>(basis.size()) - 1;
    c.affine_dim_ = d;

    // Affine hull equations: primitive integer basis of the orthogonal complement of the directions.
    if (d < static_cast<int>(g)) {
        Matrix dirs(static_cast<std::size_t>(d), g);
        for (int k = 1; k <= d; ++k)
            for (std::size_t j = 0; j < g; ++j) dirs(k - 1, j) = points[basis[k]][j] - points[basis[0]][j];
        Matrix ker = d > 0 ? kernel_basis(dirs) : Matrix::identity(g);
        for (std::size_t col = 0; col < ker.cols(); ++col) {
            Equation e;
            e.normal = primitive_integer(ker.col(col));
            e.offset = dot(e.normal, points[0]);
            c.equations_.push_back(std::move(e));
        }
    }

    if (d == 0) {
        c.vertices_ = {points[0]};
    } else {
        // Coordinates on which the projection of the affine hull is injective.
        std::vector<std::size_t> coords;
        if (d == static_cast<int>(g)) {
            for (std::size_t j = 0; j < g; ++j) coords.push_back(j);
        } else {
            std::vector<IntVec> cols_sel;
            for (std::size_t j = 0; j < g && static_cast<int>(coords.size()) < d; ++j) {
                IntVec column;
                for (int k = 1; k <= d; ++k) column.push_back(points[basis[k]][j] - points[basis[0]][j]);
                cols_sel.push_back(column);
                if (int_rank(cols_sel) == cols_sel.size())
                    coords.push_back(j);
                else
                    cols_sel.pop_back();
            }
        }
        std::vector<IntVec> proj(points.size(), IntVec(coords.size()));
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t k = 0; k < coords.size(); ++k) proj[i][k] = points[i][coords[k]];

        HullResult hr = hull_full_dim(proj, d);

        // A point is a vertex iff the normals of the facets through it have full rank d.
        std::vector<std::size_t> vertex_idx;
        for (std::size_t i = 0; i < points.size(); ++i) {
            std::vector<IntVec> normals;
            for (const auto& f : hr.facets)
                if (f.points.test(i)) normals.push_back(f.normal);
            if (static_cast<int>(normals.size()) >= d && static_cast<int>(int_rank(normals)) == d)
                vertex_idx.push_back(i);
        }
        std::map<std::size_t, std::size_t> new_index;
        for (auto i : vertex_idx) {
            new_index[i] = c.vertices_.size();
            c.vertices_.push_back(points[i]);
        }
        for (const auto& f : hr.facets) {
            Facet out;
            out.normal.assign(g, 0);
            for (std::size_t k = 0; k < coords.size(); ++k) out.normal[coords[k]] = f.normal[k];
            out.offset = f.offset;
            for (auto i : vertex_idx)
                if (f.points.test(i)) out.vertices.push_back(new_index[i]);
            c.facets_.push_back(std::move(out));
        }
        std::sort(c.facets_.begin(), c.facets_.end(),
                  [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
    }
    c.lattice_points_ = scan_lattice_points(c);
    return c;
}

namespace {

std::vector<LatticeVector> scan_lattice_points(const Cell& c) {
    const std::size_t g = c.ambient_dim();
    IntVec lo = c.vertices()[0], hi = c.vertices()[0];
    for (const auto& v : c.vertices())
        for (std::size_t j = 0; j < g; ++j) {
            lo[j] = std::min(lo[j], v[j]);
            hi[j] = std::max(hi[j], v[j]);
        }
    std::vector<std::pair<IntVec, std::int64_t>> ineqs;
    for (const auto& f : c.facets()) ineqs.emplace_back(f.normal, f.offset);
    for (const auto& e : c.equations()) {
        ineqs.emplace_back(e.normal, e.offset);
        ineqs.emplace_back(-e.normal, -e.offset);
    }
    std::vector<LatticeVector> out;
    enumerate_box(c, ineqs, lo, hi, out);
    return out;
}

}  // namespace

std::vector<LatticeVector> lattice_points(const Cell& c) { return c.lattice_points(); }

bool Cell::contains(const LatticeVector& x) const {
    for (const auto& f : facets_)
        if (dot(f.normal, x) < f.offset) return false;
    for (const auto& e : equations_)
        if (dot(e.normal, x) != e.offset) return false;
    return true;
}

Cell Cell::translated(const LatticeVector& t) const {
    Cell c = *this;
    for (auto& v : c.vertices_) v = v + t;
    for (auto& p : c.lattice_points_) p = p + t;
    for (auto& f : c.facets_) f.offset += dot(f.normal, t);
    for (auto& e : c.equations_) e.offset += dot(e.normal, t);
    return c;
}

std::vector<Face> Cell::proper_faces() const {
    const std::size_t nv = vertices_.size();
    std::vector<Bits> facet_bits;
    for (const auto& f : facets_) {
        Bits b(nv);
        for (auto i : f.vertices) b.set(i);
        facet_bits.push_back(std::move(b));
    }
    std::set<Bits> seen;
    std::vector<Bits> queue;
    for (const auto& b : facet_bits)
        if (b.any() && seen.insert(b).second) queue.push_back(b);
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (const auto& fb : facet_bits) {
            Bits inter = queue[q] & fb;
            if (inter.any() && inter != queue[q] && seen.insert(inter).second) queue.push_back(inter);
        }
    }
    std::vector<Face> faces;
    faces.reserve(queue.size());
    for (const auto& b : queue) {
        Face face;
        std::vector<LatticeVector> pts;
        for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) {
            face.vertices.push_back(i);
            pts.push_back(vertices_[i]);
        }
        face.dim = affine_dimension(pts);
        std::vector<std::size_t> tight;
        for (std::size_t f = 0; f < facets_.size(); ++f)
            if (b.is_subset_of(facet_bits[f])) tight.push_back(f);
        for (std::size_t i = 0; i < lattice_points_.size(); ++i) {
            bool on = true;
            for (auto f : tight)
                if (dot(facets_[f].normal, lattice_points_[i]) != facets_[f].offset) {
                    on = false;
                    break;
                }
            if (on) face.lattice_points.push_back(i);
        }
        faces.push_back(std::move(face));
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
    });
    return faces;
}

std::vector<std::vector<LatticeVector>> pulling_triangulation(const Cell& c) {
    std::vector<std::vector<LatticeVector>> out;
    if (c.is_simplex()) {
        out.push_back(c.vertices());
        return out;
    }
    const LatticeVector& apex = c.vertices()[0];
    for (const auto& f : c.facets()) {
        if (std::find(f.vertices.begin(), f.vertices.end(), std::size_t{0}) != f.vertices.end()) continue;
        std::vector<LatticeVector> fv;
        for (auto i : f.vertices) fv.push_back(c.vertices()[i]);
        Cell facet = convex_hull(fv);
        for (auto& s : pulling_triangulation(facet)) {
            s.insert(s.begin(), apex);
            out.push_back(std::move(s));
        }
    }
    return out;
}

Integer normalized_volume(const Cell& c) {
    if (!c.is_full_dimensional())
        throw Error("DegenerateCell", "normalized volume needs a full-dimensional cell");
    Integer total = 0;
    for (const auto& s : pulling_triangulation(c)) {
        std::vector<IntVec> rows;
        for (std::size_t k = 1; k < s.size(); ++k) rows.push_back(s[k] - s[0]);
        total += abs(int_determinant(rows));
    }
    return total;
}

bool is_simplicial_boundary(const Cell& c) {
    for (const auto& f : c.facets())
        if (f.vertices.size() != static_cast<std::size_t>(c.affine_dim())) return false;
    return true;
}

std::vector<std::vector<Cell>> lifted_triangulations(const Cell& c) {
    if (!c.is_full_dimensional()) throw Error("DegenerateCell", "triangulation needs a full-dimensional cell");
    const auto& vs = c.vertices();
    const std::size_t n = vs.size(), g = c.ambient_dim();
    if (n > 16) throw Error("TooManyVertices", "height enumeration is limited to 16 vertices");
    std::set<std::vector<std::vector<LatticeVector>>> seen;
    std::vector<std::vector<Cell>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<LatticeVector> lifted;
        for (std::size_t i = 0; i < n; ++i) {
            LatticeVector p = vs[i];
            p.push_back((mask >> i) & 1u);
            lifted.push_back(std::move(p));
        }
        Cell hull = convex_hull(lifted);
        if (!hull.is_full_dimensional()) continue;
        std::vector<std::vector<LatticeVector>> simplices;
        bool fine = true;
        for (const auto& f : hull.facets()) {
            if (f.normal[g] <= 0) continue;  // inner normal pointing up: a lower facet
            if (f.vertices.size() != g + 1) {
                fine = false;
                break;
            }
            std::vector<LatticeVector> s;
            for (auto k : f.vertices) {
                LatticeVector p = hull.vertices()[k];
                p.pop_back();
                s.push_back(std::move(p));
            }
            std::sort(s.begin(), s.end());
            simplices.push_back(std::move(s));
        }
        if (!fine || simplices.size() < 2) continue;
        std::sort(simplices.begin(), simplices.end());
        if (!seen.insert(simplices).second) continue;
        std::vector<Cell> t;
        for (auto& s : simplices) t.push_back(convex_hull(std::move(s)));
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const std::vector<Cell>& a, const std::vector<Cell>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](const Cell& x, const Cell& y) { return x.vertices() < y.vertices(); });
    });
    return out;
}

}  // namespace perdel
