#include "perdel/decomposition.hpp"

#include "perdel/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace perdel {

namespace {

std::string show(const LatticeVector& v) {
    std::ostringstream s;
    s << '(';
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    s << ')';
    return s.str();
}

struct Occurrence {
    std::size_t cls;
    LatticeVector shift;
    LatticeVector normal;  // only meaningful for facets
};

// (a, b, t) with a <= b, and t lexicographically positive when a == b.
Wall normalized(std::size_t a, std::size_t b, LatticeVector t, std::vector<LatticeVector> face) {
    bool flip = a > b || (a == b && t < LatticeVector(t.size(), 0));
    if (flip) {
        for (auto& v : face) v = v - t;
        std::swap(a, b);
        t = -t;
    }
    std::sort(face.begin(), face.end());
    Wall w;
    w.a = a;
    w.b = b;
    w.t = std::move(t);
    w.face_dim = affine_dimension(face);
    w.face_vertices = std::move(face);
    return w;
}

bool needs_face_scan(const Cell& c) {
    return c.lattice_points().size() != c.vertices().size() || !is_simplicial_boundary(c);
}

}  // namespace

Integer factorial(std::size_t n) {
    Integer f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

PeriodicDecomposition PeriodicDecomposition::pullback(std::size_t g, std::size_t fiber_rank,
                                                     std::vector<Cell> base_cells) {
    if (fiber_rank == 0 || fiber_rank > g) throw Error("InvalidFiberRank", "pullback needs 0 < a <= g");
    PeriodicDecomposition d;
    if (fiber_rank < g) {
        if (base_cells.empty()) throw Error("MissingBase", "pullback with a < g needs base cells");
        d = from_cells(g - fiber_rank, std::move(base_cells));
    } else if (!base_cells.empty()) {
        throw Error("InvalidFiberRank", "a = g has a point as base; no cells allowed");
    }
    d.dim_ = g;
    d.fiber_rank_ = fiber_rank;
    return d;
}

PeriodicDecomposition PeriodicDecomposition::base() const {
    if (fiber_rank_ == 0) throw Error("NotPullback", "decomposition is already polytopal");
    PeriodicDecomposition b = *this;
    b.dim_ = dim_ - fiber_rank_;
    b.fiber_rank_ = 0;
    return b;
}

PeriodicDecomposition PeriodicDecomposition::from_cells(std::size_t g, std::vector<Cell> cells) {
    PeriodicDecomposition d;
    d.dim_ = g;
    for (auto& c : cells) {
        if (c.ambient_dim() != g) throw Error("NotFaceFitting", "cell ambient dimension differs from g");
        if (!c.is_full_dimensional()) throw Error("NotFaceFitting", "maximal cell is not full-dimensional");
        c = c.translated(-c.vertices().front());
    }
    std::sort(cells.begin(), cells.end(),
              [](const Cell& x, const Cell& y) { return x.vertices() < y.vertices(); });
    for (std::size_t i = 1; i < cells.size(); ++i)
        if (cells[i] == cells[i - 1]) throw Error("NotFaceFitting", "duplicate cell class");
    d.cells_ = std::move(cells);

    // Codimension-1 walls: every facet class occurs exactly twice, from opposite sides.
    std::map<std::vector<LatticeVector>, std::vector<Occurrence>> facets;
    for (std::size_t i = 0; i < d.cells_.size(); ++i) {
        const Cell& c = d.cells_[i];
        for (const auto& f : c.facets()) {
            std::vector<LatticeVector> pts;
            for (auto k : f.vertices) pts.push_back(c.vertices()[k]);
            LatticeVector shift;
            auto key = canonical_translate(pts, &shift);
            facets[key].push_back({i, shift, f.normal});
        }
    }
    std::set<std::tuple<std::size_t, std::size_t, LatticeVector, std::vector<LatticeVector>>> seen;
    auto add = [&](Wall w) {
        if (seen.emplace(w.a, w.b, w.t, w.face_vertices).second) d.walls_.push_back(std::move(w));
    };
    for (const auto& [key, occ] : facets) {
        if (occ.size() != 2 || occ[0].normal != -occ[1].normal)
            throw Error("NotFaceFitting", "facet class " + show(key.back()) + " is shared by " +
                                              std::to_string(occ.size()) + " cells");
        std::vector<LatticeVector> face;
        for (const auto& p : key) face.push_back(p + occ[0].shift);
        add(normalized(occ[0].cls, occ[1].cls, occ[0].shift - occ[1].shift, std::move(face)));
    }

    // Lower-dimensional shared faces, only where they carry extra lattice points.
    std::map<std::vector<LatticeVector>, std::vector<Occurrence>> low;
    for (std::size_t i = 0; i < d.cells_.size(); ++i) {
        const Cell& c = d.cells_[i];
        if (!needs_face_scan(c)) continue;
        for (const auto& f : c.proper_faces()) {
            if (f.dim + 1 >= static_cast<int>(g)) continue;
            if (f.lattice_points.size() <= static_cast<std::size_t>(f.dim + 1)) continue;
            std::vector<LatticeVector> pts;
            for (auto k : f.vertices) pts.push_back(c.vertices()[k]);
            LatticeVector shift;
            auto key = canonical_translate(pts, &shift);
            low[key].push_back({i, shift, {}});
        }
    }
    for (const auto& [key, occ] : low) {
        for (std::size_t x = 0; x < occ.size(); ++x)
            for (std::size_t y = x + 1; y < occ.size(); ++y) {
                std::vector<LatticeVector> face;
                for (const auto& p : key) face.push_back(p + occ[x].shift);
                add(normalized(occ[x].cls, occ[y].cls, occ[x].shift - occ[y].shift, std::move(face)));
            }
    }
    std::sort(d.walls_.begin(), d.walls_.end(), [](const Wall& x, const Wall& y) {
        return std::tie(x.a, x.b, x.t, x.face_vertices) < std::tie(y.a, y.b, y.t, y.face_vertices);
    });
    return d;
}

Integer PeriodicDecomposition::total_volume() const {
    if (fiber_rank_ > 0) throw Error("NotPolytopal", "a pullback has unbounded cells");
    Integer v = 0;
    for (const auto& c : cells_) v += normalized_volume(c);
    return v;
}

bool PeriodicDecomposition::locate(const std::vector<LatticeVector>& vertices, std::size_t* index,
                                   LatticeVector* t) const {
    LatticeVector shift;
    auto key = canonical_translate(vertices, &shift);
    auto it = std::lower_bound(cells_.begin(), cells_.end(), key,
                               [](const Cell& c, const std::vector<LatticeVector>& k) { return c.vertices() < k; });
    if (it == cells_.end() || it->vertices() != key) return false;
    if (index) *index = static_cast<std::size_t>(it - cells_.begin());
    if (t) *t = shift;
    return true;
}

void PeriodicDecomposition::validate() const {
    if (fiber_rank_ > 0) return;
    Integer vol = total_volume();
    if (vol != factorial(dim_))
        throw Error("TilingVolume", "class volumes sum to " + vol.get_str() + ", expected " + factorial(dim_).get_str());

    // Centroid of each sampled class must lie strictly inside no other translate of any class.
    const std::size_t g = dim_;
    std::vector<LatticeVector> lo(cells_.size(), LatticeVector(g)), hi(cells_.size(), LatticeVector(g));
    for (std::size_t j = 0; j < cells_.size(); ++j) {
        lo[j] = hi[j] = cells_[j].vertices().front();
        for (const auto& v : cells_[j].vertices())
            for (std::size_t k = 0; k < g; ++k) {
                lo[j][k] = std::min(lo[j][k], v[k]);
                hi[j][k] = std::max(hi[j][k], v[k]);
            }
    }
    const std::size_t samples = 48;
    std::size_t stride = std::max<std::size_t>(1, cells_.size() / samples);
    long budget = 20'000'000;  // translate tests; a spot check, not an exhaustive one
    for (std::size_t i = 0; i < cells_.size() && budget > 0; i += stride) {
        const auto& vs = cells_[i].vertices();
        const auto k = static_cast<std::int64_t>(vs.size());
        LatticeVector sum(g, 0);
        for (const auto& v : vs) sum = sum + v;
        for (std::size_t j = 0; j < cells_.size(); ++j) {
            // translates t with centroid - t inside the bounding box of class j
            LatticeVector tlo(g), thi(g);
            bool empty = false;
            for (std::size_t c = 0; c < g; ++c) {
                // ceil((sum - k*hi)/k) <= t <= floor((sum - k*lo)/k)
                auto fl = [](std::int64_t a, std::int64_t b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
                tlo[c] = -fl(k * hi[j][c] - sum[c], k);
                thi[c] = fl(sum[c] - k * lo[j][c], k);
                if (tlo[c] > thi[c]) empty = true;
            }
            if (empty) continue;
            LatticeVector t = tlo;
            while (true) {
                --budget;
                if (!(j == i && t == LatticeVector(g, 0))) {
                    bool inside = true;
                    for (const auto& f : cells_[j].facets())
                        if (dot(f.normal, sum) - k * dot(f.normal, t) <= k * f.offset) {
                            inside = false;
                            break;
                        }
                    if (inside)
                        throw Error("NotFaceFitting", "interior of class " + std::to_string(i) +
                                                          " overlaps class " + std::to_string(j) + " + " + show(t));
                }
                std::size_t c = 0;
                while (c < g && t[c] == thi[c]) t[c] = tlo[c], ++c;
                if (c == g) break;
                ++t[c];
            }
        }
    }
}

bool is_centrally_symmetric(const PeriodicDecomposition& d) {
    for (const auto& c : d.cells()) {
        std::vector<LatticeVector> neg;
        for (const auto& v : c.vertices()) neg.push_back(-v);
        if (!d.locate(neg, nullptr, nullptr)) return false;
    }
    return true;
}

std::size_t wall_hyperplane_classes(const PeriodicDecomposition& d) {
    std::set<LatticeVector> normals;
    for (const auto& w : d.walls()) {
        if (!w.codim1(d.dim())) continue;
        std::vector<IntVec> rows;
        for (std::size_t i = 1; i < w.face_vertices.size(); ++i) rows.push_back(w.face_vertices[i] - w.face_vertices[0]);
        // the face spans a hyperplane; reduce to an independent set of directions
        std::vector<IntVec> basis;
        for (const auto& r : rows) {
            basis.push_back(r);
            if (int_rank(basis) < basis.size()) basis.pop_back();
        }
        IntVec n = cofactor_normal(basis, d.dim());
        for (auto x : n)
            if (x != 0) {
                if (x < 0) n = -n;
                break;
            }
        normals.insert(n);
    }
    return normals.size();
}

}  // namespace perdel
