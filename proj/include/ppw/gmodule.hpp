#pragma once

// Finitely supported graded left modules over a quotient of the truncated
// preprojective algebra.  A module stores one space per (vertex, degree) and
// one matrix per (double-quiver arrow, degree); for an arrow a: u -> v the
// left action prepends a, so the matrix maps the v-component to the
// u-component, raising the degree by deg(a).
//
// Conventions: shifts are (X(j))_d = X_{d+j}; a degree-s homomorphism
// X -> Y(s) is a family f_{u,d}: X_{u,d} -> Y_{u,d+s} commuting with all
// arrow actions.  Homomorphisms of modules over Pi_w are exactly the
// Pi-linear ones, so a single solver serves every quotient.

#include "ppw/preproj.hpp"
#include <functional>

namespace ppw {

template <class F>
struct GModule {
    const QuotAlg<F>* owner = nullptr; // algebra supplying the graded projectives
    int lo = 0, hi = -1;               // support window (empty when hi < lo)
    std::vector<std::vector<int>> dims;    // [vi][d-lo]
    std::vector<std::vector<Mat<F>>> act;  // [aid][d-lo]: X_{t(a),d} -> X_{s(a),d+deg a}

    const DoubleQuiver& dq() const { return owner->A->dq; }
    int nv() const { return dq().n(); }
    int na() const { return (int)dq().arrows.size(); }
    bool empty_window() const { return hi < lo; }
    int dim(int vi, int d) const {
        if (d < lo || d > hi) return 0;
        return dims[vi][d - lo];
    }
    int total_dim() const {
        int s = 0;
        for (auto& row : dims)
            for (int x : row) s += x;
        return s;
    }
    std::map<std::pair<int, int>, int> dim_table() const { // (vertex id, degree) -> dim
        std::map<std::pair<int, int>, int> t;
        for (int vi = 0; vi < nv(); ++vi)
            for (int d = lo; d <= hi; ++d)
                if (dim(vi, d)) t[{dq().base.verts[vi], d}] = dim(vi, d);
        return t;
    }
    // action matrix from slot (t(a), d); zero-shaped when outside the window
    Mat<F> action(int aid, int d) const {
        const DArrow& a = dq().arrow(aid);
        int svi = dq().vindex(a.src), tvi = dq().vindex(a.tgt);
        if (d < lo || d > hi) return Mat<F>(dim(svi, d + a.deg), 0);
        Mat<F> m = act[aid][d - lo];
        if (m.r == 0 && m.c == 0)
            return Mat<F>(dim(svi, d + a.deg), dim(tvi, d));
        return m;
    }

    static GModule zero(const QuotAlg<F>& owner_) {
        GModule x;
        x.owner = &owner_;
        x.lo = 0;
        x.hi = -1;
        return x;
    }
    void alloc() {
        int w = hi - lo + 1;
        if (w < 0) w = 0;
        dims.assign(nv(), std::vector<int>(w, 0));
        act.assign(na(), std::vector<Mat<F>>(w));
    }
    // drop empty boundary degrees
    void tighten() {
        while (lo <= hi) {
            bool any = false;
            for (int vi = 0; vi < nv(); ++vi) any |= dims[vi][hi - lo] > 0;
            if (any) break;
            for (int vi = 0; vi < nv(); ++vi) dims[vi].pop_back();
            for (int a = 0; a < na(); ++a) act[a].pop_back();
            --hi;
        }
        while (lo <= hi) {
            bool any = false;
            for (int vi = 0; vi < nv(); ++vi) any |= dims[vi][0] > 0;
            if (any) break;
            for (int vi = 0; vi < nv(); ++vi) dims[vi].erase(dims[vi].begin());
            for (int a = 0; a < na(); ++a) act[a].erase(act[a].begin());
            ++lo;
        }
        if (lo > hi) { lo = 0; hi = -1; dims.clear(); act.clear(); alloc(); }
    }

    // apply the left action of a path (composable chain, rightmost arrow acts
    // first) to a vector sitting in slot (vertex of path target, degree d)
    Vec<F> apply_path(const std::vector<int>& path, int d, Vec<F> x) const {
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            x = action(*it, d).apply(x);
            d += dq().arrow(*it).deg;
        }
        return x;
    }
    // left action of an ambient algebra element z (coordinates in the degree
    // dz piece of the untruncated-basis algebra) on x in slot (uvi, d);
    // returns per-vertex components stacked into the slots (v, d+dz).  Only
    // basis paths ending at the slot vertex act; the rest annihilate x.
    std::vector<Vec<F>> apply_elt(const Vec<F>& z, int dz, int uvi, int d,
                                  const Vec<F>& x) const {
        const PreprojAlg<F>& A = *owner->A;
        std::vector<Vec<F>> out(nv());
        for (int vi = 0; vi < nv(); ++vi) out[vi] = Vec<F>(dim(vi, d + dz), fof<F>(0));
        for (int i = 0; i < A.dim(dz); ++i) {
            if (fis_zero(z[i])) continue;
            auto& e = A.elt(dz, i);
            if (dq().vindex(e.v) != uvi) continue;
            Vec<F> t = apply_path(e.path, d, x);
            int vi = dq().vindex(e.u);
            for (size_t k = 0; k < t.size(); ++k)
                if (!fis_zero(t[k])) out[vi][k] += z[i] * t[k];
        }
        return out;
    }
};

// degree shift: shift(X, j) = X(j)
template <class F>
GModule<F> shift(const GModule<F>& x, int j) {
    GModule<F> y = x;
    y.lo -= j;
    y.hi -= j;
    return y;
}

// X_{>= i}: the degrees-at-least-i submodule (closed since degrees only rise)
template <class F>
GModule<F> truncate_below(const GModule<F>& x, int i) {
    GModule<F> y = x;
    while (y.lo < i && y.lo <= y.hi) {
        for (int vi = 0; vi < y.nv(); ++vi) y.dims[vi].erase(y.dims[vi].begin());
        for (int a = 0; a < y.na(); ++a) y.act[a].erase(y.act[a].begin());
        ++y.lo;
    }
    if (y.lo > y.hi) { y.lo = 0; y.hi = -1; y.dims.clear(); y.act.clear(); y.alloc(); }
    y.tighten();
    return y;
}

// X_{<= i} = X / X_{>= i+1}
template <class F>
GModule<F> truncate_above(const GModule<F>& x, int i) {
    GModule<F> y = x;
    while (y.hi > i && y.lo <= y.hi) {
        for (int vi = 0; vi < y.nv(); ++vi) y.dims[vi].pop_back();
        for (int a = 0; a < y.na(); ++a) y.act[a].pop_back();
        --y.hi;
    }
    if (y.lo > y.hi) { y.lo = 0; y.hi = -1; y.dims.clear(); y.act.clear(); y.alloc(); }
    // maps leaving the window become zero-shaped; recompute boundary actions
    for (int a = 0; a < y.na(); ++a)
        for (int d = y.lo; d <= y.hi; ++d) {
            const DArrow& ar = y.dq().arrow(a);
            if (d + ar.deg > y.hi)
                y.act[a][d - y.lo] = Mat<F>(0, y.dim(y.dq().vindex(ar.tgt), d));
        }
    y.tighten();
    return y;
}

template <class F>
GModule<F> slice(const GModule<F>& x, int i, int j) {
    return truncate_below(truncate_above(x, j), i);
}

// column module: (Pi/I) e_u with grading shift, as a module over `owner`
// (whose defining ideal must be contained in I)
template <class F>
GModule<F> column_module(const QuotAlg<F>& C, int u, int shift_by, const QuotAlg<F>& owner) {
    GModule<F> x;
    x.owner = &owner;
    const PreprojAlg<F>& A = *C.A;
    int top = C.topdeg();
    if (top < 0) { x.lo = 0; x.hi = -1; x.alloc(); return x; }
    x.lo = -shift_by;
    x.hi = top - shift_by;
    x.alloc();
    // basis of X_{v,d}: kept elements of C in block (v,u) at algebra degree d+shift
    std::vector<std::vector<std::vector<int>>> idx(A.dq.n(),
        std::vector<std::vector<int>>(top + 1));
    for (int ad = 0; ad <= top; ++ad)
        for (int i = 0; i < C.dim(ad); ++i)
            if (C.elt(ad, i).v == u)
                idx[A.dq.vindex(C.elt(ad, i).u)][ad].push_back(i);
    for (int vi = 0; vi < A.dq.n(); ++vi)
        for (int ad = 0; ad <= top; ++ad)
            x.dims[vi][ad] = (int)idx[vi][ad].size();
    for (auto& ar : A.dq.arrows) {
        int svi = A.dq.vindex(ar.src), tvi = A.dq.vindex(ar.tgt);
        for (int ad = 0; ad <= top; ++ad) {
            int bd = ad + ar.deg;
            Mat<F> m(bd <= top ? (int)idx[svi][bd].size() : 0, (int)idx[tvi][ad].size());
            if (bd <= top) {
                for (int j = 0; j < (int)idx[tvi][ad].size(); ++j) {
                    Vec<F> e(C.dim(ad), fof<F>(0));
                    e[idx[tvi][ad][j]] = fof<F>(1);
                    Vec<F> lifted = C.lift(e, ad);
                    Vec<F> img = C.reduce(A.lmul(ad, ar.id).apply(lifted), bd);
                    for (int i = 0; i < (int)idx[svi][bd].size(); ++i)
                        m.at(i, j) = img[idx[svi][bd][i]];
                }
            }
            x.act[ar.id][ad] = std::move(m);
        }
    }
    x.tighten();
    return x;
}

// subquotient column (T e_u) / (B e_u) for nested homogeneous ideals B <= T
template <class F>
GModule<F> ideal_pair_module(const GradedIdeal<F>& T, const GradedIdeal<F>& B, int u,
                             int shift_by, const QuotAlg<F>& owner) {
    const PreprojAlg<F>& A = *T.A;
    GModule<F> x;
    x.owner = &owner;
    x.lo = -shift_by;
    x.hi = A.maxdeg - shift_by;
    x.alloc();
    // representatives per (v, algebra degree)
    struct Slot {
        RowSpace<F> bottom;
        std::vector<Vec<F>> reps;
    };
    std::vector<std::vector<Slot>> slot(A.dq.n(), std::vector<Slot>(A.maxdeg + 1));
    auto project_block = [&](const Vec<F>& row, int d, int vi) {
        Vec<F> v = A.zero_vec(d);
        bool nz = false;
        for (int i = 0; i < A.dim(d); ++i) {
            auto& e = A.elt(d, i);
            if (e.v == u && A.dq.vindex(e.u) == vi) {
                v[i] = row[i];
                if (!fis_zero(row[i])) nz = true;
            }
        }
        return nz ? std::optional<Vec<F>>(v) : std::nullopt;
    };
    for (int d = 0; d <= A.maxdeg; ++d)
        for (int vi = 0; vi < A.dq.n(); ++vi) {
            Slot& s = slot[vi][d];
            s.bottom = RowSpace<F>(A.dim(d));
            for (auto& row : B.comp[d].rows)
                if (auto v = project_block(row, d, vi)) s.bottom.add(std::move(*v));
            RowSpace<F> span = s.bottom;
            for (auto& row : T.comp[d].rows)
                if (auto v = project_block(row, d, vi)) {
                    Vec<F> red = span.reduce(*v);
                    if (!vec_is_zero(red) && span.add(red)) s.reps.push_back(s.bottom.reduce(*v));
                }
            x.dims[vi][d] = (int)s.reps.size();
        }
    for (auto& ar : A.dq.arrows) {
        int svi = A.dq.vindex(ar.src), tvi = A.dq.vindex(ar.tgt);
        for (int d = 0; d <= A.maxdeg; ++d) {
            int dd = d + ar.deg;
            Mat<F> m(dd <= A.maxdeg ? x.dims[svi][dd] : 0, x.dims[tvi][d]);
            if (dd <= A.maxdeg && m.r && m.c) {
                const Slot& src = slot[tvi][d];
                const Slot& dst = slot[svi][dd];
                for (int j = 0; j < m.c; ++j) {
                    Vec<F> img = dst.bottom.reduce(A.lmul(d, ar.id).apply(src.reps[j]));
                    auto co = coords_in(dst.reps, img);
                    if (!co) throw std::logic_error("ideal pair module: action leaves span");
                    for (int i = 0; i < m.r; ++i) m.at(i, j) = (*co)[i];
                }
            } else if (dd <= A.maxdeg) {
                m = Mat<F>(x.dims[svi][dd], x.dims[tvi][d]);
            }
            x.act[ar.id][d] = std::move(m);
        }
    }
    x.tighten();
    return x;
}

// ---------------------------------------------------------------------------
// graded homomorphisms

template <class F>
struct GMap {
    int s = 0;            // degree shift: X -> Y(s)
    int xlo = 0, xhi = -1;
    std::vector<std::vector<Mat<F>>> blocks; // [vi][d-xlo]: X_{vi,d} -> Y_{vi,d+s}

    Mat<F> block(int vi, int d) const {
        if (d < xlo || d > xhi) return Mat<F>();
        return blocks[vi][d - xlo];
    }
};

template <class F>
GMap<F> zero_map(const GModule<F>& x, const GModule<F>& y, int s) {
    GMap<F> f;
    f.s = s;
    f.xlo = x.lo;
    f.xhi = x.hi;
    f.blocks.assign(x.nv(), {});
    for (int vi = 0; vi < x.nv(); ++vi)
        for (int d = x.lo; d <= x.hi; ++d)
            f.blocks[vi].push_back(Mat<F>(y.dim(vi, d + s), x.dim(vi, d)));
    return f;
}

template <class F>
bool map_is_zero(const GMap<F>& f) {
    for (auto& row : f.blocks)
        for (auto& m : row)
            if (!m.is_zero()) return false;
    return true;
}

template <class F>
bool is_module_map(const GModule<F>& x, const GModule<F>& y, const GMap<F>& f) {
    for (auto& ar : x.dq().arrows) {
        int svi = x.dq().vindex(ar.src), tvi = x.dq().vindex(ar.tgt);
        for (int d = x.lo - 1; d <= x.hi + 1; ++d) {
            if (x.dim(tvi, d) == 0) continue;
            Mat<F> lhs = y.action(ar.id, d + f.s) * f.block(tvi, d);
            Mat<F> rhs = f.block(svi, d + ar.deg) * x.action(ar.id, d);
            if (lhs.r != rhs.r || lhs.c != rhs.c) {
                Mat<F> L = lhs.r * lhs.c ? lhs : rhs;
                if (!L.is_zero()) return false;
                continue;
            }
            if (!(lhs - rhs).is_zero()) return false;
        }
    }
    return true;
}

// basis of Hom^Z(X, Y(s)) by solving the commuting conditions
template <class F>
std::vector<GMap<F>> hom_graded(const GModule<F>& x, const GModule<F>& y, int s) {
    // collect unknowns: entries of f_{vi,d} where both ends are nonzero
    struct Slot { int vi, d, rows, cols, offset; };
    std::vector<Slot> slots;
    int nunk = 0;
    for (int vi = 0; vi < x.nv(); ++vi)
        for (int d = x.lo; d <= x.hi; ++d) {
            int r = y.dim(vi, d + s), c = x.dim(vi, d);
            if (r && c) {
                slots.push_back({vi, d, r, c, nunk});
                nunk += r * c;
            }
        }
    std::vector<GMap<F>> out;
    if (nunk == 0) return out;
    auto slot_of = [&](int vi, int d) -> const Slot* {
        for (auto& sl : slots)
            if (sl.vi == vi && sl.d == d) return &sl;
        return nullptr;
    };
    // constraints: for every arrow a and degree d:
    //   f_{s(a), d+deg a} . Xact - Yact . f_{t(a), d} = 0
    std::vector<Vec<F>> rows;
    for (auto& ar : x.dq().arrows) {
        int svi = x.dq().vindex(ar.src), tvi = x.dq().vindex(ar.tgt);
        for (int d = x.lo; d <= x.hi; ++d) {
            int cX = x.dim(tvi, d);
            if (!cX) continue;
            int rY = y.dim(svi, d + ar.deg + s);
            if (!rY) continue;
            Mat<F> xa = x.action(ar.id, d);              // (s,d+deg) x (t,d)
            Mat<F> ya = y.action(ar.id, d + s);          // shapes over Y
            const Slot* sf = slot_of(svi, d + ar.deg);   // f at source slot
            const Slot* tf = slot_of(tvi, d);            // f at target slot
            if (!sf && !tf) continue;
            for (int i = 0; i < rY; ++i)
                for (int j = 0; j < cX; ++j) {
                    Vec<F> row(nunk, fof<F>(0));
                    bool nz = false;
                    if (sf) // (f_s . xa)_{i,j} = sum_k f_s[i,k] xa[k,j]
                        for (int k = 0; k < sf->cols; ++k) {
                            const F& v = xa.at(k, j);
                            if (fis_zero(v)) continue;
                            row[sf->offset + i * sf->cols + k] += v;
                            nz = true;
                        }
                    if (tf) // (ya . f_t)_{i,j} = sum_k ya[i,k] f_t[k,j]
                        for (int k = 0; k < tf->rows; ++k) {
                            const F& v = ya.at(i, k);
                            if (fis_zero(v)) continue;
                            row[tf->offset + k * tf->cols + j] -= v;
                            nz = true;
                        }
                    if (nz) rows.push_back(std::move(row));
                }
        }
    }
    Mat<F> sys((int)rows.size(), nunk);
    for (int i = 0; i < (int)rows.size(); ++i)
        for (int j = 0; j < nunk; ++j) sys.at(i, j) = rows[i][j];
    for (auto& sol : right_kernel(sys)) {
        GMap<F> f = zero_map(x, y, s);
        for (auto& sl : slots)
            for (int i = 0; i < sl.rows; ++i)
                for (int j = 0; j < sl.cols; ++j)
                    f.blocks[sl.vi][sl.d - x.lo].at(i, j) = sol[sl.offset + i * sl.cols + j];
        out.push_back(std::move(f));
    }
    return out;
}

template <class F>
GMap<F> compose(const GModule<F>& x, const GMap<F>& f, const GModule<F>& /*y*/,
                const GMap<F>& g, const GModule<F>& z) {
    // f: X -> Y(s), g: Y -> Z(t); result X -> Z(s+t)
    GMap<F> h;
    h.s = f.s + g.s;
    h.xlo = x.lo;
    h.xhi = x.hi;
    h.blocks.assign(x.nv(), {});
    for (int vi = 0; vi < x.nv(); ++vi)
        for (int d = x.lo; d <= x.hi; ++d) {
            Mat<F> gm = g.block(vi, d + f.s);
            Mat<F> fm = f.block(vi, d);
            if (gm.r == 0 || gm.c == 0 || fm.r == 0)
                h.blocks[vi].push_back(Mat<F>(z.dim(vi, d + h.s), x.dim(vi, d)));
            else
                h.blocks[vi].push_back(gm * fm);
        }
    return h;
}

template <class F>
GMap<F> map_add(const GMap<F>& f, const GMap<F>& g) {
    GMap<F> h = f;
    for (size_t vi = 0; vi < h.blocks.size(); ++vi)
        for (size_t k = 0; k < h.blocks[vi].size(); ++k)
            if (h.blocks[vi][k].r && h.blocks[vi][k].c)
                h.blocks[vi][k] = h.blocks[vi][k] + g.blocks[vi][k];
    return h;
}

template <class F>
GMap<F> map_scale(const GMap<F>& f, const F& c) {
    GMap<F> h = f;
    for (auto& row : h.blocks)
        for (auto& m : row) m = m.scaled(c);
    return h;
}

// flatten a map to one coordinate vector (for span computations on maps)
template <class F>
Vec<F> map_flatten(const GMap<F>& f) {
    Vec<F> v;
    for (auto& row : f.blocks)
        for (auto& m : row) v.insert(v.end(), m.a.begin(), m.a.end());
    return v;
}

// kernel of f: X -> Y(s) as a module, with the inclusion into X
template <class F>
std::pair<GModule<F>, GMap<F>> kernel_module(const GModule<F>& x, const GModule<F>& y,
                                             const GMap<F>& f) {
    GModule<F> k;
    k.owner = x.owner;
    k.lo = x.lo;
    k.hi = x.hi;
    k.alloc();
    // bases of the kernels per slot
    std::vector<std::vector<std::vector<Vec<F>>>> kb(x.nv());
    for (int vi = 0; vi < x.nv(); ++vi) {
        kb[vi].resize(x.hi - x.lo + 1);
        for (int d = x.lo; d <= x.hi; ++d) {
            if (!x.dim(vi, d)) continue;
            Mat<F> m = f.block(vi, d);
            if (m.r == 0) {
                for (int j = 0; j < x.dim(vi, d); ++j) {
                    Vec<F> e(x.dim(vi, d), fof<F>(0));
                    e[j] = fof<F>(1);
                    kb[vi][d - x.lo].push_back(std::move(e));
                }
            } else {
                kb[vi][d - x.lo] = right_kernel(m);
            }
            k.dims[vi][d - k.lo] = (int)kb[vi][d - x.lo].size();
        }
    }
    for (auto& ar : x.dq().arrows) {
        int svi = x.dq().vindex(ar.src), tvi = x.dq().vindex(ar.tgt);
        for (int d = k.lo; d <= k.hi; ++d) {
            int c = k.dims[tvi][d - k.lo];
            int r = (d + ar.deg <= k.hi) ? k.dims[svi][d + ar.deg - k.lo] : 0;
            Mat<F> m(r, c);
            if (r && c) {
                Mat<F> xa = x.action(ar.id, d);
                auto& dst = kb[svi][d + ar.deg - x.lo];
                for (int j = 0; j < c; ++j) {
                    Vec<F> img = xa.apply(kb[tvi][d - x.lo][j]);
                    auto co = coords_in(dst, img);
                    if (!co) throw std::logic_error("kernel not arrow-stable");
                    for (int i = 0; i < r; ++i) m.at(i, j) = (*co)[i];
                }
            }
            k.act[ar.id][d - k.lo] = std::move(m);
        }
    }
    k.tighten();
    GMap<F> incl = zero_map(k, x, 0);
    for (int vi = 0; vi < x.nv(); ++vi)
        for (int d = k.lo; d <= k.hi; ++d)
            for (int j = 0; j < k.dim(vi, d); ++j)
                incl.blocks[vi][d - k.lo].set_col(j, kb[vi][d - x.lo][j]);
    return {std::move(k), std::move(incl)};
}

// cokernel of f: X -> Y(s): module Z = Y/im f (as a shift-0 quotient of Y),
// with the projection Y -> Z
template <class F>
std::pair<GModule<F>, GMap<F>> cokernel_module(const GModule<F>& x, const GModule<F>& y,
                                               const GMap<F>& f) {
    GModule<F> z;
    z.owner = y.owner;
    z.lo = y.lo;
    z.hi = y.hi;
    z.alloc();
    // per slot: image row space and a complement basis of unit vectors
    std::vector<std::vector<RowSpace<F>>> im(y.nv());
    std::vector<std::vector<std::vector<int>>> comp(y.nv());
    for (int vi = 0; vi < y.nv(); ++vi) {
        im[vi].assign(y.hi - y.lo + 1, RowSpace<F>(0));
        comp[vi].resize(y.hi - y.lo + 1);
        for (int d = y.lo; d <= y.hi; ++d) {
            int n = y.dim(vi, d);
            im[vi][d - y.lo] = RowSpace<F>(n);
            if (!n) continue;
            Mat<F> m = f.block(vi, d - f.s);
            for (int j = 0; j < m.c; ++j) im[vi][d - y.lo].add(m.col(j));
            std::vector<char> piv(n, 0);
            for (int p : im[vi][d - y.lo].piv) piv[p] = 1;
            for (int i = 0; i < n; ++i)
                if (!piv[i]) comp[vi][d - y.lo].push_back(i);
            z.dims[vi][d - z.lo] = (int)comp[vi][d - y.lo].size();
        }
    }
    auto project = [&](int vi, int d, const Vec<F>& v) {
        Vec<F> r = im[vi][d - y.lo].reduce(v);
        Vec<F> out(z.dims[vi][d - z.lo], fof<F>(0));
        for (int i = 0; i < (int)out.size(); ++i) out[i] = r[comp[vi][d - y.lo][i]];
        return out;
    };
    for (auto& ar : y.dq().arrows) {
        int svi = y.dq().vindex(ar.src), tvi = y.dq().vindex(ar.tgt);
        for (int d = z.lo; d <= z.hi; ++d) {
            int c = z.dims[tvi][d - z.lo];
            int r = (d + ar.deg <= z.hi) ? z.dims[svi][d + ar.deg - z.lo] : 0;
            Mat<F> m(r, c);
            if (r && c) {
                Mat<F> ya = y.action(ar.id, d);
                for (int j = 0; j < c; ++j) {
                    Vec<F> e(y.dim(tvi, d), fof<F>(0));
                    e[comp[tvi][d - y.lo][j]] = fof<F>(1);
                    Vec<F> img = ya.apply(e);
                    Vec<F> pr = project(svi, d + ar.deg, img);
                    for (int i = 0; i < r; ++i) m.at(i, j) = pr[i];
                }
            }
            z.act[ar.id][d - z.lo] = std::move(m);
        }
    }
    GMap<F> proj = zero_map(y, z, 0);
    for (int vi = 0; vi < y.nv(); ++vi)
        for (int d = y.lo; d <= y.hi; ++d) {
            if (!y.dim(vi, d)) continue;
            Mat<F>& m = proj.blocks[vi][d - y.lo];
            for (int j = 0; j < y.dim(vi, d); ++j) {
                Vec<F> e(y.dim(vi, d), fof<F>(0));
                e[j] = fof<F>(1);
                Vec<F> pr = project(vi, d, e);
                for (int i = 0; i < (int)pr.size(); ++i) m.at(i, j) = pr[i];
            }
        }
    z.tighten();
    GMap<F> proj2 = proj;
    proj2.xlo = y.lo;
    proj2.xhi = y.hi;
    return {std::move(z), std::move(proj2)};
}

// direct sum with per-part offsets
template <class F>
struct DirectSum {
    GModule<F> sum;
    // offset[p][vi][d - sum.lo]: starting coordinate of part p in each slot
    std::vector<std::vector<std::vector<int>>> offset;
};

template <class F>
DirectSum<F> dsum(const std::vector<const GModule<F>*>& parts) {
    DirectSum<F> out;
    if (parts.empty()) throw std::invalid_argument("dsum of nothing");
    const GModule<F>& first = *parts[0];
    GModule<F>& s = out.sum;
    s.owner = first.owner;
    s.lo = first.lo;
    s.hi = first.hi;
    for (auto* p : parts) {
        if (p->owner != s.owner) throw std::invalid_argument("dsum: owner mismatch");
        if (!p->empty_window()) {
            if (s.empty_window()) { s.lo = p->lo; s.hi = p->hi; }
            s.lo = std::min(s.lo, p->lo);
            s.hi = std::max(s.hi, p->hi);
        }
    }
    if (s.empty_window()) { s.lo = 0; s.hi = -1; }
    s.alloc();
    out.offset.assign(parts.size(), std::vector<std::vector<int>>(s.nv()));
    for (size_t p = 0; p < parts.size(); ++p)
        for (int vi = 0; vi < s.nv(); ++vi)
            out.offset[p][vi].assign(std::max(0, s.hi - s.lo + 1), 0);
    for (int vi = 0; vi < s.nv(); ++vi)
        for (int d = s.lo; d <= s.hi; ++d) {
            int off = 0;
            for (size_t p = 0; p < parts.size(); ++p) {
                out.offset[p][vi][d - s.lo] = off;
                off += parts[p]->dim(vi, d);
            }
            s.dims[vi][d - s.lo] = off;
        }
    for (auto& ar : s.dq().arrows)
        for (int d = s.lo; d <= s.hi; ++d) {
            int svi = s.dq().vindex(ar.src), tvi = s.dq().vindex(ar.tgt);
            int r = (d + ar.deg <= s.hi) ? s.dims[svi][d + ar.deg - s.lo] : 0;
            Mat<F> m(r, s.dims[tvi][d - s.lo]);
            if (r)
                for (size_t p = 0; p < parts.size(); ++p) {
                    Mat<F> pm = parts[p]->action(ar.id, d);
                    int ro = out.offset[p][svi][d + ar.deg - s.lo];
                    int co = out.offset[p][tvi][d - s.lo];
                    for (int i = 0; i < pm.r; ++i)
                        for (int j = 0; j < pm.c; ++j) m.at(ro + i, co + j) = pm.at(i, j);
                }
            s.act[ar.id][d - s.lo] = std::move(m);
        }
    return out;
}

} // namespace ppw
