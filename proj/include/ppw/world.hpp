#pragma once

// One-stop construction of the graded objects attached to a reduced word:
// the truncated preprojective algebra, all prefix ideals I_{u_1...u_k}, the
// quotient Pi_w, the cyclic summands M^i = (Pi/I_{u_1...u_i}) e_{u_i}(m_i),
// the layer subquotients, the block-sum tilting parts, and the degree-zero
// tilting module T = (+) (Pi_w e_u (m_{p_u}))_0.

#include "ppw/coxeter.hpp"
#include "ppw/gmodule_ops.hpp"
#include "ppw/hereditary.hpp"
#include <memory>

namespace ppw {

template <class F>
struct WordWorld {
    Quiver Q;
    Word w;
    Word cox;
    SortableFactorization fact;
    WordStats stats;
    int N = 0;

    std::unique_ptr<PreprojAlg<F>> P;
    std::vector<GradedIdeal<F>> prefixes;       // index k = I_{u_1...u_k}; 0 = unit
    std::unique_ptr<QuotAlg<F>> piw;            // Pi_w
    std::vector<std::unique_ptr<QuotAlg<F>>> prefix_quots; // index k >= 1
    std::vector<GModule<F>> Mi;                 // M^1..M^l at [i-1]
    std::vector<int> shifts;                    // m_i

    int l() const { return (int)w.size(); }
    int m() const { return (int)fact.blocks.size() - 1; }

    // prefix length covered by blocks 0..i
    int block_prefix_len(int i) const {
        int s = 0;
        for (int b = 0; b <= i; ++b) s += (int)fact.blocks[b].size();
        return s;
    }
};

template <class F>
WordWorld<F> build_world(const Quiver& q, const Word& w, int extra_degrees = 1,
                         long cap = 2000000) {
    WordWorld<F> world;
    world.Q = q;
    world.w = w;
    world.cox = admissible_coxeter_word(q);
    if (!is_reduced(q, w)) throw std::invalid_argument("word is not reduced");
    world.fact = sortable_factorize(q, w, world.cox);
    world.stats = word_stats(w);
    int l = (int)w.size();
    world.N = world.fact.ok ? world.m() + extra_degrees : l - 1;
    world.P = std::make_unique<PreprojAlg<F>>(q, world.N, cap);
    world.prefixes = prefix_ideals(*world.P, w);
    // the word ideal swallows all degrees >= l; with N >= m (sortable) or
    // N = l-1 the quotient is complete, which we assert when checkable
    world.piw = std::make_unique<QuotAlg<F>>(*world.P, world.prefixes[l]);
    if (world.fact.ok && world.N > world.m()) {
        for (int d = world.m() + 1; d <= world.N; ++d)
            if (world.piw->dim(d) != 0)
                throw std::logic_error("quotient extends beyond the block bound");
    }
    for (int k = 1; k <= l; ++k)
        world.prefix_quots.push_back(
            std::make_unique<QuotAlg<F>>(*world.P, world.prefixes[k]));
    for (int i = 1; i <= l; ++i) {
        int mi = world.stats.repeats[i - 1];
        world.shifts.push_back(mi);
        world.Mi.push_back(column_module(*world.prefix_quots[i - 1], w[i - 1], mi,
                                         *world.piw));
    }
    return world;
}

// layer subquotient L^i = I_{u_1..u_{i-1}} / I_{u_1..u_i} (natural grading)
template <class F>
GModule<F> layer_module(const WordWorld<F>& world, int i) {
    if (i < 1 || i > world.l()) throw std::out_of_range("layer index");
    GModule<F> L = ideal_pair_module(world.prefixes[i - 1], world.prefixes[i],
                                     world.w[i - 1], 0, *world.piw);
    return L;
}

// Pi_{c^(0)...c^(i)} as a left module over Pi_w, shifted by i
template <class F>
GModule<F> block_prefix_module(const WordWorld<F>& world, int i) {
    if (!world.fact.ok) throw std::domain_error("word is not sortable");
    Word pre(world.w.begin(), world.w.begin() + world.block_prefix_len(i));
    QuotAlg<F> C(*world.P, world.prefixes[world.block_prefix_len(i)]);
    std::vector<GModule<F>> cols;
    for (int u : world.Q.verts) cols.push_back(column_module(C, u, i, *world.piw));
    std::vector<const GModule<F>*> ptrs;
    for (auto& c : cols) ptrs.push_back(&c);
    return dsum(ptrs).sum;
}

// the tilting object (+)_{i=0..m} Pi_{c^(0)..c^(i)}(i), kept as parts
template <class F>
std::vector<GModule<F>> tilting_object_parts(const WordWorld<F>& world) {
    std::vector<GModule<F>> parts;
    for (int i = 0; i <= world.m(); ++i) parts.push_back(block_prefix_module(world, i));
    return parts;
}

// degree-zero slice of a graded module as a representation of the base quiver
template <class F>
QuiverRep<F> degree_slice_rep(const GModule<F>& x, int d, const Quiver& q) {
    QuiverRep<F> r = QuiverRep<F>::zero(q);
    for (int vi = 0; vi < q.n(); ++vi) r.dims[vi] = x.dim(vi, d);
    r.fix_shapes();
    for (auto& a : q.arrows) {
        Mat<F> m = x.action(a.id, d);
        if (m.r == r.dims[q.vindex(a.src)] && m.c == r.dims[q.vindex(a.tgt)])
            r.act[a.id] = m;
    }
    return r;
}

template <class F>
QuiverRep<F> degree_zero(const GModule<F>& x, const Quiver& q) {
    return degree_slice_rep(x, 0, q);
}

// a representation of the base quiver as a one-degree graded module
template <class F>
GModule<F> rep_to_gmodule(const QuiverRep<F>& r, int degree, const QuotAlg<F>& owner) {
    GModule<F> x;
    x.owner = &owner;
    x.lo = x.hi = degree;
    x.alloc();
    const Quiver& q = *r.Q;
    for (int vi = 0; vi < q.n(); ++vi) x.dims[vi][0] = r.dims[vi];
    for (auto& ar : owner.A->dq.arrows) {
        int svi = owner.A->dq.vindex(ar.src), tvi = owner.A->dq.vindex(ar.tgt);
        if (ar.deg == 0 && !ar.starred)
            x.act[ar.id][0] = r.act[ar.base];
        else
            x.act[ar.id][0] = Mat<F>(0, x.dims[tvi][0]);
        (void)svi;
    }
    return x;
}

// T_u = (Pi_w e_u (m_{p_u}))_0 as a quiver representation
template <class F>
QuiverRep<F> layer_tilting_part(const WordWorld<F>& world, int u) {
    int pu = world.stats.last_pos.at(u);
    int mpu = world.stats.repeats[pu - 1];
    GModule<F> col = column_module(*world.piw, u, mpu, *world.piw);
    return degree_zero(col, world.Q);
}

template <class F>
std::vector<QuiverRep<F>> layer_tilting_parts(const WordWorld<F>& world) {
    std::vector<QuiverRep<F>> parts;
    for (int u : world.Q.verts)
        if (world.stats.last_pos.count(u)) parts.push_back(layer_tilting_part(world, u));
    return parts;
}

// per-degree comparison of the quotient against its block-prefix quotients:
// (Pi_w)_{<= i} must agree with Pi_{c^(0)...c^(i)} degreewise for i up to the
// block count, and the prefix quotient must vanish above degree i
template <class F>
struct PrefixTruncationReport {
    bool ok = true;
    // rows (i, degree, vertex pair) -> (dim in Pi_w, dim in the prefix)
    std::vector<std::tuple<int, int, int, int, int, int>> table;
};

template <class F>
PrefixTruncationReport<F> truncate_prefix_check(const WordWorld<F>& world) {
    PrefixTruncationReport<F> rep;
    if (!world.fact.ok) throw std::domain_error("prefix check needs a sortable word");
    for (int i = 0; i <= world.m(); ++i) {
        QuotAlg<F> pref(*world.P, world.prefixes[world.block_prefix_len(i)]);
        for (int d = 0; d <= world.N; ++d)
            for (int u : world.Q.verts)
                for (int v : world.Q.verts) {
                    int a = world.piw->dim_block(d, u, v);
                    int b = pref.dim_block(d, u, v);
                    if (d <= i) {
                        rep.table.push_back({i, d, u, v, a, b});
                        if (a != b) rep.ok = false;
                    } else if (b != 0) {
                        rep.ok = false; // the prefix quotient must die above degree i
                    }
                }
    }
    return rep;
}

// tilting test over the hereditary degree-zero algebra: no self-extensions,
// projective dimension at most one, and as many indecomposable summands as
// the support has vertices
template <class F>
struct HereditaryTiltingReport {
    bool ext_ok = true, pd_ok = true, count_ok = true, split_complete = true;
    int summands = 0, classes = 0, expected = 0;
    bool ok() const { return ext_ok && pd_ok && count_ok && split_complete; }
};

template <class F>
HereditaryTiltingReport<F> tilting_check_hereditary(const std::vector<QuiverRep<F>>& parts,
                                                    int expected_count, uint64_t seed = 1) {
    HereditaryTiltingReport<F> rep;
    rep.expected = expected_count;
    for (auto& x : parts)
        for (auto& y : parts)
            if (ext1_rep(x, y) != 0) rep.ext_ok = false;
    for (auto& x : parts)
        if (!rep_syzygy(rep_syzygy(x)).is_zero()) rep.pd_ok = false;
    std::vector<const QuiverRep<F>*> ptrs;
    for (auto& p : parts) ptrs.push_back(&p);
    auto split = split_indecomposables(rep_dsum(ptrs).sum, seed);
    rep.split_complete = split.complete;
    rep.summands = (int)split.summands.size();
    rep.classes = (int)iso_classes(split.summands).size();
    rep.count_ok = rep.summands == expected_count && rep.classes == expected_count;
    return rep;
}

// validate the graded module axioms: the preprojective relation acts by zero
// at every vertex and degree
template <class F>
void validate_gmodule(const GModule<F>& x) {
    const DoubleQuiver& dq = x.dq();
    for (int vi = 0; vi < x.nv(); ++vi) {
        int v = dq.base.verts[vi];
        for (int d = x.lo; d <= x.hi; ++d) {
            int n = x.dim(vi, d);
            if (!n) continue;
            Mat<F> acc(x.dim(vi, d + 1), n);
            for (auto& a2 : dq.base.arrows) {
                int st2 = (int)dq.base.arrows.size() + a2.id;
                if (a2.src == v) {
                    Mat<F> t = x.action(a2.id, d + 1) * x.action(st2, d);
                    if (t.r == acc.r && t.c == acc.c) acc = acc + t;
                }
                if (a2.tgt == v) {
                    Mat<F> t = x.action(st2, d) * x.action(a2.id, d);
                    if (t.r == acc.r && t.c == acc.c) acc = acc - t;
                }
            }
            if (!acc.is_zero())
                throw std::logic_error("preprojective relation fails on module");
        }
    }
}

} // namespace ppw
