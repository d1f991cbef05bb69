#pragma once

// The preprojective algebra of an acyclic quiver, truncated at a star degree
// bound N, with exact canonical bases.
//
// The double-quiver path algebra carries two gradings: path length (every
// arrow has length one) and star degree (starred arrows only).  The defining
// relation sum(a a* - a* a) is homogeneous for both, so the algebra is
// bigraded and can be built length by length:
//
//   A_k = (A_{k-1} (x) arrows) / (A_{k-2} * relation)
//
// with symbols of star degree > N dropped.  Every chosen basis vector is the
// class of a single path (non-pivot symbols of the reduced row echelon form),
// so bases are canonical and deterministic, and the length grading of basis
// elements is exact (which makes radical powers free to read off).
//
// Homogeneous two-sided ideals are stored as one row space per degree.  The
// ideals I_u = Pi(1-e_u)Pi and their products along a word are computed by
// right closure: I * I_u equals the right Pi-closure of I(1-e_u), so each
// letter costs one pass of arrow multiplications instead of a full pairwise
// product expansion.

#include "ppw/linalg.hpp"
#include "ppw/quiver.hpp"
#include <map>
#include <set>

namespace ppw {

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
class PreprojAlg {
public:
    struct Elt {
        int u = 0, v = 0;      // path runs u -> v (vertex ids)
        int deg = 0, len = 0;  // star degree, path length
        std::vector<int> path; // double-quiver arrow ids
    };

    DoubleQuiver dq;
    int maxdeg = 0;
    long cap = 2000000;

    PreprojAlg(const Quiver& q, int N, long path_cap = 2000000)
        : dq(q), maxdeg(N), cap(path_cap) {
        build();
    }

    int nverts() const { return dq.n(); }
    int dim(int d) const {
        return (d < 0 || d > maxdeg) ? 0 : (int)bas_[d].size();
    }
    const Elt& elt(int d, int i) const { return bas_[d][i]; }
    const std::vector<int>& block(int d, int uid, int vid) const {
        static const std::vector<int> empty;
        if (d < 0 || d > maxdeg) return empty;
        auto it = blockidx_[d].find({uid, vid});
        return it == blockidx_[d].end() ? empty : it->second;
    }
    int dim_block(int d, int uid, int vid) const { return (int)block(d, uid, vid).size(); }

    Vec<F> zero_vec(int d) const { return Vec<F>(dim(d), fof<F>(0)); }
    Vec<F> idem(int uid) const {
        Vec<F> v = zero_vec(0);
        v[idem_pos_.at(uid)] = fof<F>(1);
        return v;
    }

    // right multiplication x * a, x in degree d
    Vec<F> rmul_arrow(const Vec<F>& x, int d, int aid) const {
        int dd = d + dq.arrow(aid).deg;
        if (dd > maxdeg) return zero_vec(dd);
        return rmul_[d][aid].apply(x);
    }
    Vec<F> rmul_path(Vec<F> x, int d, const std::vector<int>& path) const {
        for (int aid : path) {
            x = rmul_arrow(x, d, aid);
            d += dq.arrow(aid).deg;
            if (d > maxdeg) return zero_vec(d);
        }
        return x;
    }
    // class of a raw double-quiver path; (degree, coordinates)
    std::pair<int, Vec<F>> class_of_path(const Path& p) const {
        return {p.deg, rmul_path(idem(p.src), 0, p.arrows)};
    }

    // left multiplication a * x as a matrix Pi_d -> Pi_{d+deg a}
    const Mat<F>& lmul(int d, int aid) const {
        auto& slot = lmul_cache_[d][aid];
        if (!slot) {
            int dd = d + dq.arrow(aid).deg;
            Mat<F> m(dim(dd), dim(d));
            if (dd <= maxdeg) {
                for (int j = 0; j < dim(d); ++j) {
                    const Elt& e = bas_[d][j];
                    if (e.u != dq.arrow(aid).tgt) continue;
                    Vec<F> start = zero_vec(dq.arrow(aid).deg);
                    // the arrow itself is a basis element at length 1
                    auto it = arrow_pos_.find(aid);
                    if (it == arrow_pos_.end()) continue; // star degree beyond cap
                    start[it->second] = fof<F>(1);
                    m.set_col(j, rmul_path(std::move(start), dq.arrow(aid).deg, e.path));
                }
            }
            slot = std::move(m);
        }
        return *slot;
    }
    Vec<F> lmul_arrow(const Vec<F>& x, int d, int aid) const { return lmul(d, aid).apply(x); }

    // general product of coordinate vectors, x in degree dx, y in degree dy;
    // x is first cut down to the columns composable with each basis path of y
    Vec<F> mul(const Vec<F>& x, int dx, const Vec<F>& y, int dy) const {
        Vec<F> out = zero_vec(dx + dy);
        if (dx + dy > maxdeg) return out;
        for (int j = 0; j < dim(dy); ++j) {
            if (fis_zero(y[j])) continue;
            const Elt& e = bas_[dy][j];
            Vec<F> proj = zero_vec(dx);
            bool nz = false;
            for (int i = 0; i < dim(dx); ++i)
                if (bas_[dx][i].v == e.u && !fis_zero(x[i])) {
                    proj[i] = x[i];
                    nz = true;
                }
            if (!nz) continue;
            Vec<F> t = rmul_path(std::move(proj), dx, e.path);
            for (size_t i = 0; i < out.size(); ++i)
                if (!fis_zero(t[i])) out[i] += y[j] * t[i];
        }
        return out;
    }

    // span of basis elements of path length >= k, degreewise (radical power)
    std::vector<RowSpace<F>> radical_power(int k) const {
        std::vector<RowSpace<F>> out(maxdeg + 1);
        for (int d = 0; d <= maxdeg; ++d) {
            out[d] = RowSpace<F>(dim(d));
            for (int i = 0; i < dim(d); ++i)
                if (bas_[d][i].len >= k) {
                    Vec<F> e = zero_vec(d);
                    e[i] = fof<F>(1);
                    out[d].add(std::move(e));
                }
        }
        return out;
    }

private:
    std::vector<std::vector<Elt>> bas_;                      // [d]
    std::vector<std::map<std::pair<int, int>, std::vector<int>>> blockidx_;
    std::vector<std::vector<Mat<F>>> rmul_;                  // [d][arrow]
    mutable std::vector<std::vector<std::optional<Mat<F>>>> lmul_cache_;
    std::map<int, int> idem_pos_;  // vertex id -> coord in degree 0
    std::map<int, int> arrow_pos_; // arrow id -> coord in its degree

    struct Stage {
        std::vector<Elt> elems;
        std::vector<Mat<F>> rmul_prev; // [arrow]: stage k-1 coords -> stage k coords
    };

    void build() {
        const int na = (int)dq.arrows.size();
        std::vector<Stage> stages;
        // length 0: idempotents in vertex order
        Stage s0;
        for (int v : dq.base.verts) s0.elems.push_back(Elt{v, v, 0, 0, {}});
        stages.push_back(std::move(s0));

        while (!stages.back().elems.empty()) {
            const Stage& prev = stages.back();
            int k = (int)stages.size();
            // symbols (b, a): b in prev basis, arrow a with s(a) = b.v
            struct Sym { int b, a; };
            std::vector<Sym> syms;
            std::map<std::pair<int, int>, int> sympos;
            for (int bi = 0; bi < (int)prev.elems.size(); ++bi)
                for (int aid = 0; aid < na; ++aid) {
                    const DArrow& a = dq.arrow(aid);
                    if (a.src != prev.elems[bi].v) continue;
                    if (prev.elems[bi].deg + a.deg > maxdeg) continue;
                    sympos[{bi, aid}] = (int)syms.size();
                    syms.push_back({bi, aid});
                }
            if ((long)syms.size() > cap)
                throw ResourceLimit("path-span cap exceeded at length " + std::to_string(k));
            // relation rows b2 * r_{t(b2)} for b2 of length k-2
            RowSpace<F> rel((int)syms.size());
            if (k >= 2) {
                const Stage& pprev = stages[k - 2];
                const Stage& cur = prev; // stage k-1
                for (int b2 = 0; b2 < (int)pprev.elems.size(); ++b2) {
                    const Elt& e2 = pprev.elems[b2];
                    if (e2.deg + 1 > maxdeg) continue;
                    Vec<F> row((int)syms.size(), fof<F>(0));
                    bool nonzero = false;
                    for (auto& ar : dq.base.arrows) {
                        int star = (int)dq.base.arrows.size() + ar.id;
                        if (ar.src == e2.v) {
                            // + (b2 * a) (x) a*
                            const Mat<F>& m = cur.rmul_prev[ar.id];
                            for (int e = 0; e < m.r; ++e) {
                                if (fis_zero(m.at(e, b2))) continue;
                                auto it = sympos.find({e, star});
                                if (it == sympos.end()) continue;
                                row[it->second] += m.at(e, b2);
                                nonzero = true;
                            }
                        }
                        if (ar.tgt == e2.v) {
                            // - (b2 * a*) (x) a
                            const Mat<F>& m = cur.rmul_prev[star];
                            for (int e = 0; e < m.r; ++e) {
                                if (fis_zero(m.at(e, b2))) continue;
                                auto it = sympos.find({e, ar.id});
                                if (it == sympos.end()) continue;
                                row[it->second] -= m.at(e, b2);
                                nonzero = true;
                            }
                        }
                    }
                    if (nonzero) rel.add(std::move(row));
                }
            }
            std::vector<char> is_piv((int)syms.size(), 0);
            for (int p : rel.piv) is_piv[p] = 1;
            Stage next;
            std::vector<int> sym_to_basis((int)syms.size(), -1);
            for (int j = 0; j < (int)syms.size(); ++j) {
                if (is_piv[j]) continue;
                const Elt& b = prev.elems[syms[j].b];
                const DArrow& a = dq.arrow(syms[j].a);
                Elt e{b.u, a.tgt, b.deg + a.deg, k, b.path};
                e.path.push_back(a.id);
                sym_to_basis[j] = (int)next.elems.size();
                next.elems.push_back(std::move(e));
            }
            // right multiplication from stage k-1 into the new basis
            next.rmul_prev.resize(na);
            for (int aid = 0; aid < na; ++aid) {
                Mat<F> m((int)next.elems.size(), (int)prev.elems.size());
                for (int bi = 0; bi < (int)prev.elems.size(); ++bi) {
                    auto it = sympos.find({bi, aid});
                    if (it == sympos.end()) continue;
                    Vec<F> sym((int)syms.size(), fof<F>(0));
                    sym[it->second] = fof<F>(1);
                    sym = rel.reduce(std::move(sym));
                    for (int j = 0; j < (int)syms.size(); ++j)
                        if (sym_to_basis[j] >= 0) m.at(sym_to_basis[j], bi) = sym[j];
                }
                next.rmul_prev[aid] = std::move(m);
            }
            stages.push_back(std::move(next));
        }

        // regroup by star degree
        bas_.assign(maxdeg + 1, {});
        blockidx_.assign(maxdeg + 1, {});
        std::vector<std::vector<std::pair<int, int>>> where(stages.size());
        for (int k = 0; k < (int)stages.size(); ++k) {
            where[k].resize(stages[k].elems.size());
            for (int i = 0; i < (int)stages[k].elems.size(); ++i) {
                const Elt& e = stages[k].elems[i];
                where[k][i] = {e.deg, (int)bas_[e.deg].size()};
                blockidx_[e.deg][{e.u, e.v}].push_back((int)bas_[e.deg].size());
                bas_[e.deg].push_back(e);
            }
        }
        for (int i = 0; i < (int)stages[0].elems.size(); ++i)
            idem_pos_[stages[0].elems[i].u] = i;
        if (stages.size() > 1)
            for (int i = 0; i < (int)stages[1].elems.size(); ++i)
                arrow_pos_[stages[1].elems[i].path[0]] = where[1][i].second;

        rmul_.assign(maxdeg + 1, std::vector<Mat<F>>(na));
        lmul_cache_.assign(maxdeg + 1, std::vector<std::optional<Mat<F>>>(na));
        for (int d = 0; d <= maxdeg; ++d)
            for (int aid = 0; aid < na; ++aid) {
                int dd = d + dq.arrow(aid).deg;
                Mat<F> m(dim(dd), dim(d));
                if (dd <= maxdeg) {
                    for (int k = 0; k + 1 < (int)stages.size(); ++k) {
                        const Mat<F>& sm = stages[k + 1].rmul_prev[aid];
                        for (int bi = 0; bi < (int)stages[k].elems.size(); ++bi) {
                            if (stages[k].elems[bi].deg != d) continue;
                            int col = where[k][bi].second;
                            for (int e = 0; e < sm.r; ++e) {
                                if (fis_zero(sm.at(e, bi))) continue;
                                auto [edeg, epos] = where[k + 1][e];
                                if (edeg != dd)
                                    throw std::logic_error("degree bookkeeping broken");
                                m.at(epos, col) = sm.at(e, bi);
                            }
                        }
                    }
                }
                rmul_[d][aid] = std::move(m);
            }
    }
};

// ---------------------------------------------------------------------------
// homogeneous two-sided ideals

template <class F>
struct GradedIdeal {
    const PreprojAlg<F>* A = nullptr;
    std::vector<RowSpace<F>> comp; // [0..maxdeg]

    GradedIdeal() = default;
    explicit GradedIdeal(const PreprojAlg<F>& alg) : A(&alg) {
        comp.resize(alg.maxdeg + 1);
        for (int d = 0; d <= alg.maxdeg; ++d) comp[d] = RowSpace<F>(alg.dim(d));
    }
    static GradedIdeal zero(const PreprojAlg<F>& alg) { return GradedIdeal(alg); }
    static GradedIdeal unit(const PreprojAlg<F>& alg) {
        GradedIdeal I(alg);
        for (int d = 0; d <= alg.maxdeg; ++d) I.comp[d] = RowSpace<F>::full(alg.dim(d));
        return I;
    }
    static GradedIdeal from_spaces(const PreprojAlg<F>& alg, std::vector<RowSpace<F>> sp) {
        GradedIdeal I(alg);
        I.comp = std::move(sp);
        return I;
    }
    int dim(int d) const { return (d < 0 || d > A->maxdeg) ? 0 : comp[d].dim(); }
    bool equals(const GradedIdeal& o) const {
        for (int d = 0; d <= A->maxdeg; ++d)
            if (!comp[d].equals(o.comp[d])) return false;
        return true;
    }
    bool contains(const GradedIdeal& o) const {
        for (int d = 0; d <= A->maxdeg; ++d)
            if (!comp[d].contains_space(o.comp[d])) return false;
        return true;
    }
};

// close the given per-degree spans under right multiplication by Pi
template <class F>
GradedIdeal<F> right_closure(const PreprojAlg<F>& A, std::vector<std::vector<Vec<F>>> seeds) {
    GradedIdeal<F> I(A);
    for (int d = 0; d <= A.maxdeg; ++d) {
        for (auto& v : seeds[d]) I.comp[d].add(v);
        // lift from the previous degree through starred arrows
        if (d > 0)
            for (auto& a : A.dq.arrows) {
                if (a.deg != 1) continue;
                for (auto& row : I.comp[d - 1].rows)
                    I.comp[d].add(A.rmul_arrow(row, d - 1, a.id));
            }
        // close under degree-zero arrows within this degree
        bool grew = true;
        while (grew) {
            grew = false;
            auto snapshot = I.comp[d].rows;
            for (auto& x : snapshot)
                for (auto& a : A.dq.arrows) {
                    if (a.deg != 0) continue;
                    Vec<F> t = A.rmul_arrow(x, d, a.id);
                    if (!vec_is_zero(t) && I.comp[d].add(std::move(t))) grew = true;
                }
        }
    }
    return I;
}

// rows of I restricted to the columns ending anywhere except u: I * (1 - e_u)
template <class F>
std::vector<std::vector<Vec<F>>> column_drop_seeds(const PreprojAlg<F>& A,
                                                   const GradedIdeal<F>& I, int u) {
    std::vector<std::vector<Vec<F>>> seeds(A.maxdeg + 1);
    for (int d = 0; d <= A.maxdeg; ++d) {
        std::vector<char> keep(A.dim(d), 0);
        for (int i = 0; i < A.dim(d); ++i) keep[i] = (A.elt(d, i).v != u);
        for (auto& row : I.comp[d].rows) {
            Vec<F> v = row;
            bool nz = false;
            for (int i = 0; i < A.dim(d); ++i) {
                if (!keep[i]) v[i] = fof<F>(0);
                else if (!fis_zero(v[i])) nz = true;
            }
            if (nz) seeds[d].push_back(std::move(v));
        }
    }
    return seeds;
}

template <class F>
GradedIdeal<F> ideal_times_vertex(const GradedIdeal<F>& I, int u) {
    return right_closure(*I.A, column_drop_seeds(*I.A, I, u));
}

template <class F>
GradedIdeal<F> vertex_ideal(const PreprojAlg<F>& A, int u) {
    A.dq.base.vindex(u);
    return ideal_times_vertex(GradedIdeal<F>::unit(A), u);
}

// I_{u_1...u_k} for every prefix; index 0 is the unit ideal (empty word)
template <class F>
std::vector<GradedIdeal<F>> prefix_ideals(const PreprojAlg<F>& A, const Word& w) {
    std::vector<GradedIdeal<F>> out;
    out.push_back(GradedIdeal<F>::unit(A));
    for (int u : w) out.push_back(ideal_times_vertex(out.back(), u));
    return out;
}

template <class F>
GradedIdeal<F> ideal_for_word(const PreprojAlg<F>& A, const Word& w) {
    GradedIdeal<F> I = GradedIdeal<F>::unit(A);
    for (int u : w) I = ideal_times_vertex(I, u);
    return I;
}

// plain pairwise product, sum over splittings of the degree
template <class F>
GradedIdeal<F> ideal_product(const GradedIdeal<F>& I, const GradedIdeal<F>& J) {
    if (I.A != J.A) throw std::invalid_argument("ideal product: owner mismatch");
    const PreprojAlg<F>& A = *I.A;
    GradedIdeal<F> P(A);
    for (int d = 0; d <= A.maxdeg; ++d)
        for (int a = 0; a <= d; ++a) {
            int b = d - a;
            for (auto& x : I.comp[a].rows)
                for (auto& y : J.comp[b].rows)
                    P.comp[d].add(A.mul(x, a, y, b));
        }
    return P;
}

template <class F>
GradedIdeal<F> ideal_sum(const GradedIdeal<F>& I, const GradedIdeal<F>& J) {
    GradedIdeal<F> S = I;
    for (int d = 0; d <= I.A->maxdeg; ++d)
        for (auto& r : J.comp[d].rows) S.comp[d].add(r);
    return S;
}

// ---------------------------------------------------------------------------
// quotient algebra Pi / I with the induced canonical basis

template <class F>
struct QuotAlg {
    const PreprojAlg<F>* A = nullptr;
    GradedIdeal<F> modulus;
    std::vector<std::vector<int>> keep; // per degree: surviving A-coordinates

    QuotAlg() = default;
    QuotAlg(const PreprojAlg<F>& alg, GradedIdeal<F> I) : A(&alg), modulus(std::move(I)) {
        keep.resize(alg.maxdeg + 1);
        for (int d = 0; d <= alg.maxdeg; ++d) {
            std::vector<char> piv(alg.dim(d), 0);
            for (int p : modulus.comp[d].piv) piv[p] = 1;
            for (int i = 0; i < alg.dim(d); ++i)
                if (!piv[i]) keep[d].push_back(i);
        }
    }
    int maxdeg() const { return A->maxdeg; }
    int dim(int d) const { return (d < 0 || d > maxdeg()) ? 0 : (int)keep[d].size(); }
    int topdeg() const {
        for (int d = maxdeg(); d >= 0; --d)
            if (dim(d)) return d;
        return -1;
    }
    int total_dim() const {
        int s = 0;
        for (int d = 0; d <= maxdeg(); ++d) s += dim(d);
        return s;
    }
    const typename PreprojAlg<F>::Elt& elt(int d, int i) const {
        return A->elt(d, keep[d][i]);
    }
    Vec<F> reduce(const Vec<F>& acoords, int d) const {
        Vec<F> r = modulus.comp[d].reduce(acoords);
        Vec<F> out(dim(d), fof<F>(0));
        for (int i = 0; i < dim(d); ++i) out[i] = r[keep[d][i]];
        return out;
    }
    Vec<F> lift(const Vec<F>& qcoords, int d) const {
        Vec<F> out = A->zero_vec(d);
        for (int i = 0; i < dim(d); ++i) out[keep[d][i]] = qcoords[i];
        return out;
    }
    Vec<F> idem(int uid) const { return reduce(A->idem(uid), 0); }
    Vec<F> mul(const Vec<F>& x, int dx, const Vec<F>& y, int dy) const {
        if (dx + dy > maxdeg()) return Vec<F>(dim(dx + dy), fof<F>(0));
        return reduce(A->mul(lift(x, dx), dx, lift(y, dy), dy), dx + dy);
    }
    std::vector<int> dims() const {
        std::vector<int> v(maxdeg() + 1);
        for (int d = 0; d <= maxdeg(); ++d) v[d] = dim(d);
        return v;
    }
    int dim_block(int d, int uid, int vid) const {
        int s = 0;
        for (int i = 0; i < dim(d); ++i)
            if (elt(d, i).u == uid && elt(d, i).v == vid) ++s;
        return s;
    }
};

// ---------------------------------------------------------------------------
// independent dimension oracle: the degree-d slice of the preprojective
// algebra column at u has the dimension vector of the d-th inverse
// Auslander-Reiten translate of the projective at u, computed by iterating
// the inverse Coxeter transformation with vanishing detection at injectives.

inline std::vector<long> oracle_projective_dimvec(const Quiver& q, int u) {
    auto c = q.path_count_matrix();
    int iu = q.vindex(u), n = q.n();
    std::vector<long> v(n);
    for (int i = 0; i < n; ++i) v[i] = c[i][iu];
    return v;
}

inline std::vector<long> preprojective_dimvec_oracle(const Quiver& q, int d, int u) {
    int n = q.n();
    auto c = q.path_count_matrix();
    Mat<Rat> C(n, n), Ct(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            C.at(i, j) = Rat(c[i][j]);
            Ct.at(i, j) = Rat(c[j][i]);
        }
    auto CtInv = inverse(Ct);
    if (!CtInv) throw std::logic_error("Cartan matrix not invertible");
    Mat<Rat> phi_inv = (C * (*CtInv)).scaled(Rat(-1));
    Vec<Rat> v(n);
    auto pv = oracle_projective_dimvec(q, u);
    for (int i = 0; i < n; ++i) v[i] = Rat(pv[i]);
    for (int k = 0; k < d; ++k) {
        v = phi_inv.apply(v);
        bool negative = false;
        for (auto& x : v)
            if (sgn(x) < 0) negative = true;
        if (negative) return std::vector<long>(n, 0); // previous slice was injective
    }
    std::vector<long> out(n);
    for (int i = 0; i < n; ++i) {
        if (v[i].get_den() != 1) throw std::logic_error("oracle dimension not integral");
        out[i] = (long)v[i].get_num().get_si();
    }
    return out;
}

inline long preprojective_dim_oracle(const Quiver& q, int d, int u) {
    auto v = preprojective_dimvec_oracle(q, d, u);
    long s = 0;
    for (long x : v) s += x;
    return s;
}

} // namespace ppw
