#pragma once

// Finite dimensional algebras by structure constants, with a fixed set of
// orthogonal idempotents and a block-homogeneous basis (every basis element
// lies in some e_i A e_j).  Enough module theory to resolve the simples:
// radical by the trace form of the regular representation (valid here since
// the base field has characteristic zero or a very large prime), projective
// covers, syzygies, global dimension, and quiver-with-relations extraction.

#include "ppw/linalg.hpp"
#include <sstream>
#include <string>

namespace ppw {

template <class F>
struct AlgebraTable {
    struct BasisElt {
        int i = 0, j = 0; // block: element of e_i A e_j
        std::string label;
        int degree = 0;   // optional grading
    };
    using SVec = std::vector<std::pair<int, F>>; // sparse coordinate list

    int nidem = 0;
    std::vector<BasisElt> elts;
    std::vector<int> idem_of;              // idempotent k -> basis index
    std::vector<std::vector<SVec>> mult;   // mult[a][b] = coords of b_a * b_b

    int dim() const { return (int)elts.size(); }
    Vec<F> zero() const { return Vec<F>(dim(), fof<F>(0)); }
    Vec<F> unit(int b) const {
        Vec<F> v = zero();
        v[b] = fof<F>(1);
        return v;
    }
    void set_product(int a, int b, const Vec<F>& coords) {
        SVec sv;
        for (int k = 0; k < (int)coords.size(); ++k)
            if (!fis_zero(coords[k])) sv.push_back({k, coords[k]});
        mult[a][b] = std::move(sv);
    }
    Vec<F> product_of(int a, int b) const {
        Vec<F> v = zero();
        for (auto& [k, c] : mult[a][b]) v[k] = c;
        return v;
    }
    Vec<F> multiply(const Vec<F>& x, const Vec<F>& y) const {
        Vec<F> out = zero();
        for (int a = 0; a < dim(); ++a) {
            if (fis_zero(x[a])) continue;
            for (int b = 0; b < dim(); ++b) {
                if (fis_zero(y[b])) continue;
                F c = x[a] * y[b];
                for (auto& [k, m] : mult[a][b]) out[k] += c * m;
            }
        }
        return out;
    }
    Mat<F> left_mult(int a) const {
        Mat<F> m(dim(), dim());
        for (int b = 0; b < dim(); ++b)
            for (auto& [k, c] : mult[a][b]) m.at(k, b) = c;
        return m;
    }
    bool check_associativity() const {
        for (int a = 0; a < dim(); ++a)
            for (int b = 0; b < dim(); ++b)
                for (int c = 0; c < dim(); ++c) {
                    Vec<F> lhs = multiply(product_of(a, b), unit(c));
                    Vec<F> rhs = multiply(unit(a), product_of(b, c));
                    for (int k = 0; k < dim(); ++k)
                        if (lhs[k] != rhs[k]) return false;
                }
        return true;
    }
    // radical of the trace form of the regular representation
    RowSpace<F> radical() const {
        std::vector<Mat<F>> L;
        for (int a = 0; a < dim(); ++a) L.push_back(left_mult(a));
        Mat<F> g(dim(), dim());
        for (int a = 0; a < dim(); ++a)
            for (int b = a; b < dim(); ++b) {
                F tr = fof<F>(0);
                for (int i = 0; i < dim(); ++i)
                    for (int k = 0; k < dim(); ++k)
                        if (!fis_zero(L[a].at(i, k)) && !fis_zero(L[b].at(k, i)))
                            tr += L[a].at(i, k) * L[b].at(k, i);
                g.at(a, b) = tr;
                g.at(b, a) = tr;
            }
        RowSpace<F> rad(dim());
        for (auto& v : right_kernel(g)) rad.add(v);
        return rad;
    }
};

// left module over an AlgebraTable: spaces per idempotent, one matrix per
// basis element b in e_i A e_j acting X_j -> X_i
template <class F>
struct TMod {
    const AlgebraTable<F>* A = nullptr;
    std::vector<int> dims;
    std::vector<Mat<F>> act;

    int total_dim() const {
        int s = 0;
        for (int d : dims) s += d;
        return s;
    }
    Mat<F> action_of(const Vec<F>& z, int from_idem, int to_idem) const {
        Mat<F> m(dims[to_idem], dims[from_idem]);
        for (int b = 0; b < A->dim(); ++b) {
            if (fis_zero(z[b])) continue;
            if (A->elts[b].j != from_idem || A->elts[b].i != to_idem) continue;
            for (int i = 0; i < m.r; ++i)
                for (int j = 0; j < m.c; ++j)
                    if (!fis_zero(act[b].at(i, j))) m.at(i, j) += z[b] * act[b].at(i, j);
        }
        return m;
    }
};

template <class F>
TMod<F> table_column(const AlgebraTable<F>& A, int k) {
    TMod<F> x;
    x.A = &A;
    x.dims.assign(A.nidem, 0);
    std::vector<std::vector<int>> pos(A.nidem);
    for (int e = 0; e < A.dim(); ++e)
        if (A.elts[e].j == k) {
            pos[A.elts[e].i].push_back(e);
            x.dims[A.elts[e].i]++;
        }
    x.act.resize(A.dim());
    for (int b = 0; b < A.dim(); ++b) {
        int bi = A.elts[b].i, bj = A.elts[b].j;
        Mat<F> m(x.dims[bi], x.dims[bj]);
        for (int j = 0; j < (int)pos[bj].size(); ++j) {
            Vec<F> prod = A.product_of(b, pos[bj][j]);
            for (int i = 0; i < (int)pos[bi].size(); ++i) m.at(i, j) = prod[pos[bi][i]];
        }
        x.act[b] = std::move(m);
    }
    return x;
}

template <class F>
TMod<F> table_simple(const AlgebraTable<F>& A, int k) {
    TMod<F> s;
    s.A = &A;
    s.dims.assign(A.nidem, 0);
    s.dims[k] = 1;
    s.act.resize(A.dim());
    for (int b = 0; b < A.dim(); ++b) {
        Mat<F> m(s.dims[A.elts[b].i], s.dims[A.elts[b].j]);
        if (b == A.idem_of[k]) m.at(0, 0) = fof<F>(1);
        s.act[b] = std::move(m);
    }
    return s;
}

// radical subspaces of a module: span of the actions of the algebra radical
template <class F>
std::vector<RowSpace<F>> tmod_radical(const TMod<F>& x) {
    const AlgebraTable<F>& A = *x.A;
    RowSpace<F> jrad = A.radical();
    std::vector<RowSpace<F>> out(A.nidem);
    for (int k = 0; k < A.nidem; ++k) out[k] = RowSpace<F>(x.dims[k]);
    for (auto& z : jrad.rows)
        for (int from = 0; from < A.nidem; ++from)
            for (int to = 0; to < A.nidem; ++to) {
                if (!x.dims[from] || !x.dims[to]) continue;
                Mat<F> m = x.action_of(z, from, to);
                for (int j = 0; j < m.c; ++j) {
                    Vec<F> col = m.col(j);
                    if (!vec_is_zero(col)) out[to].add(std::move(col));
                }
            }
    return out;
}

// one syzygy step: returns (kernel of projective cover, cover rank per idem)
template <class F>
TMod<F> tmod_syzygy(const TMod<F>& x, std::vector<int>* cover_mults = nullptr) {
    const AlgebraTable<F>& A = *x.A;
    auto rad = tmod_radical(x);
    // top generators
    struct Gen { int k; Vec<F> lift; };
    std::vector<Gen> gens;
    for (int k = 0; k < A.nidem; ++k) {
        RowSpace<F> span = rad[k];
        for (int j = 0; j < x.dims[k]; ++j) {
            Vec<F> e(x.dims[k], fof<F>(0));
            e[j] = fof<F>(1);
            if (span.add(e)) gens.push_back({k, std::move(e)});
        }
    }
    if (cover_mults) cover_mults->assign(A.nidem, 0);
    if (cover_mults)
        for (auto& g : gens) (*cover_mults)[g.k]++;
    // cover P = (+) A e_{k_g}; kernel computed per idempotent slot
    std::vector<TMod<F>> cols;
    std::vector<std::vector<std::vector<int>>> colpos; // per gen: positions per idem
    for (auto& g : gens) cols.push_back(table_column(A, g.k));
    // stack: P_i = (+)_g (A e_{k_g})_i ; map to X_i
    TMod<F> ker;
    ker.A = &A;
    ker.dims.assign(A.nidem, 0);
    std::vector<std::vector<Vec<F>>> kbasis(A.nidem); // kernel vectors in P_i coords
    std::vector<int> pdim(A.nidem, 0);
    std::vector<std::vector<int>> goff(gens.size(), std::vector<int>(A.nidem, 0));
    for (int i = 0; i < A.nidem; ++i) {
        int off = 0;
        for (size_t g = 0; g < gens.size(); ++g) {
            goff[g][i] = off;
            off += cols[g].dims[i];
        }
        pdim[i] = off;
    }
    // the map on basis elements: basis of (A e_k)_i = elements b in e_i A e_k,
    // sent to b . lift
    std::vector<std::vector<std::vector<int>>> colelts(gens.size());
    for (size_t g = 0; g < gens.size(); ++g) {
        colelts[g].assign(A.nidem, {});
        for (int e = 0; e < A.dim(); ++e)
            if (A.elts[e].j == gens[g].k) colelts[g][A.elts[e].i].push_back(e);
    }
    std::vector<Mat<F>> pmap(A.nidem); // P_i -> X_i
    for (int i = 0; i < A.nidem; ++i) {
        Mat<F> m(x.dims[i], pdim[i]);
        for (size_t g = 0; g < gens.size(); ++g)
            for (int j = 0; j < (int)colelts[g][i].size(); ++j) {
                int e = colelts[g][i][j];
                // e . lift: action of basis element e on X at gens[g].k
                Vec<F> img = x.act[e].apply(gens[g].lift);
                for (int r = 0; r < x.dims[i]; ++r) m.at(r, goff[g][i] + j) = img[r];
            }
        pmap[i] = std::move(m);
        kbasis[i] = right_kernel(pmap[i]);
        ker.dims[i] = (int)kbasis[i].size();
    }
    // induced action of each basis element on the kernel
    ker.act.resize(A.dim());
    for (int b = 0; b < A.dim(); ++b) {
        int bi = A.elts[b].i, bj = A.elts[b].j;
        Mat<F> m(ker.dims[bi], ker.dims[bj]);
        if (m.r && m.c) {
            // action of b on P: blockwise from columns
            Mat<F> pb(pdim[bi], pdim[bj]);
            for (size_t g = 0; g < gens.size(); ++g) {
                const Mat<F>& cm = cols[g].act[b];
                for (int i2 = 0; i2 < cm.r; ++i2)
                    for (int j2 = 0; j2 < cm.c; ++j2)
                        pb.at(goff[g][bi] + i2, goff[g][bj] + j2) = cm.at(i2, j2);
            }
            for (int j = 0; j < m.c; ++j) {
                Vec<F> img = pb.apply(kbasis[bj][j]);
                auto co = coords_in(kbasis[bi], img);
                if (!co) throw std::logic_error("table syzygy: kernel not stable");
                for (int i2 = 0; i2 < m.r; ++i2) m.at(i2, j) = (*co)[i2];
            }
        }
        ker.act[b] = std::move(m);
    }
    return ker;
}

// projective dimension of a module, or -1 if the cap is exceeded
template <class F>
int tmod_projdim(const TMod<F>& x, int cap) {
    TMod<F> cur = x;
    for (int step = 0; step <= cap; ++step) {
        if (cur.total_dim() == 0) return std::max(0, step - 1);
        TMod<F> next = tmod_syzygy(cur);
        if (next.total_dim() == 0) return step;
        cur = std::move(next);
    }
    return -1;
}

struct GlobalDim {
    int value = 0;
    bool exceeded = false;
    std::vector<int> per_simple;
};

template <class F>
GlobalDim global_dimension(const AlgebraTable<F>& A, int cap = 16) {
    GlobalDim out;
    for (int k = 0; k < A.nidem; ++k) {
        int pd = tmod_projdim(table_simple(A, k), cap);
        out.per_simple.push_back(pd);
        if (pd < 0) out.exceeded = true;
        out.value = std::max(out.value, pd);
    }
    return out;
}

// ---------------------------------------------------------------------------
// quiver with relations from a (basic, split) table

template <class F>
struct Presentation {
    int nverts = 0;
    struct PArrow { int src = 0, tgt = 0; std::string name; };
    std::vector<PArrow> arrows;
    struct Relation {
        // sum of coefficient * path (paths as arrow index sequences)
        std::vector<std::pair<F, std::vector<int>>> terms;
        int src = 0, tgt = 0;
    };
    std::vector<Relation> relations;
    std::string text() const {
        std::ostringstream os;
        os << "quiver { ";
        for (int v = 1; v <= nverts; ++v) os << "v" << v << " ";
        os << "; ";
        for (auto& a : arrows)
            os << a.name << ": v" << (a.src + 1) << " -> v" << (a.tgt + 1) << "; ";
        os << "} relations { ";
        for (auto& r : relations) {
            bool first = true;
            for (auto& [c, p] : r.terms) {
                std::string cs = fstr(c);
                if (!first) os << (cs[0] == '-' ? " - " : " + ");
                std::string mag = (!first && cs[0] == '-') ? cs.substr(1) : cs;
                if (mag != "1") os << mag << "*";
                first = false;
                for (size_t k = 0; k < p.size(); ++k)
                    os << (k ? "*" : "") << arrows[p[k]].name;
            }
            os << "; ";
        }
        os << "}";
        return os.str();
    }
};

struct PresentationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
Presentation<F> presentation_from_table(const AlgebraTable<F>& A, int length_cap = 24) {
    Presentation<F> out;
    out.nverts = A.nidem;
    RowSpace<F> rad = A.radical();
    // radical squared
    RowSpace<F> rad2(A.dim());
    for (auto& x : rad.rows)
        for (auto& y : rad.rows) rad2.add(A.multiply(x, y));
    // arrows: basis of e_i (J/J^2) e_j, with canonical lifts
    std::vector<Vec<F>> lifts;
    for (int i = 0; i < A.nidem; ++i)
        for (int j = 0; j < A.nidem; ++j) {
            RowSpace<F> span = rad2;
            int idx = 0;
            for (auto& x : rad.rows) {
                // restrict to the block (i, j)
                Vec<F> v = A.zero();
                bool nz = false;
                for (int k = 0; k < A.dim(); ++k)
                    if (A.elts[k].i == i && A.elts[k].j == j && !fis_zero(x[k])) {
                        v[k] = x[k];
                        nz = true;
                    }
                if (!nz) continue;
                if (span.add(v)) {
                    std::string nm = "a" + std::to_string(i + 1) + "_" +
                                     std::to_string(j + 1) + "_" + std::to_string(idx++);
                    out.arrows.push_back({i, j, nm});
                    lifts.push_back(v);
                }
            }
        }
    // evaluate paths length by length; collect minimal relation generators
    struct PathElt { std::vector<int> arrows; int src, tgt; };
    std::vector<PathElt> prev;               // paths of the previous length
    std::vector<Vec<F>> prev_val;            // their values in A
    for (size_t a = 0; a < out.arrows.size(); ++a) {
        prev.push_back({{(int)a}, out.arrows[a].src, out.arrows[a].tgt});
        prev_val.push_back(lifts[a]);
    }
    // ideal generated so far, per (length, block): spans of relation images
    // under path multiplication
    std::vector<typename Presentation<F>::Relation> rels;
    // combos: the known ideal inside length-L path space is generated by
    // rel * paths and paths * rel; we track it implicitly by testing the
    // kernel at each length against products with the lifted relations.
    struct RelVal { std::vector<std::pair<F, std::vector<int>>> terms; int src, tgt; };
    std::vector<RelVal> relvals;
    for (int L = 2; L <= length_cap; ++L) {
        // build length-L paths
        std::vector<PathElt> cur;
        std::vector<Vec<F>> cur_val;
        for (size_t p = 0; p < prev.size(); ++p)
            for (size_t a = 0; a < out.arrows.size(); ++a) {
                if (out.arrows[a].src != prev[p].tgt) continue;
                PathElt pe = prev[p];
                pe.arrows.push_back((int)a);
                pe.tgt = out.arrows[a].tgt;
                cur.push_back(pe);
                cur_val.push_back(A.multiply(prev_val[p], lifts[a]));
            }
        if (cur.empty()) break;
        // kernel of evaluation per block
        for (int i = 0; i < A.nidem; ++i)
            for (int j = 0; j < A.nidem; ++j) {
                std::vector<int> idxs;
                for (size_t p = 0; p < cur.size(); ++p)
                    if (cur[p].src == i && cur[p].tgt == j) idxs.push_back((int)p);
                if (idxs.empty()) continue;
                Mat<F> ev(A.dim(), (int)idxs.size());
                for (size_t c = 0; c < idxs.size(); ++c) ev.set_col((int)c, cur_val[idxs[c]]);
                auto ker = right_kernel(ev);
                if (ker.empty()) continue;
                // span of ideal-generated combinations: q1 * rel * q2 of length L
                RowSpace<F> known((int)idxs.size());
                // index paths by arrow sequence for lookup
                std::map<std::vector<int>, int> pathpos;
                for (size_t c = 0; c < idxs.size(); ++c) pathpos[cur[idxs[c]].arrows] = (int)c;
                std::function<void(std::vector<int>&, int, const RelVal&, std::vector<int>&)>
                    dummy;
                for (auto& rv : relvals) {
                    int rl = (int)rv.terms[0].second.size();
                    if (rl > L) continue;
                    // enumerate prefixes of length p ending at rv.src and
                    // suffixes of length L - rl - p starting at rv.tgt
                    std::function<std::vector<std::vector<int>>(int, int, bool)> walks =
                        [&](int len, int anchor, bool into) {
                            std::vector<std::vector<int>> acc;
                            std::function<void(std::vector<int>&, int)> rec =
                                [&](std::vector<int>& w, int at) {
                                    if ((int)w.size() == len) {
                                        acc.push_back(w);
                                        return;
                                    }
                                    for (size_t a = 0; a < out.arrows.size(); ++a) {
                                        if (into ? out.arrows[a].src != at
                                                 : out.arrows[a].tgt != at)
                                            continue;
                                        w.push_back((int)a);
                                        rec(w, into ? out.arrows[a].tgt : out.arrows[a].src);
                                        w.pop_back();
                                    }
                                };
                            std::vector<int> w;
                            rec(w, anchor);
                            if (!into)
                                for (auto& ww : acc) std::reverse(ww.begin(), ww.end());
                            return acc;
                        };
                    for (int plen = 0; plen + rl <= L; ++plen) {
                        int slen = L - rl - plen;
                        auto prefs = walks(plen, rv.src, false); // paths ending at rv.src
                        auto sufs = walks(slen, rv.tgt, true);   // paths starting at rv.tgt
                        for (auto& pf : prefs) {
                            if (plen && out.arrows[pf[0]].src != i) continue;
                            if (!plen && rv.src != i) continue;
                            for (auto& sf : sufs) {
                                if (slen && out.arrows[sf.back()].tgt != j) continue;
                                if (!slen && rv.tgt != j) continue;
                                Vec<F> combo((int)idxs.size(), fof<F>(0));
                                bool valid = true;
                                for (auto& [cf, mid] : rv.terms) {
                                    std::vector<int> whole = pf;
                                    whole.insert(whole.end(), mid.begin(), mid.end());
                                    whole.insert(whole.end(), sf.begin(), sf.end());
                                    auto it = pathpos.find(whole);
                                    if (it == pathpos.end()) { valid = false; break; }
                                    combo[it->second] += cf;
                                }
                                if (valid) known.add(std::move(combo));
                            }
                        }
                    }
                }
                for (auto& kv : ker) {
                    if (known.contains(kv)) continue;
                    known.add(kv);
                    RelVal rv;
                    rv.src = i;
                    rv.tgt = j;
                    for (size_t c = 0; c < idxs.size(); ++c)
                        if (!fis_zero(kv[c])) rv.terms.push_back({kv[c], cur[idxs[c]].arrows});
                    relvals.push_back(rv);
                    typename Presentation<F>::Relation rel;
                    rel.src = i;
                    rel.tgt = j;
                    rel.terms = relvals.back().terms;
                    rels.push_back(rel);
                }
            }
        prev = std::move(cur);
        prev_val = std::move(cur_val);
        if (L == length_cap && !prev.empty()) {
            bool all_zero = true;
            for (auto& v : prev_val)
                if (!vec_is_zero(v)) all_zero = false;
            if (!all_zero) throw PresentationError("presentation length cap exceeded");
        }
    }
    out.relations = std::move(rels);
    return out;
}

} // namespace ppw
