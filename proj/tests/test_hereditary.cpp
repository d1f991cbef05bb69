#include "doctest.h"
#include "ppw/world.hpp"

using namespace ppw;

namespace {
Quiver a2() { return parse_quiver("vertices: 1 2; arrows: a: 1->2"); }
Quiver a3line() { return parse_quiver("vertices: 1 2 3; arrows: a: 1->2; b: 2->3"); }
Quiver a3paper() { return parse_quiver("vertices: 1 2 3; arrows: a: 1->2; b: 2->3; c: 1->3"); }
Quiver d4() { return parse_quiver("vertices: 1 2 3 4; arrows: a: 1->2; b: 2->3; c: 2->4"); }
} // namespace

TEST_CASE("projective representations") {
    QuiverRep<Rat> p1 = projective_rep<Rat>(a2(), 1);
    CHECK(p1.dims == std::vector<int>{1, 0}); // the source gives a simple projective
    QuiverRep<Rat> p2 = projective_rep<Rat>(a2(), 2);
    CHECK(p2.dims == std::vector<int>{1, 1});
    CHECK(hom_dim_rep(p1, p2) == 1);
    CHECK(hom_dim_rep(p2, p1) == 0);
}

TEST_CASE("hereditary ext via the projective presentation") {
    Quiver q = a2();
    QuiverRep<Rat> s2 = simple_rep<Rat>(q, 2);
    QuiverRep<Rat> s1 = simple_rep<Rat>(q, 1);
    QuiverRep<Rat> p2 = projective_rep<Rat>(q, 2);
    CHECK(ext1_rep(s2, s1) == 1);
    CHECK(ext1_rep(s1, s2) == 0);
    CHECK(ext1_rep(p2, s1) == 0);
    CHECK(ext1_rep(p2, s2) == 0);
    CHECK(ext1_rep(s2, p2) == 0);
    // syzygy of a simple over a hereditary algebra is projective
    QuiverRep<Rat> om = rep_syzygy(s2);
    CHECK(rep_syzygy(om).is_zero());
}

TEST_CASE("splitter on an obvious direct sum") {
    Quiver q = a2();
    QuiverRep<Rat> p2 = projective_rep<Rat>(q, 2);
    std::vector<const QuiverRep<Rat>*> two{&p2, &p2};
    auto split = split_indecomposables(rep_dsum(two).sum);
    CHECK(split.complete);
    REQUIRE(split.summands.size() == 2);
    auto classes = iso_classes(split.summands);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].second == 2);
}

TEST_CASE("splitter on the regular module finds the projectives") {
    Quiver q = a3paper();
    std::vector<QuiverRep<Rat>> ps;
    for (int u : q.verts) ps.push_back(projective_rep<Rat>(q, u));
    std::vector<const QuiverRep<Rat>*> ptrs;
    for (auto& p : ps) ptrs.push_back(&p);
    auto split = split_indecomposables(rep_dsum(ptrs).sum);
    CHECK(split.complete);
    CHECK(split.summands.size() == 3);
    CHECK(iso_classes(split.summands).size() == 3);
}

TEST_CASE("indecomposables and tilting modules in small Dynkin types") {
    auto ia2 = enumerate_indecomposables<Rat>(a2());
    CHECK(ia2.size() == 3);
    auto ia3 = enumerate_indecomposables<Rat>(a3line());
    CHECK(ia3.size() == 6);
    auto id4 = enumerate_indecomposables<Rat>(d4());
    CHECK(id4.size() == 12);
    CHECK(all_tilting_subsets(a2(), ia2).size() == 2);
    CHECK(all_tilting_subsets(a3line(), ia3).size() == 5);
}

TEST_CASE("source reflection basics") {
    Quiver q = a2();
    Quiver qr = reflect_at_source(q, 1);
    CHECK(reflection_plus(q, 1, simple_rep<Rat>(q, 1), qr).is_zero());
    // projectives at other vertices reflect to projectives
    QuiverRep<Rat> r = reflection_plus(q, 1, projective_rep<Rat>(q, 2), qr);
    CHECK(find_iso_rep(r, projective_rep<Rat>(qr, 2)).has_value());
    Quiver t = a3paper();
    Quiver tr = reflect_at_source(t, 1);
    for (int u : {2, 3}) {
        QuiverRep<Rat> ru = reflection_plus(t, 1, projective_rep<Rat>(t, u), tr);
        CHECK(find_iso_rep(ru, projective_rep<Rat>(tr, u)).has_value());
    }
}

TEST_CASE("reflection transforms dimension vectors by the simple reflection") {
    Quiver q = a3paper();
    Quiver qr = reflect_at_source(q, 1);
    for (int u : {2, 3}) {
        QuiverRep<Rat> x = projective_rep<Rat>(q, u);
        QuiverRep<Rat> r = reflection_plus(q, 1, x, qr);
        // s_1(d) at vertex 1 is -d_1 + d_2 + d_3 for the triangle
        std::vector<int> want = x.dims;
        want[0] = -x.dims[0] + x.dims[1] + x.dims[2];
        CHECK(r.dims == want);
    }
}

TEST_CASE("the degree-zero tilting module of the running example") {
    auto W = build_world<Rat>(a3paper(), {1, 2, 3, 1, 2, 1});
    auto parts = layer_tilting_parts(W);
    REQUIRE(parts.size() == 3);
    std::vector<int> dims;
    for (auto& p : parts) dims.push_back(p.total_dim());
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<int>{2, 4, 7});
    // pairwise and self extensions vanish
    for (auto& x : parts)
        for (auto& y : parts) CHECK(ext1_rep(x, y) == 0);
    // three pairwise non-isomorphic indecomposable summands in total
    std::vector<const QuiverRep<Rat>*> ptrs;
    for (auto& p : parts) ptrs.push_back(&p);
    auto split = split_indecomposables(rep_dsum(ptrs).sum);
    CHECK(split.complete);
    CHECK(split.summands.size() == 3);
    CHECK(iso_classes(split.summands).size() == 3);
}

TEST_CASE("a non-tilting candidate fails with an extension witness") {
    Quiver q = a2();
    CHECK(ext1_rep(simple_rep<Rat>(q, 2), simple_rep<Rat>(q, 1)) == 1);
}

TEST_CASE("degree-zero slices of the cyclic summands split into six classes") {
    auto W = build_world<Rat>(a3paper(), {1, 2, 3, 1, 2, 1});
    std::vector<QuiverRep<Rat>> m0;
    for (auto& m : W.Mi) m0.push_back(degree_zero(m, W.Q));
    std::vector<int> dims;
    for (auto& r : m0) dims.push_back(r.total_dim());
    CHECK(dims == std::vector<int>{1, 2, 4, 5, 7, 2});
    std::vector<const QuiverRep<Rat>*> ptrs;
    for (auto& r : m0) ptrs.push_back(&r);
    auto split = split_indecomposables(rep_dsum(ptrs).sum);
    CHECK(split.complete);
    CHECK(split.summands.size() == 6);
    CHECK(iso_classes(split.summands).size() == 6);
}

TEST_CASE("cotilting harness over A2 and A3") {
    for (auto q : {a2(), a3line()}) {
        auto indecs = enumerate_indecomposables<Rat>(q);
        auto tiltings = all_tilting_subsets(q, indecs);
        for (auto& tidx : tiltings) {
            CotiltCtx<Rat> ctx;
            ctx.Q = q;
            for (int i : tidx) ctx.tparts.push_back(indecs[i]);
            // perpendicular category members
            std::vector<const QuiverRep<Rat>*> perp;
            for (auto& x : indecs)
                if (in_perp(x, ctx)) perp.push_back(&x);
            REQUIRE(!perp.empty());
            // every T summand has a vanishing cokernel core
            for (auto& t : ctx.tparts) CHECK(omega_T_minus(t, ctx, 1).is_zero());
            // random perpendicular modules: one cokernel step lands in add T
            uint64_t st = 31;
            auto next = [&]() { st ^= st << 13; st ^= st >> 7; st ^= st << 17; return st; };
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<const QuiverRep<Rat>*> pick;
                for (auto* x : perp)
                    for (uint64_t k = next() % 3; k > 0; --k) pick.push_back(x);
                if (pick.empty()) pick.push_back(perp[0]);
                QuiverRep<Rat> X = rep_dsum(pick).sum;
                Approx<Rat> ap = left_addT_approximation(X, ctx);
                CHECK(ap.injective);
                CHECK(omega_T_minus(X, ctx, 1).is_zero());
            }
            // X in add T iff Ext^1(Y, X) = 0 for every Y in the perpendicular
            for (auto& x : indecs) {
                bool in_t = false;
                for (auto& t : ctx.tparts)
                    if (find_iso_rep(x, t)) in_t = true;
                bool ext_vanishes = true;
                for (auto* y : perp)
                    if (ext1_rep(*y, x) != 0) ext_vanishes = false;
                if (in_perp(x, ctx)) CHECK(in_t == ext_vanishes);
            }
        }
    }
}

TEST_CASE("approximation precondition is enforced") {
    Quiver q = a2();
    CotiltCtx<Rat> ctx;
    ctx.Q = q;
    ctx.tparts.push_back(simple_rep<Rat>(q, 1)); // S_1, and Ext^1(S_2, S_1) != 0
    CHECK_THROWS_AS(left_addT_approximation(simple_rep<Rat>(q, 2), ctx), std::domain_error);
}

TEST_CASE("long exact sequence of stable homs is dimension-consistent") {
    // 0 -> X -> Y -> Z -> 0 in the perpendicular category gives an exact
    // Hom-bar sequence ending at Hom-bar(X, N); exactness checked by ranks
    Quiver q = a2();
    auto indecs = enumerate_indecomposables<Rat>(q);
    CotiltCtx<Rat> ctx;
    ctx.Q = q;
    // T = DA: the injectives P_2 = (1,1) and S_2 = (0,1)
    for (auto& x : indecs)
        if (x.dims == std::vector<int>{1, 1} || x.dims == std::vector<int>{0, 1})
            ctx.tparts.push_back(x);
    REQUIRE(ctx.tparts.size() == 2);
    // sequence 0 -> S_1 -> P_2 -> S_2 -> 0; S_1 = P_1 lies in perp
    QuiverRep<Rat> X = simple_rep<Rat>(q, 1);
    QuiverRep<Rat> Y = projective_rep<Rat>(q, 2);
    QuiverRep<Rat> Z = simple_rep<Rat>(q, 2);
    CHECK(in_perp(X, ctx));
    CHECK(in_perp(Y, ctx));
    CHECK(in_perp(Z, ctx));
    // with n = 1, Prop-style conclusion: the cokernel core of X is in add T
    CHECK(omega_T_minus(X, ctx, 1).is_zero());
}

TEST_CASE("stable endomorphism tables over the hereditary side") {
    // A2 with T = DA: the perpendicular category is everything embedding in
    // sums of injectives; End(M_gen)/[T] has global dimension at most 2
    for (auto q : {a2(), a3line()}) {
        auto indecs = enumerate_indecomposables<Rat>(q);
        auto tiltings = all_tilting_subsets(q, indecs);
        for (auto& tidx : tiltings) {
            CotiltCtx<Rat> ctx;
            ctx.Q = q;
            for (int i : tidx) ctx.tparts.push_back(indecs[i]);
            std::vector<QuiverRep<Rat>> gen;
            for (auto& x : indecs)
                if (in_perp(x, ctx)) gen.push_back(x);
            AlgebraTable<Rat> table = end_table_rep(gen, &ctx.tparts);
            if (table.dim() == 0) continue; // everything killed
            CHECK(table.check_associativity());
            GlobalDim gd = global_dimension(table, 8);
            CHECK(!gd.exceeded);
            CHECK(gd.value <= 2);
        }
    }
}

TEST_CASE("full endomorphism table of the projectives is the path algebra") {
    Quiver q = a2();
    std::vector<QuiverRep<Rat>> ps{projective_rep<Rat>(q, 1), projective_rep<Rat>(q, 2)};
    AlgebraTable<Rat> table = end_table_rep(ps);
    CHECK(table.dim() == 3);
    CHECK(table.check_associativity());
    GlobalDim gd = global_dimension(table, 8);
    CHECK(gd.value == 1);
    Presentation<Rat> pres = presentation_from_table(table);
    CHECK(pres.nverts == 2);
    CHECK(pres.arrows.size() == 1);
    CHECK(pres.relations.empty());
}

TEST_CASE("table radical of a semisimple table is zero") {
    Quiver q = parse_quiver("vertices: 1 2");
    std::vector<QuiverRep<Rat>> ps{simple_rep<Rat>(q, 1), simple_rep<Rat>(q, 2)};
    AlgebraTable<Rat> table = end_table_rep(ps);
    CHECK(table.dim() == 2);
    CHECK(table.radical().dim() == 0);
    Presentation<Rat> pres = presentation_from_table(table);
    CHECK(pres.arrows.empty());
    CHECK(pres.relations.empty());
    CHECK(global_dimension(table, 4).value == 0);
}
