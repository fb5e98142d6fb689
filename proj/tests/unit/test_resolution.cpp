#include <doctest.h>

#include "takeuchi/catalog.hpp"
#include "takeuchi/resolution.hpp"

using namespace takeuchi;

namespace {

std::vector<std::vector<int>> degrees(const Resolution& r) {
    std::vector<std::vector<int>> out;
    for (const auto& l : r.levels) out.push_back(l.degrees);
    return out;
}

using Degrees = std::vector<std::vector<int>>;

}  // namespace

TEST_CASE("minimal resolutions of the trivial module") {
    Field q = Field::rationals();
    auto kx = polynomial_algebra(q, {"x"}, 6);
    auto r = minimal_resolution(trivial_module(kx, Side::right), 4, 6);
    CHECK(degrees(r) == Degrees{{0}, {1}});
    CHECK(r.terminated);
    CHECK(r.minimal);
    auto rep = validate_resolution(r);
    CHECK_MESSAGE(rep.ok(), rep.summary());

    Field f7 = Field::prime(7);
    auto qp = quantum_plane(f7, -1, 6);
    auto rq = minimal_resolution(trivial_module(qp, Side::right), 3, 6);
    CHECK(degrees(rq) == Degrees{{0}, {1, 1}, {2}});
    CHECK(rq.terminated);
    CHECK(validate_resolution(rq).ok());

    auto dn = dual_numbers(q, 6);
    auto rd = minimal_resolution(trivial_module(dn, Side::right), 4, 6);
    CHECK(degrees(rd) == Degrees{{0}, {1}, {2}, {3}, {4}});
    CHECK_FALSE(rd.terminated);
    auto repd = validate_resolution(rd);
    CHECK_MESSAGE(repd.ok(), repd.summary());

    // Left modules resolve too.
    auto rl = minimal_resolution(trivial_module(qp, Side::left), 3, 6);
    CHECK(degrees(rl) == Degrees{{0}, {1, 1}, {2}});
    CHECK(validate_resolution(rl).ok());

    // Commutative k[x,y,z]: Koszul shape.
    auto k3 = polynomial_algebra(q, {"x", "y", "z"}, 5);
    auto r3 = minimal_resolution(trivial_module(k3, Side::right), 4, 5);
    CHECK(degrees(r3) == Degrees{{0}, {1, 1, 1}, {2, 2, 2}, {3}});
    CHECK(validate_resolution(r3).ok());
}

TEST_CASE("resolution negative control: a broken differential fails validation") {
    Field q = Field::rationals();
    auto kxy = polynomial_algebra(q, {"x", "y"}, 5);
    auto r = minimal_resolution(trivial_module(kxy, Side::right), 3, 5);
    auto broken = r;
    broken.cache_.clear();
    for (auto& c : broken.boundary[2][0]) c = c + Scalar(1);
    CHECK_FALSE(validate_resolution(broken).ok());
}

TEST_CASE("equivariant module resolutions") {
    Field q = Field::rationals();
    auto sk = skew_group_datum(q, 6);
    auto kmod = trivial_hmodule(trivial_module(sk.a(), Side::right), sk.hopf);
    auto r = equivariant_module_resolution(kmod, sk.action, 3, 6);
    CHECK(degrees(r) == Degrees{{0}, {1}});
    REQUIRE(r.gen_action.size() == 2);
    CHECK(r.gen_action[1][1].at(0, 0) == q.make(-1));  // sigma acts by the sign
    CHECK(r.gen_action[0][1].at(0, 0) == q.one());
    auto rep = validate_resolution(r);
    CHECK_MESSAGE(rep.ok(), rep.summary());

    Field f7 = Field::prime(7);
    auto d = quantum_plane_datum(f7, 2, 6);
    auto rd = equivariant_module_resolution(trivial_hmodule(trivial_module(d.a(), Side::right), d.hopf), d.action, 3, 6);
    // (w0 x).g = w0 (g^-1 x) = 2^-1 w0 x, so g acts on w1 by 4.
    CHECK(rd.gen_action[1][1].at(0, 0) == f7.make(4));
    CHECK(validate_resolution(rd).ok());

    // Regular module A over A#H: free of rank one.
    auto ra = equivariant_module_resolution(regular_hmodule(d.action, Side::right), d.action, 3, 6);
    CHECK(degrees(ra) == Degrees{{0}});
    CHECK(validate_resolution(ra).ok());

    // Swap action on k[x,y]: W_1 is the permutation representation.
    auto kxy = polynomial_algebra(q, {"x", "y"}, 5);
    auto c2 = finalize_hopf(cyclic_group_algebra(q, 2));
    auto swap = extend_action(c2, kxy, {{kxy->normal_form({0}), kxy->normal_form({1})},
                                        {kxy->normal_form({1}), kxy->normal_form({0})}});
    auto rs = equivariant_module_resolution(trivial_hmodule(trivial_module(kxy, Side::right), c2), swap, 3, 5);
    CHECK(degrees(rs) == Degrees{{0}, {1, 1}, {2}});
    CHECK(rs.gen_action[2][1].at(0, 0) == q.make(-1));  // the determinant of the swap
    auto reps = validate_resolution(rs);
    CHECK_MESSAGE(reps.ok(), reps.summary());
}

TEST_CASE("equivariant resolutions under a non-semisimple Hopf algebra") {
    Field f7 = Field::prime(7);
    auto sw = finalize_hopf(sweedler_hopf(f7));
    auto kx = polynomial_algebra(f7, {"x"}, 5);
    Vec x = kx->normal_form({0});
    // g x = -x, and the skew-primitive acts by zero.
    auto act = extend_action(sw, kx, {{x}, {scaled(x, f7.make(-1))}, {zero_vec(f7, 1)}, {zero_vec(f7, 1)}});
    CHECK_FALSE(normalized_integral(*sw).has_value());
    auto r = equivariant_module_resolution(trivial_hmodule(trivial_module(kx, Side::right), sw), act, 3, 5);
    CHECK(degrees(r) == Degrees{{0}, {1}});
    CHECK(validate_resolution(r).ok());
}

TEST_CASE("integrals and dual Hopf algebras") {
    Field q = Field::rationals();
    auto c3 = cyclic_group_algebra(q, 3);
    auto t = normalized_integral(c3);
    REQUIRE(t);
    CHECK(*t == Vec{q.make(1, 3), q.make(1, 3), q.make(1, 3)});
    auto dual = dual_hopf(c3);
    CHECK(validate_hopf(dual).ok());
    auto td = normalized_integral(dual);
    REQUIRE(td);
    CHECK(*td == Vec{q.one(), q.zero(), q.zero()});
    auto sw = sweedler_hopf(Field::prime(7));
    CHECK(validate_hopf(dual_hopf(sw)).ok());
    CHECK(validate_hopf(dual_hopf(symmetric_group_s3(q))).ok());
}

TEST_CASE("comodule resolutions") {
    Field f7 = Field::prime(7);
    auto d = quantum_plane_datum(f7, -1, 6);
    auto kb = trivial_hopf_module(trivial_module(d.b(), Side::right), d.hopf);
    auto r = equivariant_comodule_resolution(kb, d.coaction, 3, 6);
    CHECK(degrees(r) == Degrees{{0}, {1}});
    // rho(w1) = g (x) w1
    CHECK(r.gen_coaction[1][0] == Vec{f7.zero(), f7.one()});
    CHECK(r.gen_coaction[0][0] == Vec{f7.one(), f7.zero()});
    auto rep = validate_resolution(r);
    CHECK_MESSAGE(rep.ok(), rep.summary());

    auto reg = regular_hopf_module(d.coaction, Side::right);
    auto rr = equivariant_comodule_resolution(reg, d.coaction, 3, 6);
    CHECK(degrees(rr) == Degrees{{0}});
    CHECK(rr.terminated);
    CHECK(rr.gen_coaction[0][0] == Vec{f7.one(), f7.zero()});

    Field q = Field::rationals();
    auto sk = skew_group_datum(q, 5);
    auto rb = equivariant_comodule_resolution(regular_hopf_module(sk.coaction, Side::right), sk.coaction, 3, 5);
    CHECK(degrees(rb) == Degrees{{0}});
    CHECK(validate_resolution(rb).ok());
}

TEST_CASE("total complex resolutions of smash modules") {
    Field q = Field::rationals();
    auto td = trivial_datum(polynomial_algebra(q, {"x"}, 6), polynomial_algebra(q, {"y"}, 6));
    auto s = smash_algebra(td.action, td.coaction);
    auto mh = trivial_hmodule(trivial_module(td.a(), Side::right), td.hopf);
    auto xh = trivial_hopf_module(trivial_module(td.b(), Side::right), td.hopf);
    auto p = equivariant_module_resolution(mh, td.action, 3, 6);
    auto qq = equivariant_comodule_resolution(xh, td.coaction, 3, 6);
    auto target = smash_module_right(s, mh, *xh.module);
    auto tot = total_smash_resolution(s, p, qq, target);
    CHECK(degrees(tot.resolution) == Degrees{{0}, {1, 1}, {2}});
    auto rep = validate_resolution(tot.resolution);
    CHECK_MESSAGE(rep.ok(), rep.summary());

    Field f7 = Field::prime(7);
    for (int qi : {-1, 2}) {
        auto d = quantum_plane_datum(f7, qi, 6);
        auto sd = smash_algebra(d.action, d.coaction);
        auto m = trivial_hmodule(trivial_module(d.a(), Side::right), d.hopf);
        auto x = trivial_hopf_module(trivial_module(d.b(), Side::right), d.hopf);
        auto P = equivariant_module_resolution(m, d.action, 3, 6);
        auto Q = equivariant_comodule_resolution(x, d.coaction, 3, 6);
        auto t = total_smash_resolution(sd, P, Q, smash_module_right(sd, m, *x.module));
        auto direct = minimal_resolution(t.target.module, 3, 6);
        CHECK(degrees(t.resolution) == degrees(direct));
        auto rt = validate_resolution(t.resolution);
        CHECK_MESSAGE(rt.ok(), rt.summary());
    }

    // Skew datum with X = B: levels are those of the A-resolution tensored with B.
    auto sk = skew_group_datum(q, 6);
    auto ss = smash_algebra(sk.action, sk.coaction);
    auto m = trivial_hmodule(trivial_module(sk.a(), Side::right), sk.hopf);
    auto x = regular_hopf_module(sk.coaction, Side::right);
    auto P = equivariant_module_resolution(m, sk.action, 3, 6);
    auto Q = equivariant_comodule_resolution(x, sk.coaction, 3, 6);
    auto t = total_smash_resolution(ss, P, Q, smash_module_right(ss, m, *x.module));
    CHECK(degrees(t.resolution) == Degrees{{0}, {1}});
    CHECK(t.resolution.levels[1].dim(3) == 2);
    auto rt = validate_resolution(t.resolution);
    CHECK_MESSAGE(rt.ok(), rt.summary());
    // The direct greedy route over the non-connected smash algebra.
    auto direct = minimal_resolution(t.target.module, 3, 6);
    CHECK_FALSE(direct.minimal);
    CHECK(validate_resolution(direct).ok());
}
